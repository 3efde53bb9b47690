// Per-length f.c. counts of G(m,m,n) for a generating set given on the command line,
// e.g. `table_column 4 3 affine`.

#include <cstdlib>
#include <iostream>

#include "fcgroups/tables.hpp"

int main(int argc, char** argv) {
  using namespace fcg;
  if (argc != 4) {
    std::cerr << "usage: " << argv[0] << " m n gens\n";
    return 2;
  }
  try {
    const int m = std::atoi(argv[1]), n = std::atoi(argv[2]);
    const auto h = fc_histogram(make_group(m, m, n, parse_genset(argv[3])));
    for (auto [len, count] : h.counts) std::cout << len << '\t' << count << '\n';
    std::cout << "total\t" << h.total << '\n';
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
