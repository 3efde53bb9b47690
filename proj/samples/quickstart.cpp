// Build G(3,1,3), list its f.c. elements of length 4 with their canonical words, and
// run the three deciders on one element that is not f.c.

#include <iostream>

#include "fcgroups/canonical.hpp"
#include "fcgroups/cayley.hpp"
#include "fcgroups/patterns.hpp"

int main() {
  using namespace fcg;
  const auto spec = make_group(3, 1, 3, GenSet::gm1n);
  const auto table = build_length_table(spec);
  const FcAnalyzer fc(table);

  std::cout << std::boolalpha << spec.name() << ": " << table.size() << " elements, longest has length "
            << table.max_length() << "\n\n";
  for (LengthTable::Id id = 0; id < table.size(); ++id) {
    if (table.length(id) != 4 || !fc.is_fc(id)) continue;
    const auto& g = table.element(id);
    std::cout << "  " << g << "  " << format_canonical(canonical_word(spec, g)) << '\n';
  }

  const auto g = parse_element("id;(2,1,0)", spec);
  const auto witness = find_any(g, catalog(pattern_family_for(spec)));
  std::cout << '\n' << g << " has " << to_string(count_reduced_expressions(spec, g, table)) << " reduced expressions\n"
            << "  brute force: " << is_fully_commutative_bruteforce(spec, g, table) << '\n'
            << "  criterion:   " << is_fc_by_criterion(canonical_word(spec, g)) << '\n'
            << "  patterns:    " << !witness.has_value() << " (contains " << witness->pattern.name << ")\n";
}
