#pragma once

// On-disk cache of length tables as JSON. A file whose version or group does not
// match is ignored and rewritten.

#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "fcgroups/cayley.hpp"

namespace fcg {

inline constexpr int kCacheVersion = 1;

inline nlohmann::json table_to_json(const LengthTable& t) {
  const auto& s = t.spec();
  nlohmann::json perms = nlohmann::json::array(), weights = nlohmann::json::array();
  for (const auto& g : t.elements()) {
    perms.push_back(g.perm);
    weights.push_back(g.weights);
  }
  return {{"version", kCacheVersion},
          {"group", {{"m", s.m()}, {"p", s.p()}, {"n", s.n()}, {"gens", std::string(to_string(s.genset()))}}},
          {"size", t.size()},
          {"perm", std::move(perms)},
          {"weights", std::move(weights)},
          {"length", t.lengths()}};
}

/// Throws Error on a malformed document or one that was written for another version.
inline LengthTable table_from_json(const nlohmann::json& j) {
  try {
    if (j.at("version").get<int>() != kCacheVersion) throw Error("cache version mismatch");
    const auto& g = j.at("group");
    const auto spec = make_group(g.at("m").get<int>(), g.at("p").get<int>(), g.at("n").get<int>(),
                                 parse_genset(g.at("gens").get<std::string>()));
    const auto& perms = j.at("perm");
    const auto& weights = j.at("weights");
    auto lengths = j.at("length").get<std::vector<int>>();
    const auto size = j.at("size").get<std::size_t>();
    if (perms.size() != size || weights.size() != size || lengths.size() != size) throw Error("cache size mismatch");
    std::vector<Element> elements;
    elements.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
      Element e{perms[i].get<std::vector<int>>(), weights[i].get<std::vector<int>>()};
      require_member(spec, e);
      elements.push_back(std::move(e));
    }
    return LengthTable::assemble(spec, std::move(elements), std::move(lengths));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed cache: ") + e.what());
  }
}

inline std::filesystem::path cache_path(const std::filesystem::path& dir, const GroupSpec& spec) {
  return dir / ("G_" + std::to_string(spec.m()) + "_" + std::to_string(spec.p()) + "_" + std::to_string(spec.n()) + "_" +
                std::string(to_string(spec.genset())) + ".v" + std::to_string(kCacheVersion) + ".json");
}

inline void save_table(const LengthTable& t, const std::filesystem::path& file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write " + tmp);
    out << table_to_json(t).dump() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

inline LengthTable load_table(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot read " + file.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed cache " + file.string() + ": " + e.what());
  }
  return table_from_json(j);
}

/// Reads the cached table for `spec` from `dir`, or builds and stores it. `hit`
/// reports whether the file was used.
inline LengthTable cached_length_table(const GroupSpec& spec, const std::filesystem::path& dir,
                                       std::size_t element_cap = Caps{}.element_cap, bool* hit = nullptr) {
  const auto file = cache_path(dir, spec);
  if (std::filesystem::exists(file)) {
    try {
      auto t = load_table(file);
      if (t.spec() == spec) {
        if (hit) *hit = true;
        return t;
      }
    } catch (const Error&) {
    }
  }
  if (hit) *hit = false;
  auto t = build_length_table(spec, element_cap);
  save_table(t, file);
  return t;
}

}  // namespace fcg
