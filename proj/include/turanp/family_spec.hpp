#pragma once

#include <turanp/constructions.hpp>
#include <turanp/error.hpp>

#include <charconv>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace turanp {

enum class Family {
  complete,
  empty,
  path,
  star,
  matching,
  near_regular,
  turan,
  friendship,
  broom,
  h_path,
  h_linear_forest,
  g_star_join,
  k_join_matching,
  unbalanced_bipartite,
};

/// A family tag plus its integer parameters, e.g. `h-path:n=10,ell=6`.
struct FamilySpec {
  Family family = Family::empty;
  std::map<std::string, int> params;
  std::vector<int> lengths;  // h-linear only

  int at(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw Error("family parameter '" + key + "' is missing");
    return it->second;
  }
};

namespace detail {

struct FamilyInfo {
  Family family;
  std::string_view tag;
  std::vector<std::string_view> keys;
};

inline const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table = {
      {Family::complete, "complete", {"t"}},
      {Family::empty, "empty", {"t"}},
      {Family::path, "path", {"t"}},
      {Family::star, "star", {"r"}},
      {Family::matching, "matching", {"t"}},
      {Family::near_regular, "near-regular", {"n", "d"}},
      {Family::turan, "turan", {"n", "r"}},
      {Family::friendship, "friendship", {"n"}},
      {Family::broom, "broom", {"ell", "s"}},
      {Family::h_path, "h-path", {"n", "ell"}},
      {Family::h_linear_forest, "h-linear", {"n", "lengths"}},
      {Family::g_star_join, "g-star", {"n", "i", "r"}},
      {Family::k_join_matching, "k-join-matching", {"n", "k"}},
      {Family::unbalanced_bipartite, "unbalanced-bipartite", {"n"}},
  };
  return table;
}

inline int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error("expected an integer for " + std::string(what) + ", got '" + std::string(text) + "'");
  }
  return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

/// Parses `tag:key=value,...`. The h-linear length list uses '/' as its
/// separator, e.g. `h-linear:n=10,lengths=5/3`.
inline FamilySpec parse_family(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view tag = text.substr(0, colon);
  const detail::FamilyInfo* info = nullptr;
  for (const auto& row : detail::family_table()) {
    if (row.tag == tag) info = &row;
  }
  if (info == nullptr) throw Error("unknown family '" + std::string(tag) + "'");
  FamilySpec spec;
  spec.family = info->family;
  if (colon != std::string_view::npos && colon + 1 < text.size()) {
    for (std::string_view item : detail::split(text.substr(colon + 1), ',')) {
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) throw Error("family parameter needs key=value: '" + std::string(item) + "'");
      const std::string key(item.substr(0, eq));
      const std::string_view value = item.substr(eq + 1);
      bool known = false;
      for (auto k : info->keys) known = known || k == key;
      if (!known) throw Error("family '" + std::string(tag) + "' has no parameter '" + key + "'");
      if (key == "lengths") {
        for (auto part : detail::split(value, '/')) spec.lengths.push_back(detail::parse_int(part, key));
      } else {
        spec.params[key] = detail::parse_int(value, key);
      }
    }
  }
  for (auto k : info->keys) {
    const bool present = k == "lengths" ? !spec.lengths.empty() : spec.params.count(std::string(k)) > 0;
    if (!present) throw Error("family '" + std::string(tag) + "' needs parameter '" + std::string(k) + "'");
  }
  return spec;
}

inline std::string to_string(const FamilySpec& spec) {
  for (const auto& row : detail::family_table()) {
    if (row.family != spec.family) continue;
    std::string out(row.tag);
    char sep = ':';
    for (auto k : row.keys) {
      out += sep;
      sep = ',';
      out += std::string(k) + "=";
      if (k == "lengths") {
        for (std::size_t i = 0; i < spec.lengths.size(); ++i) {
          if (i > 0) out += "/";
          out += std::to_string(spec.lengths[i]);
        }
      } else {
        out += std::to_string(spec.at(std::string(k)));
      }
    }
    return out;
  }
  return "?";
}

inline Graph build(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete: return complete_graph(spec.at("t"));
    case Family::empty: return empty_graph(spec.at("t"));
    case Family::path: return path_graph(spec.at("t"));
    case Family::star: return star_graph(spec.at("r"));
    case Family::matching: return matching_graph(spec.at("t"));
    case Family::near_regular: return near_regular(spec.at("n"), spec.at("d"));
    case Family::turan: return turan_graph(spec.at("n"), spec.at("r"));
    case Family::friendship: return friendship_graph(spec.at("n"));
    case Family::broom: return broom_graph(spec.at("ell"), spec.at("s"));
    case Family::h_path: return h_path(spec.at("n"), spec.at("ell"));
    case Family::h_linear_forest: return h_linear_forest(spec.at("n"), spec.lengths);
    case Family::g_star_join: return g_star_join(spec.at("n"), spec.at("i"), spec.at("r"));
    case Family::k_join_matching: return k_join_matching(spec.at("n"), spec.at("k"));
    case Family::unbalanced_bipartite: return unbalanced_bipartite(spec.at("n"));
  }
  throw Error("unhandled family");
}

}  // namespace turanp
