#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "csudoku/group.hpp"
#include "csudoku/quasigroup.hpp"

namespace csudoku {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open \"" + path + "\"", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

/// Group ingestion text: first line holds the labels, the following n lines
/// hold the table rows entry by entry.
inline GroupPtr parse_group_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw parse_error("empty group file", 0);
  std::vector<std::string> labels;
  {
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) labels.push_back(token);
  }
  if (labels.empty()) throw parse_error("no labels on the first line", 0);

  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> row;
    std::string token;
    while (ls >> token) row.push_back(token);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return from_table(labels, rows);
}

inline int parse_spec_int(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw parse_error("expected a number, got \"" + text + "\"", 0);
  return std::stoi(text);
}

inline Quasigroup parse_quasigroup_spec(const std::string& spec) {
  if (spec.rfind("qn:", 0) == 0) return make_qn(parse_spec_int(spec.substr(3)));
  return parse_quasigroup_text(read_file(spec));
}

/// Group spec grammar: Z<n>, S<n>, perm:<degree>:<gen>;<gen>;...,
/// table:<path>, lmult:<quasigroup>, rmult:<quasigroup>, where a quasigroup
/// is qn:<n> or a file path.
inline GroupPtr parse_group_spec(const std::string& spec) {
  const auto numeric_suffix = [&](std::size_t from) {
    if (from >= spec.size() ||
        spec.find_first_not_of("0123456789", from) != std::string::npos)
      throw parse_error("expected a number in \"" + spec + "\"", from);
    return parse_spec_int(spec.substr(from));
  };

  if (spec.rfind("Z", 0) == 0 && spec.size() > 1 &&
      spec.find_first_not_of("0123456789", 1) == std::string::npos)
    return make_cyclic(numeric_suffix(1));
  if (spec.rfind("S", 0) == 0 && spec.size() > 1 &&
      spec.find_first_not_of("0123456789", 1) == std::string::npos)
    return make_symmetric(numeric_suffix(1));
  if (spec.rfind("perm:", 0) == 0) {
    auto rest = spec.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw parse_error("expected perm:<degree>:<gen>;<gen>;...", 0);
    int degree = parse_spec_int(rest.substr(0, colon));
    std::vector<Permutation> gens;
    for (const auto& g : split(rest.substr(colon + 1), ';'))
      if (!g.empty()) gens.push_back(parse_cycles(g, degree));
    if (gens.empty()) throw parse_error("no generators given", 0);
    return from_permutations(generate_closure(gens));
  }
  if (spec.rfind("table:", 0) == 0)
    return parse_group_text(read_file(spec.substr(6)));
  if (spec.rfind("lmult:", 0) == 0)
    return lmult(parse_quasigroup_spec(spec.substr(6)));
  if (spec.rfind("rmult:", 0) == 0)
    return rmult(parse_quasigroup_spec(spec.substr(6)));
  throw parse_error("unrecognized group spec \"" + spec + "\"", 0);
}

/// Resolves one element token: an exact label, or cycle notation for
/// permutation groups.
inline int parse_element(const GroupPtr& g, const std::string& token) {
  if (auto idx = g->index_of_label(token)) return *idx;
  if (g->has_perms()) {
    auto p = parse_cycles(token, g->degree());
    if (auto idx = g->index_of_perm(p)) return *idx;
    throw parse_error("\"" + token + "\" is not an element of the group", 0);
  }
  throw parse_error("no element labelled \"" + token + "\"", 0);
}

/// Subgroup spec: semicolon-separated generator tokens; empty means trivial.
inline Subgroup parse_subgroup_spec(const GroupPtr& g, const std::string& spec) {
  std::vector<int> gens;
  for (const auto& token : split(spec, ';')) {
    std::string trimmed = token;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
    if (!trimmed.empty()) gens.push_back(parse_element(g, trimmed));
  }
  return subgroup_generated(g, gens);
}

/// Partition text: one part per line, whitespace-separated element tokens.
inline std::vector<std::vector<int>> parse_partition_text(const GroupPtr& g,
                                                          const std::string& text) {
  std::vector<std::vector<int>> parts;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> part;
    std::string token;
    while (ls >> token) part.push_back(parse_element(g, token));
    if (!part.empty()) parts.push_back(std::move(part));
  }
  if (parts.empty()) throw parse_error("no parts found", 0);
  return parts;
}

} // namespace csudoku
