#pragma once

// Shared fixture groups and golden table data for the test suites.

#include <set>
#include <string>
#include <vector>

#include "csudoku/constructions.hpp"
#include "csudoku/group.hpp"
#include "csudoku/sudoku_table.hpp"

namespace fixtures {

using namespace csudoku;

inline int by_label(const GroupPtr& g, const std::string& label) {
  auto idx = g->index_of_label(label);
  if (!idx) throw std::runtime_error("no element labelled " + label);
  return *idx;
}

inline std::vector<int> by_labels(const GroupPtr& g, const std::vector<std::string>& labels) {
  std::vector<int> out;
  for (const auto& l : labels) out.push_back(by_label(g, l));
  return out;
}

inline std::vector<Permutation> parse_all(const std::vector<std::string>& texts, int degree) {
  std::vector<Permutation> out;
  for (const auto& t : texts) out.push_back(parse_cycles(t, degree));
  return out;
}

// 6x6 quasigroup grid whose translations generate the order-36/order-18 pair.
inline const std::vector<std::vector<int>> q6_grid = {
    {1, 2, 3, 4, 5, 6}, {2, 3, 1, 5, 6, 4}, {3, 1, 2, 6, 4, 5},
    {4, 5, 6, 1, 3, 2}, {5, 6, 4, 2, 1, 3}, {6, 4, 5, 3, 2, 1}};

inline const std::vector<std::string> q6_lambda_strings = {
    "(1)", "(123)(456)", "(132)(465)", "(14)(2536)", "(15)(2634)", "(16)(2435)"};
inline const std::vector<std::string> q6_rho_strings = {
    "(1)", "(123)(456)", "(132)(465)", "(14)(25)(36)", "(15)(26)(34)", "(16)(24)(35)"};

inline GroupPtr lmult_q6_group() {
  static GroupPtr g = from_permutations(generate_closure(parse_all(q6_lambda_strings, 6)));
  return g;
}

inline GroupPtr rmult_q6_group() {
  static GroupPtr g = from_permutations(generate_closure(parse_all(q6_rho_strings, 6)));
  return g;
}

// The 9x9 golden table for Z_9 with subgroup {0,3,6}: column border
// 0 3 6 | 1 4 7 | 2 5 8, row border 0 1 2 | 3 4 5 | 6 7 8.
inline const std::vector<int> z9_golden_cols = {0, 3, 6, 1, 4, 7, 2, 5, 8};
inline const std::vector<int> z9_golden_rows = {0, 1, 2, 3, 4, 5, 6, 7, 8};
inline const std::vector<std::vector<int>> z9_golden_body = {
    {0, 3, 6, 1, 4, 7, 2, 5, 8}, {1, 4, 7, 2, 5, 8, 3, 6, 0},
    {2, 5, 8, 3, 6, 0, 4, 7, 1}, {3, 6, 0, 4, 7, 1, 5, 8, 2},
    {4, 7, 1, 5, 8, 2, 6, 0, 3}, {5, 8, 2, 6, 0, 3, 7, 1, 4},
    {6, 0, 3, 7, 1, 4, 8, 2, 5}, {7, 1, 4, 8, 2, 5, 0, 3, 6},
    {8, 2, 5, 0, 3, 6, 1, 4, 7}};

// The 6x6 golden table for S_3 laid out with left cosets heading the rows and
// right coset representatives heading the columns.
inline const std::vector<std::string> s3_table2_cols = {"(1)", "(13)", "(132)",
                                                        "(12)", "(123)", "(23)"};
inline const std::vector<std::string> s3_table2_rows = {"(1)", "(12)", "(13)",
                                                        "(132)", "(23)", "(123)"};
inline const std::vector<std::vector<std::string>> s3_table2_body = {
    {"(1)", "(13)", "(132)", "(12)", "(123)", "(23)"},
    {"(12)", "(123)", "(23)", "(1)", "(13)", "(132)"},
    {"(13)", "(1)", "(12)", "(132)", "(23)", "(123)"},
    {"(132)", "(23)", "(123)", "(13)", "(1)", "(12)"},
    {"(23)", "(132)", "(13)", "(123)", "(12)", "(1)"},
    {"(123)", "(12)", "(1)", "(23)", "(132)", "(13)"}};

// The 6x6 golden table for S_3 laid out with left cosets heading the columns
// and simultaneous left coset representatives heading the rows.
inline const std::vector<std::string> s3_table7_cols = {"(1)", "(12)", "(13)",
                                                        "(132)", "(23)", "(123)"};
inline const std::vector<std::string> s3_table7_rows = {"(1)", "(123)", "(132)",
                                                        "(12)", "(13)", "(23)"};
inline const std::vector<std::vector<std::string>> s3_table7_body = {
    {"(1)", "(12)", "(13)", "(132)", "(23)", "(123)"},
    {"(123)", "(23)", "(12)", "(1)", "(13)", "(132)"},
    {"(132)", "(13)", "(23)", "(123)", "(12)", "(1)"},
    {"(12)", "(1)", "(123)", "(23)", "(132)", "(13)"},
    {"(13)", "(132)", "(1)", "(12)", "(123)", "(23)"},
    {"(23)", "(123)", "(132)", "(13)", "(1)", "(12)"}};

inline const std::vector<std::vector<std::string>> s3_table2_partition = {
    {"(1)", "(13)", "(132)"}, {"(12)", "(123)", "(23)"}};

// Fixture families used by the property suites.
inline std::vector<GroupPtr> fixture_groups_up_to(int max_order) {
  std::vector<GroupPtr> out;
  for (int n = 1; n <= max_order; ++n) out.push_back(make_cyclic(n));
  for (int m = 3; 2 * m <= max_order; ++m) out.push_back(make_dihedral(m));
  if (max_order >= 6) out.push_back(make_symmetric(3));
  if (max_order >= 24) out.push_back(make_symmetric(4));
  if (max_order >= 12) out.push_back(make_alternating(4));
  auto z2 = make_cyclic(2);
  if (max_order >= 4) out.push_back(make_direct_product(z2, z2));
  if (max_order >= 8) {
    out.push_back(make_direct_product(make_direct_product(z2, z2), z2));
    out.push_back(make_direct_product(make_cyclic(4), z2));
  }
  if (max_order >= 9) out.push_back(make_direct_product(make_cyclic(3), make_cyclic(3)));
  if (max_order >= 12) out.push_back(make_direct_product(make_cyclic(6), z2));
  if (max_order >= 16)
    out.push_back(make_direct_product(make_direct_product(z2, z2),
                                      make_direct_product(z2, z2)));
  return out;
}

// A uniformly random partition of G into |S| transversals of `side`: each
// coset distributes its elements over the parts by an independent shuffle.
template <typename Rng>
std::vector<std::vector<int>> random_transversal_partition(const Subgroup& s,
                                                           Side side, Rng& rng) {
  const int k = s.order();
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(k));
  std::vector<int> slots(static_cast<std::size_t>(k));
  std::iota(slots.begin(), slots.end(), 0);
  for (const auto& c : cosets(s, side)) {
    std::shuffle(slots.begin(), slots.end(), rng);
    for (int i = 0; i < k; ++i) parts[slots[i]].push_back(c.elements[i]);
  }
  for (auto& p : parts) std::sort(p.begin(), p.end());
  return parts;
}

inline std::set<std::string> label_set(const GroupPtr& g, const std::vector<int>& elems) {
  std::set<std::string> out;
  for (int x : elems) out.insert(g->label(x));
  return out;
}

// Asserts that a built table matches golden border sequences and body cells.
inline bool matches_golden(const CayleySudokuTable& t,
                           const std::vector<std::string>& col_border,
                           const std::vector<std::string>& row_border,
                           const std::vector<std::vector<std::string>>& body) {
  const auto& g = *t.group;
  const int n = t.size();
  if (static_cast<int>(col_border.size()) != n || static_cast<int>(row_border.size()) != n)
    return false;
  for (int j = 0; j < n; ++j)
    if (g.label(t.col_labels[j]) != col_border[j]) return false;
  for (int i = 0; i < n; ++i)
    if (g.label(t.row_labels[i]) != row_border[i]) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.label(t.cell(i, j)) != body[i][j]) return false;
  return true;
}

} // namespace fixtures
