#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "csudoku/constructions.hpp"
#include "csudoku/group.hpp"

namespace csudoku {

/// A quasigroup given by its bordered Latin square. Symbols are 1-based to
/// match the usual bordered presentation; the permutation world's 0-based
/// points are bridged only at this module's boundary.
class Quasigroup {
public:
  /// Validates a grid over symbols 1..n with implicit natural borders.
  static Quasigroup from_latin_square(const std::vector<std::vector<int>>& grid) {
    Quasigroup q;
    q.order_ = static_cast<int>(grid.size());
    if (q.order_ < 1) throw validation_error("quasigroup must have at least one symbol");
    q.table_.reserve(static_cast<std::size_t>(q.order_) * q.order_);
    for (const auto& row : grid) {
      if (static_cast<int>(row.size()) != q.order_)
        throw validation_error("grid is not square");
      for (int v : row) q.table_.push_back(v);
    }

    std::vector<char> seen(static_cast<std::size_t>(q.order_));
    for (int r = 1; r <= q.order_; ++r) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int c = 1; c <= q.order_; ++c) {
        int v = q.at(r, c);
        if (v < 1 || v > q.order_)
          throw validation_error("symbol " + std::to_string(v) + " at row " +
                                 std::to_string(r) + ", column " + std::to_string(c) +
                                 " is outside 1.." + std::to_string(q.order_));
        if (seen[v - 1])
          throw validation_error("row " + std::to_string(r) + " repeats symbol " +
                                 std::to_string(v) + " at column " + std::to_string(c));
        seen[v - 1] = 1;
      }
    }
    for (int c = 1; c <= q.order_; ++c) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int r = 1; r <= q.order_; ++r) {
        int v = q.at(r, c);
        if (seen[v - 1])
          throw validation_error("column " + std::to_string(c) + " repeats symbol " +
                                 std::to_string(v) + " at row " + std::to_string(r));
        seen[v - 1] = 1;
      }
    }
    return q;
  }

  int order() const { return order_; }

  /// r * c with 1-based symbols.
  int at(int r, int c) const {
    return table_[static_cast<std::size_t>(r - 1) * order_ + (c - 1)];
  }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out;
    for (int r = 1; r <= order_; ++r) {
      out.emplace_back();
      for (int c = 1; c <= order_; ++c) out.back().push_back(at(r, c));
    }
    return out;
  }

private:
  int order_ = 0;
  std::vector<int> table_;
};

/// Row `symbol` read as the map q -> symbol * q.
inline Permutation left_translation(const Quasigroup& q, int symbol) {
  if (symbol < 1 || symbol > q.order())
    throw validation_error("symbol out of range");
  std::vector<int> images(static_cast<std::size_t>(q.order()));
  for (int c = 1; c <= q.order(); ++c) images[c - 1] = q.at(symbol, c) - 1;
  return Permutation::from_images(std::move(images));
}

/// Column `symbol` read as the map q -> q * symbol.
inline Permutation right_translation(const Quasigroup& q, int symbol) {
  if (symbol < 1 || symbol > q.order())
    throw validation_error("symbol out of range");
  std::vector<int> images(static_cast<std::size_t>(q.order()));
  for (int r = 1; r <= q.order(); ++r) images[r - 1] = q.at(r, symbol) - 1;
  return Permutation::from_images(std::move(images));
}

namespace detail {

inline GroupPtr multiplication_group(const Quasigroup& q, Side which, std::size_t cap) {
  std::vector<Permutation> gens;
  for (int s = 1; s <= q.order(); ++s)
    gens.push_back(which == Side::left ? left_translation(q, s)
                                       : right_translation(q, s));
  auto group = from_permutations(generate_closure(gens, cap));
  if (!is_transitive(group))
    throw internal_error("a multiplication group failed to act transitively");
  return group;
}

} // namespace detail

/// The group generated by all left translations. Transitivity is guaranteed
/// and asserted at construction.
inline GroupPtr lmult(const Quasigroup& q, std::size_t cap = 1'000'000) {
  return detail::multiplication_group(q, Side::left, cap);
}

/// The group generated by all right translations.
inline GroupPtr rmult(const Quasigroup& q, std::size_t cap = 1'000'000) {
  return detail::multiplication_group(q, Side::right, cap);
}

/// The full translation set of a quasigroup, certified as a transversal of
/// the point stabilizer G_c valid for every conjugate at once: the lambda set
/// gives left coset representatives in the left multiplication group, the rho
/// set right representatives in the right one. Certification failure would
/// contradict a proven statement and is reported as an internal error.
inline UniversalTransversal quasieg_transversal(const Quasigroup& q,
                                                const GroupPtr& mult_group,
                                                Side which, int c) {
  if (c < 1 || c > q.order()) throw validation_error("symbol out of range");
  std::vector<int> reps;
  for (int s = 1; s <= q.order(); ++s) {
    auto p = which == Side::left ? left_translation(q, s) : right_translation(q, s);
    auto idx = mult_group->index_of_perm(p);
    if (!idx)
      throw validation_error("the group passed in does not contain the translation by " +
                             std::to_string(s));
    reps.push_back(*idx);
  }
  std::sort(reps.begin(), reps.end());

  auto stab = stabilizer(mult_group, c - 1);
  for (const auto& [g_elem, conj] : conjugates(stab)) {
    int fault = -1;
    if (!is_transversal(conj, which, reps, &fault))
      throw internal_error("translation set fails to represent the " +
                           std::string(side_name(which)) + " coset of \"" +
                           mult_group->label(fault) + "\" in the conjugate by \"" +
                           mult_group->label(g_elem) + "\"");
  }
  return UniversalTransversal{stab, which, std::move(reps)};
}

/// True when the evenness analysis of the shifted-subtable family applies.
inline bool qn_evenness_applies(int n) { return n > 2 && n % 4 == 2; }

/// The order-n quasigroup built from four n/2 x n/2 subtables: the upper-left
/// and lower-right quadrants carry symbols 1..n/2, the other two carry
/// n/2+1..n. Rows shift left by one place from row to row except in the
/// lower-right quadrant, which shifts right from the base row (1, 3, 4, ...,
/// n/2, 2).
inline Quasigroup make_qn(int n) {
  if (n % 2 != 0) throw validation_error("the shifted construction needs an even order");
  if (n < 4) throw validation_error("order must be at least 4");
  const int m = n / 2;

  std::vector<int> lr_base(static_cast<std::size_t>(m));
  lr_base[0] = 1;
  for (int j = 2; j <= m - 1; ++j) lr_base[j - 1] = j + 1;
  lr_base[m - 1] = 2;

  std::vector<std::vector<int>> grid(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      grid[i - 1][j - 1] = (i - 1 + j - 1) % m + 1;              // upper left
      grid[i - 1][m + j - 1] = m + (i - 1 + j - 1) % m + 1;      // upper right
      grid[m + i - 1][j - 1] = m + (i - 1 + j - 1) % m + 1;      // lower left
      grid[m + i - 1][m + j - 1] = lr_base[((j - i) % m + m) % m]; // lower right
    }
  }
  return Quasigroup::from_latin_square(grid);
}

/// The closed-form left translation of the order-n shifted quasigroup:
/// a power of the double cycle (1..n/2)(n/2+1..n) for i <= n/2, and
/// (1,i)(2,i+1,3,i+2,...,n/2,i+n/2-1) with the sums reduced into n/2+1..n
/// for larger i. Cross-checked against the table-derived translation; a
/// mismatch is reported as an internal error.
inline Permutation qn_lambda_formula(int n, int i) {
  if (n % 2 != 0 || n < 4) throw validation_error("order must be even and at least 4");
  if (i < 1 || i > n) throw validation_error("symbol out of range");
  const int m = n / 2;

  std::vector<int> images(static_cast<std::size_t>(n));
  if (i <= m) {
    for (int q = 1; q <= m; ++q) images[q - 1] = (q - 1 + i - 1) % m + 1 - 1;
    for (int q = m + 1; q <= n; ++q) images[q - 1] = m + (q - m - 1 + i - 1) % m + 1 - 1;
  } else {
    const auto reduce = [&](int v) { return (v - (m + 1)) % m + (m + 1); };
    images[0] = i - 1;
    images[i - 1] = 0;
    for (int s = 2; s <= m; ++s) images[s - 1] = reduce(i + s - 1) - 1;
    for (int u = 1; u <= m - 1; ++u) {
      int big = reduce(i + u);
      images[big - 1] = (u == m - 1 ? 2 : u + 2) - 1;
    }
  }
  auto formula = Permutation::from_images(std::move(images));

  auto from_table = left_translation(make_qn(n), i);
  if (formula != from_table)
    throw internal_error("closed-form translation disagrees with the table at symbol " +
                         std::to_string(i));
  return formula;
}

/// Reads a quasigroup from text: n lines of n whitespace-separated symbols in
/// 1..n, natural border assumed.
inline Quasigroup parse_quasigroup_text(const std::string& text) {
  std::vector<std::vector<int>> grid;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    int v;
    while (ls >> v) row.push_back(v);
    std::string tail;
    std::istringstream check(line);
    while (check >> tail)
      if (tail.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("symbol \"" + tail + "\" is not a number", 0);
    if (!row.empty()) grid.push_back(std::move(row));
  }
  if (grid.empty()) throw parse_error("no rows found", 0);
  return Quasigroup::from_latin_square(grid);
}

} // namespace csudoku
