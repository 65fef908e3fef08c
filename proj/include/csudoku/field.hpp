#pragma once

#include <string>
#include <vector>

#include "csudoku/group.hpp"
#include "csudoku/sudoku_table.hpp"

namespace csudoku {

/// GF(p^2) realized as GF(p)[t] modulo a monic irreducible quadratic
/// t^2 + c1 t + c0. Elements a + b t are encoded as the index b*p + a; the
/// prime subfield F sits at indices 0..p-1.
class QuadraticField {
public:
  /// Builds the field over the given prime, picking the first irreducible
  /// monic quadratic in ascending (c1, c0) order.
  static QuadraticField make(int p) {
    if (p < 2 || !is_prime(p))
      throw validation_error(std::to_string(p) + " is not prime");
    if (p > 13)
      throw resource_error("primes above 13 are outside the supported range");

    QuadraticField k;
    k.p_ = p;
    bool found = false;
    for (int c1 = 0; c1 < p && !found; ++c1)
      for (int c0 = 0; c0 < p && !found; ++c0) {
        bool has_root = false;
        for (int x = 0; x < p && !has_root; ++x)
          has_root = (x * x + c1 * x + c0) % p == 0;
        if (!has_root) {
          k.c0_ = c0;
          k.c1_ = c1;
          found = true;
        }
      }
    if (!found) throw internal_error("no irreducible quadratic found");

    // The nonzero elements must form a cyclic group of order p^2 - 1.
    const int group_order = p * p - 1;
    bool has_generator = false;
    for (int x = 1; x < p * p && !has_generator; ++x)
      has_generator = k.multiplicative_order(x) == group_order;
    if (!has_generator)
      throw internal_error("multiplicative group is not cyclic");
    return k;
  }

  int p() const { return p_; }
  int size() const { return p_ * p_; }
  int c0() const { return c0_; }
  int c1() const { return c1_; }

  int add(int x, int y) const {
    return ((x % p_ + y % p_) % p_) + (((x / p_ + y / p_) % p_) * p_);
  }

  int neg(int x) const {
    return ((p_ - x % p_) % p_) + (((p_ - x / p_) % p_) * p_);
  }

  int mul(int x, int y) const {
    const int a = x % p_, b = x / p_, c = y % p_, d = y / p_;
    // (a + bt)(c + dt) with t^2 = -c1 t - c0
    const int bd = b * d % p_;
    const int const_part = ((a * c - bd * c0_) % p_ + p_) % p_;
    const int t_part = ((a * d + b * c - bd * c1_) % p_ + p_ * p_) % p_;
    return t_part * p_ + const_part;
  }

  bool in_subfield(int x) const { return x / p_ == 0; }

  int multiplicative_order(int x) const {
    if (x == 0) throw validation_error("zero has no multiplicative order");
    int acc = x, n = 1;
    while (acc != 1) {
      acc = mul(acc, x);
      ++n;
    }
    return n;
  }

  std::string label(int x) const {
    const int a = x % p_, b = x / p_;
    if (b == 0) return std::to_string(a);
    std::string t_term = b == 1 ? "t" : std::to_string(b) + "t";
    if (a == 0) return t_term;
    return std::to_string(a) + "+" + t_term;
  }

  /// The additive group Z_p x Z_p with field-element labels.
  GroupPtr additive_group() const {
    const int n = size();
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    std::vector<int> op(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
      labels[x] = label(x);
      for (int y = 0; y < n; ++y) op[static_cast<std::size_t>(x) * n + y] = add(x, y);
    }
    return FiniteGroup::create(std::move(labels), std::move(op));
  }

private:
  static bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  int p_ = 0, c0_ = 0, c1_ = 0;
};

inline QuadraticField make_field(int p) { return QuadraticField::make(p); }

/// The addition table of K arranged with the cosets F, F+t, F+2t, ... heading
/// the column blocks and their images (F+it)x heading the row blocks, rows
/// within a block running over f+it for f = 0..p-1. For x outside F this is
/// a verified table with p x p blocks; its body is also a Latin square L_x,
/// and distinct x give orthogonal squares.
inline CayleySudokuTable pedersen_vis_table(const QuadraticField& k, int x,
                                            const GroupPtr& additive) {
  if (x < 0 || x >= k.size()) throw validation_error("element out of range");
  if (k.in_subfield(x))
    throw validation_error("\"" + k.label(x) + "\" lies in the subfield");

  const int p = k.p();
  std::vector<std::vector<int>> col_blocks, row_blocks;
  for (int i = 0; i < p; ++i) {
    std::vector<int> coset, image;
    for (int f = 0; f < p; ++f) {
      coset.push_back(i * p + f);          // f + it
      image.push_back(k.mul(i * p + f, x)); // (f + it) x
    }
    col_blocks.push_back(std::move(coset));
    row_blocks.push_back(std::move(image));
  }

  auto t = make_table(additive, row_blocks, col_blocks);
  auto report = verify_sudoku(t);
  if (!report.pass)
    throw internal_error("field table failed verification despite x outside F");
  t.verified = true;
  return t;
}

inline CayleySudokuTable pedersen_vis_table(const QuadraticField& k, int x) {
  return pedersen_vis_table(k, x, k.additive_group());
}

/// The family {L_x : x in K \ F} in ascending element order, each verified.
inline std::vector<CayleySudokuTable> mols_family(const QuadraticField& k) {
  auto additive = k.additive_group();
  std::vector<CayleySudokuTable> out;
  for (int x = 0; x < k.size(); ++x)
    if (!k.in_subfield(x)) out.push_back(pedersen_vis_table(k, x, additive));
  return out;
}

/// Pairwise orthogonality of the family's bodies; entry (i,j) says whether
/// table i and table j superimpose without repeating a pair.
inline std::vector<std::vector<bool>>
orthogonality_matrix(const std::vector<CayleySudokuTable>& family) {
  const int n = static_cast<int>(family.size());
  std::vector<std::vector<bool>> matrix(static_cast<std::size_t>(n),
                                        std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      matrix[i][j] = i != j && are_orthogonal(body_as_latin_square(family[i]),
                                              body_as_latin_square(family[j]));
  return matrix;
}

} // namespace csudoku
