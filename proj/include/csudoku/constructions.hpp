#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csudoku/group.hpp"
#include "csudoku/sudoku_table.hpp"

namespace csudoku {

/// A partition of the group into |S| transversals of one side. Part order and
/// the element order within parts are preserved: they become table borders.
struct TransversalPartition {
  Subgroup subgroup;
  Side side;
  std::vector<std::vector<int>> parts;
};

/// A transversal that works for every conjugate S^g simultaneously.
struct UniversalTransversal {
  Subgroup subgroup;
  Side side;
  std::vector<int> reps;
};

namespace detail {

/// Validates that `parts` partitions G into transversals of `side`, throwing
/// a partition_error naming the first offending part and coset.
inline void check_transversal_partition(const Subgroup& s, Side side,
                                        const std::vector<std::vector<int>>& parts) {
  const auto& g = *s.parent;
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int x : parts[p]) {
      if (x < 0 || x >= g.order())
        throw validation_error("partition contains an element index out of range");
      if (covered[x])
        throw partition_error("parts are not disjoint: \"" + g.label(x) +
                                  "\" appears twice",
                              partition_fault::not_a_partition,
                              static_cast<int>(p), x);
      covered[x] = 1;
    }
  for (int x = 0; x < g.order(); ++x)
    if (!covered[x])
      throw partition_error("parts do not cover the group: \"" + g.label(x) +
                                "\" is missing",
                            partition_fault::not_a_partition, -1, x);

  for (std::size_t p = 0; p < parts.size(); ++p) {
    int coset_rep = -1;
    bool doubled = false;
    if (!is_transversal(s, side, parts[p], &coset_rep, &doubled)) {
      const std::string verb = doubled ? "hits twice" : "misses";
      throw partition_error("part " + std::to_string(p + 1) + " " + verb +
                                " the " + side_name(side) + " coset of \"" +
                                g.label(coset_rep) + "\"",
                            doubled ? partition_fault::double_hit_coset
                                    : partition_fault::missed_coset,
                            static_cast<int>(p), coset_rep);
    }
  }
}

/// Validates that every part is a transversal of `side` for every conjugate
/// S^g, throwing a universality_error naming part, conjugate and coset.
inline void check_universal_partition(const Subgroup& s, Side side,
                                      const std::vector<std::vector<int>>& parts) {
  for (const auto& [g_elem, conj] : conjugates(s)) {
    for (std::size_t p = 0; p < parts.size(); ++p) {
      int coset_rep = -1;
      bool doubled = false;
      if (!is_transversal(conj, side, parts[p], &coset_rep, &doubled)) {
        const auto& g = *s.parent;
        const std::string verb = doubled ? "hits twice" : "misses";
        throw universality_error(
            "part " + std::to_string(p + 1) + " " + verb + " the " +
                side_name(side) + " coset of \"" + g.label(coset_rep) +
                "\" in the conjugate by \"" + g.label(g_elem) + "\"",
            static_cast<int>(p), g_elem, coset_rep);
      }
    }
  }
}

inline std::vector<std::vector<int>> coset_element_blocks(const Subgroup& s, Side side) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cosets(s, side)) out.push_back(c.elements);
  return out;
}

inline CayleySudokuTable finish(CayleySudokuTable t) {
  auto report = verify_sudoku(t);
  if (!report.pass)
    throw internal_error("construction produced a non-sudoku table despite a valid partition");
  t.verified = true;
  return t;
}

} // namespace detail

/// A canonical transversal partition: enumerate the cosets of `side` in
/// canonical order and let part i collect the i-th smallest element of each
/// coset; each part then meets every coset exactly once by construction.
/// Parts are emitted with ascending elements.
inline TransversalPartition default_partition(const Subgroup& s, Side side) {
  const auto cs = cosets(s, side);
  const int k = s.order();
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (const auto& c : cs) parts[i].push_back(c.elements[i]);
    std::sort(parts[i].begin(), parts[i].end());
  }
  return TransversalPartition{s, side, std::move(parts)};
}

/// Right cosets head the column blocks, the partition's parts head the row
/// blocks. Succeeds exactly when the parts partition G into left
/// transversals of S; blocks are [G:S] x |S|.
inline CayleySudokuTable construct1_right(const Subgroup& s,
                                          const TransversalPartition& partition) {
  if (partition.side != Side::left)
    throw validation_error("this layout takes a partition into left coset representatives");
  if (!(partition.subgroup == s))
    throw validation_error("partition was built for a different subgroup");
  detail::check_transversal_partition(s, Side::left, partition.parts);
  return detail::finish(make_table(s.parent, partition.parts,
                                   detail::coset_element_blocks(s, Side::right)));
}

/// Dual of construct1_right: left cosets head the row blocks, the parts head
/// the column blocks; blocks are |S| x [G:S].
inline CayleySudokuTable construct1_left(const Subgroup& s,
                                         const TransversalPartition& partition) {
  if (partition.side != Side::right)
    throw validation_error("this layout takes a partition into right coset representatives");
  if (!(partition.subgroup == s))
    throw validation_error("partition was built for a different subgroup");
  detail::check_transversal_partition(s, Side::right, partition.parts);
  return detail::finish(make_table(s.parent,
                                   detail::coset_element_blocks(s, Side::left),
                                   partition.parts));
}

/// Backtracking search for a transversal of `side` valid for every conjugate
/// of S at once. Elements are tried in ascending index order, so the result
/// is the lexicographically least such transversal; nullopt means the search
/// space is exhausted and none exists.
inline std::optional<UniversalTransversal>
find_universal_transversal(const Subgroup& s, Side side,
                           long long node_cap = 100'000'000) {
  const auto& g = *s.parent;
  const int n = g.order();
  const int m = s.index();

  std::vector<std::vector<int>> coset_of; // per conjugate: element -> coset id
  for (const auto& [g_elem, conj] : conjugates(s))
    coset_of.push_back(coset_id_map(conj, side));
  const int nconj = static_cast<int>(coset_of.size());

  std::vector<std::vector<char>> hit(static_cast<std::size_t>(nconj),
                                     std::vector<char>(static_cast<std::size_t>(m), 0));
  std::vector<int> reps;
  reps.reserve(static_cast<std::size_t>(m));
  long long nodes = 0;

  const auto dfs = [&](auto&& self, int from) -> bool {
    if (static_cast<int>(reps.size()) == m) return true;
    for (int x = from; x <= n - (m - static_cast<int>(reps.size())); ++x) {
      if (++nodes > node_cap)
        throw resource_error("universal-transversal search exceeded its cap of " +
                             std::to_string(node_cap) + " nodes");
      bool ok = true;
      for (int c = 0; c < nconj && ok; ++c) ok = !hit[c][coset_of[c][x]];
      if (!ok) continue;
      for (int c = 0; c < nconj; ++c) hit[c][coset_of[c][x]] = 1;
      reps.push_back(x);
      if (self(self, x + 1)) return true;
      reps.pop_back();
      for (int c = 0; c < nconj; ++c) hit[c][coset_of[c][x]] = 0;
    }
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;
  return UniversalTransversal{s, side, std::move(reps)};
}

/// The |S| translates of a universal transversal: s*R for right transversals,
/// R*s for left ones, with s running over S in index order and each part
/// sorted. The translates partition G and stay universal; both facts are
/// re-checked and a failure is a bug trap.
inline TransversalPartition
translate_transversal_partition(const UniversalTransversal& r) {
  const auto& g = *r.subgroup.parent;
  std::vector<std::vector<int>> parts;
  for (int s_elem : r.subgroup.elements) {
    std::vector<int> part;
    part.reserve(r.reps.size());
    for (int rep : r.reps)
      part.push_back(r.side == Side::right ? g.op(s_elem, rep) : g.op(rep, s_elem));
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  try {
    detail::check_transversal_partition(r.subgroup, r.side, parts);
    detail::check_universal_partition(r.subgroup, r.side, parts);
  } catch (const validation_error& e) {
    throw internal_error(std::string("translates of a universal transversal "
                                     "failed certification: ") + e.what());
  }
  return TransversalPartition{r.subgroup, r.side, std::move(parts)};
}

/// Left cosets head the column blocks and the parts head the row blocks.
/// Every part must be a left transversal of every conjugate S^g; the error
/// names the conjugate and the coset a part misses. Blocks are [G:S] x |S|.
inline CayleySudokuTable construct2_left(const Subgroup& s,
                                         const TransversalPartition& partition) {
  if (partition.side != Side::left)
    throw validation_error("this layout takes left coset representatives");
  if (!(partition.subgroup == s))
    throw validation_error("partition was built for a different subgroup");
  detail::check_transversal_partition(s, Side::left, partition.parts);
  detail::check_universal_partition(s, Side::left, partition.parts);
  return detail::finish(make_table(s.parent, partition.parts,
                                   detail::coset_element_blocks(s, Side::left)));
}

/// Dual of construct2_left: right cosets head the row blocks, the parts head
/// the column blocks; every part must be a right transversal of every
/// conjugate. Blocks are |S| x [G:S].
inline CayleySudokuTable construct2_right(const Subgroup& s,
                                          const TransversalPartition& partition) {
  if (partition.side != Side::right)
    throw validation_error("this layout takes right coset representatives");
  if (!(partition.subgroup == s))
    throw validation_error("partition was built for a different subgroup");
  detail::check_transversal_partition(s, Side::right, partition.parts);
  detail::check_universal_partition(s, Side::right, partition.parts);
  return detail::finish(make_table(s.parent,
                                   detail::coset_element_blocks(s, Side::right),
                                   partition.parts));
}

/// Extends a verified table of the subgroup A to one of the whole group.
/// With inner column parts C_1..C_k, inner row parts R_1..R_n, left reps
/// l_1..l_t and right reps r_1..r_t of A in G: column blocks are C_i * r_j
/// (i fast, j slow), and the b-th row block concatenates l_1 R_b, ..., l_t R_b.
///
/// `inner` lives over its own group, which must match A elementwise by label.
inline CayleySudokuTable construct3(const Subgroup& a,
                                    const CayleySudokuTable& inner,
                                    const Transversal& left_reps,
                                    const Transversal& right_reps) {
  const auto& g = *a.parent;
  if (!inner.verified)
    throw validation_error("the inner table has not been verified");
  if (left_reps.side != Side::left || right_reps.side != Side::right)
    throw validation_error("representative sets have the wrong sides");
  if (!is_transversal(a, Side::left, left_reps.reps))
    throw validation_error("left representatives are not a left transversal of the subgroup");
  if (!is_transversal(a, Side::right, right_reps.reps))
    throw validation_error("right representatives are not a right transversal of the subgroup");

  // Map inner elements into G by label and check it lands exactly on A,
  // respecting the operation.
  const auto& inner_g = *inner.group;
  std::vector<int> embed(static_cast<std::size_t>(inner_g.order()), -1);
  for (int u = 0; u < inner_g.order(); ++u) {
    auto idx = g.index_of_label(inner_g.label(u));
    if (!idx || !a.contains(*idx))
      throw validation_error("inner table element \"" + inner_g.label(u) +
                             "\" is not an element of the subgroup");
    embed[u] = *idx;
  }
  if (inner_g.order() != a.order())
    throw validation_error("inner table order differs from the subgroup order");
  for (int u = 0; u < inner_g.order(); ++u)
    for (int v = 0; v < inner_g.order(); ++v)
      if (embed[inner_g.op(u, v)] != g.op(embed[u], embed[v]))
        throw validation_error("inner table operation disagrees with the group at (\"" +
                               inner_g.label(u) + "\", \"" + inner_g.label(v) + "\")");

  std::vector<std::vector<int>> col_blocks;
  for (int r : right_reps.reps)
    for (const auto& cb : inner.col_blocks) {
      std::vector<int> blk;
      for (int j = cb.start; j < cb.start + cb.len; ++j)
        blk.push_back(g.op(embed[inner.col_labels[j]], r));
      col_blocks.push_back(std::move(blk));
    }

  std::vector<std::vector<int>> row_blocks;
  for (const auto& rb : inner.row_blocks) {
    std::vector<int> blk;
    for (int l : left_reps.reps)
      for (int i = rb.start; i < rb.start + rb.len; ++i)
        blk.push_back(g.op(l, embed[inner.row_labels[i]]));
    row_blocks.push_back(std::move(blk));
  }

  return detail::finish(make_table(a.parent, row_blocks, col_blocks));
}

} // namespace csudoku
