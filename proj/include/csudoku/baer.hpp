#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csudoku/group.hpp"
#include "csudoku/sudoku_table.hpp"

namespace csudoku {

/// Coset multiplication relative to a fixed right transversal r_1..r_m:
/// the (i,j) entry is the index of the right coset containing r_i * r_j.
/// Cosets and reps are aligned to the canonical coset order.
struct CosetMultiplicationTable {
  Subgroup subgroup;
  std::vector<int> reps; // reps[i] lies in coset i
  LatinSquare table;     // entries are coset indices; Latin-ness not implied
};

/// Builds the coset multiplication table for a right transversal. The table
/// need not be a Latin square; whether it is one is exactly the point.
inline CosetMultiplicationTable coset_quasigroup(const Subgroup& s,
                                                 const std::vector<int>& reps) {
  int fault = -1;
  bool doubled = false;
  if (!is_transversal(s, Side::right, reps, &fault, &doubled))
    throw validation_error(std::string("representatives ") +
                           (doubled ? "hit twice" : "miss") +
                           " the right coset of \"" + s.parent->label(fault) + "\"");

  const auto& g = *s.parent;
  const auto id = coset_id_map(s, Side::right);
  const int m = s.index();
  std::vector<int> aligned(static_cast<std::size_t>(m));
  for (int r : reps) aligned[id[r]] = r;

  LatinSquare table{m, std::vector<int>(static_cast<std::size_t>(m) * m)};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table.grid[static_cast<std::size_t>(i) * m + j] = id[g.op(aligned[i], aligned[j])];
  return CosetMultiplicationTable{s, std::move(aligned), std::move(table)};
}

/// True iff every row and column of the coset table is a permutation of the
/// coset indices, i.e. the table defines a quasigroup.
inline bool is_quasigroup_table(const CosetMultiplicationTable& t) {
  return is_latin_square(t.table);
}

/// The three equivalent readings of one partition into right transversals:
/// (sudoku) the bordered arrangement satisfies the block condition,
/// (universal) every part represents every coset of every conjugate,
/// (quasigroup) every part's coset multiplication is a quasigroup.
struct BaerReport {
  bool sudoku = false;
  bool universal = false;
  bool quasigroup = false;

  // per-part detail: part p universal for every conjugate / a quasigroup
  std::vector<bool> universal_parts;
  std::vector<bool> quasigroup_parts;

  std::optional<VerifyFailure> sudoku_witness;
  std::string universal_witness;
  int quasigroup_part = -1; // first part whose coset table is not Latin

  bool all_pass() const { return sudoku && universal && quasigroup; }
};

namespace detail {

inline void check_plain_transversal_partition(const Subgroup& s, Side side,
                                              const std::vector<std::vector<int>>& parts) {
  const auto& g = *s.parent;
  if (static_cast<int>(parts.size()) != s.order())
    throw validation_error("expected " + std::to_string(s.order()) + " parts, got " +
                           std::to_string(parts.size()));
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (const auto& part : parts)
    for (int x : part) {
      if (x < 0 || x >= g.order() || covered[x])
        throw validation_error("parts do not partition the group");
      covered[x] = 1;
    }
  for (int x = 0; x < g.order(); ++x)
    if (!covered[x]) throw validation_error("parts do not partition the group");
  for (std::size_t p = 0; p < parts.size(); ++p) {
    int fault = -1;
    bool doubled = false;
    if (!is_transversal(s, side, parts[p], &fault, &doubled))
      throw validation_error("part " + std::to_string(p + 1) + " is not a " +
                             std::string(side_name(side)) + " transversal: it " +
                             (doubled ? "hits twice" : "misses") + " the coset of \"" +
                             g.label(fault) + "\"");
  }
}

inline BaerReport baer_check_right(const Subgroup& s,
                                   const std::vector<std::vector<int>>& parts) {
  const auto& g = *s.parent;
  check_plain_transversal_partition(s, Side::right, parts);

  BaerReport report;

  // (a) arrange rows by right coset, column blocks by part, and test the
  // block condition directly.
  {
    std::vector<std::vector<int>> row_blocks;
    for (const auto& c : cosets(s, Side::right)) row_blocks.push_back(c.elements);
    auto t = make_table(s.parent, row_blocks, parts);
    auto verdict = verify_sudoku(t);
    report.sudoku = verdict.pass;
    if (!verdict.pass) report.sudoku_witness = verdict.first();
  }

  // (b) check each part against every conjugate, coset by coset.
  {
    report.universal_parts.assign(parts.size(), true);
    auto conjs = conjugates(s);
    for (std::size_t p = 0; p < parts.size(); ++p) {
      for (const auto& [g_elem, conj] : conjs) {
        int fault = -1;
        bool doubled = false;
        if (!is_transversal(conj, Side::right, parts[p], &fault, &doubled)) {
          report.universal_parts[p] = false;
          if (report.universal_witness.empty())
            report.universal_witness =
                "part " + std::to_string(p + 1) + (doubled ? " hits twice" : " misses") +
                " the right coset of \"" + g.label(fault) + "\" in the conjugate by \"" +
                g.label(g_elem) + "\"";
          break;
        }
      }
    }
    report.universal = std::all_of(report.universal_parts.begin(),
                                   report.universal_parts.end(),
                                   [](bool b) { return b; });
  }

  // (c) each part gives a quasigroup on the right cosets.
  {
    report.quasigroup_parts.assign(parts.size(), true);
    for (std::size_t p = 0; p < parts.size(); ++p) {
      if (!is_quasigroup_table(coset_quasigroup(s, parts[p]))) {
        report.quasigroup_parts[p] = false;
        if (report.quasigroup_part < 0) report.quasigroup_part = static_cast<int>(p);
      }
    }
    report.quasigroup = std::all_of(report.quasigroup_parts.begin(),
                                    report.quasigroup_parts.end(),
                                    [](bool b) { return b; });
  }

  if (report.sudoku != report.universal || report.universal != report.quasigroup)
    throw internal_error("the three equivalent verdicts disagree: sudoku=" +
                         std::to_string(report.sudoku) + " universal=" +
                         std::to_string(report.universal) + " quasigroup=" +
                         std::to_string(report.quasigroup));
  return report;
}

} // namespace detail

/// Runs the three-way equivalence check on a partition of G into transversals
/// of S. The right-handed version is native; the left-handed one transports
/// through the opposite group, where left cosets become right cosets.
/// Disagreement between the verdicts would contradict a proven equivalence
/// and raises an internal error.
inline BaerReport baer_equivalence_check(const Subgroup& s,
                                         const std::vector<std::vector<int>>& parts,
                                         Side side = Side::right) {
  if (side == Side::right) return detail::baer_check_right(s, parts);
  auto opposite = opposite_group(s.parent);
  return detail::baer_check_right(Subgroup{opposite, s.elements}, parts);
}

} // namespace csudoku
