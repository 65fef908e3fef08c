#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csudoku/group.hpp"

namespace csudoku {

/// Half-open range of positions within a label sequence.
struct BlockRange {
  int start = 0;
  int len = 0;
  friend bool operator==(const BlockRange&, const BlockRange&) = default;
};

/// A bordered, block-partitioned Cayley table. Row and column labels are
/// permutations of the element indices; blocks are contiguous ranges over
/// them. `body[i][j] = op(row_labels[i], col_labels[j])` whenever the value
/// was built by this library; tables read from files may claim otherwise and
/// are checked by the verifier.
struct CayleySudokuTable {
  GroupPtr group;
  std::vector<int> row_labels;
  std::vector<int> col_labels;
  std::vector<BlockRange> row_blocks;
  std::vector<BlockRange> col_blocks;
  std::vector<int> body; // row-major n x n
  bool verified = false;

  int size() const { return static_cast<int>(row_labels.size()); }
  int cell(int i, int j) const { return body[static_cast<std::size_t>(i) * row_labels.size() + j]; }
};

/// An m x m grid over symbols 0..m-1; Latin-ness is checked separately.
struct LatinSquare {
  int order = 0;
  std::vector<int> grid; // row-major

  int at(int i, int j) const { return grid[static_cast<std::size_t>(i) * order + j]; }
};

inline bool is_latin_square(const LatinSquare& sq) {
  const int m = sq.order;
  if (static_cast<int>(sq.grid.size()) != m * m) return false;
  std::vector<char> seen(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < m; ++c) {
      int v = sq.at(r, c);
      if (v < 0 || v >= m || seen[v]) return false;
      seen[v] = 1;
    }
  }
  for (int c = 0; c < m; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < m; ++r) {
      int v = sq.at(r, c);
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

/// The table body read as a Latin square over element indices.
inline LatinSquare body_as_latin_square(const CayleySudokuTable& t) {
  return LatinSquare{t.size(), t.body};
}

namespace detail {

inline std::vector<BlockRange> ranges_from_groups(const std::vector<std::vector<int>>& groups) {
  std::vector<BlockRange> out;
  int at = 0;
  for (const auto& g : groups) {
    out.push_back({at, static_cast<int>(g.size())});
    at += static_cast<int>(g.size());
  }
  return out;
}

inline void check_label_permutation(const GroupPtr& g, const std::vector<int>& labels,
                                    const char* which) {
  if (static_cast<int>(labels.size()) != g->order())
    throw validation_error(std::string(which) + " labels do not cover the group once");
  std::vector<char> seen(static_cast<std::size_t>(g->order()), 0);
  for (int x : labels) {
    if (x < 0 || x >= g->order() || seen[x])
      throw validation_error(std::string(which) +
                             " labels are not a permutation of the elements");
    seen[x] = 1;
  }
}

} // namespace detail

/// Assembles a table from bordered label blocks; the body is computed from
/// the group operation, so the result is consistent by construction. No
/// sudoku property is implied until the verifier says so.
inline CayleySudokuTable make_table(const GroupPtr& g,
                                    const std::vector<std::vector<int>>& row_label_blocks,
                                    const std::vector<std::vector<int>>& col_label_blocks) {
  CayleySudokuTable t;
  t.group = g;
  for (const auto& blk : row_label_blocks)
    t.row_labels.insert(t.row_labels.end(), blk.begin(), blk.end());
  for (const auto& blk : col_label_blocks)
    t.col_labels.insert(t.col_labels.end(), blk.begin(), blk.end());
  detail::check_label_permutation(g, t.row_labels, "row");
  detail::check_label_permutation(g, t.col_labels, "column");
  t.row_blocks = detail::ranges_from_groups(row_label_blocks);
  t.col_blocks = detail::ranges_from_groups(col_label_blocks);

  const int n = g->order();
  t.body.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.body[static_cast<std::size_t>(i) * n + j] = g->op(t.row_labels[i], t.col_labels[j]);
  return t;
}

enum class verify_fault {
  nonuniform_blocks,
  duplicate_element,
  missing_element,
};

struct VerifyFailure {
  verify_fault fault;
  int block_row = -1; // row-block index
  int block_col = -1; // column-block index
  int element = -1;   // duplicated or missing element, where applicable
};

struct VerifyReport {
  bool pass = false;
  std::vector<VerifyFailure> failures; // first failure only unless exhaustive

  const VerifyFailure& first() const { return failures.front(); }
};

namespace detail {

inline void check_table_consistency(const CayleySudokuTable& t) {
  const auto& g = *t.group;
  const int n = g.order();
  check_label_permutation(t.group, t.row_labels, "row");
  check_label_permutation(t.group, t.col_labels, "column");
  if (static_cast<int>(t.body.size()) != n * n)
    throw malformed_table_error("body is not " + std::to_string(n) + " x " +
                                std::to_string(n));
  int at = 0;
  for (const auto& b : t.row_blocks) {
    if (b.start != at || b.len < 1) throw malformed_table_error("row blocks do not partition the rows");
    at += b.len;
  }
  if (at != n) throw malformed_table_error("row blocks do not partition the rows");
  at = 0;
  for (const auto& b : t.col_blocks) {
    if (b.start != at || b.len < 1) throw malformed_table_error("column blocks do not partition the columns");
    at += b.len;
  }
  if (at != n) throw malformed_table_error("column blocks do not partition the columns");

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t.cell(i, j) != g.op(t.row_labels[i], t.col_labels[j]))
        throw malformed_table_error(
            "body disagrees with the borders at row " + std::to_string(i + 1) +
            ", column " + std::to_string(j + 1) + ": stored \"" +
            g.label(t.cell(i, j)) + "\", operation gives \"" +
            g.label(g.op(t.row_labels[i], t.col_labels[j])) + "\"");
}

/// The sudoku condition on a stored body, independent of any group operation:
/// uniform block dimensions and every element exactly once per block.
inline VerifyReport check_blocks(const std::vector<int>& body, int n,
                                 const std::vector<BlockRange>& row_blocks,
                                 const std::vector<BlockRange>& col_blocks,
                                 bool exhaustive) {
  VerifyReport report;
  for (const auto& b : row_blocks)
    if (b.len != row_blocks.front().len) {
      report.failures.push_back({verify_fault::nonuniform_blocks,
                                 static_cast<int>(&b - row_blocks.data()), -1, -1});
      return report;
    }
  for (const auto& b : col_blocks)
    if (b.len != col_blocks.front().len) {
      report.failures.push_back({verify_fault::nonuniform_blocks, -1,
                                 static_cast<int>(&b - col_blocks.data()), -1});
      return report;
    }

  std::vector<int> count(static_cast<std::size_t>(n));
  for (std::size_t br = 0; br < row_blocks.size(); ++br) {
    for (std::size_t bc = 0; bc < col_blocks.size(); ++bc) {
      std::fill(count.begin(), count.end(), 0);
      std::optional<VerifyFailure> fail;
      for (int i = row_blocks[br].start; i < row_blocks[br].start + row_blocks[br].len; ++i)
        for (int j = col_blocks[bc].start; j < col_blocks[bc].start + col_blocks[bc].len; ++j) {
          int v = body[static_cast<std::size_t>(i) * n + j];
          if (++count[v] == 2 && !fail)
            fail = VerifyFailure{verify_fault::duplicate_element,
                                 static_cast<int>(br), static_cast<int>(bc), v};
        }
      if (!fail)
        for (int v = 0; v < n; ++v)
          if (count[v] == 0) {
            fail = VerifyFailure{verify_fault::missing_element,
                                 static_cast<int>(br), static_cast<int>(bc), v};
            break;
          }
      if (fail) {
        report.failures.push_back(*fail);
        if (!exhaustive) return report;
      }
    }
  }
  report.pass = report.failures.empty();
  return report;
}

} // namespace detail

/// Checks the defining sudoku property: uniform rectangular blocks, each
/// containing every group element exactly once. The table must first be
/// internally consistent (body = operation applied to the borders); a table
/// that is not is malformed rather than a failed sudoku, and throws.
inline VerifyReport verify_sudoku(const CayleySudokuTable& t, bool exhaustive = false) {
  detail::check_table_consistency(t);
  return detail::check_blocks(t.body, t.size(), t.row_blocks, t.col_blocks, exhaustive);
}

/// The block condition alone, on the stored body as given. Lets a caller
/// judge a document's sudoku claim separately from its consistency claim.
inline VerifyReport verify_blocks_only(const CayleySudokuTable& t, bool exhaustive = false) {
  return detail::check_blocks(t.body, t.size(), t.row_blocks, t.col_blocks, exhaustive);
}

/// Whether the stored body agrees with the borders under the group operation.
inline bool body_consistent(const CayleySudokuTable& t) {
  const auto& g = *t.group;
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      if (t.cell(i, j) != g.op(t.row_labels[i], t.col_labels[j])) return false;
  return true;
}

/// Fixed-width bordered rendering: double rule under the column border,
/// single rules between blocks. Byte-stable across runs.
inline std::string render_text(const CayleySudokuTable& t) {
  const auto& g = *t.group;
  std::size_t w = 1;
  for (const auto& l : g.labels()) w = std::max(w, l.size());

  const auto pad = [&](const std::string& s) {
    return std::string(w - s.size(), ' ') + s;
  };
  const auto rule = [&](char fill) {
    std::string line(w + 1, fill);
    line += "++";
    for (const auto& b : t.col_blocks) {
      line += std::string(static_cast<std::size_t>(b.len) * (w + 1) + 1, fill);
      line += '+';
    }
    line += '\n';
    return line;
  };

  std::string out;
  out += std::string(w, ' ');
  out += " ||";
  for (const auto& b : t.col_blocks) {
    for (int j = b.start; j < b.start + b.len; ++j) out += " " + pad(g.label(t.col_labels[j]));
    out += " |";
  }
  out += '\n';
  out += rule('=');
  for (std::size_t br = 0; br < t.row_blocks.size(); ++br) {
    if (br > 0) out += rule('-');
    const auto& rb = t.row_blocks[br];
    for (int i = rb.start; i < rb.start + rb.len; ++i) {
      out += pad(g.label(t.row_labels[i]));
      out += " ||";
      for (const auto& b : t.col_blocks) {
        for (int j = b.start; j < b.start + b.len; ++j) out += " " + pad(g.label(t.cell(i, j)));
        out += " |";
      }
      out += '\n';
    }
  }
  out += rule('-');
  return out;
}

/// For a table whose row blocks are single right cosets of a subgroup S
/// (S itself is the row block holding the identity) and whose column block
/// `col_block` is a transversal R of those cosets: the square whose (i,j)
/// entry is the index of the coset containing r_i * r_j, where r_c denotes
/// the element of R lying in coset c. Rows and columns follow the row-block
/// order. The result is Latin exactly when the column of blocks under R
/// satisfies the sudoku condition.
inline LatinSquare blocks_as_latin_square(const CayleySudokuTable& t, int col_block) {
  const auto& g = *t.group;
  const int m = static_cast<int>(t.row_blocks.size());
  if (col_block < 0 || col_block >= static_cast<int>(t.col_blocks.size()))
    throw validation_error("column block index out of range");

  // Locate S = the row block containing the identity, as an element set.
  std::vector<std::vector<int>> row_sets(static_cast<std::size_t>(m));
  int s_block = -1;
  for (int b = 0; b < m; ++b) {
    const auto& rb = t.row_blocks[b];
    for (int i = rb.start; i < rb.start + rb.len; ++i) {
      row_sets[b].push_back(t.row_labels[i]);
      if (t.row_labels[i] == g.identity()) s_block = b;
    }
    std::sort(row_sets[b].begin(), row_sets[b].end());
  }
  if (s_block < 0) throw internal_error("no row block contains the identity");

  Subgroup s{t.group, row_sets[s_block]};
  try {
    detail::check_subgroup(s);
  } catch (const validation_error&) {
    throw validation_error("row blocks are not cosets: the identity's block is not a subgroup");
  }
  for (int b = 0; b < m; ++b) {
    std::vector<int> coset;
    for (int h : s.elements) coset.push_back(g.op(h, row_sets[b].front()));
    std::sort(coset.begin(), coset.end());
    if (coset != row_sets[b])
      throw validation_error("row block " + std::to_string(b + 1) +
                             " is not a single right coset of the identity's block");
  }

  // Element -> row-block id, and the transversal element per coset.
  std::vector<int> block_of(static_cast<std::size_t>(g.order()), -1);
  for (int b = 0; b < m; ++b)
    for (int x : row_sets[b]) block_of[x] = b;

  std::vector<int> rep(static_cast<std::size_t>(m), -1);
  const auto& cb = t.col_blocks[col_block];
  if (cb.len != m)
    throw validation_error("column block " + std::to_string(col_block + 1) +
                           " does not have one element per coset");
  for (int j = cb.start; j < cb.start + cb.len; ++j) {
    int x = t.col_labels[j];
    if (rep[block_of[x]] != -1)
      throw validation_error("column block " + std::to_string(col_block + 1) +
                             " hits the coset of \"" + g.label(rep[block_of[x]]) +
                             "\" twice");
    rep[block_of[x]] = x;
  }

  LatinSquare sq{m, std::vector<int>(static_cast<std::size_t>(m) * m)};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      sq.grid[static_cast<std::size_t>(i) * m + j] = block_of[g.op(rep[i], rep[j])];
  return sq;
}

/// True iff the superimposed cell pairs of two equal-order squares are all
/// distinct.
inline bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  if (a.order != b.order)
    throw validation_error("orthogonality needs equal orders, got " +
                           std::to_string(a.order) + " and " + std::to_string(b.order));
  const int m = a.order;
  std::vector<char> seen(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int pair = a.at(i, j) * m + b.at(i, j);
      if (seen[pair]) return false;
      seen[pair] = 1;
    }
  return true;
}

} // namespace csudoku
