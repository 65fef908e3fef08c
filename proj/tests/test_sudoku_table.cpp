#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "csudoku/constructions.hpp"
#include "csudoku/sudoku_table.hpp"
#include "fixtures.hpp"

using namespace csudoku;
using fixtures::by_label;
using fixtures::by_labels;

namespace {

CayleySudokuTable z9_table() {
  auto z9 = make_cyclic(9);
  return make_table(z9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}},
                    {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
}

CayleySudokuTable s3_table7() {
  auto s3 = make_symmetric(3);
  auto rows = std::vector<std::vector<int>>{
      by_labels(s3, {"(1)", "(123)", "(132)"}), by_labels(s3, {"(12)", "(13)", "(23)"})};
  auto cols = std::vector<std::vector<int>>{
      by_labels(s3, {"(1)", "(12)"}), by_labels(s3, {"(13)", "(132)"}),
      by_labels(s3, {"(23)", "(123)"})};
  return make_table(s3, rows, cols);
}

// An independent take on the sudoku condition: every block, as a multiset,
// equals the element set.
bool sudoku_by_multisets(const CayleySudokuTable& t) {
  std::vector<int> all(static_cast<std::size_t>(t.size()));
  std::iota(all.begin(), all.end(), 0);
  for (const auto& rb : t.row_blocks)
    for (const auto& cb : t.col_blocks) {
      std::vector<int> seen;
      for (int i = rb.start; i < rb.start + rb.len; ++i)
        for (int j = cb.start; j < cb.start + cb.len; ++j) seen.push_back(t.cell(i, j));
      std::sort(seen.begin(), seen.end());
      if (seen != all) return false;
    }
  return true;
}

} // namespace

TEST_CASE("sudoku verification") {
  SUBCASE("the 9x9 layout passes") {
    auto t = z9_table();
    CHECK(verify_sudoku(t).pass);
    CHECK(sudoku_by_multisets(t));
  }

  SUBCASE("the order-6 layout passes") {
    auto t = s3_table7();
    CHECK(verify_sudoku(t).pass);
    CHECK(sudoku_by_multisets(t));
  }

  SUBCASE("swapping the good row blocks of Z_4 breaks the first block") {
    auto z4 = make_cyclic(4);
    auto good = make_table(z4, {{0, 2}, {1, 3}}, {{0, 1}, {2, 3}});
    CHECK(verify_sudoku(good).pass);

    auto bad = make_table(z4, {{0, 1}, {2, 3}}, {{0, 1}, {2, 3}});
    auto report = verify_sudoku(bad);
    REQUIRE_FALSE(report.pass);
    CHECK(report.first().fault == verify_fault::duplicate_element);
    CHECK(report.first().block_row == 0);
    CHECK(report.first().block_col == 0);
    CHECK(report.first().element == 1);
    CHECK_FALSE(sudoku_by_multisets(bad));
  }

  SUBCASE("exhaustive mode reports every failing block") {
    auto z4 = make_cyclic(4);
    auto bad = make_table(z4, {{0, 1}, {2, 3}}, {{0, 1}, {2, 3}});
    CHECK(verify_sudoku(bad, true).failures.size() == 4);
  }

  SUBCASE("a tampered body is malformed, not a sudoku failure") {
    auto t = z9_table();
    std::swap(t.body[0], t.body[1]);
    CHECK_THROWS_AS(verify_sudoku(t), malformed_table_error);
  }

  SUBCASE("report verdict matches the multiset oracle on random block layouts") {
    std::mt19937 rng(23);
    auto z12 = make_cyclic(12);
    std::vector<int> all(12);
    std::iota(all.begin(), all.end(), 0);
    for (int trial = 0; trial < 60; ++trial) {
      auto rows = all, cols = all;
      std::shuffle(rows.begin(), rows.end(), rng);
      std::shuffle(cols.begin(), cols.end(), rng);
      const auto chop = [&](const std::vector<int>& v, int parts) {
        std::vector<std::vector<int>> out;
        int len = 12 / parts;
        for (int p = 0; p < parts; ++p)
          out.emplace_back(v.begin() + p * len, v.begin() + (p + 1) * len);
        return out;
      };
      auto t = make_table(z12, chop(rows, 4), chop(cols, 3));
      CHECK(verify_sudoku(t).pass == sudoku_by_multisets(t));
    }
  }
}

TEST_CASE("text rendering") {
  SUBCASE("bordered 9x9 grid") {
    auto text = render_text(z9_table());
    CHECK(text.find(" || 0 3 6 | 1 4 7 | 2 5 8 |\n") != std::string::npos);
    CHECK(text.find("==++") != std::string::npos);
    CHECK(text.find("--+") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 9 + 1 + 1 + 2 + 1);
    CHECK(render_text(z9_table()) == text); // byte-stable
  }

  SUBCASE("trivial group renders a single bordered cell") {
    auto g = make_cyclic(1);
    auto t = make_table(g, {{0}}, {{0}});
    CHECK(render_text(t) ==
          "  || 0 |\n"
          "==++===+\n"
          "0 || 0 |\n"
          "--++---+\n");
  }

  SUBCASE("the order-6 table has three column blocks of width two") {
    auto text = render_text(s3_table7());
    std::istringstream in(text);
    std::string first;
    std::getline(in, first);
    CHECK(first == "      ||   (1)  (12) |  (13) (132) |  (23) (123) |");
  }
}

TEST_CASE("rendered borders can be recovered") {
  auto t = s3_table7();
  auto text = render_text(t);
  std::istringstream in(text);
  std::string line;

  std::getline(in, line);
  std::vector<std::string> cols;
  std::vector<int> col_block_sizes;
  {
    std::string cell;
    int block = 0;
    std::istringstream ls(line.substr(line.find("||") + 2));
    while (ls >> cell) {
      if (cell == "|") {
        col_block_sizes.push_back(block);
        block = 0;
      } else {
        cols.push_back(cell);
        ++block;
      }
    }
  }
  REQUIRE(cols.size() == 6);
  for (int j = 0; j < 6; ++j) CHECK(cols[j] == t.group->label(t.col_labels[j]));
  CHECK(col_block_sizes == std::vector<int>{2, 2, 2});

  std::vector<std::string> rows;
  std::vector<int> row_block_sizes;
  int rows_in_block = 0;
  while (std::getline(in, line)) {
    if (line.find("||") == std::string::npos) { // a rule line
      if (rows_in_block > 0) row_block_sizes.push_back(rows_in_block);
      rows_in_block = 0;
      continue;
    }
    std::istringstream ls(line.substr(0, line.find("||")));
    std::string label;
    ls >> label;
    rows.push_back(label);
    ++rows_in_block;
  }
  REQUIRE(rows.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(rows[i] == t.group->label(t.row_labels[i]));
  CHECK(row_block_sizes == std::vector<int>{3, 3});
}

TEST_CASE("column blocks as coset squares") {
  auto s3 = make_symmetric(3);
  auto s = subgroup_generated(s3, {by_label(s3, "(12)")});

  SUBCASE("a universal transversal column yields a Latin square") {
    auto ut = find_universal_transversal(s, Side::right);
    REQUIRE(ut.has_value());
    auto t = construct2_right(s, translate_transversal_partition(*ut));
    for (int b = 0; b < static_cast<int>(t.col_blocks.size()); ++b) {
      auto sq = blocks_as_latin_square(t, b);
      CHECK(sq.order == 3);
      CHECK(is_latin_square(sq));
    }
  }

  SUBCASE("a normal subgroup gives the factor-group table") {
    auto z6 = make_cyclic(6);
    auto h = subgroup_generated(z6, {2}); // {0,2,4}, index 2
    auto ut = find_universal_transversal(h, Side::right);
    REQUIRE(ut.has_value());
    auto t = construct2_right(h, translate_transversal_partition(*ut));
    for (int b = 0; b < static_cast<int>(t.col_blocks.size()); ++b) {
      auto sq = blocks_as_latin_square(t, b);
      REQUIRE(sq.order == 2);
      CHECK(sq.at(0, 0) == 0);
      CHECK(sq.at(0, 1) == 1);
      CHECK(sq.at(1, 0) == 1);
      CHECK(sq.at(1, 1) == 0);
    }
  }

  SUBCASE("row blocks that are not cosets are rejected") {
    CHECK_THROWS_AS(blocks_as_latin_square(z9_table(), 0), validation_error);
  }

  SUBCASE("the block condition and the coset squares fail together") {
    // arrange rows by right coset but head the columns with parts that are
    // transversals of S only, not of its conjugates
    auto p1 = by_labels(s3, {"(1)", "(13)", "(132)"});
    auto p2 = by_labels(s3, {"(12)", "(123)", "(23)"});
    std::vector<std::vector<int>> row_blocks;
    for (const auto& c : cosets(s, Side::right)) row_blocks.push_back(c.elements);
    auto t = make_table(s3, row_blocks, {p1, p2});
    REQUIRE_FALSE(verify_sudoku(t).pass);
    bool all_latin = true;
    for (int b = 0; b < static_cast<int>(t.col_blocks.size()); ++b)
      all_latin = all_latin && is_latin_square(blocks_as_latin_square(t, b));
    CHECK_FALSE(all_latin);
  }
}

TEST_CASE("orthogonality") {
  const auto square = [](int m, auto f) {
    LatinSquare sq{m, std::vector<int>(static_cast<std::size_t>(m) * m)};
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) sq.grid[static_cast<std::size_t>(i) * m + j] = f(i, j);
    return sq;
  };

  auto a = square(3, [](int i, int j) { return (i + j) % 3; });
  auto b = square(3, [](int i, int j) { return (i + 2 * j) % 3; });
  REQUIRE(is_latin_square(a));
  REQUIRE(is_latin_square(b));

  // brute-force oracle over the nine pairs
  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) pairs.emplace(a.at(i, j), b.at(i, j));
  CHECK(pairs.size() == 9);
  CHECK(are_orthogonal(a, b));

  CHECK_FALSE(are_orthogonal(a, a));
  CHECK_THROWS_AS(are_orthogonal(a, square(4, [](int, int) { return 0; })),
                  validation_error);
}
