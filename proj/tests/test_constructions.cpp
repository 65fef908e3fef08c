#include <doctest.h>

#include <set>

#include "csudoku/constructions.hpp"
#include "fixtures.hpp"

using namespace csudoku;
using fixtures::by_label;
using fixtures::by_labels;

namespace {

TransversalPartition partition_from_labels(const Subgroup& s, Side side,
                                           const std::vector<std::vector<std::string>>& parts) {
  TransversalPartition p{s, side, {}};
  for (const auto& part : parts) p.parts.push_back(by_labels(s.parent, part));
  return p;
}

} // namespace

TEST_CASE("default partitions") {
  SUBCASE("Z_9 with the order-3 subgroup") {
    auto z9 = make_cyclic(9);
    auto s = subgroup_generated(z9, {3});
    auto p = default_partition(s, Side::left);
    CHECK(p.parts == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  }

  SUBCASE("the whole group yields singleton parts") {
    auto z4 = make_cyclic(4);
    auto p = default_partition(whole_group(z4), Side::left);
    CHECK(p.parts == std::vector<std::vector<int>>{{0}, {1}, {2}, {3}});
  }

  SUBCASE("each part meets every right coset once") {
    auto s3 = make_symmetric(3);
    auto s = subgroup_generated(s3, {by_label(s3, "(12)")});
    auto p = default_partition(s, Side::right);
    REQUIRE(p.parts.size() == 2);
    auto id = coset_id_map(s, Side::right);
    for (const auto& part : p.parts) {
      std::vector<int> hits(3, 0);
      for (int x : part) ++hits[id[x]];
      CHECK(hits == std::vector<int>{1, 1, 1});
    }
  }
}

TEST_CASE("first construction, right cosets") {
  SUBCASE("reproduces the 9x9 golden table") {
    auto z9 = make_cyclic(9);
    auto s = subgroup_generated(z9, {3});
    auto t = construct1_right(s, default_partition(s, Side::left));
    CHECK(t.verified);

    for (int j = 0; j < 9; ++j)
      CHECK(t.col_labels[j] == fixtures::z9_golden_cols[j]);
    for (int i = 0; i < 9; ++i)
      CHECK(t.row_labels[i] == fixtures::z9_golden_rows[i]);
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) CHECK(t.cell(i, j) == fixtures::z9_golden_body[i][j]);

    CHECK(t.row_blocks == std::vector<BlockRange>{{0, 3}, {3, 3}, {6, 3}});
    CHECK(t.col_blocks == std::vector<BlockRange>{{0, 3}, {3, 3}, {6, 3}});
  }

  SUBCASE("trivial subgroup gives singleton column blocks") {
    auto z4 = make_cyclic(4);
    auto s = trivial_subgroup(z4);
    auto t = construct1_right(s, default_partition(s, Side::left));
    CHECK(t.verified);
    CHECK(t.col_blocks.size() == 4);
    CHECK(t.row_blocks.size() == 1);
  }

  SUBCASE("an asymmetric subgroup with the default partition verifies") {
    auto s3 = make_symmetric(3);
    auto s = subgroup_generated(s3, {by_label(s3, "(13)")});
    auto t = construct1_right(s, default_partition(s, Side::left));
    CHECK(verify_sudoku(t).pass);
  }
}

TEST_CASE("first construction, left cosets") {
  SUBCASE("reproduces the order-6 golden table") {
    auto s3 = make_symmetric(3);
    auto s = subgroup_generated(s3, {by_label(s3, "(12)")});
    auto t = construct1_left(
        s, partition_from_labels(s, Side::right, fixtures::s3_table2_partition));
    CHECK(t.verified);
    CHECK(fixtures::matches_golden(t, fixtures::s3_table2_cols,
                                   fixtures::s3_table2_rows, fixtures::s3_table2_body));
  }

  SUBCASE("trivial subgroup gives one column block") {
    auto z4 = make_cyclic(4);
    auto s = trivial_subgroup(z4);
    auto t = construct1_left(s, default_partition(s, Side::right));
    CHECK(t.verified);
    CHECK(t.col_blocks.size() == 1);
    CHECK(t.row_blocks.size() == 4);
  }

  SUBCASE("Z_9 with the default partition verifies") {
    auto z9 = make_cyclic(9);
    auto s = subgroup_generated(z9, {3});
    CHECK(construct1_left(s, default_partition(s, Side::right)).verified);
  }
}

TEST_CASE("first construction holds exactly for transversal partitions") {
  for (const auto& g : fixtures::fixture_groups_up_to(12)) {
    for (const auto& s : all_subgroups(g)) {
      auto p = default_partition(s, Side::left);
      CHECK(construct1_right(s, p).verified);

      auto id = coset_id_map(s, Side::left);
      const int k = static_cast<int>(p.parts.size());
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          for (std::size_t i = 0; i < p.parts[a].size(); ++i)
            for (std::size_t j = 0; j < p.parts[b].size(); ++j) {
              auto mutated = p;
              std::swap(mutated.parts[a][i], mutated.parts[b][j]);
              if (id[p.parts[a][i]] == id[p.parts[b][j]]) {
                // swapping within a coset keeps every part a transversal
                CHECK(construct1_right(s, mutated).verified);
              } else {
                CHECK_THROWS_AS(construct1_right(s, mutated), partition_error);
              }
            }
    }
  }
}

TEST_CASE("partition errors carry a witness") {
  auto z9 = make_cyclic(9);
  auto s = subgroup_generated(z9, {3});
  auto p = default_partition(s, Side::left);
  std::swap(p.parts[0][0], p.parts[1][1]); // 0 <-> 4: cross-coset
  try {
    construct1_right(s, p);
    FAIL("expected a partition_error");
  } catch (const partition_error& e) {
    CHECK(e.part() == 0);
    CHECK((e.fault() == partition_fault::missed_coset ||
           e.fault() == partition_fault::double_hit_coset));
    CHECK(e.coset_representative() >= 0);
  }
}

TEST_CASE("universal transversal search") {
  SUBCASE("finds the least universal left transversal in the order-6 group") {
    auto s3 = make_symmetric(3);
    auto s = subgroup_generated(s3, {by_label(s3, "(12)")});
    auto ut = find_universal_transversal(s, Side::left);
    REQUIRE(ut.has_value());
    CHECK(ut->reps == by_labels(s3, {"(1)", "(123)", "(132)"}));
  }

  SUBCASE("no universal transversal exists for the double transposition in S_4") {
    auto s4 = make_symmetric(4);
    auto s = subgroup_generated(s4, {by_label(s4, "(12)(34)")});
    CHECK_FALSE(find_universal_transversal(s, Side::left).has_value());
    CHECK_FALSE(find_universal_transversal(s, Side::right).has_value());
  }

  SUBCASE("a normal subgroup admits the default transversal") {
    auto z6 = make_cyclic(6);
    auto s = subgroup_generated(z6, {2});
    auto ut = find_universal_transversal(s, Side::left);
    REQUIRE(ut.has_value());
    CHECK(ut->reps == default_partition(s, Side::left).parts[0]);
  }

  SUBCASE("every normal subgroup yields a witness") {
    const std::vector<GroupPtr> abelian = {make_cyclic(8), make_cyclic(12),
                                           make_direct_product(make_cyclic(2),
                                                               make_cyclic(6))};
    for (const auto& g : abelian)
      for (const auto& s : all_subgroups(g)) {
        auto ut = find_universal_transversal(s, Side::left);
        REQUIRE(ut.has_value());
        CHECK(ut->reps == default_partition(s, Side::left).parts[0]);
      }
    // a nonabelian normal case
    auto s3 = make_symmetric(3);
    auto a3 = subgroup_generated(s3, {by_label(s3, "(123)")});
    CHECK(find_universal_transversal(a3, Side::right).has_value());
  }

  SUBCASE("the node cap raises a resource error") {
    auto s4 = make_symmetric(4);
    auto s = subgroup_generated(s4, {by_label(s4, "(12)(34)")});
    CHECK_THROWS_AS(find_universal_transversal(s, Side::left, 10), resource_error);
  }
}

TEST_CASE("translating one universal transversal partitions the group") {
  SUBCASE("the order-6 group") {
    auto s3 = make_symmetric(3);
    auto s = subgroup_generated(s3, {by_label(s3, "(12)")});
    auto ut = find_universal_transversal(s, Side::left);
    REQUIRE(ut.has_value());
    auto p = translate_transversal_partition(*ut);
    REQUIRE(p.parts.size() == 2);
    CHECK(p.parts[0] == by_labels(s3, {"(1)", "(123)", "(132)"}));
    CHECK(p.parts[1] == by_labels(s3, {"(12)", "(13)", "(23)"}));
  }

  SUBCASE("the identity translate is the transversal itself") {
    auto z6 = make_cyclic(6);
    auto s = subgroup_generated(z6, {3});
    auto ut = find_universal_transversal(s, Side::right);
    REQUIRE(ut.has_value());
    auto p = translate_transversal_partition(*ut);
    CHECK(p.parts[0] == ut->reps);
  }

  SUBCASE("the translation-set transversal of the order-36 group") {
    auto lm = fixtures::lmult_q6_group();
    auto g1 = stabilizer(lm, 0);
    std::vector<int> reps;
    for (const auto& l : fixtures::q6_lambda_strings)
      reps.push_back(by_label(lm, l));
    std::sort(reps.begin(), reps.end());
    auto p = translate_transversal_partition(UniversalTransversal{g1, Side::left, reps});
    CHECK(p.parts.size() == 6);
    std::set<int> all;
    for (const auto& part : p.parts) {
      CHECK(part.size() == 6);
      all.insert(part.begin(), part.end());
    }
    CHECK(all.size() == 36);
  }
}

TEST_CASE("second construction, left cosets") {
  SUBCASE("derives the order-6 golden table end to end") {
    auto s3 = make_symmetric(3);
    auto s = subgroup_generated(s3, {by_label(s3, "(12)")});
    auto ut = find_universal_transversal(s, Side::left);
    REQUIRE(ut.has_value());
    auto t = construct2_left(s, translate_transversal_partition(*ut));
    CHECK(t.verified);
    CHECK(fixtures::matches_golden(t, fixtures::s3_table7_cols,
                                   fixtures::s3_table7_rows, fixtures::s3_table7_body));
  }

  SUBCASE("a normal subgroup works with any transversal partition") {
    auto z9 = make_cyclic(9);
    auto s = subgroup_generated(z9, {3});
    auto t = construct2_left(s, default_partition(s, Side::left));
    CHECK(t.verified);
  }

  SUBCASE("the order-36 multiplication group gives 6x6 blocks") {
    auto lm = fixtures::lmult_q6_group();
    auto g1 = stabilizer(lm, 0);
    std::vector<int> reps;
    for (const auto& l : fixtures::q6_lambda_strings)
      reps.push_back(by_label(lm, l));
    std::sort(reps.begin(), reps.end());
    auto t = construct2_left(
        g1, translate_transversal_partition(UniversalTransversal{g1, Side::left, reps}));
    CHECK(t.verified);
    for (const auto& b : t.row_blocks) CHECK(b.len == 6);
    for (const auto& b : t.col_blocks) CHECK(b.len == 6);
  }

  SUBCASE("non-universal parts are rejected with the conjugate witness") {
    auto s3 = make_symmetric(3);
    auto s = subgroup_generated(s3, {by_label(s3, "(12)")});
    auto p = partition_from_labels(
        s, Side::left, {{"(1)", "(13)", "(123)"}, {"(12)", "(132)", "(23)"}});
    try {
      construct2_left(s, p);
      FAIL("expected a universality_error");
    } catch (const universality_error& e) {
      CHECK(e.part() >= 0);
      CHECK(e.conjugating_element() >= 0);
    }
  }
}

TEST_CASE("second construction, right cosets") {
  SUBCASE("the order-18 multiplication group gives 3-row by 6-column blocks") {
    auto rm = fixtures::rmult_q6_group();
    auto g1 = stabilizer(rm, 0);
    std::vector<int> reps;
    for (const auto& r : fixtures::q6_rho_strings) reps.push_back(by_label(rm, r));
    std::sort(reps.begin(), reps.end());
    auto t = construct2_right(
        g1, translate_transversal_partition(UniversalTransversal{g1, Side::right, reps}));
    CHECK(t.verified);
    for (const auto& b : t.row_blocks) CHECK(b.len == 3);
    for (const auto& b : t.col_blocks) CHECK(b.len == 6);
    CHECK(t.row_blocks.size() == 6);
    CHECK(t.col_blocks.size() == 3);
  }

  SUBCASE("a normal subgroup verifies with the default partition") {
    auto z6 = make_cyclic(6);
    auto s = subgroup_generated(z6, {2});
    CHECK(construct2_right(s, default_partition(s, Side::right)).verified);
  }
}

TEST_CASE("second construction holds exactly for universal partitions") {
  // enumerate every split of the order-6 group into two ordered 3-sets
  auto s3 = make_symmetric(3);
  auto s = subgroup_generated(s3, {by_label(s3, "(12)")});
  auto left_cosets = detail::coset_element_blocks(s, Side::left);

  std::vector<int> all = {0, 1, 2, 3, 4, 5};
  int valid = 0;
  for (int mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) != 3) continue;
    std::vector<int> p1, p2;
    for (int x = 0; x < 6; ++x) (mask >> x & 1 ? p1 : p2).push_back(x);

    bool universal = true;
    for (const auto& [g_elem, conj] : conjugates(s)) {
      (void)g_elem;
      universal = universal && is_transversal(conj, Side::left, p1) &&
                  is_transversal(conj, Side::left, p2);
    }

    auto t = make_table(s3, {p1, p2}, left_cosets);
    CHECK(verify_sudoku(t).pass == universal);
    valid += universal;
  }
  CHECK(valid > 0);
}

TEST_CASE("third construction") {
  SUBCASE("extending by the whole group is the identity") {
    auto z4 = make_cyclic(4);
    auto a = whole_group(z4);
    auto s2 = subgroup_generated(z4, {2});
    auto inner = construct1_right(s2, default_partition(s2, Side::left));
    auto t = construct3(a, inner, Transversal{Side::left, {0}}, Transversal{Side::right, {0}});
    CHECK(t.verified);
    CHECK(t.row_labels == inner.row_labels);
    CHECK(t.col_labels == inner.col_labels);
    CHECK(t.body == inner.body);
  }

  SUBCASE("lifting the order-2 subgroup of Z_4") {
    auto z4 = make_cyclic(4);
    auto a = subgroup_generated(z4, {2});
    auto [a_group, to_parent] = subgroup_as_group(a);
    (void)to_parent;
    auto aw = whole_group(a_group);
    auto inner = construct1_right(aw, default_partition(aw, Side::left));
    CHECK(inner.row_blocks.size() == 2);  // two single-row parts
    CHECK(inner.col_blocks.size() == 1);  // one coset block of width two

    auto t = construct3(a, inner, Transversal{Side::left, {0, 1}},
                        Transversal{Side::right, {0, 1}});
    CHECK(t.verified);
    CHECK(t.row_blocks == std::vector<BlockRange>{{0, 2}, {2, 2}});
    CHECK(t.col_blocks == std::vector<BlockRange>{{0, 2}, {2, 2}});
  }

  SUBCASE("lifting the 3-cycle subgroup of the order-6 group") {
    auto s3 = make_symmetric(3);
    auto a = subgroup_generated(s3, {by_label(s3, "(123)")});
    auto [a_group, to_parent] = subgroup_as_group(a);
    (void)to_parent;
    auto trivial = trivial_subgroup(a_group);
    auto inner = construct1_right(trivial, default_partition(trivial, Side::left));

    auto left = cosets(a, Side::left);
    auto right = cosets(a, Side::right);
    Transversal lt{Side::left, {left[0].representative(), left[1].representative()}};
    Transversal rt{Side::right, {right[0].representative(), right[1].representative()}};
    CHECK(construct3(a, inner, lt, rt).verified);
  }

  SUBCASE("an unverified inner table is rejected") {
    auto z4 = make_cyclic(4);
    auto a = whole_group(z4);
    auto s2 = subgroup_generated(z4, {2});
    auto inner = construct1_right(s2, default_partition(s2, Side::left));
    inner.verified = false;
    CHECK_THROWS_AS(construct3(a, inner, Transversal{Side::left, {0}},
                               Transversal{Side::right, {0}}),
                    validation_error);
  }

  SUBCASE("sufficiency across subgroup chains") {
    for (const auto& g : fixtures::fixture_groups_up_to(12)) {
      for (const auto& a : all_subgroups(g)) {
        if (a.order() == g->order()) continue;
        auto [a_group, to_parent] = subgroup_as_group(a);
        (void)to_parent;
        auto inner_s = trivial_subgroup(a_group);
        auto inner = construct1_right(inner_s, default_partition(inner_s, Side::left));

        Transversal lt{Side::left, default_partition(a, Side::left).parts[0]};
        Transversal rt{Side::right, default_partition(a, Side::right).parts[0]};
        CHECK(construct3(a, inner, lt, rt).verified);
      }
    }
  }
}
