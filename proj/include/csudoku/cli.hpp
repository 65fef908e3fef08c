#pragma once

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "csudoku/baer.hpp"
#include "csudoku/constructions.hpp"
#include "csudoku/exchange.hpp"
#include "csudoku/field.hpp"
#include "csudoku/quasigroup.hpp"
#include "csudoku/specs.hpp"

namespace csudoku::cli {

// Exit codes: 0 success, 2 construction condition failed, 3 the requested
// object does not exist, 4 a search budget was exhausted, 5 malformed input
// or usage. 1 is reserved for internal cross-check failures.
inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_condition = 2;
inline constexpr int exit_none = 3;
inline constexpr int exit_resource = 4;
inline constexpr int exit_malformed = 5;

namespace detail {

struct cli_exit {
  int code;
  std::string message;
};

/// Wraps input parsing so that any library error reads as malformed input.
template <typename F>
auto parse_inputs(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const resource_error&) {
    throw;
  } catch (const internal_error&) {
    throw;
  } catch (const error& e) {
    throw cli_exit{exit_malformed, e.what()};
  }
}

inline std::string label_list(const GroupPtr& g, const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ' ';
    out += g->label(x);
  }
  return out;
}

inline int parse_int(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw parse_error("expected a number, got \"" + text + "\"", 0);
  return std::stoi(text);
}

inline Side parse_side(const std::string& side) {
  if (side == "left") return Side::left;
  if (side == "right") return Side::right;
  throw cli_exit{exit_malformed, "side must be left or right, got \"" + side + "\""};
}

inline void emit_table(const CayleySudokuTable& t, const std::string& output,
                       std::ostream& out) {
  if (output == "exchange")
    out << write_exchange(t);
  else
    out << render_text(t);
}

inline nlohmann::json baer_report_json(const GroupPtr& g, const BaerReport& r) {
  nlohmann::json doc;
  doc["sudoku"] = r.sudoku;
  doc["universal"] = r.universal;
  doc["quasigroup"] = r.quasigroup;
  doc["universal_parts"] = r.universal_parts;
  doc["quasigroup_parts"] = r.quasigroup_parts;
  doc["agree"] = true;
  nlohmann::json witnesses = nlohmann::json::object();
  if (r.sudoku_witness) {
    witnesses["sudoku"] = {{"block_row", r.sudoku_witness->block_row},
                           {"block_col", r.sudoku_witness->block_col},
                           {"element", r.sudoku_witness->element >= 0
                                           ? g->label(r.sudoku_witness->element)
                                           : std::string()}};
  }
  if (!r.universal_witness.empty()) witnesses["universal"] = r.universal_witness;
  if (r.quasigroup_part >= 0) witnesses["quasigroup_part"] = r.quasigroup_part + 1;
  doc["witnesses"] = witnesses;
  return doc;
}

inline std::string describe_failure(const GroupPtr& g, const VerifyFailure& f) {
  switch (f.fault) {
    case verify_fault::nonuniform_blocks:
      return "blocks are not uniformly sized";
    case verify_fault::duplicate_element:
      return "block (" + std::to_string(f.block_row + 1) + "," +
             std::to_string(f.block_col + 1) + ") contains \"" + g->label(f.element) +
             "\" more than once";
    case verify_fault::missing_element:
      return "block (" + std::to_string(f.block_row + 1) + "," +
             std::to_string(f.block_col + 1) + ") is missing \"" +
             g->label(f.element) + "\"";
  }
  return "unknown failure";
}

// ---------------------------------------------------------------- commands

struct BuildArgs {
  std::string group_spec;
  std::string subgroup_spec;
  std::string construction;
  std::string partition_path;
  std::string inner_path;
  std::string left_reps;
  std::string right_reps;
  std::string output = "text";
  long long cap = 100'000'000;
};

inline int cmd_build(const BuildArgs& a, std::ostream& out) {
  auto [group, sub] = parse_inputs([&] {
    auto g = parse_group_spec(a.group_spec);
    return std::make_pair(g, parse_subgroup_spec(g, a.subgroup_spec));
  });

  const auto partition_from_file = [&](Side side) {
    return parse_inputs([&] {
      return TransversalPartition{sub, side,
                                  parse_partition_text(group, read_file(a.partition_path))};
    });
  };

  CayleySudokuTable table;
  if (a.construction == "1R") {
    auto p = a.partition_path.empty() ? default_partition(sub, Side::left)
                                      : partition_from_file(Side::left);
    table = construct1_right(sub, p);
  } else if (a.construction == "1L") {
    auto p = a.partition_path.empty() ? default_partition(sub, Side::right)
                                      : partition_from_file(Side::right);
    table = construct1_left(sub, p);
  } else if (a.construction == "2L" || a.construction == "2R") {
    const Side side = a.construction == "2L" ? Side::left : Side::right;
    TransversalPartition p{sub, side, {}};
    if (a.partition_path.empty()) {
      auto ut = find_universal_transversal(sub, side, a.cap);
      if (!ut) {
        out << "none: the search space is exhausted; no transversal of { "
            << label_list(group, sub.elements)
            << " } works for every conjugate on the " << side_name(side)
            << " side\n";
        return exit_none;
      }
      p = translate_transversal_partition(*ut);
    } else {
      p = partition_from_file(side);
    }
    table = side == Side::left ? construct2_left(sub, p) : construct2_right(sub, p);
  } else if (a.construction == "3") {
    auto inner = parse_inputs([&] { return read_exchange(read_file(a.inner_path)); });
    auto lt = parse_inputs([&] {
      std::vector<int> reps;
      for (const auto& tok : split(a.left_reps, ';'))
        if (!tok.empty()) reps.push_back(parse_element(group, tok));
      return Transversal{Side::left, reps};
    });
    auto rt = parse_inputs([&] {
      std::vector<int> reps;
      for (const auto& tok : split(a.right_reps, ';'))
        if (!tok.empty()) reps.push_back(parse_element(group, tok));
      return Transversal{Side::right, reps};
    });
    table = construct3(sub, inner, lt, rt);
  } else {
    throw cli_exit{exit_malformed,
                   "construction must be one of 1R, 1L, 2L, 2R, 3; got \"" +
                       a.construction + "\""};
  }

  emit_table(table, a.output, out);
  return exit_ok;
}

inline int cmd_search(const std::string& group_spec, const std::string& subgroup_spec,
                      const std::string& side_text, long long cap, std::ostream& out) {
  const Side side = parse_side(side_text);
  auto [group, sub] = parse_inputs([&] {
    auto g = parse_group_spec(group_spec);
    return std::make_pair(g, parse_subgroup_spec(g, subgroup_spec));
  });
  auto ut = find_universal_transversal(sub, side, cap);
  if (!ut) {
    out << "none: the search space is exhausted; no transversal of { "
        << label_list(group, sub.elements) << " } works for every conjugate on the "
        << side_name(side) << " side\n";
    return exit_none;
  }
  out << "universal " << side_name(side) << " transversal: "
      << label_list(group, ut->reps) << "\n";
  return exit_ok;
}

inline int cmd_verify(const std::string& path, std::ostream& out) {
  auto table = parse_inputs([&] { return read_exchange(read_file(path)); });

  auto report = verify_blocks_only(table);
  if (!report.pass) {
    out << "fail: " << describe_failure(table.group, report.first()) << "\n";
    return exit_condition;
  }
  if (!body_consistent(table))
    throw cli_exit{exit_malformed,
                   "the stored body disagrees with the borders under the group operation"};
  out << "pass: every block contains each of the " << table.size()
      << " elements exactly once\n";
  return exit_ok;
}

inline int cmd_baer_check(const std::string& group_spec, const std::string& subgroup_spec,
                          const std::string& partition_path, const std::string& side_text,
                          const std::string& output, long long cap, std::ostream& out) {
  const Side side = parse_side(side_text);
  auto [group, sub] = parse_inputs([&] {
    auto g = parse_group_spec(group_spec);
    return std::make_pair(g, parse_subgroup_spec(g, subgroup_spec));
  });

  std::vector<std::vector<int>> parts;
  if (partition_path.empty()) {
    auto ut = find_universal_transversal(sub, side, cap);
    if (!ut) {
      out << "none: no universal " << side_name(side)
          << " transversal exists, so there is no derived partition to check\n";
      return exit_none;
    }
    parts = translate_transversal_partition(*ut).parts;
  } else {
    parts = parse_inputs(
        [&] { return parse_partition_text(group, read_file(partition_path)); });
  }

  auto report = baer_equivalence_check(sub, parts, side);
  if (output == "exchange") {
    out << baer_report_json(group, report).dump(2) << "\n";
  } else {
    out << "sudoku:     " << (report.sudoku ? "true" : "false") << "\n";
    out << "universal:  " << (report.universal ? "true" : "false") << "\n";
    out << "quasigroup: " << (report.quasigroup ? "true" : "false") << "\n";
    if (!report.all_pass()) {
      out << "per part (universal/quasigroup):";
      for (std::size_t p = 0; p < report.universal_parts.size(); ++p)
        out << " " << p + 1 << ":" << (report.universal_parts[p] ? "t" : "f") << "/"
            << (report.quasigroup_parts[p] ? "t" : "f");
      out << "\n";
    }
    if (report.sudoku_witness)
      out << "  sudoku witness: " << describe_failure(group, *report.sudoku_witness)
          << "\n";
    if (!report.universal_witness.empty())
      out << "  universality witness: " << report.universal_witness << "\n";
    if (report.quasigroup_part >= 0)
      out << "  first non-quasigroup part: " << report.quasigroup_part + 1 << "\n";
  }
  return report.all_pass() ? exit_ok : exit_condition;
}

inline int cmd_mols(const std::string& field_spec, const std::string& output,
                    std::ostream& out) {
  auto k = parse_inputs([&] {
    if (field_spec.rfind("gfp2:", 0) != 0)
      throw parse_error("field spec must look like gfp2:<p>", 0);
    return make_field(parse_int(field_spec.substr(5)));
  });

  auto family = mols_family(k);
  auto matrix = orthogonality_matrix(family);
  int orthogonal_pairs = 0;
  bool all = true;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      orthogonal_pairs += matrix[i][j];
      all = all && matrix[i][j];
    }

  if (output == "exchange") {
    nlohmann::json doc;
    doc["field"] = {{"p", k.p()},
                    {"modulus", {k.c0(), k.c1()}},
                    {"size", k.size()}};
    doc["tables"] = family.size();
    doc["orthogonal_pairs"] = orthogonal_pairs;
    doc["all_pairs_orthogonal"] = all;
    std::vector<std::vector<int>> m;
    for (const auto& row : matrix) m.emplace_back(row.begin(), row.end());
    doc["matrix"] = m;
    std::vector<std::string> xs;
    for (int x = 0; x < k.size(); ++x)
      if (!k.in_subfield(x)) xs.push_back(k.label(x));
    doc["family"] = xs;
    out << doc.dump(2) << "\n";
  } else {
    out << "field of order " << k.size() << " = GF(" << k.p() << ")[t] mod t^2";
    if (k.c1()) out << "+" << k.c1() << "t";
    if (k.c0()) out << "+" << k.c0();
    out << "\n";
    out << "family size: " << family.size() << "\n";
    bool all_verified = true;
    for (const auto& t : family) all_verified = all_verified && verify_sudoku(t).pass;
    out << "every table verifies: " << (all_verified ? "yes" : "no") << "\n";
    out << "orthogonal pairs: " << orthogonal_pairs << " of "
        << family.size() * (family.size() - 1) / 2 << "\n";
    out << "all pairs orthogonal: " << (all ? "yes" : "no") << "\n";
  }
  return exit_ok;
}

// ------------------------------------------------------------------- demos

inline void print_quasigroup(const Quasigroup& q, std::ostream& out) {
  for (int r = 1; r <= q.order(); ++r) {
    for (int c = 1; c <= q.order(); ++c) {
      if (c > 1) out << ' ';
      out << q.at(r, c);
    }
    out << "\n";
  }
}

inline void demo_z9(std::ostream& out) {
  out << "Cayley-sudoku table of Z_9 from cosets and coset representatives\n\n";
  auto g = make_cyclic(9);
  auto s = parse_subgroup_spec(g, "3");
  out << "subgroup generated by 3: { " << label_list(g, s.elements) << " }\n";
  out << "right cosets:";
  for (const auto& c : cosets(s, Side::right))
    out << " { " << label_list(g, c.elements) << " }";
  out << "\n";
  auto p = default_partition(s, Side::left);
  out << "row parts (one element from each left coset):";
  for (const auto& part : p.parts) out << " { " << label_list(g, part) << " }";
  out << "\n\n";
  auto t = construct1_right(s, p);
  out << render_text(t) << "\n";
  out << "verification: " << (verify_sudoku(t).pass ? "pass" : "fail") << "\n";
}

inline void demo_s3_c1(std::ostream& out) {
  out << "Cayley-sudoku table of S_3 from left cosets and right coset "
         "representatives\n\n";
  auto g = make_symmetric(3);
  auto s = parse_subgroup_spec(g, "(12)");
  out << "subgroup: { " << label_list(g, s.elements) << " }\n";
  out << "left cosets:";
  for (const auto& c : cosets(s, Side::left))
    out << " { " << label_list(g, c.elements) << " }";
  out << "\n";
  TransversalPartition p{s, Side::right, {}};
  p.parts.push_back({parse_element(g, "(1)"), parse_element(g, "(13)"),
                     parse_element(g, "(132)")});
  p.parts.push_back({parse_element(g, "(12)"), parse_element(g, "(123)"),
                     parse_element(g, "(23)")});
  out << "column parts (right coset representatives):";
  for (const auto& part : p.parts) out << " { " << label_list(g, part) << " }";
  out << "\n\n";
  auto t = construct1_left(s, p);
  out << render_text(t) << "\n";
  out << "verification: " << (verify_sudoku(t).pass ? "pass" : "fail") << "\n";
}

inline void demo_s3_c2(std::ostream& out) {
  out << "Cayley-sudoku table of S_3 from left cosets and simultaneous left "
         "coset representatives\n\n";
  auto g = make_symmetric(3);
  auto s = parse_subgroup_spec(g, "(12)");
  out << "subgroup: { " << label_list(g, s.elements) << " }\n";
  out << "conjugates:";
  for (const auto& [by, conj] : conjugates(s)) {
    (void)by;
    out << " { " << label_list(g, conj.elements) << " }";
  }
  out << "\n";
  auto ut = find_universal_transversal(s, Side::left);
  out << "least universal left transversal: { " << label_list(g, ut->reps) << " }\n";
  auto p = translate_transversal_partition(*ut);
  out << "translates:";
  for (const auto& part : p.parts) out << " { " << label_list(g, part) << " }";
  out << "\n\n";
  auto t = construct2_left(s, p);
  out << render_text(t) << "\n";
  out << "verification: " << (verify_sudoku(t).pass ? "pass" : "fail") << "\n";
}

inline void demo_q6(Side which, std::ostream& out) {
  const bool left = which == Side::left;
  out << "Cayley-sudoku table from the " << (left ? "left" : "right")
      << " multiplication group of the order-6 quasigroup\n\n";
  auto q = make_qn(6);
  out << "quasigroup (row * column):\n";
  print_quasigroup(q, out);

  out << "\n" << (left ? "left" : "right") << " translations:\n";
  for (int i = 1; i <= 6; ++i) {
    auto p = left ? left_translation(q, i) : right_translation(q, i);
    out << "  " << (left ? "lambda" : "rho") << "_" << i << " = " << p.cycle_string()
        << (p.is_even() ? "  [even]" : "  [odd]") << "\n";
  }

  auto g = left ? lmult(q) : rmult(q);
  out << "\ngenerated group order: " << g->order() << "\n";
  bool all_even = true;
  for (int i = 0; i < g->order(); ++i) all_even = all_even && g->perm(i).is_even();
  out << "every element even: " << (all_even ? "yes" : "no") << "\n";

  auto stab = stabilizer(g, 0);
  out << "stabilizer of point 1: { " << label_list(g, stab.elements) << " }  [order "
      << stab.order() << "]\n";

  auto complement = find_complement(stab);
  if (complement) {
    out << "complement of the stabilizer: found { "
        << label_list(g, complement->elements) << " }\n";
    if (!left) {
      // the classical witness: the product of the second and fourth rho
      auto witness = compose(right_translation(q, 2), right_translation(q, 4));
      auto generated = subgroup_generated(g, {*g->index_of_perm(witness)});
      bool trivial_meet = true;
      for (int x : generated.elements)
        trivial_meet = trivial_meet && (x == g->identity() || !stab.contains(x));
      out << "rho_2 rho_4 = " << witness.cycle_string() << " generates { "
          << label_list(g, generated.elements) << " }"
          << ", also a complement: "
          << ((trivial_meet && generated.order() * stab.order() == g->order()) ? "yes"
                                                                               : "no")
          << "\n";
    }
  } else {
    out << "complement of the stabilizer: none (exhausted generator sets of size <= 3)\n";
  }

  auto ut = quasieg_transversal(q, g, which, 1);
  out << "\ntranslation set as a universal " << side_name(which)
      << " transversal: certified over all " << conjugates(stab).size()
      << " conjugates\n";
  auto parts = translate_transversal_partition(ut);
  out << "partition into " << parts.parts.size() << " parts of size "
      << parts.parts.front().size() << "\n";

  auto t = left ? construct2_left(stab, parts) : construct2_right(stab, parts);
  const int block_rows = t.row_blocks.front().len;
  const int block_cols = t.col_blocks.front().len;
  out << "block dimensions: " << stab.index() << " x " << stab.order()
      << " (each block spans " << block_rows << " rows and " << block_cols
      << " columns)\n";
  out << "verification: " << (verify_sudoku(t).pass ? "pass" : "fail") << "\n\n";
  out << render_text(t);
}

inline void demo_qn(int n, std::ostream& out) {
  out << "the shifted-subtable quasigroup of order " << n << "\n\n";
  auto q = make_qn(n);
  print_quasigroup(q, out);
  out << "\nLatin square: yes (validated)\n";
  out << "evenness analysis applies (n > 2 and n = 2 mod 4): "
      << (qn_evenness_applies(n) ? "yes" : "no") << "\n";
  bool formulas_agree = true, all_even = true;
  for (int i = 1; i <= n; ++i) {
    auto from_formula = qn_lambda_formula(n, i);
    formulas_agree = formulas_agree && from_formula == left_translation(q, i);
    all_even = all_even && from_formula.is_even();
  }
  out << "closed-form translations match the table for every symbol: "
      << (formulas_agree ? "yes" : "no") << "\n";
  out << "all left translations even: " << (all_even ? "yes" : "no") << "\n";
  out << "\nleft translations:\n";
  for (int i = 1; i <= n; ++i) {
    auto p = left_translation(q, i);
    out << "  lambda_" << i << " = " << p.cycle_string()
        << (p.is_even() ? "  [even]" : "  [odd]") << "\n";
  }
}

inline void demo_mols(int p, std::ostream& out) {
  out << "mutually orthogonal Cayley-sudoku tables over the field of order "
      << p * p << "\n\n";
  auto k = make_field(p);
  out << "modulus: t^2";
  if (k.c1()) out << " + " << k.c1() << "t";
  if (k.c0()) out << " + " << k.c0();
  out << "\n";
  auto family = mols_family(k);
  out << "family size: " << family.size() << "\n";
  bool all_verified = true;
  for (const auto& t : family) all_verified = all_verified && verify_sudoku(t).pass;
  out << "every table verifies: " << (all_verified ? "yes" : "no") << "\n";

  auto matrix = orthogonality_matrix(family);
  int pairs = 0;
  bool all = true;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      pairs += matrix[i][j];
      all = all && matrix[i][j];
    }
  out << "orthogonal pairs: " << pairs << " of "
      << family.size() * (family.size() - 1) / 2 << "\n";
  out << "all pairs orthogonal: " << (all ? "yes" : "no") << "\n\n";

  std::vector<std::string> xs;
  for (int x = 0; x < k.size(); ++x)
    if (!k.in_subfield(x)) xs.push_back(k.label(x));
  out << "first table (x = " << xs.front() << "):\n" << render_text(family.front());
}

inline int cmd_demo(const std::string& name, std::ostream& out) {
  if (name == "z9") {
    demo_z9(out);
  } else if (name == "s3-c1") {
    demo_s3_c1(out);
  } else if (name == "s3-c2") {
    demo_s3_c2(out);
  } else if (name == "q6-left") {
    demo_q6(Side::left, out);
  } else if (name == "q6-right") {
    demo_q6(Side::right, out);
  } else if (name.rfind("qn:", 0) == 0) {
    int n = parse_inputs([&] { return parse_int(name.substr(3)); });
    parse_inputs([&] { make_qn(n); return 0; }); // reject bad orders as usage
    demo_qn(n, out);
  } else if (name.rfind("mols:", 0) == 0) {
    int p = parse_inputs([&] {
      int v = parse_int(name.substr(5));
      make_field(v);
      return v;
    });
    demo_mols(p, out);
  } else {
    throw cli_exit{exit_malformed,
                   "unknown demo \"" + name +
                       "\"; known: z9, s3-c1, s3-c2, q6-left, q6-right, qn:<n>, mols:<p>"};
  }
  return exit_ok;
}

} // namespace detail

/// Parses and runs one command. All output is written to `out`/`err`;
/// the return value is the process exit code.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"construct, search for, and verify Cayley-sudoku tables"};
  app.require_subcommand(1);

  detail::BuildArgs build_args;
  auto* build = app.add_subcommand("build", "build a table with one of the constructions");
  build->add_option("--group", build_args.group_spec,
                    "group spec: Z<n>, S<n>, perm:<deg>:<gens>, table:<path>, "
                    "lmult:<q>, rmult:<q>")
      ->required();
  build->add_option("--subgroup", build_args.subgroup_spec,
                    "semicolon-separated generators");
  build->add_option("--construction", build_args.construction, "1R, 1L, 2L, 2R or 3")
      ->required();
  build->add_option("--partition", build_args.partition_path,
                    "partition file: one part per line");
  build->add_option("--inner", build_args.inner_path,
                    "construction 3: exchange file with the subgroup table");
  build->add_option("--left-reps", build_args.left_reps,
                    "construction 3: semicolon-separated left representatives");
  build->add_option("--right-reps", build_args.right_reps,
                    "construction 3: semicolon-separated right representatives");
  build->add_option("--output", build_args.output, "text or exchange");
  build->add_option("--cap", build_args.cap, "search budget in nodes");

  std::string search_group, search_subgroup, search_side = "left";
  long long search_cap = 100'000'000;
  auto* search = app.add_subcommand("search", "find a universal transversal");
  search->add_option("--group", search_group)->required();
  search->add_option("--subgroup", search_subgroup);
  search->add_option("--side", search_side, "left or right");
  search->add_option("--cap", search_cap);

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "re-verify an exchange document");
  verify->add_option("input", verify_path, "exchange file")->required();

  std::string baer_group, baer_subgroup, baer_partition, baer_side = "right",
              baer_output = "text";
  long long baer_cap = 100'000'000;
  auto* baer = app.add_subcommand("baer-check",
                                  "three-way equivalence report for a partition");
  baer->add_option("--group", baer_group)->required();
  baer->add_option("--subgroup", baer_subgroup);
  baer->add_option("--partition", baer_partition, "defaults to the derived partition");
  baer->add_option("--side", baer_side, "left or right");
  baer->add_option("--output", baer_output, "text or exchange");
  baer->add_option("--cap", baer_cap);

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "reproduce a worked example end to end");
  demo->add_option("name", demo_name,
                   "z9, s3-c1, s3-c2, q6-left, q6-right, qn:<n>, mols:<p>")
      ->required();

  std::string mols_field, mols_output = "text";
  auto* mols = app.add_subcommand("mols", "orthogonal table family over GF(p^2)");
  mols->add_option("--field", mols_field, "gfp2:<p>")->required();
  mols->add_option("--output", mols_output, "text or exchange");

  std::vector<std::string> argv_store = args;
  std::vector<const char*> argv = {"csudoku"};
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_malformed;
  }

  try {
    if (*build) return detail::cmd_build(build_args, out);
    if (*search)
      return detail::cmd_search(search_group, search_subgroup, search_side,
                                search_cap, out);
    if (*verify) return detail::cmd_verify(verify_path, out);
    if (*baer)
      return detail::cmd_baer_check(baer_group, baer_subgroup, baer_partition,
                                    baer_side, baer_output, baer_cap, out);
    if (*demo) return detail::cmd_demo(demo_name, out);
    if (*mols) return detail::cmd_mols(mols_field, mols_output, out);
    throw detail::cli_exit{exit_malformed, "no command given"};
  } catch (const detail::cli_exit& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const resource_error& e) {
    err << "resource limit: " << e.what() << "\n";
    return exit_resource;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_malformed;
  } catch (const malformed_table_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_malformed;
  } catch (const error& e) {
    err << "condition failed: " << e.what() << "\n";
    return exit_condition;
  }
}

} // namespace csudoku::cli
