#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "csudoku/specs.hpp"
#include "csudoku/sudoku_table.hpp"

namespace csudoku {

/// Serializes a table as the canonical exchange document: JSON with sorted
/// keys, two-space indentation and a trailing newline, everything by label.
inline std::string write_exchange(const CayleySudokuTable& t) {
  const auto& g = *t.group;
  nlohmann::json doc;

  nlohmann::json group;
  group["labels"] = g.labels();
  std::vector<std::vector<std::string>> table;
  for (int a = 0; a < g.order(); ++a) {
    table.emplace_back();
    for (int b = 0; b < g.order(); ++b) table.back().push_back(g.label(g.op(a, b)));
  }
  group["table"] = table;
  doc["group"] = group;

  const auto label_seq = [&](const std::vector<int>& xs) {
    std::vector<std::string> out;
    for (int x : xs) out.push_back(g.label(x));
    return out;
  };
  doc["row_labels"] = label_seq(t.row_labels);
  doc["col_labels"] = label_seq(t.col_labels);

  const auto range_seq = [](const std::vector<BlockRange>& blocks) {
    std::vector<std::vector<int>> out;
    for (const auto& b : blocks) out.push_back({b.start, b.len});
    return out;
  };
  doc["row_blocks"] = range_seq(t.row_blocks);
  doc["col_blocks"] = range_seq(t.col_blocks);

  std::vector<std::vector<std::string>> body;
  for (int i = 0; i < t.size(); ++i) {
    body.emplace_back();
    for (int j = 0; j < t.size(); ++j) body.back().push_back(g.label(t.cell(i, j)));
  }
  doc["body"] = body;
  doc["verified"] = t.verified;

  return doc.dump(2) + "\n";
}

/// Parses an exchange document back into a table. Structure is validated
/// (group table, label resolution, block shape); the stored body is kept as
/// given so a verifier can judge its claims.
inline CayleySudokuTable read_exchange(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid document: ") + e.what(), 0);
  }

  try {
    CayleySudokuTable t;
    const auto& group = doc.at("group");
    if (group.contains("spec")) {
      t.group = parse_group_spec(group.at("spec").get<std::string>());
    } else {
      t.group = from_table(group.at("labels").get<std::vector<std::string>>(),
                           group.at("table").get<std::vector<std::vector<std::string>>>());
    }
    const auto& g = *t.group;

    const auto resolve = [&](const std::string& label) {
      auto idx = g.index_of_label(label);
      if (!idx) throw parse_error("\"" + label + "\" is not an element label", 0);
      return *idx;
    };
    for (const auto& l : doc.at("row_labels").get<std::vector<std::string>>())
      t.row_labels.push_back(resolve(l));
    for (const auto& l : doc.at("col_labels").get<std::vector<std::string>>())
      t.col_labels.push_back(resolve(l));
    detail::check_label_permutation(t.group, t.row_labels, "row");
    detail::check_label_permutation(t.group, t.col_labels, "column");

    const auto ranges = [&](const char* key) {
      std::vector<BlockRange> out;
      int at = 0;
      for (const auto& r : doc.at(key).get<std::vector<std::vector<int>>>()) {
        if (r.size() != 2 || r[0] != at || r[1] < 1)
          throw parse_error(std::string(key) + " do not partition the border", 0);
        out.push_back({r[0], r[1]});
        at += r[1];
      }
      if (at != g.order())
        throw parse_error(std::string(key) + " do not partition the border", 0);
      return out;
    };
    t.row_blocks = ranges("row_blocks");
    t.col_blocks = ranges("col_blocks");

    const auto body = doc.at("body").get<std::vector<std::vector<std::string>>>();
    if (static_cast<int>(body.size()) != g.order())
      throw parse_error("body has the wrong number of rows", 0);
    for (const auto& row : body) {
      if (static_cast<int>(row.size()) != g.order())
        throw parse_error("body has a row of the wrong width", 0);
      for (const auto& cell : row) t.body.push_back(resolve(cell));
    }
    t.verified = doc.value("verified", false);
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid document: ") + e.what(), 0);
  }
}

} // namespace csudoku
