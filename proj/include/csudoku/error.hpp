#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csudoku {

/// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed textual input (cycle notation, table files, exchange documents).
class parse_error : public error {
public:
  parse_error(const std::string& msg, std::size_t position)
      : error(msg + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Structurally invalid input: failed precondition, broken invariant,
/// construction condition not met. Messages carry the witness.
class validation_error : public error {
public:
  using error::error;
};

/// A table whose stored body disagrees with its borders and group operation.
/// Kept distinct from sudoku-property failure, which is a verdict, not an error.
class malformed_table_error : public validation_error {
public:
  using validation_error::validation_error;
};

/// A search or closure exceeded its configured budget.
class resource_error : public error {
public:
  using error::error;
};

/// Bug trap: an internal cross-check that a proven statement guarantees
/// has failed. Never expected to fire.
class internal_error : public error {
public:
  using error::error;
};

/// Witness kinds for partition/transversal validation failures.
enum class partition_fault {
  not_a_partition,  // parts overlap or fail to cover the group
  missed_coset,     // some part contains no element of a coset
  double_hit_coset, // some part contains two elements of a coset
};

/// An invalid transversal partition, naming the offending part and coset.
class partition_error : public validation_error {
public:
  partition_error(const std::string& msg, partition_fault fault, int part,
                  int coset_representative)
      : validation_error(msg), fault_(fault), part_(part),
        coset_representative_(coset_representative) {}

  partition_fault fault() const { return fault_; }
  int part() const { return part_; }
  int coset_representative() const { return coset_representative_; }

private:
  partition_fault fault_;
  int part_;
  int coset_representative_;
};

/// A part that is not a transversal of some conjugate subgroup,
/// naming the conjugating element and the missed or doubled coset.
class universality_error : public validation_error {
public:
  universality_error(const std::string& msg, int part, int conjugating_element,
                     int coset_representative)
      : validation_error(msg), part_(part),
        conjugating_element_(conjugating_element),
        coset_representative_(coset_representative) {}

  int part() const { return part_; }
  int conjugating_element() const { return conjugating_element_; }
  int coset_representative() const { return coset_representative_; }

private:
  int part_;
  int conjugating_element_;
  int coset_representative_;
};

} // namespace csudoku
