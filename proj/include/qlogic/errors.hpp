#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlogic/lattice.hpp"

namespace qlogic {

/// Construction and precondition failures outside the axiom validators.
enum class ErrorKind {
  ZeroInSeed,
  NotOrthogonal,
  AlphaNotConcentrated,
  WeightsInvalid,
  UnreachableConditioning,
  PreconditionFailed,
  DomainTooSmall,
  ZeroMassConditioning,
  IncompleteTable,
  LogicMismatch,
  DuplicateValue,
  ZeroElement,
  JoinNotOne,
  DegenerateVariance,
  SizeOutOfRange,
  NotHorizontalSum,
  InfeasibleAllocation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// The axiom a table failed.
enum class Rule {
  StateRange,       // value outside [0,1]
  StateBounds,      // m(0) != 0 or m(1) != 1
  StateAdditivity,  // m(a v b) != m(a) + m(b) for a ⊥ b
  CsJoin,
  CsRelativeComplement,
  C1,
  C2,
  C3,
  S1,
  SRange,
  S2,
  S3,
};

std::string_view to_string(Rule rule);

/// One entry of a one- or two-argument table. States leave `condition`
/// empty; conditional states use (event, condition); s-maps use
/// (first, second) in the same slots.
struct Cell {
  ElementId event;
  std::optional<ElementId> condition;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// First failing instance of an axiom. `witness` names the quantified
/// elements, `cells` the table entries the failed identity reads.
struct Violation {
  Rule rule;
  std::vector<ElementId> witness;
  std::vector<Cell> cells;
  std::string message;

  bool involves(const Cell& cell) const;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(Violation violation)
      : std::runtime_error(violation.message), violation_(std::move(violation)) {}

  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

}  // namespace qlogic
