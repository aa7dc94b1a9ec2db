#pragma once

#include <optional>
#include <vector>

#include "qlogic/errors.hpp"
#include "qlogic/lattice.hpp"
#include "qlogic/pair_table.hpp"
#include "qlogic/states.hpp"

namespace qlogic {

/// A map p : L × L → [0,1] for simultaneous measurement: p(1,1) = 1, zero
/// on orthogonal pairs, additive over orthogonal joins in each argument.
class SMap {
 public:
  const Logic& logic() const { return logic_; }
  const Rational& operator()(ElementId a, ElementId b) const { return table_(a, b); }
  const PairTable& table() const { return table_; }

  friend SMap validate_smap(Logic logic, PairTable table);

 private:
  SMap(Logic logic, PairTable table) : logic_(std::move(logic)), table_(std::move(table)) {}

  Logic logic_;
  PairTable table_;
};

/// Checks (s1), ranges, (s2) over orthogonal pairs and (s3) over orthogonal
/// pairs × every third element, left argument before right. The first
/// violation in element-index order is returned.
std::optional<Violation> check_smap(const QuantumLogic& logic, const PairTable& table);

SMap validate_smap(Logic logic, PairTable table);

/// ν(b) = p(b, b).
State diagonal_state(const SMap& p);

/// p(a, b) = f(a, b) · f(b, 1). Columns b outside the conditional system
/// are admitted only when f(b, 1) = 0 and are then zero; otherwise throws
/// Error(DomainTooSmall).
SMap smap_from_conditional(const ConditionalState& f);

/// f_p(a, b) = p(a, b) / p(b, b) on the conditional system {b : p(b, b) > 0}.
/// Throws Error(ZeroMassConditioning) if that set is not closed under
/// relative complements (some element of zero mass would be needed).
ConditionalState conditional_from_smap(const SMap& p);

/// p(event, condition) = p(event, event) · p(condition, condition).
bool is_independent_pair(const SMap& p, ElementId event, ElementId condition);

}  // namespace qlogic
