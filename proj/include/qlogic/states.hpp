#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qlogic/errors.hpp"
#include "qlogic/lattice.hpp"
#include "qlogic/pair_table.hpp"
#include "qlogic/rational.hpp"

namespace qlogic {

/// A finitely additive probability measure on a quantum logic.
class State {
 public:
  const Logic& logic() const { return logic_; }
  const Rational& operator()(ElementId e) const { return values_[e.index()]; }
  const std::vector<Rational>& values() const { return values_; }

  friend State validate_state(Logic logic, std::vector<Rational> values);

 private:
  State(Logic logic, std::vector<Rational> values)
      : logic_(std::move(logic)), values_(std::move(values)) {}

  Logic logic_;
  std::vector<Rational> values_;
};

/// Checks m(0)=0, m(1)=1, values in [0,1] and additivity over every
/// orthogonal pair. Returns the first violation in element-index order.
std::optional<Violation> check_state(const QuantumLogic& logic, std::span<const Rational> values);

/// Throws ValidationError on the first violation.
State validate_state(Logic logic, std::vector<Rational> values);

/// A subset of L \ {0} closed under joins and under relative complements
/// a⊥ ∧ b of comparable members a < b.
class ConditionalSystem {
 public:
  const Logic& logic() const { return logic_; }
  ElementSet members() const { return members_; }
  bool contains(ElementId e) const { return qlogic::contains(members_, e); }

  friend bool operator==(const ConditionalSystem& a, const ConditionalSystem& b) {
    return a.members_ == b.members_;
  }

  friend ConditionalSystem make_conditional_system(Logic, ElementSet);

 private:
  ConditionalSystem(Logic logic, ElementSet members) : logic_(std::move(logic)), members_(members) {}

  Logic logic_;
  ElementSet members_ = 0;
};

std::optional<Violation> check_conditional_system(const QuantumLogic& logic, ElementSet members);

/// Wraps an already-closed member set; throws ValidationError otherwise.
ConditionalSystem make_conditional_system(Logic logic, ElementSet members);

/// Smallest conditional system containing `seed`. Throws Error(ZeroInSeed)
/// when 0 is in the seed.
ConditionalSystem conditional_system_generated(Logic logic, ElementSet seed);

/// A conditional state f(event, condition) defined for every condition in
/// its conditional system.
class ConditionalState {
 public:
  const Logic& logic() const { return system_.logic(); }
  const ConditionalSystem& system() const { return system_; }
  /// Throws Error(DomainTooSmall) when `condition` is outside the system.
  const Rational& operator()(ElementId event, ElementId condition) const;
  /// Full table; columns outside the conditional system are zero.
  const PairTable& table() const { return table_; }

  friend ConditionalState validate_conditional_state(Logic, ConditionalSystem, PairTable);

 private:
  ConditionalState(ConditionalSystem system, PairTable table)
      : system_(std::move(system)), table_(std::move(table)) {}

  ConditionalSystem system_;
  PairTable table_;
};

/// Largest orthogonal family examined for (C3).
inline constexpr std::size_t kMaxC3Family = 8;

struct ConditionalCheck {
  std::optional<Violation> violation;
  std::size_t families_checked = 0;
  /// Set when some orthogonal family larger than kMaxC3Family exists and was
  /// therefore not examined.
  bool family_cap_reached = false;
};

/// Checks (C1) for every condition, then (C2), then (C3) over every family
/// of at least two mutually orthogonal members whose join is a member.
ConditionalCheck check_conditional_state(const QuantumLogic& logic, ElementSet system,
                                         const PairTable& table);

/// Throws ValidationError on the first violation. Columns outside the
/// system are zeroed.
ConditionalState validate_conditional_state(Logic logic, ConditionalSystem system, PairTable table);

/// Builds a conditional state from mutually orthogonal nonzero `parts`,
/// states `alphas` with alphas[i](parts[i]) = 1 and strictly positive
/// weights `k` summing to one. Conditioning on the join of a sub-family S
/// mixes the alphas with weights k_i / Σ_{j∈S} k_j; the result is defined on
/// the conditional system generated by the parts.
ConditionalState conditional_state_from_partition(Logic logic, const std::vector<ElementId>& parts,
                                                  const std::vector<State>& alphas,
                                                  const std::vector<Rational>& k);

/// True iff `event` is independent of `condition` with respect to
/// f(·, context), i.e. f(event, context) = f(event, condition). Requires
/// f(context, condition) = 1 and both conditioning elements in the system;
/// throws Error(PreconditionFailed) otherwise.
bool is_independent(const ConditionalState& f, ElementId event, ElementId condition,
                    ElementId context);

}  // namespace qlogic
