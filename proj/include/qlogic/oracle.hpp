#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlogic/lattice.hpp"

namespace qlogic {

/// Largest logic accepted by the cubic witness search.
inline constexpr std::size_t kBruteForceLimit = 24;

/// Searches for mutually orthogonal a1, b1, c with a = a1 ∨ c and
/// b = b1 ∨ c. Throws Error(SizeOutOfRange) above kBruteForceLimit.
bool brute_force_compatible(const QuantumLogic& logic, ElementId a, ElementId b);

/// First pair on which is_compatible and the witness search disagree.
std::optional<std::pair<ElementId, ElementId>> compatibility_disagreement(const QuantumLogic& logic);

/// Checks b ∧ (∨F) = ∨(F ∧ b) for every b and every family F of elements
/// compatible with b (all subsets; logics of at most 16 elements). Returns a
/// description of the first counterexample.
std::optional<std::string> distributivity_counterexample(const QuantumLogic& logic);

/// Checks (a ∨ b)⊥ = a⊥ ∧ b⊥ for all pairs.
std::optional<std::string> de_morgan_counterexample(const QuantumLogic& logic);

/// Smallest conditional system containing `seed`, found by testing every
/// subset of the nonzero elements (at most 16 of them).
ElementSet brute_force_generated_system(const QuantumLogic& logic, ElementSet seed);

/// Bijection image[i] = element of `to` for element i of `from` that
/// preserves and reflects order and commutes with the complement.
std::optional<std::vector<ElementId>> find_isomorphism(const QuantumLogic& from,
                                                       const QuantumLogic& to);

}  // namespace qlogic
