#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qlogic/lattice.hpp"
#include "qlogic/smap.hpp"
#include "qlogic/states.hpp"

namespace qlogic {

/// Counts of one property-suite run. A trial passes when every check on its
/// generated model passes.
struct SuiteReport {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t checks = 0;
  /// True when p(a, b) = p(b, a) held for every pair in every trial.
  bool symmetric_in_all_trials = true;
  std::optional<std::string> first_counterexample;

  bool ok() const { return failed == 0; }
};

/// Per trial on a horizontal-sum logic: draws random_smap, converts to a
/// conditional state and back in both directions (exact equality), checks
/// the derived s-map properties, the marginal law, independence as product
/// factorisation against the conditional definition, the independence
/// properties of the conditional state, a random partition-built
/// conditional state, and on block observables: joint distribution
/// marginals, the classical representation, the centred-moment identity,
/// |r| ≤ 1 and symmetry for compatible pairs.
SuiteReport roundtrip_suite(const Logic& logic, std::size_t trials, std::uint64_t seed);

/// The individual check families, exposed for direct tests. Each returns a
/// description of the first counterexample.
std::optional<std::string> check_smap_properties(const SMap& p);
std::optional<std::string> check_roundtrip(const SMap& p);
std::optional<std::string> check_independence_factorisation(const SMap& p);
std::optional<std::string> check_independence_properties(const ConditionalState& f);

}  // namespace qlogic
