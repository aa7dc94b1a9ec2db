#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qlogic/lattice.hpp"
#include "qlogic/smap.hpp"
#include "qlogic/states.hpp"

namespace qlogic {

/// Powerset of {1..n} under inclusion, n in 1..4. Elements are named by
/// their members, e.g. `s13`.
Logic gen_boolean(int n);

/// MO_n: n four-element Boolean blocks glued at 0 and 1, n in 1..8. Block i
/// has atoms named by the i-th letter, `a` and `a'`, `b` and `b'`, ...
Logic gen_mo(int n);

/// Horizontal sum of Boolean blocks with the given atom counts (each 1..5,
/// at most 26 blocks, at most 64 elements in total). Elements of block i
/// are named by its letter and their atoms, e.g. `b13`.
Logic gen_horizontal_sum(const std::vector<int>& block_atoms);

/// Atoms of each maximal Boolean block of a horizontal sum. Throws
/// Error(NotHorizontalSum) when the logic is not one.
std::vector<std::vector<ElementId>> horizontal_blocks(const QuantumLogic& logic);

inline constexpr int kDefaultDenominator = 1000;

/// Deterministic 64-bit mixer used to derive per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Random s-map on a horizontal sum. Atom masses are positive multiples of
/// 1/denominator; for every ordered pair of distinct blocks the atom-by-atom
/// table is a random integer point of the transportation polytope with those
/// masses as margins. Values on non-atoms follow by additivity. The result
/// is validated before it is returned.
SMap random_smap(const Logic& logic, std::uint64_t seed, int denominator = kDefaultDenominator);

/// Random state on a horizontal sum giving `support` probability one.
State random_state(const Logic& logic, std::mt19937_64& rng, ElementId support,
                   int denominator = kDefaultDenominator);

/// Inputs for conditional_state_from_partition drawn at random.
struct PartitionInput {
  std::vector<ElementId> parts;
  std::vector<State> alphas;
  std::vector<Rational> weights;
};

/// Parts are joins of a random grouping of the atoms of one random block
/// (possibly dropping some groups); alphas are random states concentrated on
/// the parts; weights are positive multiples of 1/denominator.
PartitionInput random_partition(const Logic& logic, std::uint64_t seed,
                                int denominator = kDefaultDenominator);

}  // namespace qlogic
