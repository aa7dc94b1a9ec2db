#include "qlogic/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qlogic/errors.hpp"

namespace qlogic {

namespace {

using Namer = std::function<std::string(std::size_t block, std::uint32_t subset, int atoms)>;

Logic build_horizontal_sum(const std::vector<int>& block_atoms, const Namer& name) {
  std::vector<std::string> elements{"0", "1"};
  std::vector<std::pair<std::string, std::string>> order, complements;
  for (std::size_t b = 0; b < block_atoms.size(); ++b) {
    const int k = block_atoms[b];
    const std::uint32_t full = (std::uint32_t{1} << k) - 1;
    for (std::uint32_t s = 1; s < full; ++s) elements.push_back(name(b, s, k));
    for (std::uint32_t s = 1; s < full; ++s) {
      for (std::uint32_t t = 1; t < full; ++t)
        if (s != t && (s & t) == s) order.emplace_back(name(b, s, k), name(b, t, k));
      if (s < (full ^ s)) complements.emplace_back(name(b, s, k), name(b, full ^ s, k));
    }
  }
  return build_logic(elements, order, complements);
}

std::string subset_digits(std::uint32_t subset, int atoms) {
  std::string out;
  for (int i = 0; i < atoms; ++i)
    if (subset >> i & 1) out += static_cast<char>('1' + i);
  return out;
}

/// Uniform composition of `total` into `parts` positive integers.
std::vector<long long> composition(std::mt19937_64& rng, long long total, std::size_t parts) {
  if (parts == 0) return {};
  if (parts == 1) return {total};
  if (total < static_cast<long long>(parts))
    throw Error(ErrorKind::SizeOutOfRange, "denominator too small for the number of atoms");
  std::vector<long long> cuts;
  std::uniform_int_distribution<long long> pick(1, total - 1);
  while (cuts.size() + 1 < parts) {
    long long c = pick(rng);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<long long> out;
  long long prev = 0;
  for (long long c : cuts) {
    out.push_back(c - prev);
    prev = c;
  }
  out.push_back(total - prev);
  return out;
}

/// Random integer table with the given row and column sums (equal totals),
/// filled cell by cell within the bounds that keep the rest feasible.
std::vector<std::vector<long long>> transportation_table(std::mt19937_64& rng,
                                                         std::vector<long long> rows,
                                                         std::vector<long long> cols) {
  std::vector<std::vector<long long>> t(rows.size(), std::vector<long long>(cols.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      long long later = 0;
      for (std::size_t jj = j + 1; jj < cols.size(); ++jj) later += cols[jj];
      const long long lo = std::max(0LL, rows[i] - later);
      const long long hi = std::min(rows[i], cols[j]);
      if (lo > hi) throw Error(ErrorKind::InfeasibleAllocation, "margins admit no table");
      const long long x = std::uniform_int_distribution<long long>(lo, hi)(rng);
      t[i][j] = x;
      rows[i] -= x;
      cols[j] -= x;
    }
    if (rows[i] != 0) throw Error(ErrorKind::InfeasibleAllocation, "row mass left over");
  }
  return t;
}

}  // namespace

Logic gen_boolean(int n) {
  if (n < 1 || n > 4) throw Error(ErrorKind::SizeOutOfRange, "boolean(n) needs 1 <= n <= 4");
  return build_horizontal_sum({n}, [](std::size_t, std::uint32_t s, int k) {
    return "s" + subset_digits(s, k);
  });
}

Logic gen_mo(int n) {
  if (n < 1 || n > 8) throw Error(ErrorKind::SizeOutOfRange, "mo(n) needs 1 <= n <= 8");
  return build_horizontal_sum(std::vector<int>(static_cast<std::size_t>(n), 2),
                              [](std::size_t b, std::uint32_t s, int) {
                                std::string letter(1, static_cast<char>('a' + b));
                                return s == 1 ? letter : letter + "'";
                              });
}

Logic gen_horizontal_sum(const std::vector<int>& block_atoms) {
  if (block_atoms.empty() || block_atoms.size() > 26)
    throw Error(ErrorKind::SizeOutOfRange, "need 1 to 26 blocks");
  std::size_t total = 2;
  for (int k : block_atoms) {
    if (k < 1 || k > 5) throw Error(ErrorKind::SizeOutOfRange, "block sizes must be 1..5 atoms");
    total += (std::size_t{1} << k) - 2;
  }
  if (total > kMaxElements)
    throw Error(ErrorKind::SizeOutOfRange, "horizontal sum would have " + std::to_string(total) +
                                               " elements; at most 64 are supported");
  return build_horizontal_sum(block_atoms, [](std::size_t b, std::uint32_t s, int k) {
    return std::string(1, static_cast<char>('a' + b)) + subset_digits(s, k);
  });
}

std::vector<std::vector<ElementId>> horizontal_blocks(const QuantumLogic& L) {
  const auto atoms = L.atoms();
  std::vector<std::vector<ElementId>> blocks;
  for (ElementId a : atoms) {
    auto it = std::find_if(blocks.begin(), blocks.end(),
                           [&](const auto& block) { return L.is_orthogonal(block.front(), a); });
    if (it == blocks.end())
      blocks.push_back({a});
    else
      it->push_back(a);
  }
  std::size_t expected = 2;
  for (const auto& block : blocks) {
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (!L.is_orthogonal(block[i], block[j]))
          throw Error(ErrorKind::NotHorizontalSum, "atom orthogonality is not an equivalence");
    if (L.join_all(block) != L.one())
      throw Error(ErrorKind::NotHorizontalSum, "a block's atoms do not join to 1");
    if (block.size() >= 7) throw Error(ErrorKind::NotHorizontalSum, "block too large");
    expected += (std::size_t{1} << block.size()) - 2;
  }
  if (expected != L.size())
    throw Error(ErrorKind::NotHorizontalSum, "element count does not match a horizontal sum");
  for (ElementId e : L.elements()) {
    if (e == L.zero() || e == L.one()) continue;
    const ElementSet below = L.down_set(e);
    std::size_t hits = 0;
    for (const auto& block : blocks) {
      ElementSet in_block = 0;
      for (ElementId a : block)
        if (contains(below, a)) in_block |= singleton(a);
      if (in_block != 0) {
        ++hits;
        if (L.join_all(in_block) != e)
          throw Error(ErrorKind::NotHorizontalSum, L.name(e) + " is not a join of its atoms");
      }
    }
    if (hits != 1) throw Error(ErrorKind::NotHorizontalSum, L.name(e) + " spans several blocks");
  }
  return blocks;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finaliser over the combined word
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SMap random_smap(const Logic& logic, std::uint64_t seed, int denominator) {
  const QuantumLogic& L = *logic;
  const auto blocks = horizontal_blocks(L);
  std::mt19937_64 rng(seed);

  std::vector<long long> mass(L.size(), 0);
  std::vector<std::vector<long long>> margins;
  for (const auto& block : blocks) {
    auto w = composition(rng, denominator, block.size());
    for (std::size_t i = 0; i < block.size(); ++i) mass[block[i].index()] = w[i];
    margins.push_back(std::move(w));
  }

  // Integer numerators of p on atom pairs.
  std::vector<long long> q(L.size() * L.size(), 0);
  auto at = [&](ElementId a, ElementId b) -> long long& { return q[a.index() * L.size() + b.index()]; };
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (ElementId a : blocks[bi]) at(a, a) = mass[a.index()];
    for (std::size_t bj = 0; bj < blocks.size(); ++bj) {
      if (bi == bj) continue;
      auto t = transportation_table(rng, margins[bi], margins[bj]);
      for (std::size_t i = 0; i < blocks[bi].size(); ++i)
        for (std::size_t j = 0; j < blocks[bj].size(); ++j) at(blocks[bi][i], blocks[bj][j]) = t[i][j];
    }
  }

  // Atoms used to expand each element: those below it, or block 0 for 1.
  std::vector<std::vector<ElementId>> expand(L.size());
  for (ElementId e : L.elements()) {
    if (e == L.one()) {
      expand[e.index()] = blocks.front();
      continue;
    }
    for (const auto& block : blocks)
      for (ElementId a : block)
        if (L.leq(a, e)) expand[e.index()].push_back(a);
  }

  PairTable p(L.size());
  for (ElementId x : L.elements()) {
    for (ElementId y : L.elements()) {
      long long sum = 0;
      for (ElementId a : expand[x.index()])
        for (ElementId b : expand[y.index()]) sum += at(a, b);
      p(x, y) = Rational(static_cast<long>(sum), denominator);
      p(x, y).canonicalize();
    }
  }
  return validate_smap(logic, std::move(p));
}

State random_state(const Logic& logic, std::mt19937_64& rng, ElementId support, int denominator) {
  const QuantumLogic& L = *logic;
  const auto blocks = horizontal_blocks(L);
  std::vector<long long> atom_mass(L.size(), 0);
  for (const auto& block : blocks) {
    std::vector<ElementId> carriers;
    for (ElementId a : block)
      if (L.leq(a, support)) carriers.push_back(a);
    // Blocks other than the support's own are unconstrained.
    if (carriers.empty()) carriers = block;
    auto w = composition(rng, denominator, carriers.size());
    for (std::size_t i = 0; i < carriers.size(); ++i) atom_mass[carriers[i].index()] = w[i];
  }
  std::vector<Rational> values(L.size());
  for (ElementId e : L.elements()) {
    long long sum = 0;
    if (e == L.one()) {
      for (ElementId a : blocks.front()) sum += atom_mass[a.index()];
    } else {
      for (const auto& block : blocks)
        for (ElementId a : block)
          if (L.leq(a, e)) sum += atom_mass[a.index()];
    }
    values[e.index()] = Rational(static_cast<long>(sum), denominator);
    values[e.index()].canonicalize();
  }
  return validate_state(logic, std::move(values));
}

PartitionInput random_partition(const Logic& logic, std::uint64_t seed, int denominator) {
  const QuantumLogic& L = *logic;
  const auto blocks = horizontal_blocks(L);
  std::mt19937_64 rng(seed);
  auto block = blocks[std::uniform_int_distribution<std::size_t>(0, blocks.size() - 1)(rng)];
  std::shuffle(block.begin(), block.end(), rng);

  // Random grouping: cut the shuffled atom list into runs.
  std::vector<std::vector<ElementId>> groups{{block.front()}};
  for (std::size_t i = 1; i < block.size(); ++i) {
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) groups.emplace_back();
    groups.back().push_back(block[i]);
  }
  // Keep a random nonempty subset of the groups.
  std::vector<std::vector<ElementId>> kept;
  for (auto& g : groups)
    if (std::uniform_int_distribution<int>(0, 3)(rng) != 0) kept.push_back(std::move(g));
  if (kept.empty()) kept.push_back(groups.front().empty() ? std::vector<ElementId>{block.front()}
                                                          : groups.front());

  PartitionInput input;
  for (const auto& g : kept) input.parts.push_back(L.join_all(g));
  for (ElementId part : input.parts) input.alphas.push_back(random_state(logic, rng, part, denominator));
  for (long long w : composition(rng, denominator, input.parts.size())) {
    Rational k(static_cast<long>(w), denominator);
    k.canonicalize();
    input.weights.push_back(k);
  }
  return input;
}

}  // namespace qlogic
