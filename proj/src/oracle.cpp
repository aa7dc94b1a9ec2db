#include "qlogic/oracle.hpp"

#include <bit>
#include <functional>

#include "qlogic/errors.hpp"
#include "qlogic/states.hpp"

namespace qlogic {

bool brute_force_compatible(const QuantumLogic& L, ElementId a, ElementId b) {
  if (L.size() > kBruteForceLimit)
    throw Error(ErrorKind::SizeOutOfRange, "witness search is limited to 24 elements");
  for (ElementId c : L.elements()) {
    for (ElementId a1 : L.elements()) {
      if (!L.is_orthogonal(a1, c) || L.join(a1, c) != a) continue;
      for (ElementId b1 : L.elements()) {
        if (L.is_orthogonal(b1, c) && L.is_orthogonal(a1, b1) && L.join(b1, c) == b) return true;
      }
    }
  }
  return false;
}

std::optional<std::pair<ElementId, ElementId>> compatibility_disagreement(const QuantumLogic& L) {
  for (ElementId a : L.elements())
    for (ElementId b : L.elements())
      if (L.is_compatible(a, b) != brute_force_compatible(L, a, b)) return std::pair{a, b};
  return std::nullopt;
}

std::optional<std::string> distributivity_counterexample(const QuantumLogic& L) {
  if (L.size() > 16) throw Error(ErrorKind::SizeOutOfRange, "family scan is limited to 16 elements");
  for (ElementId b : L.elements()) {
    std::vector<ElementId> compatible;
    for (ElementId a : L.elements())
      if (L.is_compatible(b, a)) compatible.push_back(a);
    const std::size_t k = compatible.size();
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << k); ++s) {
      ElementId join = L.zero(), meets = L.zero();
      for (std::size_t i = 0; i < k; ++i) {
        if (!(s >> i & 1)) continue;
        join = L.join(join, compatible[i]);
        meets = L.join(meets, L.meet(compatible[i], b));
      }
      if (!L.is_compatible(b, join))
        return "join of a family compatible with " + L.name(b) + " is not compatible with it";
      if (L.meet(b, join) != meets) {
        std::string names;
        for (std::size_t i = 0; i < k; ++i)
          if (s >> i & 1) names += (names.empty() ? "" : ", ") + L.name(compatible[i]);
        return L.name(b) + " does not distribute over {" + names + "}";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> de_morgan_counterexample(const QuantumLogic& L) {
  for (ElementId a : L.elements())
    for (ElementId b : L.elements())
      if (L.complement(L.join(a, b)) != L.meet(L.complement(a), L.complement(b)))
        return "(" + L.name(a) + " v " + L.name(b) + ")' differs from " + L.name(a) + "' ^ " +
               L.name(b) + "'";
  return std::nullopt;
}

ElementSet brute_force_generated_system(const QuantumLogic& L, ElementSet seed) {
  std::vector<ElementId> nonzero;
  for (ElementId e : L.elements())
    if (e != L.zero()) nonzero.push_back(e);
  if (nonzero.size() > 16) throw Error(ErrorKind::SizeOutOfRange, "subset scan is limited to 16 elements");
  ElementSet best = 0;
  int best_size = 65;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << nonzero.size()); ++s) {
    ElementSet candidate = 0;
    for (std::size_t i = 0; i < nonzero.size(); ++i)
      if (s >> i & 1) candidate |= singleton(nonzero[i]);
    if ((candidate & seed) != seed) continue;
    if (check_conditional_system(L, candidate)) continue;
    if (std::popcount(candidate) < best_size) {
      best = candidate;
      best_size = std::popcount(candidate);
    }
  }
  return best;
}

std::optional<std::vector<ElementId>> find_isomorphism(const QuantumLogic& from, const QuantumLogic& to) {
  const std::size_t n = from.size();
  if (to.size() != n) return std::nullopt;
  std::vector<ElementId> image(n);
  std::vector<bool> assigned(n, false), used(n, false);

  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == n) return true;
    if (assigned[i]) return place(i + 1);
    const ElementId a(i);
    for (ElementId t : to.elements()) {
      if (used[t.index()]) continue;
      const ElementId ac = from.complement(a), tc = to.complement(t);
      const bool self = ac == a;
      if (self != (tc == t)) continue;
      if (!self && (assigned[ac.index()] || used[tc.index()])) continue;
      // Tentatively map a -> t and a' -> t', then check order against placed elements.
      image[i] = t;
      assigned[i] = used[t.index()] = true;
      if (!self) {
        image[ac.index()] = tc;
        assigned[ac.index()] = used[tc.index()] = true;
      }
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (!assigned[j]) continue;
        for (ElementId u : {a, ac}) {
          const ElementId b(j);
          if (from.leq(u, b) != to.leq(image[u.index()], image[j]) ||
              from.leq(b, u) != to.leq(image[j], image[u.index()]))
            ok = false;
        }
      }
      if (ok && place(i + 1)) return true;
      assigned[i] = used[t.index()] = false;
      if (!self) assigned[ac.index()] = used[tc.index()] = false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return image;
}

}  // namespace qlogic
