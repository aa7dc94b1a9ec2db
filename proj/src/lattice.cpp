#include "qlogic/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace qlogic {

std::vector<ElementId> members(ElementSet set) {
  std::vector<ElementId> out;
  out.reserve(static_cast<std::size_t>(std::popcount(set)));
  while (set != 0) {
    out.emplace_back(static_cast<std::size_t>(std::countr_zero(set)));
    set &= set - 1;
  }
  return out;
}

std::string_view to_string(LogicErrorKind kind) {
  switch (kind) {
    case LogicErrorKind::InvalidName: return "InvalidName";
    case LogicErrorKind::TooLarge: return "TooLarge";
    case LogicErrorKind::MissingBounds: return "MissingBounds";
    case LogicErrorKind::UnknownElement: return "UnknownElement";
    case LogicErrorKind::CycleInOrder: return "CycleInOrder";
    case LogicErrorKind::MissingMeetOrJoin: return "MissingMeetOrJoin";
    case LogicErrorKind::IncompleteComplement: return "IncompleteComplement";
    case LogicErrorKind::AxiomViolation: return "AxiomViolation";
  }
  return "?";
}

std::vector<ElementId> QuantumLogic::elements() const {
  std::vector<ElementId> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back(i);
  return out;
}

std::optional<ElementId> QuantumLogic::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return ElementId(static_cast<std::size_t>(it - names_.begin()));
}

ElementId QuantumLogic::at(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw LogicError(LogicErrorKind::UnknownElement, "", {std::string(name)},
                   "unknown element '" + std::string(name) + "'");
}

ElementId QuantumLogic::join_all(ElementSet set) const {
  ElementId acc = zero_;
  for (ElementId e : members(set)) acc = join(acc, e);
  return acc;
}

ElementId QuantumLogic::join_all(const std::vector<ElementId>& family) const {
  ElementId acc = zero_;
  for (ElementId e : family) acc = join(acc, e);
  return acc;
}

bool QuantumLogic::mutually_orthogonal(ElementSet set) const {
  auto ms = members(set);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!is_orthogonal(ms[i], ms[j])) return false;
  return true;
}

std::vector<ElementId> QuantumLogic::atoms() const {
  std::vector<ElementId> out;
  for (ElementId e : elements()) {
    if (e != zero_ && down_set(e) == (singleton(e) | singleton(zero_))) out.push_back(e);
  }
  return out;
}

namespace {

[[noreturn]] void fail(LogicErrorKind kind, std::string axiom, std::vector<std::string> witness,
                       const std::string& message) {
  throw LogicError(kind, std::move(axiom), std::move(witness), message);
}

bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  });
}

}  // namespace

Logic build_logic(const std::vector<std::string>& elements,
                  const std::vector<std::pair<std::string, std::string>>& order_pairs,
                  const std::vector<std::pair<std::string, std::string>>& complements) {
  const std::size_t n = elements.size();
  if (n > kMaxElements)
    fail(LogicErrorKind::TooLarge, "", {},
         "logic has " + std::to_string(n) + " elements; at most 64 are supported");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!valid_token(elements[i]))
      fail(LogicErrorKind::InvalidName, "", {elements[i]},
           "element names must be non-empty tokens without whitespace");
    if (!index.emplace(elements[i], i).second)
      fail(LogicErrorKind::InvalidName, "", {elements[i]},
           "duplicate element '" + elements[i] + "'");
  }
  if (!index.contains("0") || !index.contains("1"))
    fail(LogicErrorKind::MissingBounds, "", {}, "elements '0' and '1' must be declared");

  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end())
      fail(LogicErrorKind::UnknownElement, "", {name}, "unknown element '" + name + "'");
    return it->second;
  };

  std::shared_ptr<QuantumLogic> logic(new QuantumLogic());
  QuantumLogic& L = *logic;
  L.names_ = elements;
  L.zero_ = ElementId(index.at("0"));
  L.one_ = ElementId(index.at("1"));
  const std::size_t z = L.zero_.index();
  const std::size_t o = L.one_.index();

  // Order: reflexive, bounds implied, then transitive closure (Warshall on rows).
  L.up_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    L.up_[i] |= ElementSet{1} << i;
    L.up_[i] |= ElementSet{1} << o;
    L.up_[z] |= ElementSet{1} << i;
  }
  for (const auto& [a, b] : order_pairs) L.up_[lookup(a)] |= ElementSet{1} << lookup(b);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (L.up_[i] >> k & 1) L.up_[i] |= L.up_[k];

  L.down_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (L.up_[i] >> j & 1) L.down_[j] |= ElementSet{1} << i;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((L.up_[i] >> j & 1) && (L.up_[j] >> i & 1))
        fail(LogicErrorKind::CycleInOrder, "", {elements[i], elements[j]},
             "order is not antisymmetric: " + elements[i] + " <= " + elements[j] + " <= " +
                 elements[i]);

  // Meets and joins: the greatest lower bound is the lower bound whose down-set
  // contains every other lower bound.
  L.meet_.assign(n * n, ElementId());
  L.join_.assign(n * n, ElementId());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ElementSet lower = L.down_[i] & L.down_[j];
      ElementSet upper = L.up_[i] & L.up_[j];
      std::optional<std::size_t> glb, lub;
      for (ElementId c : members(lower))
        if ((L.down_[c.index()] & lower) == lower) glb = c.index();
      for (ElementId c : members(upper))
        if ((L.up_[c.index()] & upper) == upper) lub = c.index();
      if (!glb || !lub)
        fail(LogicErrorKind::MissingMeetOrJoin, "", {elements[i], elements[j]},
             std::string(!glb ? "no meet" : "no join") + " for " + elements[i] + ", " +
                 elements[j]);
      L.meet_[i * n + j] = ElementId(*glb);
      L.join_[i * n + j] = ElementId(*lub);
    }
  }

  // Orthocomplement: explicit pairs are closed under involution; (0, 1) is implied.
  std::vector<std::optional<std::size_t>> comp(n);
  auto set_comp = [&](std::size_t a, std::size_t b) {
    if (comp[a] && *comp[a] != b)
      fail(LogicErrorKind::AxiomViolation, "ii", {elements[a], elements[*comp[a]], elements[b]},
           "axiom (ii) violated: " + elements[a] + " is given two complements, " +
               elements[*comp[a]] + " and " + elements[b]);
    comp[a] = b;
  };
  for (const auto& [a, b] : complements) {
    std::size_t ia = lookup(a), ib = lookup(b);
    set_comp(ia, ib);
    set_comp(ib, ia);
  }
  if (!comp[z]) {
    set_comp(z, o);
    set_comp(o, z);
  }
  L.complement_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!comp[i])
      fail(LogicErrorKind::IncompleteComplement, "", {elements[i]},
           "no complement given for " + elements[i]);
    L.complement_[i] = ElementId(*comp[i]);
  }

  for (ElementId a : L.elements()) {
    ElementId ac = L.complement(a);
    if (L.complement(ac) != a)
      fail(LogicErrorKind::AxiomViolation, "ii", {L.name(a)},
           "axiom (ii) violated: complement of complement of " + L.name(a) + " is not itself");
    if (L.join(a, ac) != L.one_)
      fail(LogicErrorKind::AxiomViolation, "iii", {L.name(a), L.name(ac)},
           "axiom (iii) violated: " + L.name(a) + " v " + L.name(ac) + " != 1");
  }
  for (ElementId a : L.elements()) {
    for (ElementId b : members(L.up_set(a))) {
      if (!L.leq(L.complement(b), L.complement(a)))
        fail(LogicErrorKind::AxiomViolation, "iv", {L.name(a), L.name(b)},
             "axiom (iv) violated: " + L.name(a) + " <= " + L.name(b) + " but complement of " +
                 L.name(b) + " is not below complement of " + L.name(a));
      if (L.join(a, L.meet(L.complement(a), b)) != b)
        fail(LogicErrorKind::AxiomViolation, "v", {L.name(a), L.name(b)},
             "axiom (v) violated (orthomodular law): " + L.name(a) + " <= " + L.name(b));
    }
  }
  return logic;
}

}  // namespace qlogic
