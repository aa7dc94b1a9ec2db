#include "qlogic/smap.hpp"

namespace qlogic {

namespace {

std::string cell(const QuantumLogic& L, ElementId a, ElementId b) {
  return "p(" + L.name(a) + ", " + L.name(b) + ")";
}

}  // namespace

std::optional<Violation> check_smap(const QuantumLogic& L, const PairTable& p) {
  if (p.size() != L.size()) throw Error(ErrorKind::IncompleteTable, "table size does not match logic");
  const ElementId o = L.one();
  if (p(o, o) != 1)
    return Violation{Rule::S1, {o, o}, {Cell{o, o}}, "(s1) violated: p(1, 1) = " + to_string(p(o, o))};

  for (ElementId a : L.elements())
    for (ElementId b : L.elements())
      if (!is_probability(p(a, b)))
        return Violation{Rule::SRange, {a, b}, {Cell{a, b}},
                         "value out of [0,1]: " + cell(L, a, b) + " = " + to_string(p(a, b))};

  for (ElementId a : L.elements())
    for (ElementId b : L.elements())
      if (L.is_orthogonal(a, b) && p(a, b) != 0)
        return Violation{Rule::S2, {a, b}, {Cell{a, b}},
                         "(s2) violated: " + L.name(a) + " and " + L.name(b) + " are orthogonal but " +
                             cell(L, a, b) + " = " + to_string(p(a, b))};

  for (ElementId a : L.elements()) {
    for (ElementId b : L.elements()) {
      if (b <= a || !L.is_orthogonal(a, b)) continue;
      const ElementId j = L.join(a, b);
      const std::string joined = " (" + L.name(j) + " = " + L.name(a) + " v " + L.name(b) + ")";
      for (ElementId c : L.elements()) {
        if (p(j, c) != p(a, c) + p(b, c))
          return Violation{Rule::S3,
                           {a, b, c},
                           {Cell{j, c}, Cell{a, c}, Cell{b, c}},
                           "(s3) violated in the first argument for orthogonal " + L.name(a) + ", " +
                               L.name(b) + " and " + L.name(c) + ": " + cell(L, j, c) + " = " +
                               to_string(p(j, c)) + " but " + cell(L, a, c) + " + " + cell(L, b, c) +
                               " = " + to_string(p(a, c) + p(b, c)) + joined};
        if (p(c, j) != p(c, a) + p(c, b))
          return Violation{Rule::S3,
                           {a, b, c},
                           {Cell{c, j}, Cell{c, a}, Cell{c, b}},
                           "(s3) violated in the second argument for orthogonal " + L.name(a) + ", " +
                               L.name(b) + " and " + L.name(c) + ": " + cell(L, c, j) + " = " +
                               to_string(p(c, j)) + " but " + cell(L, c, a) + " + " + cell(L, c, b) +
                               " = " + to_string(p(c, a) + p(c, b)) + joined};
      }
    }
  }
  return std::nullopt;
}

SMap validate_smap(Logic logic, PairTable table) {
  if (auto v = check_smap(*logic, table)) throw ValidationError(std::move(*v));
  return SMap(std::move(logic), std::move(table));
}

State diagonal_state(const SMap& p) {
  std::vector<Rational> nu;
  nu.reserve(p.logic()->size());
  for (ElementId b : p.logic()->elements()) nu.push_back(p(b, b));
  return validate_state(p.logic(), std::move(nu));
}

SMap smap_from_conditional(const ConditionalState& f) {
  const QuantumLogic& L = *f.logic();
  const ElementId o = L.one();
  if (!f.system().contains(o))
    throw Error(ErrorKind::DomainTooSmall, "conditioning on 1 is required");
  PairTable p(L.size());
  for (ElementId b : L.elements()) {
    if (b == L.zero()) continue;
    if (!f.system().contains(b)) {
      if (f(b, o) != 0)
        throw Error(ErrorKind::DomainTooSmall,
                    "'" + L.name(b) + "' has positive mass but is not in the conditional system");
      continue;
    }
    for (ElementId a : L.elements()) p(a, b) = f(a, b) * f(b, o);
  }
  return validate_smap(f.logic(), std::move(p));
}

ConditionalState conditional_from_smap(const SMap& p) {
  const QuantumLogic& L = *p.logic();
  ElementSet positive = 0;
  for (ElementId b : L.elements())
    if (p(b, b) > 0) positive |= singleton(b);
  if (auto v = check_conditional_system(L, positive))
    throw Error(ErrorKind::ZeroMassConditioning,
                "elements of positive mass do not form a conditional system: " + v->message);
  PairTable f(L.size());
  for (ElementId b : members(positive))
    for (ElementId a : L.elements()) f(a, b) = p(a, b) / p(b, b);
  return validate_conditional_state(p.logic(), make_conditional_system(p.logic(), positive),
                                    std::move(f));
}

bool is_independent_pair(const SMap& p, ElementId event, ElementId condition) {
  return p(event, condition) == p(event, event) * p(condition, condition);
}

}  // namespace qlogic
