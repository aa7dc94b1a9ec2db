#include "qlogic/states.hpp"

#include <bit>
#include <functional>
#include <map>

namespace qlogic {

namespace {

std::string fmt_cell(const QuantumLogic& L, char fn, ElementId a) {
  return std::string(1, fn) + "(" + L.name(a) + ")";
}

std::string fmt_cell(const QuantumLogic& L, char fn, ElementId a, ElementId b) {
  return std::string(1, fn) + "(" + L.name(a) + ", " + L.name(b) + ")";
}

}  // namespace

std::optional<Violation> check_state(const QuantumLogic& L, std::span<const Rational> m) {
  if (m.size() != L.size())
    throw Error(ErrorKind::IncompleteTable, "state needs one value per element");
  const ElementId z = L.zero(), o = L.one();
  if (m[z.index()] != 0)
    return Violation{Rule::StateBounds, {z}, {Cell{z, {}}},
                     "state (i) violated: m(0) = " + to_string(m[z.index()]) + " != 0"};
  if (m[o.index()] != 1)
    return Violation{Rule::StateBounds, {o}, {Cell{o, {}}},
                     "state (i) violated: m(1) = " + to_string(m[o.index()]) + " != 1"};
  for (ElementId a : L.elements()) {
    if (!is_probability(m[a.index()]))
      return Violation{Rule::StateRange, {a}, {Cell{a, {}}},
                       "value out of [0,1]: " + fmt_cell(L, 'm', a) + " = " + to_string(m[a.index()])};
  }
  for (ElementId a : L.elements()) {
    for (ElementId b : L.elements()) {
      if (b <= a || !L.is_orthogonal(a, b)) continue;
      ElementId j = L.join(a, b);
      if (m[j.index()] != m[a.index()] + m[b.index()])
        return Violation{Rule::StateAdditivity,
                         {a, b},
                         {Cell{j, {}}, Cell{a, {}}, Cell{b, {}}},
                         "state (ii) violated for orthogonal " + L.name(a) + ", " + L.name(b) + ": " +
                             fmt_cell(L, 'm', j) + " = " + to_string(m[j.index()]) + " but " +
                             fmt_cell(L, 'm', a) + " + " + fmt_cell(L, 'm', b) + " = " +
                             to_string(m[a.index()] + m[b.index()])};
    }
  }
  return std::nullopt;
}

State validate_state(Logic logic, std::vector<Rational> values) {
  if (auto v = check_state(*logic, values)) throw ValidationError(std::move(*v));
  return State(std::move(logic), std::move(values));
}

std::optional<Violation> check_conditional_system(const QuantumLogic& L, ElementSet cs) {
  if (contains(cs, L.zero()))
    return Violation{Rule::CsJoin, {L.zero()}, {}, "a conditional system may not contain 0"};
  for (ElementId a : members(cs)) {
    for (ElementId b : members(cs)) {
      ElementId j = L.join(a, b);
      if (!contains(cs, j))
        return Violation{Rule::CsJoin, {a, b}, {},
                         "conditional system not closed under join: " + L.name(a) + " v " +
                             L.name(b) + " = " + L.name(j) + " is missing"};
      if (L.less(a, b)) {
        ElementId r = L.meet(L.complement(a), b);
        if (!contains(cs, r))
          return Violation{Rule::CsRelativeComplement, {a, b}, {},
                           "conditional system not closed under relative complement: " +
                               L.name(a) + " < " + L.name(b) + " but " + L.name(r) + " is missing"};
      }
    }
  }
  return std::nullopt;
}

ConditionalSystem make_conditional_system(Logic logic, ElementSet members) {
  if (auto v = check_conditional_system(*logic, members)) throw ValidationError(std::move(*v));
  return ConditionalSystem(std::move(logic), members);
}

ConditionalSystem conditional_system_generated(Logic logic, ElementSet seed) {
  const QuantumLogic& L = *logic;
  if (contains(seed, L.zero())) throw Error(ErrorKind::ZeroInSeed, "0 cannot be a conditioning event");
  ElementSet cs = seed & L.all();
  for (bool grew = true; grew;) {
    grew = false;
    for (ElementId a : members(cs)) {
      for (ElementId b : members(cs)) {
        ElementSet add = singleton(L.join(a, b));
        if (L.less(a, b)) add |= singleton(L.meet(L.complement(a), b));
        if ((cs | add) != cs) {
          cs |= add;
          grew = true;
        }
      }
    }
  }
  // a < b forces a⊥ ∧ b ≠ 0 by the orthomodular law, so 0 never enters.
  return make_conditional_system(std::move(logic), cs);
}

const Rational& ConditionalState::operator()(ElementId event, ElementId condition) const {
  if (!system_.contains(condition))
    throw Error(ErrorKind::DomainTooSmall,
                "'" + logic()->name(condition) + "' is not in the conditional system");
  return table_(event, condition);
}

ConditionalCheck check_conditional_state(const QuantumLogic& L, ElementSet cs, const PairTable& f) {
  ConditionalCheck result;
  if (f.size() != L.size()) throw Error(ErrorKind::IncompleteTable, "table size does not match logic");

  for (ElementId a : members(cs)) {
    auto column = f.column(a);
    if (auto v = check_state(L, column)) {
      Violation c1{Rule::C1, {a}, {}, ""};
      c1.witness.insert(c1.witness.end(), v->witness.begin(), v->witness.end());
      for (const Cell& c : v->cells) c1.cells.push_back(Cell{c.event, a});
      c1.message = "(C1) violated: f(., " + L.name(a) + ") is not a state: " + v->message;
      result.violation = std::move(c1);
      return result;
    }
  }
  for (ElementId a : members(cs)) {
    if (f(a, a) != 1) {
      result.violation = Violation{Rule::C2, {a}, {Cell{a, a}},
                                   "(C2) violated: " + fmt_cell(L, 'f', a, a) + " = " +
                                       to_string(f(a, a)) + " != 1"};
      return result;
    }
  }

  std::vector<ElementId> family;
  std::function<bool(ElementSet)> extend = [&](ElementSet candidates) -> bool {
    if (family.size() >= 2) {
      ElementId join = L.join_all(family);
      if (contains(cs, join)) {
        ++result.families_checked;
        for (ElementId b : L.elements()) {
          Rational sum = 0;
          for (ElementId a : family) sum += f(a, join) * f(b, a);
          if (sum != f(b, join)) {
            Violation v{Rule::C3, family, {Cell{b, join}}, ""};
            v.witness.push_back(b);
            std::string terms;
            for (ElementId a : family) {
              v.cells.push_back(Cell{a, join});
              v.cells.push_back(Cell{b, a});
              if (!terms.empty()) terms += " + ";
              terms += fmt_cell(L, 'f', a, join) + "*" + fmt_cell(L, 'f', b, a);
            }
            std::string names;
            for (ElementId a : family) names += (names.empty() ? "" : ", ") + L.name(a);
            v.message = "(C3) violated for family {" + names + "} and " + L.name(b) + ": " +
                        fmt_cell(L, 'f', b, join) + " = " + to_string(f(b, join)) + " but " + terms +
                        " = " + to_string(sum);
            result.violation = std::move(v);
            return false;
          }
        }
      }
    }
    if (family.size() == kMaxC3Family) {
      if (candidates != 0) result.family_cap_reached = true;
      return true;
    }
    for (ElementId next : members(candidates)) {
      ElementSet rest = candidates & ~((singleton(next) << 1) - 1);
      for (ElementId c : members(rest))
        if (!L.is_orthogonal(next, c)) rest &= ~singleton(c);
      family.push_back(next);
      bool ok = extend(rest);
      family.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  extend(cs);
  return result;
}

ConditionalState validate_conditional_state(Logic logic, ConditionalSystem system, PairTable table) {
  if (system.logic() != logic)
    throw Error(ErrorKind::LogicMismatch, "conditional system belongs to another logic");
  auto check = check_conditional_state(*logic, system.members(), table);
  if (check.violation) throw ValidationError(std::move(*check.violation));
  for (ElementId a : logic->elements()) {
    if (system.contains(a)) continue;
    for (ElementId b : logic->elements()) table(b, a) = 0;
  }
  return ConditionalState(std::move(system), std::move(table));
}

ConditionalState conditional_state_from_partition(Logic logic, const std::vector<ElementId>& parts,
                                                  const std::vector<State>& alphas,
                                                  const std::vector<Rational>& k) {
  const QuantumLogic& L = *logic;
  const std::size_t n = parts.size();
  if (n == 0) throw Error(ErrorKind::WeightsInvalid, "at least one part is required");
  if (n > 20) throw Error(ErrorKind::SizeOutOfRange, "at most 20 parts are supported");
  if (alphas.size() != n || k.size() != n)
    throw Error(ErrorKind::WeightsInvalid, "need one state and one weight per part");

  ElementSet seed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (parts[i] == L.zero()) throw Error(ErrorKind::ZeroElement, "part " + std::to_string(i) + " is 0");
    for (std::size_t j = i + 1; j < n; ++j)
      if (!L.is_orthogonal(parts[i], parts[j]))
        throw Error(ErrorKind::NotOrthogonal, "parts " + std::to_string(i) + " (" + L.name(parts[i]) +
                                                  ") and " + std::to_string(j) + " (" +
                                                  L.name(parts[j]) + ") are not orthogonal");
    seed |= singleton(parts[i]);
  }
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (alphas[i].logic() != logic)
      throw Error(ErrorKind::LogicMismatch, "state " + std::to_string(i) + " is on another logic");
    if (alphas[i](parts[i]) != 1)
      throw Error(ErrorKind::AlphaNotConcentrated,
                  "state " + std::to_string(i) + " gives " + L.name(parts[i]) + " probability " +
                      to_string(alphas[i](parts[i])));
    if (k[i] <= 0)
      throw Error(ErrorKind::WeightsInvalid, "weight " + std::to_string(i) + " must be positive");
    total += k[i];
  }
  if (total != 1) throw Error(ErrorKind::WeightsInvalid, "weights sum to " + to_string(total));

  ConditionalSystem cs = conditional_system_generated(logic, seed);

  // Joins of distinct sub-families of an orthogonal family are distinct.
  std::map<ElementId, std::uint32_t> subfamily_of;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    ElementId j = L.zero();
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) j = L.join(j, parts[i]);
    subfamily_of.emplace(j, s);
  }

  PairTable table(L.size());
  for (ElementId c : members(cs.members())) {
    auto it = subfamily_of.find(c);
    if (it == subfamily_of.end())
      throw Error(ErrorKind::UnreachableConditioning,
                  "no sub-family of the parts joins to " + L.name(c));
    const std::uint32_t s = it->second;
    Rational weight_sum = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) weight_sum += k[i];
    for (ElementId d : L.elements()) {
      Rational v = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (s >> i & 1) v += k[i] / weight_sum * alphas[i](d);
      v.canonicalize();
      table(d, c) = v;
    }
  }
  return validate_conditional_state(std::move(logic), std::move(cs), std::move(table));
}

bool is_independent(const ConditionalState& f, ElementId event, ElementId condition,
                    ElementId context) {
  const QuantumLogic& L = *f.logic();
  if (!f.system().contains(condition) || !f.system().contains(context))
    throw Error(ErrorKind::PreconditionFailed, "conditioning elements must be in the conditional system");
  if (f(context, condition) != 1)
    throw Error(ErrorKind::PreconditionFailed,
                "f(" + L.name(context) + ", " + L.name(condition) + ") = " +
                    to_string(f(context, condition)) + " != 1");
  return f(event, context) == f(event, condition);
}

}  // namespace qlogic
