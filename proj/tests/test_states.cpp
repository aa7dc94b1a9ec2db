#include <doctest.h>

#include "helpers.hpp"
#include "qlogic/oracle.hpp"
#include "qlogic/states.hpp"

using namespace testing;

namespace {

const std::vector<std::string> kRows{"a", "a'", "b", "b'"};
const std::vector<std::string> kColumns{"a", "a'", "b", "b'", "1"};

// The reference conditional state on six(), defined on {a, a', b, b', 1}.
const std::vector<std::vector<const char*>> kF{{"1", "0", "0.4", "0.4", "0.4"},
                                               {"0", "1", "0.6", "0.6", "0.6"},
                                               {"0.2", "11/30", "1", "0", "0.3"},
                                               {"0.8", "19/30", "0", "1", "0.7"}};

PairTable f_table(const QuantumLogic& L, const std::vector<std::vector<const char*>>& rows = kF) {
  PairTable f(L.size());
  for (std::size_t j = 0; j < kColumns.size(); ++j) {
    const ElementId c = L.at(kColumns[j]);
    f(L.one(), c) = 1;
    for (std::size_t i = 0; i < kRows.size(); ++i) f(L.at(kRows[i]), c) = q(rows[i][j]);
  }
  return f;
}

ElementSet set_of(const QuantumLogic& L, std::initializer_list<const char*> names) {
  ElementSet s = 0;
  for (const char* n : names) s |= singleton(L.at(n));
  return s;
}

std::vector<Rational> state_values(const QuantumLogic& L, const char* a, const char* b) {
  std::vector<Rational> m(L.size());
  m[L.one().index()] = 1;
  m[L.at("a").index()] = q(a);
  m[L.at("a'").index()] = 1 - q(a);
  m[L.at("b").index()] = q(b);
  m[L.at("b'").index()] = 1 - q(b);
  return m;
}

Violation violation_of(const Logic& logic, const PairTable& f) {
  const ConditionalCheck check =
      check_conditional_state(*logic, set_of(*logic, {"a", "a'", "b", "b'", "1"}), f);
  REQUIRE(check.violation.has_value());
  return *check.violation;
}

}  // namespace

TEST_CASE("states: valid values and the first failing rule") {
  const Logic logic = six();
  const QuantumLogic& L = *logic;
  CHECK_FALSE(check_state(L, state_values(L, "0.4", "0.3")));
  const State m = validate_state(logic, state_values(L, "0.4", "0.3"));
  CHECK(m(L.at("a'")) == q("0.6"));

  auto bad = state_values(L, "0.4", "0.3");
  bad[L.one().index()] = q("0.9");
  CHECK(check_state(L, bad)->rule == Rule::StateBounds);

  bad = state_values(L, "1.5", "0.3");
  CHECK(check_state(L, bad)->rule == Rule::StateRange);

  bad = state_values(L, "0.4", "0.3");
  bad[L.at("b'").index()] = q("0.6");
  const auto v = check_state(L, bad);
  REQUIRE(v);
  CHECK(v->rule == Rule::StateAdditivity);
  CHECK(v->involves(Cell{L.at("b'"), std::nullopt}));

  CHECK_THROWS_AS(validate_state(logic, bad), ValidationError);
  CHECK_THROWS_AS(validate_state(logic, {Rational(0)}), Error);
}

TEST_CASE("conditional systems") {
  const Logic logic = six();
  const QuantumLogic& L = *logic;
  CHECK_FALSE(check_conditional_system(L, set_of(L, {"a", "a'", "1"})));
  CHECK(check_conditional_system(L, set_of(L, {"a", "b"}))->rule == Rule::CsJoin);
  CHECK(check_conditional_system(L, set_of(L, {"a", "1"}))->rule == Rule::CsRelativeComplement);

  CHECK(conditional_system_generated(logic, set_of(L, {"a"})).members() == set_of(L, {"a"}));
  CHECK(conditional_system_generated(logic, set_of(L, {"a", "b"})).members() ==
        set_of(L, {"a", "a'", "b", "b'", "1"}));
  CHECK(conditional_system_generated(logic, set_of(L, {"1", "b"})).members() == set_of(L, {"b", "b'", "1"}));
  CHECK_THROWS_AS(conditional_system_generated(logic, set_of(L, {"0", "a"})), Error);
  CHECK_THROWS_AS(make_conditional_system(logic, set_of(L, {"a", "b"})), ValidationError);
}

TEST_CASE("generated conditional systems agree with a subset scan") {
  const Logic logic = six();
  const QuantumLogic& L = *logic;
  std::vector<ElementId> nonzero;
  for (ElementId e : L.elements())
    if (e != L.zero()) nonzero.push_back(e);
  for (std::uint32_t s = 1; s < (1u << nonzero.size()); ++s) {
    ElementSet seed = 0;
    for (std::size_t i = 0; i < nonzero.size(); ++i)
      if (s >> i & 1) seed |= singleton(nonzero[i]);
    CHECK(conditional_system_generated(logic, seed).members() == brute_force_generated_system(L, seed));
  }
}

TEST_CASE("the reference conditional state validates") {
  const Logic logic = six();
  const QuantumLogic& L = *logic;
  const ElementSet cs = set_of(L, {"a", "a'", "b", "b'", "1"});
  const ConditionalCheck check = check_conditional_state(L, cs, f_table(L));
  CHECK_FALSE(check.violation);
  CHECK(check.families_checked > 0);
  CHECK_FALSE(check.family_cap_reached);

  const ConditionalState f =
      validate_conditional_state(logic, make_conditional_system(logic, cs), f_table(L));
  CHECK(f(L.at("b"), L.at("a'")) == Rational(11, 30));
  CHECK(f(L.zero(), L.at("b")) == 0);
  CHECK(f(L.one(), L.at("b")) == 1);
}

TEST_CASE("conditional state violations: C1, C2, C3") {
  const Logic logic = six();
  const QuantumLogic& L = *logic;
  const ElementId a = L.at("a"), ac = L.at("a'"), b = L.at("b"), bc = L.at("b'");

  SUBCASE("C1: a column that is not a state") {
    PairTable f = f_table(L);
    f(b, a) = q("0.25");
    const Violation v = violation_of(logic, f);
    CHECK(v.rule == Rule::C1);
    CHECK(v.involves(Cell{bc, a}));
  }
  SUBCASE("C2: f(a, a) below one") {
    PairTable f = f_table(L);
    f(a, a) = q("0.5");
    f(ac, a) = q("0.5");
    const Violation v = violation_of(logic, f);
    CHECK(v.rule == Rule::C2);
    CHECK(v.involves(Cell{a, a}));
  }
  SUBCASE("C3: the mixture over {a, a'} misses f(b, 1)") {
    PairTable f = f_table(L);
    f(b, a) = q("0.25");
    f(bc, a) = q("0.75");
    const Violation v = violation_of(logic, f);
    CHECK(v.rule == Rule::C3);
    CHECK(v.involves(Cell{b, a}));
    CHECK(v.involves(Cell{b, L.one()}));
    // 0.4 * 0.25 + 0.6 * 11/30 = 0.32
    CHECK(v.message.find("8/25") != std::string::npos);
    CHECK(v.message.find("3/10") != std::string::npos);
  }
}

TEST_CASE("outside the conditional system") {
  const Logic logic = six();
  const QuantumLogic& L = *logic;
  const ElementSet cs = set_of(L, {"a", "a'", "1"});
  const ConditionalState f = validate_conditional_state(logic, make_conditional_system(logic, cs), f_table(L));
  CHECK_THROWS_AS(f(L.at("a"), L.at("b")), Error);
  CHECK(f.table()(L.at("a"), L.at("b")) == 0);
}

TEST_CASE("independence with respect to a context") {
  const Logic logic = six();
  const QuantumLogic& L = *logic;
  const ConditionalState f = validate_conditional_state(
      logic, make_conditional_system(logic, set_of(L, {"a", "a'", "b", "b'", "1"})), f_table(L));
  const ElementId a = L.at("a"), b = L.at("b"), one = L.one();
  CHECK(is_independent(f, a, b, one));
  CHECK_FALSE(is_independent(f, b, a, one));
  CHECK(is_independent(f, b, one, one));
  CHECK_THROWS_AS(is_independent(f, b, a, b), Error);
}

TEST_CASE("partition construction reproduces the reference columns") {
  const Logic logic = six();
  const QuantumLogic& L = *logic;
  const ElementId a = L.at("a"), ac = L.at("a'"), b = L.at("b"), bc = L.at("b'");
  const State on_a = validate_state(logic, state_values(L, "1", "0.2"));
  const State on_ac = validate_state(logic, state_values(L, "0", "11/30"));
  const ConditionalState f =
      conditional_state_from_partition(logic, {a, ac}, {on_a, on_ac}, {q("0.4"), q("0.6")});
  CHECK(f.system().members() == set_of(L, {"a", "a'", "1"}));
  CHECK(f(b, a) == q("0.2"));
  CHECK(f(bc, ac) == Rational(19, 30));
  CHECK(f(b, L.one()) == q("0.3"));
  CHECK(f(a, L.one()) == q("0.4"));
}

TEST_CASE("partition construction rejects bad inputs") {
  const Logic logic = six();
  const QuantumLogic& L = *logic;
  const ElementId a = L.at("a"), ac = L.at("a'"), b = L.at("b");
  const State on_a = validate_state(logic, state_values(L, "1", "0.2"));
  const State on_ac = validate_state(logic, state_values(L, "0", "0.5"));
  const State on_b = validate_state(logic, state_values(L, "0.5", "1"));

  auto kind = [&](std::vector<ElementId> parts, std::vector<State> alphas, std::vector<Rational> k) {
    try {
      conditional_state_from_partition(logic, parts, alphas, k);
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("accepted");
    return ErrorKind::SizeOutOfRange;
  };
  CHECK(kind({a, b}, {on_a, on_b}, {q("0.5"), q("0.5")}) == ErrorKind::NotOrthogonal);
  CHECK(kind({L.zero(), a}, {on_a, on_a}, {q("0.5"), q("0.5")}) == ErrorKind::ZeroElement);
  CHECK(kind({a, ac}, {on_a, on_a}, {q("0.5"), q("0.5")}) == ErrorKind::AlphaNotConcentrated);
  CHECK(kind({a, ac}, {on_a, on_ac}, {q("1"), q("0")}) == ErrorKind::WeightsInvalid);
  CHECK(kind({a, ac}, {on_a, on_ac}, {q("0.5"), q("0.6")}) == ErrorKind::WeightsInvalid);
  CHECK(kind({}, {}, {}) == ErrorKind::WeightsInvalid);
}
