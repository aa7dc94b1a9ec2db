#include <doctest.h>

#include "helpers.hpp"
#include "qlogic/generators.hpp"
#include "qlogic/oracle.hpp"

using namespace testing;

TEST_CASE("compatibility matches the witness search") {
  for (const Logic& logic : {six(), gen_boolean(1), gen_boolean(2), gen_boolean(3), gen_mo(1), gen_mo(4),
                             gen_horizontal_sum({3, 2}), shared_atom()})
    CHECK_FALSE(compatibility_disagreement(*logic));
}

TEST_CASE("compatibility across a shared atom") {
  const Logic logic = shared_atom();
  const QuantumLogic& L = *logic;
  CHECK(L.is_compatible(L.at("x"), L.at("z")));
  CHECK(L.is_compatible(L.at("u"), L.at("z'")));
  CHECK_FALSE(L.is_compatible(L.at("x"), L.at("u")));
  CHECK(brute_force_compatible(L, L.at("x'"), L.at("u'")) == L.is_compatible(L.at("x'"), L.at("u'")));
  CHECK(L.meet(L.at("x'"), L.at("u'")) == L.at("z"));
}

TEST_CASE("distributivity over compatible families") {
  CHECK_FALSE(distributivity_counterexample(*gen_boolean(3)));
  CHECK_FALSE(distributivity_counterexample(*six()));
  CHECK_FALSE(distributivity_counterexample(*shared_atom()));
}

TEST_CASE("de Morgan holds in every generated logic") {
  for (const Logic& logic : {six(), gen_boolean(4), gen_mo(8), gen_horizontal_sum({5, 5}), shared_atom()})
    CHECK_FALSE(de_morgan_counterexample(*logic));
}

TEST_CASE("isomorphism search") {
  const auto image = find_isomorphism(*six(), *gen_mo(2));
  REQUIRE(image);
  const Logic from = six(), to = gen_mo(2);
  for (ElementId a : from->elements()) {
    CHECK((*image)[from->complement(a).index()] == to->complement((*image)[a.index()]));
    for (ElementId b : from->elements())
      CHECK(from->leq(a, b) == to->leq((*image)[a.index()], (*image)[b.index()]));
  }
  CHECK_FALSE(find_isomorphism(*gen_mo(3), *gen_boolean(3)));
  CHECK_FALSE(find_isomorphism(*gen_mo(3), *gen_mo(2)));
}

TEST_CASE("oracle size limits") {
  const Logic big = gen_horizontal_sum({5});
  CHECK_THROWS_AS(brute_force_compatible(*big, big->zero(), big->one()), Error);
  CHECK_THROWS_AS(distributivity_counterexample(*gen_horizontal_sum({4, 2})), Error);
  CHECK_THROWS_AS(brute_force_generated_system(*gen_horizontal_sum({4, 2}), 0), Error);
}
