#pragma once

#include <string>
#include <vector>

#include "qlogic/errors.hpp"
#include "qlogic/lattice.hpp"
#include "qlogic/pair_table.hpp"
#include "qlogic/rational.hpp"

namespace testing {

using namespace qlogic;

inline Rational q(const char* text) { return parse_rational(text); }

// Two four-element blocks {0, a, a', 1} and {0, b, b', 1} glued at 0 and 1.
inline Logic six() {
  return build_logic({"0", "1", "a", "a'", "b", "b'"},
                     {{"a", "1"}, {"a'", "1"}, {"b", "1"}, {"b'", "1"}},
                     {{"a", "a'"}, {"b", "b'"}});
}

// Table on six() from its atom rows. Row and column 1 are the sums over
// a, a'; row and column 0 stay zero.
inline PairTable table_on_atoms(const QuantumLogic& L, const std::vector<std::string>& names,
                                const std::vector<std::vector<const char*>>& rows) {
  PairTable t(L.size());
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < names.size(); ++j) t(L.at(names[i]), L.at(names[j])) = q(rows[i][j]);
  const ElementId one = L.one(), a = L.at("a"), ac = L.at("a'");
  for (ElementId e : L.elements()) {
    if (e == L.zero() || e == one) continue;
    t(e, one) = t(e, a) + t(e, ac);
    t(one, e) = t(a, e) + t(ac, e);
  }
  t(one, one) = t(a, one) + t(ac, one);
  return t;
}

inline std::string fixture(const char* name) { return std::string(QLOGIC_FIXTURE_DIR) + "/" + name; }

}  // namespace testing

namespace testing {

// Two eight-element blocks {x, y, z} and {z, u, v} sharing the atom z.
// Orthomodular, but not a horizontal sum.
inline Logic shared_atom() {
  return build_logic({"0", "1", "x", "y", "z", "u", "v", "x'", "y'", "z'", "u'", "v'"},
                     {{"x", "y'"}, {"x", "z'"}, {"y", "x'"}, {"y", "z'"}, {"z", "x'"}, {"z", "y'"},
                      {"z", "u'"}, {"z", "v'"}, {"u", "z'"}, {"u", "v'"}, {"v", "z'"}, {"v", "u'"}},
                     {{"x", "x'"}, {"y", "y'"}, {"z", "z'"}, {"u", "u'"}, {"v", "v'"}});
}

}  // namespace testing
