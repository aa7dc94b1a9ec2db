// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qlogic/cli.hpp"
#include "qlogic/generators.hpp"
#include "qlogic/model.hpp"
#include "qlogic/oracle.hpp"
#include "qlogic/smap.hpp"
#include "qlogic/states.hpp"
#include "qlogic/suite.hpp"

using namespace qlogic;

namespace {

constexpr std::uint64_t kSeed = 20261017;
constexpr std::size_t kCorpusTrials = 500;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Rational q(const char* text) { return parse_rational(text); }

// Collects the reasons a criterion fails.
struct Criterion {
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  bool ok() const { return problems.empty(); }
};

struct Fixture {
  ModelFile model;
  Logic logic;
};

Fixture load(std::string_view id) {
  ModelFile model = parse_model_text(*cli::builtin_fixture(id));
  Logic logic = resolve_logic(model);
  return {std::move(model), std::move(logic)};
}

// Runs `repro id` in process; returns its exit code and output.
std::pair<int, std::string> repro(const char* id, double& elapsed) {
  std::ostringstream out, err;
  const auto start = Clock::now();
  const int code = cli::run({"repro", id}, out, err);
  elapsed = seconds_since(start);
  return {code, out.str() + err.str()};
}

void check_repro_output(Criterion& c, const char* id, double limit) {
  double elapsed = 0;
  const auto [code, text] = repro(id, elapsed);
  c.expect(code == 0, std::string("repro ") + id + " exit code " + std::to_string(code));
  c.expect(text.find("all values match") != std::string::npos && text.find("MISMATCH") == std::string::npos,
           std::string("repro ") + id + " reports a mismatch");
  c.expect(elapsed < limit, std::string("repro ") + id + " took " + std::to_string(elapsed) + " s");
}

// Reference s-map on the atoms a, a', b, b' (rows are the first argument).
const std::vector<std::string> kAtoms{"a", "a'", "b", "b'"};
const std::vector<std::vector<const char*>> kReferenceP{{"0.4", "0", "0.12", "0.28"},
                                                        {"0", "0.6", "0.18", "0.42"},
                                                        {"0.08", "0.22", "0.3", "0"},
                                                        {"0.32", "0.38", "0", "0.7"}};

Criterion criterion1() {
  Criterion c;
  check_repro_output(c, "2.1", 1.0);

  const Fixture fx = load("2.1");
  const QuantumLogic& L = *fx.logic;
  const SMap p = smap_from_conditional(resolve_cond(fx.logic, *fx.model.find_cond("f")));
  for (std::size_t i = 0; i < kAtoms.size(); ++i)
    for (std::size_t j = 0; j < kAtoms.size(); ++j)
      c.expect(p(L.at(kAtoms[i]), L.at(kAtoms[j])) == q(kReferenceP[i][j]),
               "p(" + kAtoms[i] + "," + kAtoms[j] + ") = " + to_string(p(L.at(kAtoms[i]), L.at(kAtoms[j]))));

  const auto x = resolve_observable(fx.logic, *fx.model.find_observable("x"));
  const auto y = resolve_observable(fx.logic, *fx.model.find_observable("y"));
  const cli::StatsReport s = cli::compute_stats(p, x, y);
  c.expect(s.mean_x == q("0.2") && s.mean_y == q("3.5"), "means");
  c.expect(s.moment_xy == q("0.7") && s.moment_yx == q("0.3"), "first joint moments");
  const auto& m = s.covariance.entries;
  c.expect(m[0][0] == q("0.96") && m[0][1] == 0 && m[1][0] == q("-0.4") && m[1][1] == q("5.25"),
           "covariance matrix");
  c.expect(!s.covariance.symmetric(), "covariance matrix is symmetric");
  c.expect(s.r_xy && *s.r_xy == 0.0, "r(x,y) is not exactly 0");
  c.expect(s.r_yx && *s.r_yx < 0 && std::abs(std::abs(*s.r_yx) - 0.178) < 5e-4, "r(y,x)");
  return c;
}

Criterion criterion2() {
  Criterion c;
  check_repro_output(c, "2.2-printed", 1.0);

  const Fixture fx = load("2.2-printed");
  const QuantumLogic& L = *fx.logic;
  try {
    resolve_smap(fx.logic, *fx.model.find_smap("p"));
    c.expect(false, "printed table was accepted");
  } catch (const ValidationError& e) {
    const Violation& v = e.violation();
    c.expect(v.rule == Rule::S3, "rule is not s3");
    c.expect(v.involves(Cell{L.at("a"), L.at("b")}) && v.involves(Cell{L.at("a"), L.at("b'")}),
             "witness does not name row a against b, b'");
    c.expect(v.message.find("23/50") != std::string::npos && v.message.find("2/5") != std::string::npos,
             "message lacks 0.46 vs 0.40");
  }
  return c;
}

Criterion criterion3() {
  Criterion c;
  check_repro_output(c, "2.2-corrected", 1.0);

  const Fixture fx = load("2.2-corrected");
  const SMap p = resolve_smap(fx.logic, *fx.model.find_smap("p"));
  const auto x = resolve_observable(fx.logic, *fx.model.find_observable("x"));
  const auto y = resolve_observable(fx.logic, *fx.model.find_observable("y"));
  const cli::StatsReport s = cli::compute_stats(p, x, y);
  c.expect(s.moment_xy == q("0.3") && s.moment_yx == q("0.3"), "first joint moments");
  const auto& m = s.covariance.entries;
  c.expect(m[0][0] == q("0.96") && m[0][1] == q("-0.4") && m[1][0] == q("-0.4") && m[1][1] == q("5.25"),
           "covariance matrix");
  c.expect(s.covariance.symmetric(), "covariance matrix is not symmetric");
  c.expect(!observables_compatible(x, y), "x and y are compatible");
  return c;
}

const std::vector<int> kCorpusSizes{2, 3, 4};

// Calls `body` on every s-map of the random corpus.
void for_each_corpus_smap(const std::function<void(int, std::size_t, const SMap&)>& body) {
  for (int n : kCorpusSizes) {
    const Logic logic = gen_mo(n);
    for (std::size_t t = 0; t < kCorpusTrials; ++t) body(n, t, random_smap(logic, mix_seed(kSeed, t)));
  }
}

std::string trial_name(int n, std::size_t t) {
  return "mo(" + std::to_string(n) + ") trial " + std::to_string(t);
}

Criterion criterion4() {
  Criterion c;
  const auto start = Clock::now();
  std::size_t count = 0;
  for_each_corpus_smap([&](int n, std::size_t t, const SMap& p) {
    ++count;
    if (const auto cx = check_roundtrip(p)) c.expect(false, trial_name(n, t) + ": " + *cx);
  });
  c.expect(count >= 3 * 500, "corpus too small");
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 30, "took " + std::to_string(elapsed) + " s");
  return c;
}

Criterion criterion5() {
  Criterion c;
  for (int n : kCorpusSizes) {
    const SuiteReport r = roundtrip_suite(gen_mo(n), kCorpusTrials, kSeed);
    c.expect(r.trials == kCorpusTrials && r.ok(),
             "mo(" + std::to_string(n) + "): " + r.first_counterexample.value_or("trial count"));
  }
  for (int n : {2, 3}) {
    const SuiteReport r = roundtrip_suite(gen_boolean(n), 100, kSeed);
    c.expect(r.ok(), "boolean(" + std::to_string(n) + "): " + r.first_counterexample.value_or(""));
    c.expect(r.symmetric_in_all_trials, "boolean(" + std::to_string(n) + "): p is not symmetric");
  }
  return c;
}

Criterion criterion6() {
  Criterion c;
  std::vector<Logic> logics;
  for (int n = 1; n <= 3; ++n) logics.push_back(gen_boolean(n));
  for (int n = 1; n <= 4; ++n) logics.push_back(gen_mo(n));
  for (const Logic& logic : logics) {
    const QuantumLogic& L = *logic;
    for (ElementId a : L.elements())
      for (ElementId b : L.elements())
        c.expect(L.is_compatible(a, b) == brute_force_compatible(L, a, b),
                 "disagreement on " + L.name(a) + ", " + L.name(b));
  }
  return c;
}

Criterion criterion7() {
  Criterion c;
  const Fixture fx = load("2.1");
  const QuantumLogic& L = *fx.logic;
  const SMap p = smap_from_conditional(resolve_cond(fx.logic, *fx.model.find_cond("f")));
  c.expect(is_independent_pair(p, L.at("a"), L.at("b")), "a is not independent of b");
  c.expect(!is_independent_pair(p, L.at("b"), L.at("a")), "b is independent of a");

  for_each_corpus_smap([&](int n, std::size_t t, const SMap& q) {
    if (const auto cx = check_independence_properties(conditional_from_smap(q)))
      c.expect(false, trial_name(n, t) + ": " + *cx);
  });
  return c;
}

struct Perturbation {
  bool rejected = false;
  bool witness_ok = false;
  bool revalidates = false;
};

Perturbation perturb_smap(const SMap& p, std::mt19937_64& rng, const Rational& delta) {
  const QuantumLogic& L = *p.logic();
  const auto elements = L.elements();
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  const ElementId s = elements[pick(rng)], t = elements[pick(rng)];
  PairTable table = p.table();
  table(s, t) += delta;
  Perturbation out;
  if (const auto v = check_smap(L, table)) {
    out.rejected = true;
    out.witness_ok = v->involves(Cell{s, t});
  } else {
    out.revalidates = !check_smap(L, table).has_value();
  }
  return out;
}

Perturbation perturb_conditional(const ConditionalState& f, std::mt19937_64& rng, const Rational& delta) {
  const QuantumLogic& L = *f.logic();
  const auto elements = L.elements();
  const auto columns = members(f.system().members());
  const ElementId s = elements[std::uniform_int_distribution<std::size_t>(0, elements.size() - 1)(rng)];
  const ElementId t = columns[std::uniform_int_distribution<std::size_t>(0, columns.size() - 1)(rng)];
  PairTable table = f.table();
  table(s, t) += delta;
  Perturbation out;
  const ConditionalCheck check = check_conditional_state(L, f.system().members(), table);
  if (check.violation) {
    out.rejected = true;
    out.witness_ok = check.violation->involves(Cell{s, t});
  } else {
    out.revalidates = !check_conditional_state(L, f.system().members(), table).violation.has_value();
  }
  return out;
}

Criterion criterion8() {
  Criterion c;
  for (int n : kCorpusSizes) {
    const Logic logic = gen_mo(n);
    for (std::size_t t = 0; t < 100; ++t) {
      const SMap p = random_smap(logic, mix_seed(kSeed, t));
      c.expect(!check_smap(*logic, p.table()), trial_name(n, t) + ": random s-map rejected");
      const PartitionInput in = random_partition(logic, mix_seed(kSeed, t));
      const ConditionalState f = conditional_state_from_partition(logic, in.parts, in.alphas, in.weights);
      c.expect(!check_conditional_state(*logic, f.system().members(), f.table()).violation,
               trial_name(n, t) + ": partition conditional state rejected");
    }
  }

  constexpr int kPerturbations = 200;
  std::mt19937_64 rng(kSeed);
  int with_witness = 0, coincidental = 0, wrong = 0;
  for (int i = 0; i < kPerturbations; ++i) {
    const Logic logic = gen_mo(kCorpusSizes[i % kCorpusSizes.size()]);
    const Rational delta = (rng() & 1) ? Rational(1, 100) : Rational(-1, 100);
    Perturbation r;
    if (i % 2 == 0) {
      r = perturb_smap(random_smap(logic, mix_seed(kSeed, 1000 + i)), rng, delta);
    } else {
      const PartitionInput in = random_partition(logic, mix_seed(kSeed, 1000 + i));
      r = perturb_conditional(conditional_state_from_partition(logic, in.parts, in.alphas, in.weights), rng,
                              delta);
    }
    if (r.rejected && r.witness_ok) ++with_witness;
    else if (!r.rejected && r.revalidates) ++coincidental;
    else ++wrong;
  }
  c.expect(with_witness * 100 >= 99 * kPerturbations,
           std::to_string(with_witness) + "/" + std::to_string(kPerturbations) + " rejected with a witness");
  c.expect(wrong == 0, std::to_string(wrong) + " rejections with a witness missing the perturbed cell");
  std::cout << "  perturbations: " << with_witness << " rejected with witness, " << coincidental
            << " coincidental re-validations\n";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Criterion()>>> criteria{
      {"1 repro 2.1 exact values", criterion1},
      {"2 repro 2.2-printed detects s3", criterion2},
      {"3 repro 2.2-corrected symmetric without compatibility", criterion3},
      {"4 roundtrip on the random corpus", criterion4},
      {"5 property suite on the random corpus", criterion5},
      {"6 compatibility oracle agreement", criterion6},
      {"7 independence asymmetry and properties", criterion7},
      {"8 validator soundness", criterion8},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    Criterion c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  criterion " << name << " (" << seconds_since(start) << " s)\n";
    for (const auto& problem : c.problems) std::cout << "  " << problem << "\n";
    if (!c.ok()) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
