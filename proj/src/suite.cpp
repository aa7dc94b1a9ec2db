#include "qlogic/suite.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qlogic/generators.hpp"
#include "qlogic/observables.hpp"

namespace qlogic {

namespace {

std::string pair_name(const QuantumLogic& L, ElementId a, ElementId b) {
  return "(" + L.name(a) + ", " + L.name(b) + ")";
}

std::optional<std::string> check_marginals(const SMap& p,
                                           const std::vector<std::vector<ElementId>>& decompositions) {
  const QuantumLogic& L = *p.logic();
  for (const auto& parts : decompositions) {
    for (ElementId a : L.elements()) {
      Rational left = 0, right = 0;
      for (ElementId b : parts) {
        left += p(a, b);
        right += p(b, a);
      }
      if (left != p(a, a) || right != p(a, a))
        return "marginal law fails for " + L.name(a) + " over a decomposition of 1";
    }
  }
  return std::nullopt;
}

std::vector<DiscreteObservable> block_observables(const Logic& logic, std::mt19937_64& rng) {
  const QuantumLogic& L = *logic;
  std::vector<DiscreteObservable> out;
  const auto blocks = horizontal_blocks(L);
  std::uniform_int_distribution<int> value(-6, 6);
  for (const auto& block : blocks) {
    std::vector<std::pair<Rational, ElementId>> assignment;
    std::vector<int> used;
    for (ElementId a : block) {
      int t;
      do t = value(rng);
      while (std::find(used.begin(), used.end(), t) != used.end());
      used.push_back(t);
      assignment.emplace_back(Rational(t), a);
    }
    out.push_back(build_observable(logic, std::move(assignment)));
  }
  // A two-valued coarsening of the first block, compatible with its refinement.
  if (blocks.front().size() >= 2) {
    const ElementId a = blocks.front().front();
    out.push_back(build_observable(logic, {{Rational(1, 2), a}, {Rational(3), L.complement(a)}}));
  }
  return out;
}

std::optional<std::string> check_observable_pair(const SMap& p, const DiscreteObservable& x,
                                                 const DiscreteObservable& y) {
  try {
    joint_distribution(p, x, y);
    classical_representation(p, x, y);
  } catch (const std::logic_error& e) {
    return std::string(e.what());
  }
  const Rational nu_x = mean(p, x), nu_y = mean(p, y);
  const auto centred_x = compose([&](const Rational& t) { return Rational(t - nu_x); }, x);
  const auto centred_y = compose([&](const Rational& t) { return Rational(t - nu_y); }, y);
  if (covariance(p, x, y) != first_joint_moment(p, centred_x, centred_y))
    return std::string("centred-moment identity fails");

  const bool nondegenerate = variance(p, x) > 0 && variance(p, y) > 0;
  if (nondegenerate) {
    const double rxy = correlation(p, x, y), ryx = correlation(p, y, x);
    if (std::abs(rxy) > 1 + 1e-9 || std::abs(ryx) > 1 + 1e-9)
      return std::string("correlation outside [-1, 1]");
  }
  if (observables_compatible(x, y)) {
    if (first_joint_moment(p, x, y) != first_joint_moment(p, y, x))
      return std::string("compatible observables with p(x,y) != p(y,x)");
    if (covariance(p, x, y) != covariance(p, y, x))
      return std::string("compatible observables with c(x,y) != c(y,x)");
    if (nondegenerate && correlation(p, x, y) != correlation(p, y, x))
      return std::string("compatible observables with r(x,y) != r(y,x)");
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_smap_properties(const SMap& p) {
  const QuantumLogic& L = *p.logic();
  for (ElementId a : L.elements()) {
    for (ElementId b : L.elements()) {
      if (L.is_compatible(a, b)) {
        const ElementId m = L.meet(a, b);
        if (p(a, b) != p(m, m) || p(a, b) != p(b, a))
          return "compatible pair " + pair_name(L, a, b) + " with p(a,b), p(a^b,a^b), p(b,a) unequal";
      }
      if (L.leq(a, b)) {
        if (p(a, b) != p(a, a)) return "a <= b but p(a,b) != p(a,a) for " + pair_name(L, a, b);
        for (ElementId c : L.elements())
          if (p(a, c) > p(b, c))
            return "monotonicity fails for " + pair_name(L, a, b) + " against " + L.name(c);
      }
      if (p(a, b) > p(b, b)) return "p(a,b) > p(b,b) for " + pair_name(L, a, b);
    }
  }
  try {
    diagonal_state(p);
  } catch (const ValidationError& e) {
    return std::string("diagonal is not a state: ") + e.what();
  }
  std::vector<std::vector<ElementId>> complements;
  for (ElementId b : L.elements()) complements.push_back({b, L.complement(b)});
  return check_marginals(p, complements);
}

std::optional<std::string> check_roundtrip(const SMap& p) {
  const ConditionalState f = conditional_from_smap(p);
  const SMap back = smap_from_conditional(f);
  if (!(back.table() == p.table())) return std::string("s-map -> conditional -> s-map is not the identity");
  const ConditionalState again = conditional_from_smap(back);
  if (!(again.system() == f.system()) || !(again.table() == f.table()))
    return std::string("conditional -> s-map -> conditional is not the identity");
  return std::nullopt;
}

std::optional<std::string> check_independence_factorisation(const SMap& p) {
  const QuantumLogic& L = *p.logic();
  const ConditionalState f = conditional_from_smap(p);
  for (ElementId b : L.elements())
    for (ElementId a : members(f.system().members()))
      if (is_independent(f, b, a, L.one()) != is_independent_pair(p, b, a))
        return "factorisation and conditional independence disagree on " + pair_name(L, b, a);
  return std::nullopt;
}

std::optional<std::string> check_independence_properties(const ConditionalState& f) {
  const QuantumLogic& L = *f.logic();
  const auto cs = members(f.system().members());
  for (ElementId c : cs) {
    for (ElementId a : cs) {
      if (f(c, a) != 1) continue;
      const ElementId ac = L.complement(a);
      const bool complement_admissible = f.system().contains(ac) && f(c, ac) == 1;
      for (ElementId b : L.elements()) {
        const bool ind = is_independent(f, b, a, c);
        if (ind != is_independent(f, L.complement(b), a, c))
          return "property (ii) fails for b=" + L.name(b) + ", a=" + L.name(a) + ", c=" + L.name(c);
        if (complement_admissible && ind != is_independent(f, b, ac, c))
          return "property (i) fails for b=" + L.name(b) + ", a=" + L.name(a) + ", c=" + L.name(c);
        if (f.system().contains(b) && L.is_compatible(a, b) && f(c, b) == 1 &&
            ind != is_independent(f, a, b, c))
          return "property (iii) fails for b=" + L.name(b) + ", a=" + L.name(a) + ", c=" + L.name(c);
      }
    }
  }
  return std::nullopt;
}

SuiteReport roundtrip_suite(const Logic& logic, std::size_t trials, std::uint64_t seed) {
  SuiteReport report;
  report.trials = trials;
  const QuantumLogic& L = *logic;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = mix_seed(seed, t);
    std::optional<std::string> failure;
    auto run = [&](std::optional<std::string> result) {
      ++report.checks;
      if (result && !failure) failure = std::move(result);
    };
    try {
      const SMap p = random_smap(logic, trial_seed);
      run(check_smap_properties(p));
      run(check_marginals(p, horizontal_blocks(L)));
      run(check_roundtrip(p));
      run(check_independence_factorisation(p));
      run(check_independence_properties(conditional_from_smap(p)));

      const auto input = random_partition(logic, mix_seed(trial_seed, 1));
      const ConditionalState built =
          conditional_state_from_partition(logic, input.parts, input.alphas, input.weights);
      run(check_independence_properties(built));

      std::mt19937_64 rng(mix_seed(trial_seed, 2));
      const auto observables = block_observables(logic, rng);
      for (const auto& x : observables)
        for (const auto& y : observables) run(check_observable_pair(p, x, y));

      for (ElementId a : L.elements())
        for (ElementId b : L.elements())
          if (p(a, b) != p(b, a)) report.symmetric_in_all_trials = false;
    } catch (const std::exception& e) {
      ++report.checks;
      if (!failure) failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      ++report.failed;
      if (!report.first_counterexample)
        report.first_counterexample = "trial " + std::to_string(t) + ": " + *failure;
    } else {
      ++report.passed;
    }
  }
  return report;
}

}  // namespace qlogic
