#include "qlogic/observables.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qlogic {

std::vector<Rational> DiscreteObservable::spectrum() const {
  std::vector<Rational> out;
  out.reserve(outcomes_.size());
  for (const auto& o : outcomes_) out.push_back(o.value);
  return out;
}

ElementId DiscreteObservable::event_of(const std::vector<Rational>& values) const {
  ElementId acc = logic_->zero();
  for (const auto& o : outcomes_)
    if (std::find(values.begin(), values.end(), o.value) != values.end())
      acc = logic_->join(acc, o.event);
  return acc;
}

ElementSet DiscreteObservable::range() const {
  // The events are nonzero and orthogonal, so the range has 2^k members and
  // k ≤ 6 inside a 64-element logic.
  const std::size_t k = outcomes_.size();
  ElementSet out = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
    ElementId acc = logic_->zero();
    for (std::size_t i = 0; i < k; ++i)
      if (s >> i & 1) acc = logic_->join(acc, outcomes_[i].event);
    out |= singleton(acc);
  }
  return out;
}

DiscreteObservable build_observable(Logic logic,
                                    std::vector<std::pair<Rational, ElementId>> assignment) {
  const QuantumLogic& L = *logic;
  std::vector<DiscreteObservable::Outcome> outcomes;
  outcomes.reserve(assignment.size());
  for (auto& [t, e] : assignment) {
    t.canonicalize();
    if (e.index() >= L.size()) throw Error(ErrorKind::LogicMismatch, "element outside the logic");
    outcomes.push_back({t, e});
  }
  std::sort(outcomes.begin(), outcomes.end(),
            [](const auto& a, const auto& b) { return a.value < b.value; });
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (i > 0 && outcomes[i].value == outcomes[i - 1].value)
      throw Error(ErrorKind::DuplicateValue, "value " + to_string(outcomes[i].value) + " assigned twice");
    if (outcomes[i].event == L.zero())
      throw Error(ErrorKind::ZeroElement, "value " + to_string(outcomes[i].value) + " is assigned 0");
  }
  ElementId acc = L.zero();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    for (std::size_t j = i + 1; j < outcomes.size(); ++j)
      if (!L.is_orthogonal(outcomes[i].event, outcomes[j].event))
        throw Error(ErrorKind::NotOrthogonal,
                    "values " + to_string(outcomes[i].value) + " and " + to_string(outcomes[j].value) +
                        " are assigned non-orthogonal events " + L.name(outcomes[i].event) + ", " +
                        L.name(outcomes[j].event));
    acc = L.join(acc, outcomes[i].event);
  }
  if (acc != L.one())
    throw Error(ErrorKind::JoinNotOne, "events join to " + L.name(acc) + ", not 1");
  return DiscreteObservable(std::move(logic), std::move(outcomes));
}

DiscreteObservable compose(const RealFunction& g, const DiscreteObservable& x) {
  const QuantumLogic& L = *x.logic();
  std::map<Rational, ElementId> merged;
  for (const auto& o : x.outcomes()) {
    Rational image = g(o.value);
    image.canonicalize();
    auto [it, inserted] = merged.emplace(image, o.event);
    if (!inserted) it->second = L.join(it->second, o.event);
  }
  std::vector<std::pair<Rational, ElementId>> assignment(merged.begin(), merged.end());
  return build_observable(x.logic(), std::move(assignment));
}

bool observables_compatible(const DiscreteObservable& x, const DiscreteObservable& y) {
  const QuantumLogic& L = *x.logic();
  for (const auto& u : x.outcomes())
    for (const auto& v : y.outcomes())
      if (!L.is_compatible(u.event, v.event)) return false;
  return true;
}

Rational expectation(const State& m, const DiscreteObservable& x) {
  Rational sum = 0;
  for (const auto& o : x.outcomes()) sum += o.value * m(o.event);
  return sum;
}

Rational JointDistribution::total() const {
  Rational sum = 0;
  for (const auto& row : probability)
    for (const auto& v : row) sum += v;
  return sum;
}

Rational JointDistribution::row_sum(std::size_t i) const {
  Rational sum = 0;
  for (const auto& v : probability[i]) sum += v;
  return sum;
}

Rational JointDistribution::column_sum(std::size_t j) const {
  Rational sum = 0;
  for (const auto& row : probability) sum += row[j];
  return sum;
}

JointDistribution joint_distribution(const SMap& p, const DiscreteObservable& x,
                                     const DiscreteObservable& y) {
  JointDistribution d;
  d.row_values = x.spectrum();
  d.column_values = y.spectrum();
  for (const auto& u : x.outcomes()) {
    auto& row = d.probability.emplace_back();
    for (const auto& v : y.outcomes()) row.push_back(p(u.event, v.event));
  }
  if (d.total() != 1) throw std::logic_error("joint distribution does not sum to 1");
  for (std::size_t i = 0; i < x.outcomes().size(); ++i) {
    const ElementId e = x.outcomes()[i].event;
    if (d.row_sum(i) != p(e, e)) throw std::logic_error("row marginal differs from the diagonal state");
  }
  for (std::size_t j = 0; j < y.outcomes().size(); ++j) {
    const ElementId e = y.outcomes()[j].event;
    if (d.column_sum(j) != p(e, e))
      throw std::logic_error("column marginal differs from the diagonal state");
  }
  return d;
}

Rational first_joint_moment(const SMap& p, const DiscreteObservable& x, const DiscreteObservable& y) {
  Rational sum = 0;
  for (const auto& u : x.outcomes())
    for (const auto& v : y.outcomes()) sum += u.value * v.value * p(u.event, v.event);
  return sum;
}

Rational mean(const SMap& p, const DiscreteObservable& x) {
  Rational sum = 0;
  for (const auto& o : x.outcomes()) sum += o.value * p(o.event, o.event);
  return sum;
}

Rational covariance(const SMap& p, const DiscreteObservable& x, const DiscreteObservable& y) {
  return first_joint_moment(p, x, y) - mean(p, x) * mean(p, y);
}

Rational variance(const SMap& p, const DiscreteObservable& x) { return covariance(p, x, x); }

double correlation(const SMap& p, const DiscreteObservable& x, const DiscreteObservable& y) {
  const Rational vx = variance(p, x);
  const Rational vy = variance(p, y);
  if (vx == 0 || vy == 0)
    throw Error(ErrorKind::DegenerateVariance, "correlation needs positive variances");
  const Rational c = covariance(p, x, y);
  const Rational r2 = c * c / (vx * vy);
  const double magnitude = std::sqrt(to_double(r2));
  return sgn(c) < 0 ? -magnitude : magnitude;
}

CovarianceMatrix covariance_matrix(const SMap& p, const DiscreteObservable& x,
                                   const DiscreteObservable& y) {
  CovarianceMatrix m;
  m.entries[0][0] = variance(p, x);
  m.entries[0][1] = covariance(p, x, y);
  m.entries[1][0] = covariance(p, y, x);
  m.entries[1][1] = variance(p, y);
  return m;
}

Rational ProbabilitySpace::expect_xi() const {
  Rational sum = 0;
  for (const auto& w : points) sum += w.xi * w.probability;
  return sum;
}

Rational ProbabilitySpace::expect_eta() const {
  Rational sum = 0;
  for (const auto& w : points) sum += w.eta * w.probability;
  return sum;
}

Rational ProbabilitySpace::cov_xi_eta() const {
  const Rational mx = expect_xi(), my = expect_eta();
  Rational sum = 0;
  for (const auto& w : points) sum += (w.xi - mx) * (w.eta - my) * w.probability;
  return sum;
}

Rational ProbabilitySpace::var_xi() const {
  const Rational mx = expect_xi();
  Rational sum = 0;
  for (const auto& w : points) sum += (w.xi - mx) * (w.xi - mx) * w.probability;
  return sum;
}

Rational ProbabilitySpace::var_eta() const {
  const Rational my = expect_eta();
  Rational sum = 0;
  for (const auto& w : points) sum += (w.eta - my) * (w.eta - my) * w.probability;
  return sum;
}

ClassicalRepresentation classical_representation(const SMap& p, const DiscreteObservable& x,
                                                 const DiscreteObservable& y) {
  ClassicalRepresentation rep;
  for (const auto& u : x.outcomes())
    for (const auto& v : y.outcomes())
      rep.forward.points.push_back({u.value, v.value, p(u.event, v.event)});
  for (const auto& v : y.outcomes())
    for (const auto& u : x.outcomes())
      rep.backward.points.push_back({u.value, v.value, p(v.event, u.event)});

  const Rational nu_x = mean(p, x), nu_y = mean(p, y);
  const Rational var_x = variance(p, x), var_y = variance(p, y);
  const Rational c_xy = covariance(p, x, y), c_yx = covariance(p, y, x);
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("classical representation check failed: ") + what);
  };
  for (const ProbabilitySpace* space : {&rep.forward, &rep.backward}) {
    Rational total = 0;
    for (const auto& w : space->points) {
      require(w.probability >= 0, "negative point mass");
      total += w.probability;
    }
    require(total == 1, "total mass");
    require(space->expect_xi() == nu_x, "E(xi) = nu(x)");
    require(space->expect_eta() == nu_y, "E(eta) = nu(y)");
    require(space->var_xi() == var_x, "var(xi) = var(x)");
    require(space->var_eta() == var_y, "var(eta) = var(y)");
  }
  require(rep.forward.cov_xi_eta() == c_xy, "cov_1 = c(x,y)");
  require(rep.backward.cov_xi_eta() == c_yx, "cov_2 = c(y,x)");
  require(c_xy * c_xy <= var_x * var_y, "c(x,y)^2 <= c(x,x) c(y,y)");
  require(c_yx * c_yx <= var_x * var_y, "c(y,x)^2 <= c(x,x) c(y,y)");
  return rep;
}

}  // namespace qlogic
