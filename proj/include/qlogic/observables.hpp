#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "qlogic/lattice.hpp"
#include "qlogic/rational.hpp"
#include "qlogic/smap.hpp"
#include "qlogic/states.hpp"

namespace qlogic {

/// An observable with finite spectrum: each value t is assigned the event
/// x({t}). The events are nonzero, mutually orthogonal and join to 1.
class DiscreteObservable {
 public:
  struct Outcome {
    Rational value;
    ElementId event;

    friend bool operator==(const Outcome&, const Outcome&) = default;
  };

  const Logic& logic() const { return logic_; }
  /// Outcomes in increasing value order.
  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  std::vector<Rational> spectrum() const;
  /// x(E) for a finite value set E: the join of the events of its members.
  ElementId event_of(const std::vector<Rational>& values) const;
  /// The range R(x): joins of every subset of the outcome events.
  ElementSet range() const;

  friend bool operator==(const DiscreteObservable& a, const DiscreteObservable& b) {
    return a.logic_ == b.logic_ && a.outcomes_ == b.outcomes_;
  }

  friend DiscreteObservable build_observable(Logic, std::vector<std::pair<Rational, ElementId>>);

 private:
  DiscreteObservable(Logic logic, std::vector<Outcome> outcomes)
      : logic_(std::move(logic)), outcomes_(std::move(outcomes)) {}

  Logic logic_;
  std::vector<Outcome> outcomes_;
};

/// Throws Error with kind DuplicateValue, ZeroElement, NotOrthogonal or
/// JoinNotOne.
DiscreteObservable build_observable(Logic logic,
                                    std::vector<std::pair<Rational, ElementId>> assignment);

using RealFunction = std::function<Rational(const Rational&)>;

/// g∘x: values with equal images are merged by joining their events.
DiscreteObservable compose(const RealFunction& g, const DiscreteObservable& x);

/// Every pair of events of x and y is compatible.
bool observables_compatible(const DiscreteObservable& x, const DiscreteObservable& y);

/// Σ t · m(x({t})).
Rational expectation(const State& m, const DiscreteObservable& x);

/// p_{x,y}(t, s) = p(x({t}), y({s})) on σ(x) × σ(y).
struct JointDistribution {
  std::vector<Rational> row_values;
  std::vector<Rational> column_values;
  std::vector<std::vector<Rational>> probability;

  Rational total() const;
  Rational row_sum(std::size_t i) const;
  Rational column_sum(std::size_t j) const;
};

/// Builds the table and verifies normalisation and both marginal laws
/// against ν; a failed check throws std::logic_error.
JointDistribution joint_distribution(const SMap& p, const DiscreteObservable& x,
                                     const DiscreteObservable& y);

/// p(x, y) = Σ_i Σ_j t_i s_j p(x({t_i}), y({s_j})).
Rational first_joint_moment(const SMap& p, const DiscreteObservable& x, const DiscreteObservable& y);

/// ν(x) for the diagonal state of p.
Rational mean(const SMap& p, const DiscreteObservable& x);

/// c(x, y) = p(x, y) − ν(x) ν(y); in general c(x, y) ≠ c(y, x).
Rational covariance(const SMap& p, const DiscreteObservable& x, const DiscreteObservable& y);
Rational variance(const SMap& p, const DiscreteObservable& x);

/// r(x, y) = c(x, y) / sqrt(var(x) var(y)). The square r² is formed exactly
/// and a single square root is taken, so |r| ≤ 1 holds in floating point.
/// Throws Error(DegenerateVariance) if either variance is zero.
double correlation(const SMap& p, const DiscreteObservable& x, const DiscreteObservable& y);

struct CovarianceMatrix {
  /// [[c(x,x), c(x,y)], [c(y,x), c(y,y)]]
  std::array<std::array<Rational, 2>, 2> entries;

  bool symmetric() const { return entries[0][1] == entries[1][0]; }
};

CovarianceMatrix covariance_matrix(const SMap& p, const DiscreteObservable& x,
                                   const DiscreteObservable& y);

/// A finite probability space whose sample points are value pairs, with the
/// two coordinate random variables ξ (x-value) and η (y-value).
struct ProbabilitySpace {
  struct Point {
    Rational xi;
    Rational eta;
    Rational probability;
  };
  std::vector<Point> points;

  Rational expect_xi() const;
  Rational expect_eta() const;
  Rational cov_xi_eta() const;
  Rational var_xi() const;
  Rational var_eta() const;
};

/// Two classical spaces representing (x, y): the first has sample points
/// (t, s) ∈ σ(x) × σ(y) with P = p_{x,y}, the second (s, t) ∈ σ(y) × σ(x)
/// with P = p_{y,x}.
struct ClassicalRepresentation {
  ProbabilitySpace forward;
  ProbabilitySpace backward;
};

/// Constructs both spaces and checks, exactly, cov_1 = c(x,y),
/// cov_2 = c(y,x), E(ξ_i) = ν(x), E(η_i) = ν(y), var(ξ_i) = var(x),
/// var(η_i) = var(y) and both Cauchy–Schwarz bounds. A failed check is a
/// defect and throws std::logic_error.
ClassicalRepresentation classical_representation(const SMap& p, const DiscreteObservable& x,
                                                 const DiscreteObservable& y);

}  // namespace qlogic
