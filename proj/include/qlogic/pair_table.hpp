#pragma once

#include <cstddef>
#include <vector>

#include "qlogic/lattice.hpp"
#include "qlogic/rational.hpp"

namespace qlogic {

/// Dense n×n table of rationals indexed by (row, column) elements.
class PairTable {
 public:
  PairTable() = default;
  explicit PairTable(std::size_t n) : n_(n), values_(n * n) {}

  std::size_t size() const { return n_; }

  Rational& operator()(ElementId row, ElementId col) { return values_[row.index() * n_ + col.index()]; }
  const Rational& operator()(ElementId row, ElementId col) const {
    return values_[row.index() * n_ + col.index()];
  }

  std::vector<Rational> column(ElementId col) const {
    std::vector<Rational> out(n_);
    for (std::size_t r = 0; r < n_; ++r) out[r] = values_[r * n_ + col.index()];
    return out;
  }

  friend bool operator==(const PairTable& a, const PairTable& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> values_;
};

}  // namespace qlogic
