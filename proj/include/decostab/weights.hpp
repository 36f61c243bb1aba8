#pragma once

#include <vector>

#include "decostab/rational.hpp"
#include "decostab/rep.hpp"

namespace decostab {

/// Weight vector of a one-parameter subgroup of SL(r) with respect to a fixed
/// flag: non-decreasing entries summing to zero.
class WeightVector {
 public:
  /// Validates the ordering and the zero sum.
  explicit WeightVector(RationalVector entries);
  static WeightVector from_integers(const IntVector& entries);
  static WeightVector zero(int r);

  int rank() const { return static_cast<int>(entries_.size()); }
  const RationalVector& entries() const { return entries_; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

  bool is_integral() const;
  /// Requires is_integral().
  IntVector to_integers() const;

  WeightVector operator+(const WeightVector& other) const;
  /// Scaling by a non-negative rational keeps the chamber.
  WeightVector scaled(const Rational& k) const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  struct Unchecked {};
  WeightVector(RationalVector entries, Unchecked) : entries_(std::move(entries)) {}
  RationalVector entries_;
};

/// Coefficients alpha_i in gamma = sum alpha_i gamma^(i).
struct CornerIndexCoefficients {
  RationalVector alpha;
};

/// gamma^(i) = (i-r, ..., i-r, i, ..., i) with i leading entries i-r.
WeightVector corner_basis(int r, int i);
std::vector<WeightVector> corner_basis_all(int r);

CornerIndexCoefficients decompose(const WeightVector& gamma);
WeightVector recompose(const CornerIndexCoefficients& coeffs, int r);

Rational pairing(const WeightVector& gamma, const TorusWeight& chi);

/// -min <gamma, chi> over the support; multiplicities are irrelevant.
Rational mu(const StateSet& support, const WeightVector& gamma);

/// gamma = sum_j alpha_j gamma^(i_j) for strictly increasing ranks in 1..r-1
/// and positive alpha.
WeightVector filtration_weight(int r, const std::vector<int>& ranks, const RationalVector& alpha);

Rational mu_filtration(const std::vector<int>& ranks, const RationalVector& alpha,
                       const StateSet& support);

}  // namespace decostab
