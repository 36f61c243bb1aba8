#include "decostab/weights.hpp"

#include <optional>

#include "decostab/errors.hpp"

namespace decostab {

WeightVector::WeightVector(RationalVector entries) : entries_(std::move(entries)) {
  if (entries_.empty()) fail(ErrorKind::InvalidArgument, "weight vector must be non-empty");
  Rational sum = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0 && entries_[i - 1] > entries_[i]) {
      fail(ErrorKind::NotOrdered, "entry " + std::to_string(i) + " decreases");
    }
    sum += entries_[i];
  }
  if (sum != 0) fail(ErrorKind::NonZeroSum, "entries sum to " + to_string(sum));
}

WeightVector WeightVector::from_integers(const IntVector& entries) {
  RationalVector v;
  v.reserve(entries.size());
  for (auto x : entries) v.push_back(make_rational(x));
  return WeightVector(std::move(v));
}

WeightVector WeightVector::zero(int r) {
  if (r < 1) fail(ErrorKind::InvalidArgument, "rank must be positive");
  return WeightVector(RationalVector(r, Rational(0)), Unchecked{});
}

bool WeightVector::is_integral() const {
  for (const auto& x : entries_) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

IntVector WeightVector::to_integers() const {
  IntVector out;
  out.reserve(entries_.size());
  for (const auto& x : entries_) {
    if (x.get_den() != 1) fail(ErrorKind::InvalidArgument, "weight vector is not integral");
    out.push_back(to_int64(x.get_num()));
  }
  return out;
}

WeightVector WeightVector::operator+(const WeightVector& other) const {
  if (rank() != other.rank()) fail(ErrorKind::LengthMismatch, "adding weight vectors of different rank");
  RationalVector v = entries_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.entries_[i];
  return WeightVector(std::move(v), Unchecked{});
}

WeightVector WeightVector::scaled(const Rational& k) const {
  if (k < 0) fail(ErrorKind::InvalidArgument, "negative scaling leaves the chamber");
  RationalVector v = entries_;
  for (auto& x : v) x *= k;
  return WeightVector(std::move(v), Unchecked{});
}

WeightVector corner_basis(int r, int i) {
  if (r < 2 || i < 1 || i > r - 1) {
    fail(ErrorKind::IndexOutOfRange,
         "corner index " + std::to_string(i) + " outside 1.." + std::to_string(r - 1));
  }
  IntVector v(r);
  for (int k = 0; k < r; ++k) v[k] = k < i ? i - r : i;
  return WeightVector::from_integers(v);
}

std::vector<WeightVector> corner_basis_all(int r) {
  std::vector<WeightVector> out;
  for (int i = 1; i < r; ++i) out.push_back(corner_basis(r, i));
  return out;
}

CornerIndexCoefficients decompose(const WeightVector& gamma) {
  const int r = gamma.rank();
  CornerIndexCoefficients out;
  for (int i = 0; i + 1 < r; ++i) out.alpha.push_back((gamma[i + 1] - gamma[i]) / Rational(r));
  return out;
}

WeightVector recompose(const CornerIndexCoefficients& coeffs, int r) {
  if (static_cast<int>(coeffs.alpha.size()) != r - 1) {
    fail(ErrorKind::LengthMismatch, "need " + std::to_string(r - 1) + " corner coefficients");
  }
  WeightVector acc = WeightVector::zero(r);
  for (int i = 1; i < r; ++i) acc = acc + corner_basis(r, i).scaled(coeffs.alpha[i - 1]);
  return acc;
}

Rational pairing(const WeightVector& gamma, const TorusWeight& chi) {
  if (static_cast<int>(chi.rank()) != gamma.rank()) {
    fail(ErrorKind::LengthMismatch, "character of length " + std::to_string(chi.rank()) +
                                        " against weight vector of rank " +
                                        std::to_string(gamma.rank()));
  }
  Rational s = 0;
  for (std::size_t i = 0; i < chi.entries.size(); ++i) {
    s += gamma[i] * Rational(Integer(static_cast<long>(chi.entries[i])));
  }
  return s;
}

Rational mu(const StateSet& support, const WeightVector& gamma) {
  if (support.empty()) fail(ErrorKind::EmptySupport, "the decoration vanishes identically");
  std::optional<Rational> lowest;
  for (const auto& [chi, m] : support.map()) {
    Rational p = pairing(gamma, chi);
    if (!lowest || p < *lowest) lowest = std::move(p);
  }
  return -*lowest;
}

WeightVector filtration_weight(int r, const std::vector<int>& ranks, const RationalVector& alpha) {
  if (ranks.size() != alpha.size()) {
    fail(ErrorKind::LengthMismatch, "ranks and weights differ in length");
  }
  WeightVector gamma = WeightVector::zero(r);
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    if (ranks[j] < 1 || ranks[j] > r - 1 || (j > 0 && ranks[j] <= ranks[j - 1])) {
      fail(ErrorKind::RankOrder, "ranks must increase strictly inside 1.." + std::to_string(r - 1));
    }
    if (alpha[j] <= 0) fail(ErrorKind::InvalidArgument, "filtration weights must be positive");
    gamma = gamma + corner_basis(r, ranks[j]).scaled(alpha[j]);
  }
  return gamma;
}

Rational mu_filtration(const std::vector<int>& ranks, const RationalVector& alpha,
                       const StateSet& support) {
  if (support.empty()) fail(ErrorKind::EmptySupport, "the decoration vanishes identically");
  return mu(support, filtration_weight(support.rank(), ranks, alpha));
}

}  // namespace decostab
