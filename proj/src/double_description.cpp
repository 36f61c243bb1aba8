#include "double_description.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "decostab/errors.hpp"

namespace decostab::detail {
namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= o.words_[i];
    return out;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntegerVector x;
  Bits zeros;
};

Integer dot(const IntegerVector& a, const IntegerVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Indices of a maximal linearly independent subset of rows (greedy, in order).
std::vector<std::size_t> independent_rows(const std::vector<IntegerVector>& rows, std::size_t dim) {
  std::vector<std::vector<Rational>> basis;  // reduced echelon rows
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t idx = 0; idx < rows.size() && chosen.size() < dim; ++idx) {
    std::vector<Rational> v(rows[idx].begin(), rows[idx].end());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto p = pivots[b];
      if (v[p] != 0) {
        const Rational f = v[p];
        for (std::size_t k = 0; k < dim; ++k) v[k] -= f * basis[b][k];
      }
    }
    std::size_t p = dim;
    for (std::size_t k = 0; k < dim; ++k) {
      if (v[k] != 0) {
        p = k;
        break;
      }
    }
    if (p == dim) continue;
    const Rational f = v[p];
    for (auto& e : v) e /= f;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (basis[b][p] != 0) {
        const Rational g = basis[b][p];
        for (std::size_t k = 0; k < dim; ++k) basis[b][k] -= g * v[k];
      }
    }
    basis.push_back(std::move(v));
    pivots.push_back(p);
    chosen.push_back(idx);
  }
  return chosen;
}

// Columns of -B^{-1} for a square invertible integer matrix B.
std::vector<IntegerVector> initial_rays(const std::vector<IntegerVector>& b, std::size_t dim) {
  std::vector<std::vector<Rational>> aug(dim, std::vector<Rational>(2 * dim, Rational(0)));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) aug[i][j] = Rational(b[i][j]);
    aug[i][dim + i] = -1;
  }
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t piv = col;
    while (aug[piv][col] == 0) ++piv;
    std::swap(aug[piv], aug[col]);
    const Rational f = aug[col][col];
    for (auto& e : aug[col]) e /= f;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      const Rational g = aug[i][col];
      for (std::size_t k = 0; k < 2 * dim; ++k) aug[i][k] -= g * aug[col][k];
    }
  }
  std::vector<IntegerVector> out;
  for (std::size_t k = 0; k < dim; ++k) {
    RationalVector column(dim);
    for (std::size_t i = 0; i < dim; ++i) column[i] = aug[i][dim + k];
    Integer l = 1;
    for (const auto& q : column) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntegerVector v;
    for (const auto& q : column) v.push_back(Rational(q * Rational(l)).get_num());
    out.push_back(primitive(std::move(v)));
  }
  return out;
}

}  // namespace

std::size_t matrix_rank(const std::vector<IntegerVector>& rows, std::size_t dim) {
  return independent_rows(rows, dim).size();
}

std::vector<IntegerVector> extreme_rays(std::vector<IntegerVector> rows, std::size_t dim) {
  // Drop zero rows and duplicate directions.
  {
    std::set<IntegerVector> seen;
    std::vector<IntegerVector> kept;
    for (auto& row : rows) {
      if (row.size() != dim) fail(ErrorKind::LengthMismatch, "constraint of wrong dimension");
      auto p = primitive(std::move(row));
      if (content(p) == 0) continue;
      if (seen.insert(p).second) kept.push_back(std::move(p));
    }
    rows = std::move(kept);
  }
  if (dim == 0) return {};

  const auto basis_idx = independent_rows(rows, dim);
  if (basis_idx.size() < dim) fail(ErrorKind::NotPointed, "the cone contains a line");

  // Put the basis rows first so that bit i always refers to rows[i].
  {
    std::vector<IntegerVector> reordered;
    std::vector<bool> used(rows.size(), false);
    for (auto i : basis_idx) {
      reordered.push_back(rows[i]);
      used[i] = true;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!used[i]) reordered.push_back(rows[i]);
    }
    rows = std::move(reordered);
  }
  const std::size_t m = rows.size();

  std::vector<Ray> current;
  {
    std::vector<IntegerVector> b(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(dim));
    for (auto& x : initial_rays(b, dim)) {
      Ray ray{std::move(x), Bits(m)};
      for (std::size_t i = 0; i < dim; ++i) {
        if (dot(rows[i], ray.x) == 0) ray.zeros.set(i);
      }
      current.push_back(std::move(ray));
    }
  }

  for (std::size_t row = dim; row < m && !current.empty(); ++row) {
    std::vector<Integer> s(current.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t k = 0; k < current.size(); ++k) {
      s[k] = dot(rows[row], current[k].x);
      const int sg = sgn(s[k]);
      if (sg > 0) {
        pos.push_back(k);
      } else {
        if (sg < 0) neg.push_back(k);
        Ray kept = current[k];
        if (sg == 0) kept.zeros.set(row);
        next.push_back(std::move(kept));
      }
    }
    for (auto p : pos) {
      for (auto q : neg) {
        const Bits common = current[p].zeros & current[q].zeros;
        if (dim >= 2 && common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < current.size() && adjacent; ++k) {
          if (k == p || k == q) continue;
          if (common.subset_of(current[k].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntegerVector x(dim);
        for (std::size_t i = 0; i < dim; ++i) {
          x[i] = s[p] * current[q].x[i] - s[q] * current[p].x[i];
        }
        Ray ray{primitive(std::move(x)), common};
        ray.zeros.set(row);
        next.push_back(std::move(ray));
      }
    }
    current = std::move(next);
  }

  std::vector<IntegerVector> out;
  out.reserve(current.size());
  for (auto& ray : current) out.push_back(std::move(ray.x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace decostab::detail
