#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace decostab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Integer coordinate vector (torus characters, ray generators, normals).
using IntVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

/// Parses "p/q", "-p/q" or a bare integer. The result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& q);

std::int64_t to_int64(const Integer& z);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

/// Content (gcd of entries, non-negative). Zero for the zero vector.
Integer content(const std::vector<Integer>& v);

/// Divides by the content. The zero vector is returned unchanged.
std::vector<Integer> primitive(std::vector<Integer> v);

/// Clears denominators and divides by the content, keeping orientation.
IntVector primitive_integral(const RationalVector& v);

}  // namespace decostab
