#include "decostab/rational.hpp"

#include <limits>

#include "decostab/errors.hpp"

namespace decostab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MixedRank: return "MixedRank";
    case ErrorKind::ZeroRepresentation: return "ZeroRepresentation";
    case ErrorKind::Inhomogeneous: return "Inhomogeneous";
    case ErrorKind::NoSolutions: return "NoSolutions";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotOrdered: return "NotOrdered";
    case ErrorKind::NonZeroSum: return "NonZeroSum";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptySupport: return "EmptySupport";
    case ErrorKind::RankOrder: return "RankOrder";
    case ErrorKind::ChiNotInA: return "ChiNotInA";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::TooManyStates: return "TooManyStates";
    case ErrorKind::SigmaNotNormalized: return "SigmaNotNormalized";
    case ErrorKind::NonpositiveDelta: return "NonpositiveDelta";
    case ErrorKind::NoCriticalType: return "NoCriticalType";
    case ErrorKind::InconsistentFlags: return "InconsistentFlags";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Schema: return "Schema";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { fail(ErrorKind::InvalidArgument, "not a rational: '" + s + "'"); };
  if (s.empty()) bad();
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  auto to_mpz = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return Integer(t, 10);
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) bad();
    return Rational(to_mpz(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') bad();
  Integer d = to_mpz(den);
  if (d == 0) fail(ErrorKind::InvalidArgument, "zero denominator in '" + s + "'");
  Rational q(to_mpz(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) fail(ErrorKind::Overflow, "integer exceeds 64 bits: " + z.get_str());
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return z.get_si();
}

Integer content(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

std::vector<Integer> primitive(std::vector<Integer> v) {
  const Integer g = content(v);
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

IntVector primitive_integral(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> scaled;
  scaled.reserve(v.size());
  for (const auto& x : v) {
    Rational y = x * Rational(l);
    scaled.push_back(y.get_num());
  }
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : primitive(std::move(scaled))) out.push_back(to_int64(x));
  return out;
}

}  // namespace decostab
