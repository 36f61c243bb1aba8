#include "decostab/rep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "decostab/errors.hpp"

namespace decostab {
namespace {

using WeightedList = std::map<TorusWeight, Integer>;

StateSet::Multiplicity checked_mult(const Integer& m) {
  if (!m.fits_ulong_p()) fail(ErrorKind::Overflow, "multiplicity exceeds 64 bits: " + m.get_str());
  return m.get_ui();
}

Integer binomial(const Integer& n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

TorusWeight scaled_sum(const TorusWeight& acc, const TorusWeight& w, std::int64_t k) {
  TorusWeight out = acc;
  for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += k * w.entries[i];
  return out;
}

// Sym^k / Wedge^k of a weighted list. For a weight chi of multiplicity m
// occurring j times, the factor is C(m+j-1, j) (symmetric) or C(m, j)
// (alternating): exactly the count of size-j multisets/subsets of the m
// basis vectors carrying chi.
WeightedList power_of(const WeightedList& inner, std::int64_t k, bool alternating, int r) {
  std::vector<std::pair<TorusWeight, Integer>> items(inner.begin(), inner.end());
  WeightedList out;
  std::function<void(std::size_t, std::int64_t, TorusWeight, Integer)> rec =
      [&](std::size_t idx, std::int64_t left, TorusWeight acc, Integer mult) {
        if (left == 0) {
          out[acc] += mult;
          return;
        }
        if (idx == items.size()) return;
        const auto& [w, m] = items[idx];
        for (std::int64_t j = 0; j <= left; ++j) {
          Integer f = alternating ? binomial(m, j) : binomial(m + j - 1, j);
          if (f == 0) break;
          rec(idx + 1, left - j, scaled_sum(acc, w, j), mult * f);
        }
      };
  rec(0, k, zero_weight(r), Integer(1));
  return out;
}

WeightedList weighted_states(const RepExpr& rep) {
  const int r = rep.rank();
  WeightedList out;
  switch (rep.kind()) {
    case RepExpr::Kind::Std:
      for (int i = 1; i <= r; ++i) out[unit_weight(r, i)] = 1;
      break;
    case RepExpr::Kind::Trivial:
      out[zero_weight(r)] = 1;
      break;
    case RepExpr::Kind::DetPow: {
      TorusWeight w{IntVector(r, rep.power())};
      out[w] = 1;
      break;
    }
    case RepExpr::Kind::Dual:
      for (const auto& [w, m] : weighted_states(rep.children()[0])) {
        TorusWeight neg = w;
        for (auto& x : neg.entries) x = -x;
        out[neg] += m;
      }
      break;
    case RepExpr::Kind::Tensor: {
      const auto left = weighted_states(rep.children()[0]);
      const auto right = weighted_states(rep.children()[1]);
      for (const auto& [a, ma] : left) {
        for (const auto& [b, mb] : right) out[scaled_sum(a, b, 1)] += ma * mb;
      }
      break;
    }
    case RepExpr::Kind::Sym:
      out = power_of(weighted_states(rep.children()[0]), rep.power(), false, r);
      break;
    case RepExpr::Kind::Wedge:
      out = power_of(weighted_states(rep.children()[0]), rep.power(), true, r);
      break;
    case RepExpr::Kind::DirectSum:
      for (const auto& child : rep.children()) {
        for (const auto& [w, m] : weighted_states(child)) out[w] += m;
      }
      break;
  }
  return out;
}

}  // namespace

std::int64_t TorusWeight::degree() const {
  return std::accumulate(entries.begin(), entries.end(), std::int64_t{0});
}

TorusWeight unit_weight(int r, int i) {
  TorusWeight w{IntVector(r, 0)};
  w.entries.at(i - 1) = 1;
  return w;
}

TorusWeight zero_weight(int r) { return TorusWeight{IntVector(r, 0)}; }

StateSet StateSet::from_weights(int rank, const std::vector<TorusWeight>& weights) {
  StateSet s(rank);
  for (const auto& w : weights) s.insert(w);
  return s;
}

StateSet::Multiplicity StateSet::total() const {
  Multiplicity t = 0;
  for (const auto& [w, m] : states_) {
    if (__builtin_add_overflow(t, m, &t)) fail(ErrorKind::Overflow, "state count overflow");
  }
  return t;
}

StateSet::Multiplicity StateSet::multiplicity(const TorusWeight& w) const {
  auto it = states_.find(w);
  return it == states_.end() ? 0 : it->second;
}

void StateSet::insert(const TorusWeight& w, Multiplicity mult) {
  if (static_cast<int>(w.rank()) != rank_) {
    fail(ErrorKind::LengthMismatch, "weight of length " + std::to_string(w.rank()) +
                                        " in a state set of rank " + std::to_string(rank_));
  }
  if (mult == 0) return;
  states_[w] += mult;
}

std::vector<TorusWeight> StateSet::weights() const {
  std::vector<TorusWeight> out;
  out.reserve(states_.size());
  for (const auto& [w, m] : states_) out.push_back(w);
  return out;
}

StateSet StateSet::as_set() const {
  StateSet s(rank_);
  for (const auto& [w, m] : states_) s.insert(w, 1);
  return s;
}

RepExpr RepExpr::make(Kind kind, int rank, std::int64_t power, std::vector<RepExpr> children) {
  Integer dim;
  switch (kind) {
    case Kind::Std: dim = rank; break;
    case Kind::Trivial:
    case Kind::DetPow: dim = 1; break;
    case Kind::Dual: dim = children[0].dimension(); break;
    case Kind::Tensor: dim = children[0].dimension() * children[1].dimension(); break;
    case Kind::Sym: dim = binomial(children[0].dimension() + power - 1, power); break;
    case Kind::Wedge: dim = binomial(children[0].dimension(), power); break;
    case Kind::DirectSum:
      dim = 0;
      for (const auto& c : children) dim += c.dimension();
      break;
  }
  if (kind == Kind::Sym && power == 0) dim = 1;
  return RepExpr(std::make_shared<const Node>(Node{kind, rank, power, dim, std::move(children)}));
}

namespace {
void require_rank(int r) {
  if (r < 1) fail(ErrorKind::InvalidArgument, "rank must be positive, got " + std::to_string(r));
}
void require_same_rank(const RepExpr& a, const RepExpr& b) {
  if (a.rank() != b.rank()) {
    fail(ErrorKind::MixedRank,
         "ranks " + std::to_string(a.rank()) + " and " + std::to_string(b.rank()) + " disagree");
  }
}
}  // namespace

RepExpr RepExpr::standard(int r) {
  require_rank(r);
  return make(Kind::Std, r, 0, {});
}

RepExpr RepExpr::trivial(int r) {
  require_rank(r);
  return make(Kind::Trivial, r, 0, {});
}

RepExpr RepExpr::dual(const RepExpr& inner) { return make(Kind::Dual, inner.rank(), 0, {inner}); }

RepExpr RepExpr::tensor(const RepExpr& left, const RepExpr& right) {
  require_same_rank(left, right);
  return make(Kind::Tensor, left.rank(), 0, {left, right});
}

RepExpr RepExpr::sym(std::int64_t k, const RepExpr& inner) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "symmetric power must be non-negative");
  return make(Kind::Sym, inner.rank(), k, {inner});
}

RepExpr RepExpr::wedge(std::int64_t k, const RepExpr& inner) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "exterior power must be non-negative");
  if (Integer(static_cast<long>(k)) > inner.dimension()) {
    fail(ErrorKind::ZeroRepresentation, "wedge power " + std::to_string(k) +
                                            " exceeds dimension " + inner.dimension().get_str());
  }
  return make(Kind::Wedge, inner.rank(), k, {inner});
}

RepExpr RepExpr::direct_sum(const std::vector<RepExpr>& summands) {
  if (summands.empty()) fail(ErrorKind::InvalidArgument, "direct sum needs at least one summand");
  for (const auto& s : summands) require_same_rank(summands.front(), s);
  return make(Kind::DirectSum, summands.front().rank(), 0, summands);
}

RepExpr RepExpr::det_pow(int r, std::int64_t b) {
  require_rank(r);
  return make(Kind::DetPow, r, b, {});
}

bool operator==(const RepExpr& a, const RepExpr& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.rank() == b.rank() && a.power() == b.power() &&
         a.children() == b.children();
}

StateSet enumerate_states(const RepExpr& rep) {
  StateSet out(rep.rank());
  for (const auto& [w, m] : weighted_states(rep)) out.insert(w, checked_mult(m));
  return out;
}

std::set<std::int64_t> state_degrees(const RepExpr& rep) {
  std::set<std::int64_t> degrees;
  for (const auto& [w, m] : weighted_states(rep)) degrees.insert(w.degree());
  return degrees;
}

std::int64_t homogeneity_degree(const RepExpr& rep) {
  const auto degrees = state_degrees(rep);
  if (degrees.size() != 1) {
    std::ostringstream os;
    os << "state degrees {";
    bool first = true;
    for (auto d : degrees) {
      os << (first ? "" : ",") << d;
      first = false;
    }
    os << "}";
    fail(ErrorKind::Inhomogeneous, os.str());
  }
  return *degrees.begin();
}

RepExpr homogenize(const std::vector<RepExpr>& summands, std::int64_t kappa) {
  if (summands.empty()) fail(ErrorKind::InvalidArgument, "no summands to homogenize");
  if (kappa <= 0) fail(ErrorKind::InvalidArgument, "kappa must be positive");
  std::vector<std::int64_t> deg;
  for (const auto& s : summands) {
    require_same_rank(summands.front(), s);
    const auto a = homogeneity_degree(s);
    if (a <= 0) fail(ErrorKind::InvalidArgument, "summand degrees must be positive");
    deg.push_back(a);
  }
  // Solutions in lexicographically descending order of nu.
  std::vector<RepExpr> terms;
  std::vector<std::int64_t> nu(summands.size(), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t idx, std::int64_t left) {
    if (idx == summands.size()) {
      if (left != 0) return;
      std::vector<RepExpr> factors;
      for (std::size_t i = 0; i < nu.size(); ++i) {
        if (nu[i] == 0) continue;
        factors.push_back(nu[i] == 1 ? summands[i] : RepExpr::sym(nu[i], summands[i]));
      }
      RepExpr t = factors.front();
      for (std::size_t i = 1; i < factors.size(); ++i) t = RepExpr::tensor(t, factors[i]);
      terms.push_back(t);
      return;
    }
    for (std::int64_t v = left / deg[idx]; v >= 0; --v) {
      nu[idx] = v;
      rec(idx + 1, left - v * deg[idx]);
    }
    nu[idx] = 0;
  };
  rec(0, kappa);
  if (terms.empty()) {
    fail(ErrorKind::NoSolutions, "no non-negative combination of the degrees equals " +
                                     std::to_string(kappa));
  }
  return terms.size() == 1 ? terms.front() : RepExpr::direct_sum(terms);
}

StateSet envelope_states(int r, std::int64_t a, std::int64_t b, std::int64_t c) {
  require_rank(r);
  if (a < 0 || b < 0 || c < 1) {
    fail(ErrorKind::InvalidArgument, "envelope needs a >= 0, b >= 0, c >= 1");
  }
  StateSet out(r);
  // (C^r)^{(x)a}: compositions of a into r parts, multiplicity a!/prod(chi_i!).
  IntVector part(r, 0);
  Integer fact_a;
  mpz_fac_ui(fact_a.get_mpz_t(), static_cast<unsigned long>(a));
  std::function<void(int, std::int64_t)> rec = [&](int idx, std::int64_t left) {
    if (idx == r - 1) {
      part[idx] = left;
      Integer m = fact_a;
      for (auto x : part) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(x));
        m /= f;
      }
      TorusWeight w{part};
      for (auto& x : w.entries) x -= b;
      out.insert(w, checked_mult(m * c));
      return;
    }
    for (std::int64_t v = left; v >= 0; --v) {
      part[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  rec(0, a);
  return out;
}

bool is_submultiset(const StateSet& part, const StateSet& whole) {
  if (part.rank() != whole.rank()) return false;
  for (const auto& [w, m] : part.map()) {
    if (whole.multiplicity(w) < m) return false;
  }
  return true;
}

bool state_containment(const RepExpr& rep, std::int64_t a, std::int64_t b, std::int64_t c) {
  homogeneity_degree(rep);
  return is_submultiset(enumerate_states(rep), envelope_states(rep.rank(), a, b, c));
}

}  // namespace decostab
