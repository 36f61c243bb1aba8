#include "decostab/stability.hpp"

#include <algorithm>

#include "decostab/errors.hpp"
#include "decostab/weights.hpp"

namespace decostab {
namespace {

Rational rat(std::int64_t v) { return make_rational(v); }

void require_delta(const Rational& delta) {
  if (delta <= 0) fail(ErrorKind::NonpositiveDelta, "delta must be positive, got " + to_string(delta));
}

void require_support(const SupportSpec& supp, int r) {
  if (supp.support.empty()) fail(ErrorKind::EmptySupport, "the decoration vanishes identically");
  if (supp.support.rank() != r) {
    fail(ErrorKind::LengthMismatch, "support of rank " + std::to_string(supp.support.rank()) +
                                        " for a bundle of rank " + std::to_string(r));
  }
}

Rational decoration_mu(const FiltrationData& filt, const SupportSpec& supp) {
  require_support(supp, filt.r);
  return mu(supp.support, filtration_weight(filt.r, filt.ranks(), filt.alpha));
}

}  // namespace

void FiltrationData::validate() const {
  if (r < 1) fail(ErrorKind::InvalidArgument, "rank must be positive");
  if (steps.size() != alpha.size()) fail(ErrorKind::LengthMismatch, "steps and alpha differ in length");
  for (std::size_t j = 0; j < steps.size(); ++j) {
    if (steps[j].rank <= 0 || steps[j].rank >= r || (j > 0 && steps[j].rank <= steps[j - 1].rank)) {
      fail(ErrorKind::RankOrder, "filtration ranks must increase strictly inside 1.." + std::to_string(r - 1));
    }
    if (alpha[j] <= 0) fail(ErrorKind::InvalidArgument, "filtration weights must be positive");
  }
}

std::vector<int> FiltrationData::ranks() const {
  std::vector<int> out;
  for (const auto& s : steps) out.push_back(s.rank);
  return out;
}

Verdict Verdict::from_value(Rational value, bool strict) {
  Verdict v;
  v.boundary = value == 0;
  v.passes = value > 0 || (v.boundary && !strict);
  v.value = std::move(value);
  return v;
}

Rational m_value(const FiltrationData& filt) {
  filt.validate();
  Rational m = 0;
  for (std::size_t j = 0; j < filt.steps.size(); ++j) {
    m += filt.alpha[j] * rat(filt.d * filt.steps[j].rank - filt.steps[j].degree * filt.r);
  }
  return m;
}

Verdict check(const FiltrationData& filt, const SupportSpec& supp, const StabilityParams& params) {
  require_delta(params.delta);
  const Rational m = m_value(filt);
  return Verdict::from_value(m + params.delta * decoration_mu(filt, supp), params.strict);
}

Verdict check_subbundle(int sub_rank, std::int64_t sub_degree, const SupportSpec& supp, int r,
                        std::int64_t d, const StabilityParams& params) {
  FiltrationData filt{r, d, {{sub_rank, sub_degree}}, {Rational(1)}};
  if (sub_rank <= 0 || sub_rank >= r) {
    fail(ErrorKind::RankOrder, "subbundle rank must lie in 1.." + std::to_string(r - 1));
  }
  return check(filt, supp, params);
}

Verdict combine_direct_sum(const FiltrationData& filt, const std::vector<SupportSpec>& supports,
                           const RationalVector& sigma, const StabilityParams& params) {
  require_delta(params.delta);
  if (supports.empty() || supports.size() != sigma.size()) {
    fail(ErrorKind::LengthMismatch, "need one sigma per summand support");
  }
  Rational total = 0;
  for (const auto& s : sigma) {
    if (s <= 0) fail(ErrorKind::SigmaNotNormalized, "sigma entries must be positive");
    total += s;
  }
  if (total != 1) fail(ErrorKind::SigmaNotNormalized, "sigma sums to " + to_string(total));
  Rational averaged = 0;
  for (std::size_t j = 0; j < supports.size(); ++j) averaged += sigma[j] * decoration_mu(filt, supports[j]);
  return Verdict::from_value(m_value(filt) + params.delta * averaged, params.strict);
}

Verdict sectional_check(const FiltrationData& filt, std::int64_t chi_en,
                        const std::vector<std::int64_t>& h0, const Rational& mu_value,
                        const StabilityParams& params) {
  require_delta(params.delta);
  filt.validate();
  if (h0.size() != filt.steps.size()) fail(ErrorKind::LengthMismatch, "need one h0 value per step");
  Rational value = 0;
  for (std::size_t j = 0; j < h0.size(); ++j) {
    value += filt.alpha[j] * rat(chi_en * filt.steps[j].rank - h0[j] * filt.r);
  }
  return Verdict::from_value(value + params.delta * mu_value, params.strict);
}

std::optional<Rational> delta_threshold(const FiltrationData& filt, const SupportSpec& supp) {
  const Rational m = m_value(filt);
  const Rational mu_value = decoration_mu(filt, supp);
  if (mu_value == 0) return std::nullopt;
  Rational root = -m / mu_value;
  if (root <= 0) return std::nullopt;
  return root;
}

Rational bound_c1(int r, std::int64_t a, const Rational& delta) {
  if (r < 1) fail(ErrorKind::InvalidArgument, "rank must be positive");
  if (a < 0) fail(ErrorKind::InvalidArgument, "a must be non-negative");
  return delta * rat(a) * rat(r - 1) / rat(r);
}

GiesekerLinearization gieseker_epsilon(std::int64_t d, int r, std::int64_t g, std::int64_t n,
                                       std::int64_t a, const Rational& delta) {
  if (r < 2) fail(ErrorKind::InvalidArgument, "rank must be at least 2");
  require_delta(delta);
  GiesekerLinearization out;
  out.p = Integer(static_cast<long>(d)) + Integer(r) * Integer(static_cast<long>(n)) +
          Integer(r) * (Integer(1) - Integer(static_cast<long>(g)));
  out.epsilon = (Rational(out.p) - rat(a) * delta) / (rat(r) * delta);
  return out;
}

ConditionTemplate condition_template(const IntVector& ray) {
  const int r = static_cast<int>(ray.size());
  ConditionTemplate t;
  t.ray = ray;
  t.coefficients = corner_coefficients(ray);
  t.weight.assign(r, 0);
  for (int i = 1; i < r; ++i) {
    const auto a = t.coefficients[i - 1];
    if (a == 0) continue;
    t.ranks.push_back(i);
    t.alpha.push_back(a);
    t.degree_coefficients.push_back(a * r);
    t.total_degree_coefficient += a * i;
    for (int k = 0; k < r; ++k) t.weight[k] += a * (k < i ? i - r : i);
  }
  return t;
}

SimplifiedConditions simplify(const RepExpr& rep, std::uint64_t budget) {
  SimplifiedConditions out;
  out.r = rep.rank();
  if (out.r < 2) fail(ErrorKind::InvalidArgument, "simplification needs rank r >= 2");
  const auto corners = corner_set(out.r);
  for (int k = 1; k < out.r; ++k) {
    out.subbundle.push_back(condition_template(primitive_integral(corner_basis(out.r, k).entries())));
  }
  for (const auto& ray : critical_weight_vectors(rep, budget)) {
    if (std::binary_search(corners.begin(), corners.end(), ray)) continue;
    out.filtration.push_back(condition_template(ray));
  }
  // Fewer steps first, then by ranks and coefficients.
  std::sort(out.filtration.begin(), out.filtration.end(), [](const auto& a, const auto& b) {
    if (a.ranks.size() != b.ranks.size()) return a.ranks.size() < b.ranks.size();
    if (a.ranks != b.ranks) return a.ranks < b.ranks;
    return a.alpha < b.alpha;
  });
  return out;
}

}  // namespace decostab
