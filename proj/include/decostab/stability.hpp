#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "decostab/cones.hpp"
#include "decostab/rational.hpp"
#include "decostab/rep.hpp"

namespace decostab {

struct FiltrationStep {
  int rank = 0;
  std::int64_t degree = 0;

  friend bool operator==(const FiltrationStep&, const FiltrationStep&) = default;
};

/// Numeric weighted filtration 0 < E_1 < ... < E_s < E of a rank r, degree d
/// bundle with positive weights alpha_j.
struct FiltrationData {
  int r = 0;
  std::int64_t d = 0;
  std::vector<FiltrationStep> steps;
  RationalVector alpha;

  /// Throws RankOrder / LengthMismatch / InvalidArgument.
  void validate() const;
  std::vector<int> ranks() const;
};

/// Declared generic state support of the decoration relative to a flag
/// adapted to the filtration.
struct SupportSpec {
  StateSet support;
};

struct StabilityParams {
  Rational delta;
  bool strict = false;
};

struct Verdict {
  Rational value;
  bool passes = false;
  bool boundary = false;

  static Verdict from_value(Rational value, bool strict);
};

Rational m_value(const FiltrationData& filt);

/// M(E., alpha) + delta * mu(E., alpha; tau).
Verdict check(const FiltrationData& filt, const SupportSpec& supp, const StabilityParams& params);

/// One-step filtration E' of the given rank and degree, weight one. The
/// decoration term keeps its delta factor.
Verdict check_subbundle(int sub_rank, std::int64_t sub_degree, const SupportSpec& supp, int r,
                        std::int64_t d, const StabilityParams& params);

/// M + delta * sum_j sigma_j mu_j for a direct sum of homogeneous summands
/// of equal degree; sigma must be positive and sum to one.
Verdict combine_direct_sum(const FiltrationData& filt, const std::vector<SupportSpec>& supports,
                           const RationalVector& sigma, const StabilityParams& params);

/// sum_j alpha_j (chi(E(n)) rk E_j - h0(E_j(n)) r) + delta * mu.
Verdict sectional_check(const FiltrationData& filt, std::int64_t chi_en,
                        const std::vector<std::int64_t>& h0, const Rational& mu,
                        const StabilityParams& params);

/// Unique delta > 0 with M + delta mu = 0, if the signs of M and mu differ.
std::optional<Rational> delta_threshold(const FiltrationData& filt, const SupportSpec& supp);

/// Slope offset C_1 = delta a (r-1) / r.
Rational bound_c1(int r, std::int64_t a, const Rational& delta);

struct GiesekerLinearization {
  Integer p;
  Rational epsilon;
};

/// p = d + r n + r (1 - g) and epsilon = (p - a delta) / (r delta).
GiesekerLinearization gieseker_epsilon(std::int64_t d, int r, std::int64_t g, std::int64_t n,
                                       std::int64_t a, const Rational& delta);

/// One stability test: sum_j alpha_j gamma^(i_j) with the resulting
/// inequality sum_j alpha_j r deg E_{i_j} <= (sum_j alpha_j i_j) deg E + delta mu.
struct ConditionTemplate {
  IntVector ray;           // primitive generator
  IntVector weight;        // sum_j alpha_j gamma^(i_j), integral
  IntVector coefficients;  // all r-1 corner coefficients
  std::vector<int> ranks;
  IntVector alpha;
  IntVector degree_coefficients;   // alpha_j * r per step
  std::int64_t total_degree_coefficient = 0;  // sum_j alpha_j i_j
};

struct SimplifiedConditions {
  int r = 0;
  std::vector<ConditionTemplate> subbundle;
  std::vector<ConditionTemplate> filtration;
};

ConditionTemplate condition_template(const IntVector& ray);

/// Subbundle conditions for every rank plus one filtration condition per
/// critical weight vector outside the corner set.
SimplifiedConditions simplify(const RepExpr& rep, std::uint64_t budget = kDefaultSubsetBudget);

}  // namespace decostab
