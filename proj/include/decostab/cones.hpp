#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "decostab/rep.hpp"
#include "decostab/weights.hpp"

namespace decostab {

inline constexpr std::uint64_t kDefaultSubsetBudget = std::uint64_t{1} << 20;

/// Rational polyhedral cone inside the hyperplane sum(gamma) = 0 of Q^r.
/// Halfspaces n mean <gamma, n> <= 0. Generators are primitive integral
/// extreme rays in canonical (lexicographic) order.
struct Cone {
  int rank = 0;
  std::vector<IntVector> generators;
  std::vector<IntVector> halfspaces;
  /// Dimension r-1, i.e. non-empty interior relative to the weight cone.
  bool full_dimensional = false;

  bool contains(const WeightVector& gamma) const;
  bool contains(const IntVector& gamma) const;
};

/// Dominant weight cone C spanned by the corner weights.
Cone weight_cone(int r);

/// Extreme rays of {gamma : sum gamma = 0, <gamma, n> <= 0 for all n} by
/// exact double description. Throws NotPointed if the cone contains a line.
std::vector<IntVector> rays(int r, const std::vector<IntVector>& halfspaces);

/// Builds a cone from halfspaces, computing its rays.
Cone cone_from_halfspaces(int r, std::vector<IntVector> halfspaces);

/// The generators satisfy every halfspace and coincide with the rays
/// recomputed from the halfspaces.
bool double_description_consistent(const Cone& cone);

/// Dimension of the linear span of the generators.
int cone_dimension(const Cone& cone);

/// Sub-cone of C where chi attains the minimal pairing among the states of A.
Cone state_cell(const StateSet& a, const TorusWeight& chi);

struct StateFan {
  StateSet a;  // deduplicated
  std::map<TorusWeight, Cone> cells;
  /// Minimal integral generators K^chi_A per cell (same as the cell rays).
  std::map<TorusWeight, std::vector<IntVector>> generators;
  /// Union K_A, sorted.
  std::vector<IntVector> k;
  bool critical = false;
};

StateFan state_fan(const StateSet& a);
bool is_critical(const StateSet& a);

/// Integral corner weights gamma^(1..r-1).
std::vector<IntVector> corner_set(int r);

/// The finite test set K_rho: union of K_A over all subsets A of the
/// distinct states of rep. Throws TooManyStates if 2^n - 1 exceeds budget.
std::vector<IntVector> critical_weight_vectors(const RepExpr& rep,
                                               std::uint64_t budget = kDefaultSubsetBudget);
std::vector<IntVector> critical_weight_vectors(const StateSet& states,
                                               std::uint64_t budget = kDefaultSubsetBudget);

}  // namespace decostab

namespace decostab {

/// Coefficients of a ray of C in the corner basis, scaled to the primitive
/// integral vector (e.g. (-1,0,1) in rank 3 gives (1,1)).
IntVector corner_coefficients(const IntVector& ray);

}  // namespace decostab
