#pragma once

// Support constructors and closed-form weights for the classical example
// classes: extension pairs, framed modules, Hitchin pairs and conic bundles.
// Each closed form has a matching support realization, so mu() over the
// realization reproduces it.

#include <array>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "decostab/rational.hpp"
#include "decostab/rep.hpp"

namespace decostab {

// Extension pairs (Pluecker embedding of the quotient Grassmannian).

/// i dim ker v - r dim(<w_1..w_i> cap ker v).
Rational profile_extension(int i, int dim_ker, int dim_cap, int r);

/// States e_I of Lambda^s C^r on which the Pluecker form of the quotient
/// v : C^r -> C^s (an s x r integer matrix) is non-zero.
StateSet extension_states(const std::vector<IntVector>& quotient);

// Framed modules.

/// -k if E' lies in the kernel of the framing, r - k otherwise.
Rational profile_framed(int k, bool in_kernel, int r);

/// Kernel case: {e_i : i > k} (generic) or {e_r} (minimal).
/// Otherwise:   {e_1..e_r} (generic) or {e_1} (minimal).
StateSet framed_support(int k, bool in_kernel, int r, bool generic = true);

// Hitchin pairs, rho = End (+) C.

/// r if W^(i) is not invariant, -r if superinvariant with epsilon = 0,
/// 0 otherwise.
Rational profile_hitchin(int i, bool invariant, bool superinvariant, bool eps_zero, int r);

/// Entry (row k, column j) of the endomorphism contributes e_j - e_k; the
/// scalar contributes 0 when non-zero. Entries are 1-based.
StateSet hitchin_states(const std::set<std::pair<int, int>>& nonzero_entries, bool eps_nonzero, int r);

/// Minimal realization of the three cases of profile_hitchin for W^(i).
StateSet hitchin_support(int i, bool invariant, bool superinvariant, bool eps_zero, int r);

/// mu of the full flag adapted to a nilpotent endomorphism with weights
/// (1,...,1); the scalar section adds the trivial state when non-zero.
Rational hitchin_nilpotent_mu(int r, bool sigma_nonzero = false);
StateSet hitchin_nilpotent_support(int r, bool sigma_nonzero = false);

// Conic bundles, rho = S^2.

using IndexPair = std::pair<int, int>;  // (i1, i2), i1 <= i2, 1-based

struct ConicMinimalSupport {
  std::set<IndexPair> minimal;
  int nu = 0;
};

ConicMinimalSupport conic_minimal_support(const std::set<IndexPair>& nonzero, int r);

StateSet conic_states(const std::set<IndexPair>& nonzero, int r);

/// c_tau(E') for the rank-k subbundle spanned by the first k basis vectors.
int conic_c_tau(const std::set<IndexPair>& nonzero, int k);

/// c_tau r - 2k.
Rational profile_conic(int c_tau, int k, int r);

/// Vanishing of tau on the block E_a . E_b (a <= b <= r, E_r = E) of a full
/// flag. Absent blocks are unconstrained and treated generically.
using ConicBlockFlags = std::map<IndexPair, bool>;

enum class ConicCriticalType { I = 1, II, III, IV, V };

std::string_view to_string(ConicCriticalType type);

/// Entries not forced to vanish by the flags. Throws InconsistentFlags if a
/// block declared non-vanishing has no entry left.
std::set<IndexPair> conic_generic_pattern(const ConicBlockFlags& flags, int r);

/// The defining block conditions of each rank-4 critical type.
ConicBlockFlags conic_type_flags(ConicCriticalType type);

struct ConicCriticalTest {
  IndexPair ranks;  // the filtration 0 < E_a < E_b < E tested with weights (1,1)
  Rational mu;
};

struct ConicCriticalClassification {
  ConicCriticalType type;
  std::set<IndexPair> pattern;
  std::vector<ConicCriticalTest> tests;
};

/// Classifies a rank-4 full-flag configuration and evaluates mu for every
/// critical generator gamma^(a) + gamma^(b) of its minimal support.
/// Throws NoCriticalType when the flags match none of the five patterns.
ConicCriticalClassification conic_critical_type(const ConicBlockFlags& flags, int r = 4);

/// mu of 0 < E_a < E_b < E with weights (1,1) for the generic configuration
/// of a critical type.
Rational conic_type_mu(ConicCriticalType type, IndexPair ranks);

}  // namespace decostab
