#pragma once

// Reference implementations that share no code with the library beyond the
// value types: explicit basis lists for states and hyperplane-subset
// enumeration for extreme rays.

#include <map>
#include <set>
#include <vector>

#include "decostab/rep.hpp"

namespace oracle {

using decostab::IntVector;

/// One weight per basis vector, duplicates kept.
std::vector<IntVector> basis_weights(const decostab::RepExpr& rep);

/// Weight -> multiplicity from basis_weights.
std::map<IntVector, std::uint64_t> states(const decostab::RepExpr& rep);

/// Extreme rays of {gamma : sum gamma = 0, <gamma, n> <= 0 for all n} by
/// trying every (r-2)-subset of the normals; primitive, sorted.
std::set<IntVector> rays(int r, const std::vector<IntVector>& normals);

/// <gamma, n> <= 0 for every normal.
bool satisfies(const IntVector& gamma, const std::vector<IntVector>& normals);

/// Clears denominators and divides by the gcd, keeping the direction.
IntVector primitive(std::vector<decostab::Rational> v);

}  // namespace oracle
