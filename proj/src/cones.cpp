#include "decostab/cones.hpp"

#include <algorithm>
#include <set>

#include "decostab/errors.hpp"
#include "double_description.hpp"

namespace decostab {
namespace {

using detail::IntegerVector;

Integer to_mpz(std::int64_t v) { return Integer(static_cast<long>(v)); }

// Chart coordinates: gamma = sum x_i gamma^(i). A normal n in gamma
// coordinates becomes (<gamma^(i), n>)_i.
IntegerVector chart_normal(int r, const IntVector& n) {
  if (static_cast<int>(n.size()) != r) fail(ErrorKind::LengthMismatch, "halfspace normal of wrong length");
  IntegerVector c(r - 1);
  for (int i = 1; i < r; ++i) {
    Integer s = 0;
    for (int k = 0; k < r; ++k) s += to_mpz(k < i ? i - r : i) * to_mpz(n[k]);
    c[i - 1] = s;
  }
  return c;
}

IntVector from_chart(int r, const IntegerVector& x) {
  std::vector<Integer> gamma(r, Integer(0));
  for (int i = 1; i < r; ++i) {
    for (int k = 0; k < r; ++k) gamma[k] += x[i - 1] * to_mpz(k < i ? i - r : i);
  }
  IntVector out;
  for (const auto& g : primitive(std::move(gamma))) out.push_back(to_int64(g));
  return out;
}

std::vector<IntVector> facet_normals(int r) {
  std::vector<IntVector> out;
  for (int i = 0; i + 1 < r; ++i) {
    IntVector n(r, 0);
    n[i] = 1;
    n[i + 1] = -1;
    out.push_back(std::move(n));
  }
  return out;
}

std::vector<IntegerVector> chart_rows(int r, const std::vector<IntVector>& halfspaces) {
  std::vector<IntegerVector> rows;
  rows.reserve(halfspaces.size());
  for (const auto& n : halfspaces) rows.push_back(chart_normal(r, n));
  return rows;
}

std::vector<IntVector> rays_from_rows(int r, std::vector<IntegerVector> rows) {
  std::vector<IntVector> out;
  for (const auto& x : detail::extreme_rays(std::move(rows), static_cast<std::size_t>(r - 1))) {
    out.push_back(from_chart(r, x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_rank(int r) {
  if (r < 2) fail(ErrorKind::InvalidArgument, "cones need rank r >= 2");
}

IntVector difference(const TorusWeight& a, const TorusWeight& b) {
  IntVector d(a.entries.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.entries[i] - b.entries[i];
  return d;
}

// Cell constraints in chart form, with duplicate and trivial normals removed.
std::vector<IntegerVector> cell_rows(int r, const TorusWeight& chi,
                                     const std::vector<TorusWeight>& others) {
  std::set<IntegerVector> rows;
  for (const auto& n : facet_normals(r)) rows.insert(primitive(chart_normal(r, n)));
  for (const auto& other : others) {
    if (other == chi) continue;
    auto c = primitive(chart_normal(r, difference(chi, other)));
    if (content(c) != 0) rows.insert(std::move(c));
  }
  return {rows.begin(), rows.end()};
}

int generator_dimension(int r, const std::vector<IntVector>& gens) {
  std::vector<IntegerVector> rows;
  for (const auto& g : gens) {
    IntegerVector v;
    for (auto x : g) v.push_back(to_mpz(x));
    rows.push_back(std::move(v));
  }
  return static_cast<int>(detail::matrix_rank(rows, static_cast<std::size_t>(r)));
}

}  // namespace

bool Cone::contains(const IntVector& gamma) const {
  if (static_cast<int>(gamma.size()) != rank) return false;
  Integer sum = 0;
  for (auto g : gamma) sum += to_mpz(g);
  if (sum != 0) return false;
  for (const auto& n : halfspaces) {
    Integer s = 0;
    for (std::size_t i = 0; i < n.size(); ++i) s += to_mpz(n[i]) * to_mpz(gamma[i]);
    if (s > 0) return false;
  }
  return true;
}

bool Cone::contains(const WeightVector& gamma) const {
  if (gamma.rank() != rank) return false;
  for (const auto& n : halfspaces) {
    if (pairing(gamma, TorusWeight{n}) > 0) return false;
  }
  return true;
}

std::vector<IntVector> corner_set(int r) {
  std::vector<IntVector> out;
  for (const auto& g : corner_basis_all(r)) out.push_back(primitive_integral(g.entries()));
  std::sort(out.begin(), out.end());
  return out;
}

Cone weight_cone(int r) {
  require_rank(r);
  Cone c;
  c.rank = r;
  c.halfspaces = facet_normals(r);
  c.generators = corner_set(r);
  c.full_dimensional = true;
  return c;
}

std::vector<IntVector> rays(int r, const std::vector<IntVector>& halfspaces) {
  require_rank(r);
  return rays_from_rows(r, chart_rows(r, halfspaces));
}

Cone cone_from_halfspaces(int r, std::vector<IntVector> halfspaces) {
  Cone c;
  c.rank = r;
  c.generators = rays(r, halfspaces);
  c.halfspaces = std::move(halfspaces);
  c.full_dimensional = generator_dimension(r, c.generators) == r - 1;
  return c;
}

int cone_dimension(const Cone& cone) { return generator_dimension(cone.rank, cone.generators); }

bool double_description_consistent(const Cone& cone) {
  for (const auto& g : cone.generators) {
    if (!cone.contains(g)) return false;
  }
  return rays(cone.rank, cone.halfspaces) == cone.generators;
}

Cone state_cell(const StateSet& a, const TorusWeight& chi) {
  const int r = a.rank();
  require_rank(r);
  if (!a.contains(chi)) fail(ErrorKind::ChiNotInA, "character is not a state of A");
  Cone c;
  c.rank = r;
  c.halfspaces = facet_normals(r);
  std::set<IntVector> extra;
  for (const auto& other : a.weights()) {
    if (other == chi) continue;
    std::vector<Integer> d;
    for (auto x : difference(chi, other)) d.push_back(to_mpz(x));
    d = primitive(std::move(d));
    if (content(d) == 0) continue;
    IntVector n;
    for (const auto& x : d) n.push_back(to_int64(x));
    extra.insert(std::move(n));
  }
  c.halfspaces.insert(c.halfspaces.end(), extra.begin(), extra.end());
  c.generators = rays_from_rows(r, cell_rows(r, chi, a.weights()));
  c.full_dimensional = generator_dimension(r, c.generators) == r - 1;
  return c;
}

StateFan state_fan(const StateSet& a) {
  if (a.empty()) fail(ErrorKind::EmptySupport, "state fan of an empty set");
  StateFan fan;
  fan.a = a.as_set();
  std::set<IntVector> all;
  for (const auto& chi : fan.a.weights()) {
    Cone cell = state_cell(fan.a, chi);
    fan.generators[chi] = cell.generators;
    all.insert(cell.generators.begin(), cell.generators.end());
    fan.cells.emplace(chi, std::move(cell));
  }
  fan.k.assign(all.begin(), all.end());
  const auto corners = corner_set(a.rank());
  fan.critical = std::any_of(fan.k.begin(), fan.k.end(), [&](const IntVector& g) {
    return !std::binary_search(corners.begin(), corners.end(), g);
  });
  return fan;
}

bool is_critical(const StateSet& a) { return state_fan(a).critical; }

std::vector<IntVector> critical_weight_vectors(const StateSet& states, std::uint64_t budget) {
  const int r = states.rank();
  require_rank(r);
  const auto distinct = states.weights();
  const std::size_t n = distinct.size();
  if (n == 0) fail(ErrorKind::EmptySupport, "representation without states");
  if (n >= 64 || (std::uint64_t{1} << n) - 1 > budget) {
    fail(ErrorKind::TooManyStates, std::to_string(n) + " distinct states give 2^" + std::to_string(n) +
                                       " - 1 subsets, over the budget of " + std::to_string(budget));
  }

  // Precompute chart normals of every ordered pair. A cell only depends on
  // the set of its normals, so cells are memoised by that set.
  std::vector<std::vector<IntegerVector>> normal(n, std::vector<IntegerVector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) normal[i][j] = primitive(chart_normal(r, difference(distinct[i], distinct[j])));
    }
  }
  std::vector<IntegerVector> facets;
  for (const auto& f : facet_normals(r)) facets.push_back(primitive(chart_normal(r, f)));

  std::set<std::vector<IntegerVector>> seen;
  const auto corners = corner_set(r);
  std::set<IntVector> result(corners.begin(), corners.end());
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      std::set<IntegerVector> key(facets.begin(), facets.end());
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && (mask >> j & 1) && content(normal[i][j]) != 0) key.insert(normal[i][j]);
      }
      std::vector<IntegerVector> rows(key.begin(), key.end());
      if (!seen.insert(rows).second) continue;
      for (auto& g : rays_from_rows(r, std::move(rows))) result.insert(std::move(g));
    }
  }
  return {result.begin(), result.end()};
}

std::vector<IntVector> critical_weight_vectors(const RepExpr& rep, std::uint64_t budget) {
  return critical_weight_vectors(enumerate_states(rep), budget);
}

}  // namespace decostab

namespace decostab {

IntVector corner_coefficients(const IntVector& ray) {
  const int r = static_cast<int>(ray.size());
  RationalVector alpha;
  for (int i = 0; i + 1 < r; ++i) alpha.push_back(make_rational(ray[i + 1] - ray[i], r));
  for (const auto& a : alpha) {
    if (a < 0) fail(ErrorKind::NotOrdered, "ray lies outside the weight cone");
  }
  return primitive_integral(alpha);
}

}  // namespace decostab
