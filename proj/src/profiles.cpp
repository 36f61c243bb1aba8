#include "decostab/profiles.hpp"

#include <algorithm>
#include <functional>

#include "decostab/cones.hpp"
#include "decostab/errors.hpp"
#include "decostab/weights.hpp"

namespace decostab {
namespace {

void require_index(int i, int r, const char* what) {
  if (r < 2 || i < 1 || i > r - 1) {
    fail(ErrorKind::IndexOutOfRange, std::string(what) + " " + std::to_string(i) + " outside 1.." +
                                         std::to_string(r - 1));
  }
}

bool determinant_nonzero(std::vector<RationalVector> m) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      const Rational f = m[i][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[i][k] -= f * m[col][k];
    }
  }
  return true;
}

bool in_block(const IndexPair& entry, const IndexPair& block) {
  return entry.first <= block.first && entry.second <= block.second;
}

IndexPair ordered(IndexPair p) {
  if (p.first > p.second) std::swap(p.first, p.second);
  return p;
}

bool block_vanishes(const std::set<IndexPair>& pattern, const IndexPair& block) {
  return std::none_of(pattern.begin(), pattern.end(),
                      [&](const IndexPair& e) { return in_block(e, block); });
}

}  // namespace

Rational profile_extension(int i, int dim_ker, int dim_cap, int r) {
  require_index(i, r, "flag index");
  if (dim_ker < 0 || dim_ker > r || dim_cap < 0 || dim_cap > std::min(i, dim_ker)) {
    fail(ErrorKind::InvalidArgument, "need 0 <= dim_cap <= min(i, dim_ker) and dim_ker <= r");
  }
  return make_rational(static_cast<std::int64_t>(i) * dim_ker - static_cast<std::int64_t>(r) * dim_cap);
}

StateSet extension_states(const std::vector<IntVector>& quotient) {
  if (quotient.empty()) fail(ErrorKind::InvalidArgument, "quotient matrix has no rows");
  const int s = static_cast<int>(quotient.size());
  const int r = static_cast<int>(quotient.front().size());
  for (const auto& row : quotient) {
    if (static_cast<int>(row.size()) != r) fail(ErrorKind::LengthMismatch, "ragged quotient matrix");
  }
  if (s > r) fail(ErrorKind::InvalidArgument, "quotient of larger rank than the bundle");
  StateSet out(r);
  std::vector<int> cols;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cols.size()) == s) {
      std::vector<RationalVector> m(s, RationalVector(s));
      for (int a = 0; a < s; ++a) {
        for (int b = 0; b < s; ++b) m[a][b] = make_rational(quotient[a][cols[b]]);
      }
      if (determinant_nonzero(std::move(m))) {
        TorusWeight w = zero_weight(r);
        for (int c : cols) w.entries[c] = 1;
        out.insert(w);
      }
      return;
    }
    for (int c = start; c < r; ++c) {
      cols.push_back(c);
      rec(c + 1);
      cols.pop_back();
    }
  };
  rec(0);
  return out;
}

Rational profile_framed(int k, bool in_kernel, int r) {
  require_index(k, r, "subbundle rank");
  return make_rational(in_kernel ? -k : r - k);
}

StateSet framed_support(int k, bool in_kernel, int r, bool generic) {
  require_index(k, r, "subbundle rank");
  StateSet out(r);
  if (in_kernel) {
    for (int i = generic ? k + 1 : r; i <= r; ++i) out.insert(unit_weight(r, i));
  } else {
    for (int i = 1; i <= (generic ? r : 1); ++i) out.insert(unit_weight(r, i));
  }
  return out;
}

Rational profile_hitchin(int i, bool invariant, bool superinvariant, bool eps_zero, int r) {
  require_index(i, r, "flag index");
  if (superinvariant && !invariant) {
    fail(ErrorKind::InvalidArgument, "a superinvariant subspace is invariant");
  }
  if (!invariant) return make_rational(r);
  if (superinvariant && eps_zero) return make_rational(-r);
  return Rational(0);
}

StateSet hitchin_states(const std::set<std::pair<int, int>>& nonzero_entries, bool eps_nonzero, int r) {
  StateSet out(r);
  for (const auto& [row, col] : nonzero_entries) {
    if (row < 1 || row > r || col < 1 || col > r) fail(ErrorKind::IndexOutOfRange, "matrix entry out of range");
    TorusWeight w = zero_weight(r);
    w.entries[col - 1] += 1;
    w.entries[row - 1] -= 1;
    out.insert(w);
  }
  if (eps_nonzero) out.insert(zero_weight(r));
  return out;
}

StateSet hitchin_support(int i, bool invariant, bool superinvariant, bool eps_zero, int r) {
  profile_hitchin(i, invariant, superinvariant, eps_zero, r);
  std::set<std::pair<int, int>> entries;
  if (!invariant) {
    entries.insert({i + 1, i});  // maps w_i out of W^(i)
  } else if (superinvariant) {
    entries.insert({1, r});  // kills W^(i), image inside W^(i)
  } else {
    entries.insert({1, 1});
  }
  return hitchin_states(entries, !eps_zero, r);
}

StateSet hitchin_nilpotent_support(int r, bool sigma_nonzero) {
  if (r < 2) fail(ErrorKind::InvalidArgument, "rank must be at least 2");
  // phi(E_{j+1}) inside E_j: strictly upper triangular in the adapted basis.
  std::set<std::pair<int, int>> entries;
  for (int row = 1; row <= r; ++row) {
    for (int col = row + 1; col <= r; ++col) entries.insert({row, col});
  }
  return hitchin_states(entries, sigma_nonzero, r);
}

Rational hitchin_nilpotent_mu(int r, bool sigma_nonzero) {
  std::vector<int> ranks;
  for (int i = 1; i < r; ++i) ranks.push_back(i);
  return mu_filtration(ranks, RationalVector(ranks.size(), Rational(1)),
                       hitchin_nilpotent_support(r, sigma_nonzero));
}

ConicMinimalSupport conic_minimal_support(const std::set<IndexPair>& nonzero, int r) {
  if (nonzero.empty()) fail(ErrorKind::EmptySupport, "the quadratic form vanishes");
  ConicMinimalSupport out;
  out.nu = 2 * r + 1;
  for (const auto& p : nonzero) {
    if (p.first < 1 || p.first > p.second || p.second > r) {
      fail(ErrorKind::IndexOutOfRange, "index pair must satisfy 1 <= i1 <= i2 <= r");
    }
    out.nu = std::min(out.nu, p.first + p.second);
    const bool dominated = std::any_of(nonzero.begin(), nonzero.end(), [&](const IndexPair& q) {
      return q != p && q.first <= p.first && q.second <= p.second;
    });
    if (!dominated) out.minimal.insert(p);
  }
  return out;
}

StateSet conic_states(const std::set<IndexPair>& nonzero, int r) {
  StateSet out(r);
  for (const auto& p : nonzero) {
    if (p.first < 1 || p.first > p.second || p.second > r) {
      fail(ErrorKind::IndexOutOfRange, "index pair must satisfy 1 <= i1 <= i2 <= r");
    }
    TorusWeight w = zero_weight(r);
    w.entries[p.first - 1] += 1;
    w.entries[p.second - 1] += 1;
    out.insert(w);
  }
  return out;
}

int conic_c_tau(const std::set<IndexPair>& nonzero, int k) {
  bool on_square = false;
  bool on_product = false;
  for (const auto& [i1, i2] : nonzero) {
    if (i2 <= k) on_square = true;
    if (i1 <= k) on_product = true;
  }
  return on_square ? 2 : (on_product ? 1 : 0);
}

Rational profile_conic(int c_tau, int k, int r) {
  if (c_tau < 0 || c_tau > 2) fail(ErrorKind::InvalidArgument, "c_tau must be 0, 1 or 2");
  require_index(k, r, "subbundle rank");
  return make_rational(static_cast<std::int64_t>(c_tau) * r - 2 * k);
}

std::string_view to_string(ConicCriticalType type) {
  switch (type) {
    case ConicCriticalType::I: return "I";
    case ConicCriticalType::II: return "II";
    case ConicCriticalType::III: return "III";
    case ConicCriticalType::IV: return "IV";
    case ConicCriticalType::V: return "V";
  }
  return "?";
}

std::set<IndexPair> conic_generic_pattern(const ConicBlockFlags& flags, int r) {
  std::set<IndexPair> pattern;
  for (int i = 1; i <= r; ++i) {
    for (int j = i; j <= r; ++j) pattern.insert({i, j});
  }
  for (const auto& [block, vanishes] : flags) {
    const auto b = ordered(block);
    if (b.first < 1 || b.second > r) fail(ErrorKind::IndexOutOfRange, "block index out of range");
    if (!vanishes) continue;
    std::erase_if(pattern, [&](const IndexPair& e) { return in_block(e, b); });
  }
  for (const auto& [block, vanishes] : flags) {
    if (!vanishes && block_vanishes(pattern, ordered(block))) {
      fail(ErrorKind::InconsistentFlags, "block E" + std::to_string(block.first) + ".E" +
                                             std::to_string(block.second) +
                                             " is declared non-zero but lies in a vanishing block");
    }
  }
  if (pattern.empty()) fail(ErrorKind::EmptySupport, "the quadratic form vanishes");
  return pattern;
}

ConicBlockFlags conic_type_flags(ConicCriticalType type) {
  switch (type) {
    case ConicCriticalType::I:
      return {{{1, 2}, true}, {{1, 3}, false}, {{2, 2}, false}};
    case ConicCriticalType::II:
      return {{{1, 3}, true}, {{1, 4}, false}, {{2, 2}, false}};
    case ConicCriticalType::III:
      return {{{1, 3}, true}, {{2, 2}, true}, {{1, 4}, false}, {{2, 3}, false}};
    case ConicCriticalType::IV:
      return {{{2, 3}, true}, {{1, 4}, false}, {{3, 3}, false}};
    case ConicCriticalType::V:
      return {{{1, 4}, true}, {{2, 3}, true}, {{2, 4}, false}, {{3, 3}, false}};
  }
  fail(ErrorKind::InvalidArgument, "unknown conic type");
}

ConicCriticalClassification conic_critical_type(const ConicBlockFlags& flags, int r) {
  if (r != 4) fail(ErrorKind::InvalidArgument, "critical types are classified in rank 4 only");
  const auto pattern = conic_generic_pattern(flags, r);
  std::vector<ConicCriticalType> matches;
  for (auto type : {ConicCriticalType::I, ConicCriticalType::II, ConicCriticalType::III,
                    ConicCriticalType::IV, ConicCriticalType::V}) {
    bool ok = true;
    for (const auto& [block, vanishes] : conic_type_flags(type)) {
      if (block_vanishes(pattern, block) != vanishes) ok = false;
    }
    if (ok) matches.push_back(type);
  }
  if (matches.size() != 1) {
    fail(ErrorKind::NoCriticalType, matches.empty() ? "flags match none of the critical types"
                                                    : "flags match several critical types");
  }
  ConicCriticalClassification out{matches.front(), pattern, {}};
  const StateSet support = conic_states(pattern, r);
  const auto minimal = conic_minimal_support(pattern, r).minimal;
  const auto corners = corner_set(r);
  for (const auto& ray : state_fan(conic_states(minimal, r)).k) {
    if (std::binary_search(corners.begin(), corners.end(), ray)) continue;
    const auto coeff = corner_coefficients(ray);
    std::vector<int> ranks;
    for (int i = 1; i < r; ++i) {
      if (coeff[i - 1] == 0) continue;
      if (coeff[i - 1] != 1) fail(ErrorKind::InvalidArgument, "critical generator is not a sum of corners");
      ranks.push_back(i);
    }
    if (ranks.size() != 2) fail(ErrorKind::InvalidArgument, "critical generator is not a two-step filtration");
    out.tests.push_back({{ranks[0], ranks[1]}, mu(support, corner_basis(r, ranks[0]) + corner_basis(r, ranks[1]))});
  }
  return out;
}

Rational conic_type_mu(ConicCriticalType type, IndexPair ranks) {
  constexpr int r = 4;
  const auto pattern = conic_generic_pattern(conic_type_flags(type), r);
  return mu(conic_states(pattern, r), corner_basis(r, ranks.first) + corner_basis(r, ranks.second));
}

}  // namespace decostab
