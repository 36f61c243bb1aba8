#include "doctest.h"

#include <random>

#include "decostab/rep.hpp"
#include "decostab/weights.hpp"
#include "helpers.hpp"

using namespace decostab;
using testing::kind_of;
using testing::q;

namespace {

WeightVector wv(const IntVector& v) { return WeightVector::from_integers(v); }

StateSet states(int r, const std::vector<IntVector>& list) {
  StateSet s(r);
  for (const auto& w : list) s.insert(TorusWeight{w});
  return s;
}

// Random point of C with rational corner coefficients.
RationalVector random_alpha(std::mt19937& rng, int r) {
  std::uniform_int_distribution<int> num(0, 6);
  std::uniform_int_distribution<int> den(1, 4);
  RationalVector alpha;
  for (int i = 1; i < r; ++i) alpha.push_back(make_rational(num(rng), den(rng)));
  return alpha;
}

}  // namespace

TEST_CASE("corner basis") {
  CHECK(corner_basis(3, 1) == wv({-2, 1, 1}));
  CHECK(corner_basis(3, 2) == wv({-1, -1, 2}));
  CHECK(corner_basis(2, 1) == wv({-1, 1}));
  CHECK(corner_basis(4, 2) == wv({-2, -2, 2, 2}));
  CHECK(kind_of([] { corner_basis(3, 3); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { corner_basis(3, 0); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("weight vector invariants") {
  CHECK(kind_of([] { wv({1, 0, -1}); }) == ErrorKind::NotOrdered);
  CHECK(kind_of([] { wv({0, 1, 1}); }) == ErrorKind::NonZeroSum);
  CHECK(WeightVector({q("-1/2"), q("0"), q("1/2")}).rank() == 3);
}

TEST_CASE("decompose") {
  CHECK(decompose(wv({-3, 0, 3})).alpha == RationalVector{1, 1});
  CHECK(decompose(corner_basis(3, 1)).alpha == RationalVector{1, 0});
  CHECK(decompose(WeightVector::zero(3)).alpha == RationalVector{0, 0});
  CHECK(decompose(wv({-1, 0, 1})).alpha == RationalVector{q("1/3"), q("1/3")});
}

TEST_CASE("pairing and mu") {
  CHECK(pairing(wv({-2, 1, 1}), TorusWeight{{1, 0, 1}}) == -1);
  CHECK(pairing(wv({-1, -1, 2}), TorusWeight{{0, 2, 0}}) == -2);
  CHECK(pairing(wv({-1, -1, 2}), TorusWeight{{0, 0, 0}}) == 0);
  CHECK(kind_of([] { pairing(wv({-1, 1}), TorusWeight{{0, 0, 0}}); }) == ErrorKind::LengthMismatch);

  const auto conic = states(3, {{1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
  CHECK(mu(conic, wv({-3, 0, 3})) == 0);
  CHECK(mu_filtration({1, 2}, {1, 1}, conic) == 0);
  CHECK(kind_of([] { mu(StateSet(3), wv({-2, 1, 1})); }) == ErrorKind::EmptySupport);

  CHECK(mu_filtration({1}, {1}, states(2, {{-1, 1}})) == -2);
  CHECK(mu_filtration({1, 2}, {q("1/2"), 3}, states(3, {{0, 0, 0}})) == 0);
  CHECK(kind_of([] { mu_filtration({2, 1}, {1, 1}, states(3, {{0, 0, 0}})); }) == ErrorKind::RankOrder);
}

TEST_CASE("framed module weights") {
  for (int r = 2; r <= 6; ++r) {
    for (int k = 1; k < r; ++k) {
      StateSet kernel(r);
      for (int i = k + 1; i <= r; ++i) kernel.insert(unit_weight(r, i));
      CHECK(mu(kernel, corner_basis(r, k)) == -k);
      for (int i = 1; i <= k; ++i) {
        StateSet hit(r);
        hit.insert(unit_weight(r, i));
        hit.insert(unit_weight(r, r));
        CHECK(mu(hit, corner_basis(r, k)) == r - k);
      }
    }
  }
}

TEST_CASE("recomposition and homogeneity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int r = 2 + trial % 5;
    const auto alpha = random_alpha(rng, r);
    const auto gamma = recompose({alpha}, r);
    CHECK(decompose(gamma).alpha == alpha);
    CHECK(recompose(decompose(gamma), r) == gamma);

    StateSet support(r);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int n = 0; n < 4; ++n) {
      IntVector w(r);
      for (auto& x : w) x = entry(rng);
      support.insert(TorusWeight{w});
    }
    const Rational k = make_rational(std::uniform_int_distribution<int>(1, 9)(rng), 4);
    CHECK(mu(support, gamma.scaled(k)) == k * mu(support, gamma));
  }
}

TEST_CASE("subadditivity") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = 2 + trial % 4;
    const auto g1 = recompose({random_alpha(rng, r)}, r);
    const auto g2 = recompose({random_alpha(rng, r)}, r);
    StateSet support(r);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int n = 0; n < 5; ++n) {
      IntVector w(r);
      for (auto& x : w) x = entry(rng);
      support.insert(TorusWeight{w});
    }
    CHECK(mu(support, g1 + g2) <= mu(support, g1) + mu(support, g2));
  }
}

TEST_CASE("envelope bounds on mu") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const int r = 2 + trial % 4;
    const int a = 1 + trial % 3;
    const auto all = envelope_states(r, a, 0, 1).weights();
    StateSet support(r);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int n = 0; n < 3; ++n) support.insert(all[pick(rng)]);
    const auto alpha = random_alpha(rng, r);
    const auto beta = random_alpha(rng, r);
    Rational sa = 0;
    Rational sb = 0;
    for (const auto& x : alpha) sa += x;
    for (const auto& x : beta) sb += x;
    const auto g1 = recompose({alpha}, r);
    const auto g2 = recompose({beta}, r);
    const Rational bound = sa * a * (r - 1);
    CHECK(abs(mu(support, g1)) <= bound);
    CHECK(mu(support, g1 + g2) >= mu(support, g1) - sb * a * (r - 1));
  }
}

TEST_CASE("filtration weights") {
  CHECK(filtration_weight(3, {1, 2}, {1, 1}) == wv({-3, 0, 3}));
  CHECK(kind_of([] { filtration_weight(3, {1, 3}, {1, 1}); }) == ErrorKind::RankOrder);
  CHECK(kind_of([] { filtration_weight(3, {1}, {0}); }) == ErrorKind::InvalidArgument);
}
