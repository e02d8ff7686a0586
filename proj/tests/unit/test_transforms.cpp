#include <doctest.h>

#include <random>

#include "kneser/errors.hpp"
#include "kneser/rational.hpp"
#include "kneser/structure.hpp"
#include "kneser/transforms.hpp"
#include "oracles.hpp"

using namespace kneser;

namespace {
Rational r(long p, long q = 1) { return make_rational(p, q); }
HybridSet on_circle(long a, long b) {
  return HybridSet::from_fibers(HybridGroup(FiniteAbelianGroup(), 1), {{0, IntervalUnion::arc(r(0), r(a, b))}});
}
}  // namespace

TEST_CASE("first step on a pair of intervals") {
  auto a = on_circle(1, 4), b = on_circle(1, 3);
  auto s = choose_e(a, b, EPolicy::PreferPositive);
  REQUIRE(s);
  CHECK(s->e.x == r(1, 8));
  CHECK(s->be.fiber_at(0) == IntervalUnion::arc(r(0), r(1, 8)));
  CHECK(s->ae.fiber_at(0) == IntervalUnion::arc(r(0), r(11, 24)));
  CHECK(s->m_ae + s->m_be == s->m_a + s->m_b);
}

TEST_CASE("transform sequence halves the second set") {
  auto t = transform_sequence(on_circle(1, 4), on_circle(1, 3), 3);
  REQUIRE(t.steps.size() == 3);
  CHECK(t.stop_reason == "max-steps");
  CHECK(t.steps[1].step.e.x == r(19, 48));
  CHECK(t.steps[2].step.e.x == r(47, 96));
  Rational expect = r(1, 8);
  for (const auto& s : t.steps) {
    CHECK(s.sum_similar);
    CHECK(s.shrink_bound);
    CHECK(s.step.m_be == expect);
    expect /= 2;
  }
}

TEST_CASE("averaging identity on random pairs") {
  std::mt19937 rng(17);
  for (std::uint32_t n : {1u, 2u, 3u}) {
    HybridGroup g(FiniteAbelianGroup({n}), 1);
    for (int trial = 0; trial < 30; ++trial) {
      auto a = oracles::random_hybrid(rng, g, 3, 0.7);
      auto b = oracles::random_hybrid(rng, g, 3, 0.7);
      if (a.empty() || b.empty()) continue;
      CHECK(overlap_integral(a, b) == a.measure() * b.measure());
    }
  }
  HybridGroup z5(FiniteAbelianGroup({5}), 0);
  auto a = HybridSet::from_elements(z5, {0, 1, 3});
  auto b = HybridSet::from_elements(z5, {1, 2});
  CHECK(overlap_integral(a, b) == r(6, 25));
  CHECK(overlap_measure(a, b, Point{1, 0}) == r(1, 5));
}

TEST_CASE("containment and conservation on every shift") {
  std::mt19937 rng(29);
  HybridGroup g(FiniteAbelianGroup({3}), 1);
  for (int trial = 0; trial < 15; ++trial) {
    auto a = oracles::random_hybrid(rng, g, 2, 0.7);
    auto b = oracles::random_hybrid(rng, g, 2, 0.7);
    if (a.empty() || b.empty()) continue;
    auto sum = sumset(a, b);
    for (const auto& e : candidate_shifts(a, b)) {
      auto s = e_transform(a, b, e);
      CHECK(subset(s.ae, unite(a, translate(b, e))));
      if (!s.be.empty()) {
        CHECK(subset(sumset(s.ae, s.be), sum));
        CHECK(s.m_ae + s.m_be == s.m_a + s.m_b);
      }
    }
  }
}

TEST_CASE("choose_e preconditions") {
  HybridGroup z5(FiniteAbelianGroup({5}), 0);
  auto a = HybridSet::from_elements(z5, {0, 1});
  try {
    choose_e(a, a);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionAperiodicity);
  }
  CHECK_THROWS_AS(choose_e(on_circle(3, 4), on_circle(1, 2)), Error);
}
