#include <doctest.h>

#include <random>

#include "kneser/errors.hpp"
#include "kneser/rational.hpp"
#include "kneser/torus.hpp"
#include "oracles.hpp"

using namespace kneser;

namespace {
Rational r(long p, long q = 1) { return make_rational(p, q); }
IntervalUnion arc(long a, long b, long q) { return IntervalUnion::arc(r(a, q), r(b, q)); }
}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("0.8") == r(4, 5));
  CHECK(parse_rational("-1.25/3") == r(-5, 12));
  CHECK(parse_rational("6/4") == r(3, 2));
  CHECK(to_string(r(6, 4)) == "3/2");
  CHECK(to_string(r(4, 2)) == "2");
  CHECK(frac(r(-1, 3)) == r(2, 3));
  CHECK(floor_of(r(-1, 3)) == -1);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("normalization merges touching arcs and wraps through zero") {
  auto u = IntervalUnion::from_arcs({{r(0), r(1, 4)}, {r(1, 4), r(1, 4)}, {r(7, 8), r(1, 4)}});
  REQUIRE(u.arcs().size() == 1);
  CHECK(u.measure() == r(5, 8));
  CHECK(u.contains(r(15, 16)));
  CHECK(u.contains(r(1, 2)));
  CHECK_FALSE(u.contains(r(3, 4)));

  auto full = IntervalUnion::from_arcs({{r(0), r(1, 2)}, {r(1, 2), r(1, 2)}});
  CHECK(full.is_full());
  CHECK(full.measure() == 1);

  auto pt = IntervalUnion::point(r(1, 3));
  CHECK(pt.is_null());
  CHECK(pt.has_degenerate());
  CHECK(pt.nondegenerate().empty());
}

TEST_CASE("minkowski sums of arcs") {
  CHECK(torus::sum(arc(0, 1, 4), arc(0, 1, 3)) == arc(0, 7, 12));
  CHECK(torus::sum(arc(0, 1, 2), arc(0, 1, 2)).is_full());
  CHECK(torus::sum(IntervalUnion::point(r(1, 3)), arc(0, 1, 6)) == IntervalUnion::arc(r(1, 3), r(1, 2)));
  CHECK_THROWS_AS(torus::sum(IntervalUnion(), arc(0, 1, 2)), Error);
}

TEST_CASE("sum, union and intersection agree with the half-grid oracle") {
  std::mt19937 rng(7);
  for (std::uint32_t q : {3u, 4u, 6u}) {
    for (int trial = 0; trial < 60; ++trial) {
      auto u = oracles::random_union(rng, q);
      auto v = oracles::random_union(rng, q);
      auto gu = oracles::GridSet::of(u, q), gv = oracles::GridSet::of(v, q);
      CHECK(oracles::GridSet::of(u, q).measure() == u.measure());
      if (!u.empty() && !v.empty()) {
        auto s = torus::sum(u, v);
        CHECK(oracles::GridSet::of(s, q) == oracles::grid_sum(gu, gv));
        CHECK(s.measure() == oracles::grid_sum(gu, gv).measure());
      }
      auto un = oracles::GridSet::of(torus::unite(u, v), q);
      auto in = oracles::GridSet::of(torus::intersect(u, v), q);
      for (std::size_t k = 0; k < un.cell.size(); ++k) {
        CHECK(un.cell[k] == (gu.cell[k] || gv.cell[k]));
        CHECK(in.cell[k] == (gu.cell[k] && gv.cell[k]));
      }
    }
  }
}

TEST_CASE("translation, negation and scaling") {
  auto u = arc(0, 1, 4);
  CHECK(torus::translate(u, r(7, 8)) == IntervalUnion::from_arcs({{r(7, 8), r(1, 4)}}));
  CHECK(torus::negate(u) == IntervalUnion::arc(r(3, 4), r(1)));
  CHECK(torus::scale(u, 2) == arc(0, 1, 2));
  CHECK(torus::scale(u, 4).is_full());
  // preimage under x -> 2x of [0,1/4] is [0,1/8] u [1/2,5/8]
  auto p = torus::preimage(u, 2, r(0));
  CHECK(p == torus::unite(arc(0, 1, 8), arc(4, 5, 8)));
  CHECK(p.measure() == u.measure());
}

TEST_CASE("erosion is the largest set that fits") {
  auto w = arc(0, 1, 2);
  auto j = arc(0, 1, 4);
  auto e = torus::erode(j, w);
  CHECK(e == arc(0, 1, 4));
  CHECK(torus::subset_ae(torus::sum(e, j), w));
  CHECK_THROWS_AS(torus::erode(IntervalUnion::point(r(0)), w), Error);
  CHECK(torus::erode_strict(IntervalUnion(), w).is_full());
}

TEST_CASE("periods, enclosing arc and interior") {
  auto u = torus::unite(arc(0, 1, 6), arc(3, 4, 6));
  CHECK(torus::periods(u) == TorusPeriodGroup::cyclic(2));
  CHECK(torus::periods(IntervalUnion::full()) == TorusPeriodGroup::whole());
  CHECK(torus::periods(arc(0, 1, 3)) == TorusPeriodGroup::cyclic(1));
  auto wrap = torus::unite(arc(0, 1, 8), arc(7, 8, 8));
  auto enc = torus::enclosing_arc(wrap);
  CHECK(enc.length == r(1, 4));
  CHECK(frac(enc.left) == r(7, 8));
  auto with_point = torus::unite(arc(0, 1, 4), IntervalUnion::point(r(1, 2)));
  CHECK(torus::interior_measure(with_point) == r(1, 4));
  CHECK(torus::similar(with_point, arc(0, 1, 4)));
  CHECK_FALSE(with_point == arc(0, 1, 4));
}
