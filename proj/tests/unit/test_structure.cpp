#include <doctest.h>

#include <random>

#include "kneser/errors.hpp"
#include "kneser/rational.hpp"
#include "kneser/structure.hpp"
#include "oracles.hpp"

using namespace kneser;

namespace {
Rational r(long p, long q = 1) { return make_rational(p, q); }
HybridGroup zt(std::uint32_t n) { return HybridGroup(FiniteAbelianGroup({n}), 1); }
IntervalUnion arc(long a, long b, long q) { return IntervalUnion::arc(r(a, q), r(b, q)); }

// {0}xT u {1}x{0} and {0}xT u {1}x[0,1/2] in Z/4 x T
std::pair<HybridSet, HybridSet> point_pair() {
  auto g = zt(4);
  return {HybridSet::from_fibers(g, {{0, IntervalUnion::full()}, {1, IntervalUnion::point(r(0))}}),
          HybridSet::from_fibers(g, {{0, IntervalUnion::full()}, {1, arc(0, 1, 2)}})};
}
}  // namespace

TEST_CASE("criticality verdicts") {
  auto [a, b] = point_pair();
  auto v = criticality(a, b);
  CHECK(v.kind == CriticalityKind::Surcritical);
  CHECK(v.lhs == r(5, 8));
  HybridGroup z6(FiniteAbelianGroup({6}), 0);
  auto s = HybridSet::from_elements(z6, {0, 3});
  CHECK(criticality(s, s).kind == CriticalityKind::Subcritical);
  auto points = HybridSet::from_fibers(zt(2), {{0, IntervalUnion::point(r(0))}, {1, IntervalUnion::point(r(0))}});
  auto half = HybridSet::from_fibers(zt(2), {{0, arc(0, 1, 2)}});
  CHECK(criticality(points, half).kind == CriticalityKind::Supercritical);
  CHECK_THROWS_AS(subcritical_data(points, half), Error);
}

TEST_CASE("kneser identity on every subcritical pair in Z/6 and Z/2 x Z/4") {
  for (auto moduli : std::vector<std::vector<std::uint32_t>>{{6}, {2, 4}}) {
    FiniteAbelianGroup f(moduli);
    HybridGroup g(f, 0);
    const std::uint32_t n = f.order();
    int subcritical = 0;
    for (std::uint32_t ma = 1; ma < (1u << n); ++ma) {
      for (std::uint32_t mb = ma; mb < (1u << n); ++mb) {
        auto ea = oracles::mask_elements(ma, n), eb = oracles::mask_elements(mb, n);
        auto sum = oracles::brute_sum(f, ea, eb);
        if (sum.size() >= ea.size() + eb.size()) continue;
        ++subcritical;
        auto h = oracles::brute_stabilizer(f, sum);
        auto aset = HybridSet::from_elements(g, ea), bset = HybridSet::from_elements(g, eb);
        auto rep = kneser_identity_check(aset, bset);
        REQUIRE(rep.holds());
        CHECK(rep.h.finite_projection().members() == h);
        auto ah = oracles::brute_sum(f, ea, h), bh = oracles::brute_sum(f, eb, h);
        CHECK(sum.size() == ah.size() + bh.size() - h.size());
        CHECK(overspill_check(aset, bset));
        CHECK(hholes_check(aset, bset));
        CHECK(difference_set_period_check(aset, bset));
        CHECK(saturation_identity_check(aset, bset));
      }
    }
    CHECK(subcritical > 0);
  }
}

TEST_CASE("subcritical identities on random hybrid pairs") {
  std::mt19937 rng(23);
  int seen = 0;
  for (std::uint32_t n : {2u, 4u, 6u}) {
    auto g = zt(n);
    for (int trial = 0; trial < 200 && seen < 60; ++trial) {
      auto a = oracles::random_hybrid(rng, g, 2, 0.6);
      auto b = oracles::random_hybrid(rng, g, 2, 0.6);
      if (a.empty() || b.empty() || criticality(a, b).kind != CriticalityKind::Subcritical) continue;
      ++seen;
      CHECK(kneser_identity_check(a, b).holds());
      CHECK(overspill_check(a, b));
      CHECK(hholes_check(a, b));
      CHECK(difference_set_period_check(a, b));
    }
  }
  CHECK(seen > 10);
}

TEST_CASE("quasi-periodic decompositions") {
  auto [a, b] = point_pair();
  const auto& subs = a.group().subgroups();
  const Subgroup* trivial = nullptr;
  for (const auto& k : subs)
    if (k.size() == 1) trivial = &k;
  REQUIRE(trivial);
  auto ds = find_qp_decompositions(a, b, *trivial);
  REQUIRE_FALSE(ds.empty());
  for (const auto& d : ds) {
    CHECK(is_qp_decomposition(a, b, d));
    CHECK(unite(d.a1, d.a0) == a);
    CHECK(unite(d.b1, d.b0) == b);
    CHECK(in_single_coset(d.a0, d.k));
  }
  std::size_t visited = 0;
  for_each_qp_decomposition(a, b, *trivial, [&](const QPDecomposition& d) {
    CHECK(d.a0 == ds[visited].a0);
    ++visited;
    return false;
  });
  CHECK(visited == ds.size());
  CHECK_FALSE(unique_expression_cosets(a, b, *trivial).empty());
}

TEST_CASE("single set splits") {
  auto g = zt(4);
  auto s = HybridSet::from_fibers(g, {{0, IntervalUnion::full()}, {2, IntervalUnion::full()}, {1, arc(0, 1, 2)}});
  auto k = Subgroup::generated_by(g.finite(), {2});
  auto splits = find_qp_splits(s, k);
  REQUIRE(splits.size() == 1);
  CHECK(splits[0].s0 == HybridSet::from_fibers(g, {{1, arc(0, 1, 2)}}));
  CHECK(is_qp_split(s, splits[0]));
}

TEST_CASE("regularity") {
  auto [a, b] = point_pair();
  auto ra = essential_regularity(a);
  CHECK(ra.regular);
  CHECK_FALSE(ra.topologically_regular);
  CHECK(essential_regularity(b).topologically_regular);
}

TEST_CASE("complementary pairs and null components") {
  auto g = zt(1);
  auto h = HybridSet::from_fibers(g, {{0, arc(0, 1, 2)}});
  CHECK(complementary_kind(h, h).kind == ComplementaryKind::Complementary);
  auto q = HybridSet::from_fibers(g, {{0, arc(0, 1, 4)}});
  CHECK(complementary_kind(q, q).kind == ComplementaryKind::NotComplementary);
  auto [a, b] = point_pair();
  CHECK(reducible_by_null_components(a, b));
  CHECK_FALSE(reducible_by_null_components(h, h));
}
