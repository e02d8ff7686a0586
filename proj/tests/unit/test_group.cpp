#include <doctest.h>

#include <algorithm>
#include <set>

#include "kneser/errors.hpp"
#include "kneser/group.hpp"
#include "oracles.hpp"

using namespace kneser;

TEST_CASE("mixed radix arithmetic") {
  FiniteAbelianGroup g({4, 2});
  CHECK(g.order() == 8);
  auto x = g.from_coords({3, 1});
  CHECK(g.coords(g.add(x, x)) == std::vector<std::uint32_t>{2, 0});
  CHECK(g.add(x, g.neg(x)) == g.zero());
  CHECK(g.element_order(x) == 4);
  CHECK(g.format(x) == "(3,1)");
  CHECK(g.from_integers({-1, 3}) == x);
  CHECK(g.to_string() == "Z/4 x Z/2");
  CHECK(FiniteAbelianGroup().order() == 1);
}

TEST_CASE("subgroup enumeration matches the closure brute force up to order 32") {
  for (auto moduli : std::vector<std::vector<std::uint32_t>>{{1}, {6}, {12}, {32}, {2, 2}, {2, 4}, {3, 3}, {2, 6}, {2, 2, 2, 2}, {2, 4, 4}, {2, 2, 2, 2, 2}, {3, 9}}) {
    FiniteAbelianGroup g(moduli);
    auto subs = enumerate_subgroups(g);
    auto brute = oracles::brute_subgroups(g);
    std::set<std::vector<ElementId>> a, b(brute.begin(), brute.end());
    for (const auto& s : subs) a.insert(s.members());
    CHECK_MESSAGE(a == b, g.to_string());
    CHECK(a.size() == subs.size());
    for (std::size_t i = 1; i < subs.size(); ++i) CHECK(subs[i - 1].size() >= subs[i].size());
  }
}

TEST_CASE("cosets partition the group") {
  FiniteAbelianGroup g({12});
  auto k = Subgroup::generated_by(g, {4});
  CHECK(k.size() == 3);
  CHECK(k.index() == 4);
  auto cs = k.cosets();
  REQUIRE(cs.size() == 4);
  std::set<ElementId> all;
  for (const auto& c : cs) {
    CHECK(c.members.size() == 3);
    for (ElementId x : c.members) {
      CHECK(k.canonical(x) == c.representative);
      all.insert(x);
    }
  }
  CHECK(all.size() == 12);
  CHECK_THROWS_AS(Subgroup(g, {0, 1}), Error);
}

TEST_CASE("the dual is complete and consists of homomorphisms") {
  for (auto moduli : std::vector<std::vector<std::uint32_t>>{{6}, {2, 2}, {4, 2}}) {
    FiniteAbelianGroup g(moduli);
    for (const auto& k : enumerate_subgroups(g)) {
      auto chars = dual(k);
      CHECK(chars.size() == k.size());
      for (std::size_t i = 0; i < chars.size(); ++i) {
        for (ElementId x : k.members())
          for (ElementId y : k.members())
            CHECK(frac(chars[i].value(x) + chars[i].value(y)) == chars[i].value(g.add(x, y)));
        for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(chars[i] == chars[j]);
      }
    }
  }
}

TEST_CASE("subgroup bound") {
  CHECK_THROWS_AS(enumerate_subgroups(FiniteAbelianGroup({200}), 100), Error);
}
