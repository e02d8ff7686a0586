#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracles {

using kneser::ElementId;
using kneser::Rational;

GridSet GridSet::of(const kneser::IntervalUnion& u, std::uint32_t n) {
  GridSet g{n, std::vector<bool>(2 * n)};
  for (std::uint32_t k = 0; k < 2 * n; ++k) g.cell[k] = u.contains(Rational(k, 2 * n));
  return g;
}

Rational GridSet::measure() const {
  std::uint32_t odd = 0;
  for (std::uint32_t k = 1; k < 2 * n; k += 2) odd += cell[k];
  Rational m(odd, n);
  m.canonicalize();
  return m;
}

GridSet grid_sum(const GridSet& u, const GridSet& v) {
  const std::uint32_t m = 2 * u.n;
  GridSet out{u.n, std::vector<bool>(m)};
  for (std::uint32_t i = 0; i < m; ++i) {
    if (!u.cell[i]) continue;
    for (std::uint32_t j = 0; j < m; ++j)
      if (v.cell[j]) out.cell[(i + j) % m] = true;
  }
  return out;
}

GridHybrid GridHybrid::of(const kneser::HybridSet& s, std::uint32_t n) {
  const auto& f = s.group().finite();
  GridHybrid g;
  g.n = s.group().has_torus() ? n : 1;
  g.fiber.assign(f.order(), GridSet{g.n, std::vector<bool>(2 * g.n)});
  for (ElementId x = 0; x < f.order(); ++x) {
    const auto* fib = s.find(x);
    if (!fib) continue;
    if (s.group().has_torus()) {
      g.fiber[x] = GridSet::of(*fib, n);
    } else {
      g.fiber[x].cell.assign(2, true);
    }
  }
  return g;
}

Rational GridHybrid::measure(std::uint32_t order) const {
  Rational total = 0;
  for (const auto& f : fiber) total += f.measure();
  return total / order;
}

GridHybrid grid_sum(const kneser::FiniteAbelianGroup& f, const GridHybrid& a, const GridHybrid& b) {
  GridHybrid out;
  out.n = a.n;
  out.fiber.assign(f.order(), GridSet{a.n, std::vector<bool>(2 * a.n)});
  auto nonempty = [](const GridSet& g) { return std::find(g.cell.begin(), g.cell.end(), true) != g.cell.end(); };
  for (ElementId x = 0; x < f.order(); ++x) {
    if (!nonempty(a.fiber[x])) continue;
    for (ElementId y = 0; y < f.order(); ++y) {
      if (!nonempty(b.fiber[y])) continue;
      GridSet s = grid_sum(a.fiber[x], b.fiber[y]);
      auto& target = out.fiber[f.add(x, y)];
      for (std::size_t k = 0; k < s.cell.size(); ++k)
        if (s.cell[k]) target.cell[k] = true;
    }
  }
  return out;
}

std::vector<ElementId> mask_elements(std::uint32_t mask, std::uint32_t order) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < order; ++x)
    if (mask >> x & 1) out.push_back(x);
  return out;
}

std::vector<std::vector<ElementId>> brute_subgroups(const kneser::FiniteAbelianGroup& f) {
  // Grow every subgroup by one element at a time and close under addition.
  const std::uint32_t n = f.order();
  auto close = [&](std::uint64_t mask) {
    for (bool grew = true; grew;) {
      grew = false;
      for (ElementId x = 0; x < n; ++x) {
        if (!(mask >> x & 1)) continue;
        for (ElementId y = 0; y < n; ++y) {
          if ((mask >> y & 1) && !(mask >> f.add(x, y) & 1)) {
            mask |= std::uint64_t{1} << f.add(x, y);
            grew = true;
          }
        }
      }
    }
    return mask;
  };
  std::set<std::uint64_t> seen{1};
  std::vector<std::uint64_t> frontier{1};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t m : frontier) {
      for (ElementId x = 0; x < n; ++x) {
        if (m >> x & 1) continue;
        std::uint64_t c = close(m | std::uint64_t{1} << x);
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<ElementId>> out;
  for (std::uint64_t m : seen) {
    std::vector<ElementId> el;
    for (ElementId x = 0; x < n; ++x)
      if (m >> x & 1) el.push_back(x);
    out.push_back(el);
  }
  return out;
}

std::vector<ElementId> brute_sum(const kneser::FiniteAbelianGroup& f, const std::vector<ElementId>& a,
                                 const std::vector<ElementId>& b) {
  std::set<ElementId> s;
  for (ElementId x : a)
    for (ElementId y : b) s.insert(f.add(x, y));
  return {s.begin(), s.end()};
}

std::vector<ElementId> brute_stabilizer(const kneser::FiniteAbelianGroup& f, const std::vector<ElementId>& s) {
  std::set<ElementId> in(s.begin(), s.end());
  std::vector<ElementId> out;
  for (ElementId t = 0; t < f.order(); ++t) {
    bool ok = true;
    for (ElementId x : s) ok = ok && in.count(f.add(x, t));
    if (ok) out.push_back(t);
  }
  return out;
}

kneser::IntervalUnion random_union(std::mt19937& rng, std::uint32_t q, bool points) {
  std::vector<kneser::Arc> arcs;
  std::uniform_int_distribution<int> coin(0, 3);
  for (std::uint32_t k = 0; k < q; ++k) {
    int c = coin(rng);
    if (c == 0) arcs.push_back({Rational(k, q), Rational(1, q)});
    if (c == 1 && points) arcs.push_back({Rational(k, q), Rational(0)});
  }
  for (auto& a : arcs) a.left.canonicalize();
  return kneser::IntervalUnion::from_arcs(std::move(arcs));
}

kneser::HybridSet random_hybrid(std::mt19937& rng, const kneser::HybridGroup& g, std::uint32_t q, double fill,
                                bool points) {
  std::bernoulli_distribution take(fill);
  std::vector<std::pair<ElementId, kneser::IntervalUnion>> fibers;
  for (ElementId x = 0; x < g.finite_order(); ++x) {
    if (!take(rng)) continue;
    if (!g.has_torus()) {
      fibers.emplace_back(x, kneser::IntervalUnion::full());
      continue;
    }
    auto u = random_union(rng, q, points);
    if (!u.empty()) fibers.emplace_back(x, std::move(u));
  }
  return kneser::HybridSet::from_fibers(g, std::move(fibers));
}

}  // namespace oracles
