#include "kneser/validate.hpp"

#include <map>
#include <set>

namespace kneser::validate {

namespace {

std::map<ElementId, IntervalUnion> fiber_map(const HybridSet& s) {
  std::map<ElementId, IntervalUnion> out;
  for (std::size_t i = 0; i < s.fiber_count(); ++i) out.emplace(s.support()[i], s.fiber_at(i));
  return out;
}

Rational naive_measure(const HybridSet& s) {
  Rational total = 0;
  for (std::size_t i = 0; i < s.fiber_count(); ++i) total += s.fiber_at(i).measure();
  Rational n(s.group().finite_order());
  return total / n;
}

bool fiber_contained(const std::map<ElementId, IntervalUnion>& small, const std::map<ElementId, IntervalUnion>& big) {
  for (const auto& [f, u] : small) {
    auto it = big.find(f);
    if (it == big.end() || !torus::subset(u, it->second)) return false;
  }
  return true;
}

}  // namespace

HybridSet naive_sumset(const HybridSet& a, const HybridSet& b) {
  const auto& f = a.group().finite();
  if (!a.group().has_torus()) {
    std::set<ElementId> out;
    for (auto x : a.support())
      for (auto y : b.support()) out.insert(f.add(x, y));
    return HybridSet(a.group(), std::vector<ElementId>(out.begin(), out.end()), {});
  }
  std::map<ElementId, IntervalUnion> acc;
  for (std::size_t i = 0; i < a.fiber_count(); ++i) {
    for (std::size_t j = 0; j < b.fiber_count(); ++j) {
      ElementId t = f.add(a.support()[i], b.support()[j]);
      IntervalUnion piece = a.group().has_torus() ? torus::sum(a.fiber_at(i), b.fiber_at(j)) : IntervalUnion::full();
      auto it = acc.find(t);
      if (it == acc.end()) acc.emplace(t, piece);
      else it->second = torus::unite(it->second, piece);
    }
  }
  std::vector<std::pair<ElementId, IntervalUnion>> fibers(acc.begin(), acc.end());
  return HybridSet::from_fibers(a.group(), std::move(fibers));
}

bool naive_periodic(const HybridSet& s, const Subgroup& k) {
  // S + K ~ S: every translate of the nondegenerate content by K stays inside S,
  // and for d = 1 every fiber on a touched coset is full.
  const auto& f = s.group().finite();
  auto fibers = fiber_map(s);
  for (const auto& [e, u] : fibers) {
    if (s.group().has_torus() && sgn(u.measure()) == 0) continue;
    for (ElementId h : k.members()) {
      auto it = fibers.find(f.add(e, h));
      if (it == fibers.end()) return false;
      if (s.group().has_torus() && it->second.measure() != 1) return false;
    }
  }
  return true;
}

bool p_witness(const HybridSet& a, const HybridSet& b, const PWitness& w) {
  return naive_periodic(a, w.k) && naive_periodic(b, w.k);
}

bool e_witness(const HybridSet& a, const HybridSet& b, const EWitness& w) {
  if (!fiber_contained(fiber_map(a), fiber_map(w.a_ext))) return false;
  if (!fiber_contained(fiber_map(b), fiber_map(w.b_ext))) return false;
  if (naive_measure(w.a_ext) + naive_measure(w.b_ext) <= naive_measure(a) + naive_measure(b)) return false;
  return naive_measure(naive_sumset(w.a_ext, w.b_ext)) == naive_measure(naive_sumset(a, b));
}

bool k_witness(const HybridSet& a, const HybridSet& b, const KWitness& w) {
  if (!a.group().has_torus() || w.n == 0) return false;
  const auto& f = a.group().finite();
  auto inside = [&](const HybridSet& s, const Point& base, const IntervalUnion& arc) {
    if (arc.arcs().size() > 1) return false;
    for (std::size_t i = 0; i < s.fiber_count(); ++i) {
      ElementId k = f.sub(s.support()[i], base.f);
      if (!w.k.contains(k)) return false;
      // x in base.x + {y : psi(k) + n y in arc}
      std::uint64_t n = static_cast<std::uint64_t>(w.n > 0 ? w.n : -w.n);
      IntervalUnion target = w.n > 0 ? arc : torus::negate(arc);
      Rational c = w.n > 0 ? w.psi.value(k) : Rational(-w.psi.value(k));
      IntervalUnion allowed = torus::translate(torus::preimage(target, n, c), base.x);
      if (!torus::subset(s.fiber_at(i), allowed)) return false;
    }
    Rational expected = arc.measure() * Rational(w.k.size()) / Rational(f.order());
    return naive_measure(s) == expected;
  };
  return inside(a, w.a, w.i) && inside(b, w.b, w.j);
}

bool qp_witness(const HybridSet& a, const HybridSet& b, const QPWitness& w) {
  const auto& d = w.decomposition;
  const auto& f = a.group().finite();
  auto pieces_ok = [&](const HybridSet& s, const HybridSet& s1, const HybridSet& s0) {
    auto whole = fiber_map(s), m1 = fiber_map(s1), m0 = fiber_map(s0);
    // partition, fiberwise
    for (const auto& [e, u] : whole) {
      bool in1 = m1.count(e), in0 = m0.count(e);
      if (in1 == in0) return false;
      if ((in1 ? m1[e] : m0[e]) != u) return false;
    }
    if (m1.size() + m0.size() != whole.size()) return false;
    if (m0.empty()) return false;
    // S0 in one coset of K, disjoint from S1 + K
    ElementId r = m0.begin()->first;
    for (const auto& [e, u] : m0) {
      (void)u;
      if (!d.k.contains(f.sub(e, r))) return false;
      for (const auto& [e1, u1] : m1) {
        (void)u1;
        if (d.k.contains(f.sub(e, e1))) return false;
      }
    }
    return m1.empty() || naive_periodic(s1, d.k);
  };
  if (!pieces_ok(a, d.a1, d.a0) || !pieces_ok(b, d.b1, d.b0)) return false;
  if (d.a1.empty() && d.b1.empty()) return false;
  // (QP.2): the coset of a0 + b0 is hit by one pair of K-cosets only
  ElementId a0 = d.a0.support().front(), b0 = d.b0.support().front();
  ElementId target = f.add(a0, b0);
  std::set<std::pair<ElementId, ElementId>> pairs;
  for (ElementId x : a.support())
    for (ElementId y : b.support())
      if (d.k.contains(f.sub(f.add(x, y), target))) pairs.insert({d.k.canonical(x), d.k.canonical(y)});
  if (pairs.size() != 1) return false;
  // (QP.3)
  return naive_measure(naive_sumset(d.a0, d.b0)) == naive_measure(d.a0) + naive_measure(d.b0);
}

bool report(const HybridSet& a, const HybridSet& b, const ClassificationReport& r) {
  if (r.p && !p_witness(a, b, *r.p)) return false;
  if (r.e && !e_witness(a, b, *r.e)) return false;
  if (r.k && !k_witness(a, b, *r.k)) return false;
  if (r.qp && !qp_witness(a, b, *r.qp)) return false;
  return r.p || r.e || r.k || r.qp;
}

}  // namespace kneser::validate
