#include "kneser/transforms.hpp"

#include <algorithm>
#include <set>

#include "kneser/errors.hpp"
#include "kneser/rational.hpp"

namespace kneser {

ETransformStep e_transform(const HybridSet& a, const HybridSet& b, const Point& e) {
  require_same_group(a, b);
  ETransformStep s{e, unite(a, translate(b, e)), intersect(translate(a, Point{a.group().finite().neg(e.f), -e.x}), b),
                   a.measure(), b.measure(), 0, 0};
  s.m_ae = s.ae.measure();
  s.m_be = s.be.measure();
  if (!s.be.empty()) {
    ensure(subset(sumset(s.ae, s.be), sumset(a, b)), "e-transform enlarged the sumset");
    ensure(s.m_ae + s.m_be == s.m_a + s.m_b, "e-transform changed the measure sum");
  }
  return s;
}

Rational overlap_measure(const HybridSet& a, const HybridSet& b, const Point& e) {
  require_same_group(a, b);
  return intersect(translate(a, Point{a.group().finite().neg(e.f), -e.x}), b).measure();
}

namespace {

// Breakpoints of x -> f(g, x) in [0,1), sorted.
std::vector<Rational> breakpoints(const HybridSet& a, const HybridSet& b, ElementId g) {
  const auto& f = a.group().finite();
  std::set<Rational> pts;
  for (std::size_t j = 0; j < b.fiber_count(); ++j) {
    const IntervalUnion* u = a.find(f.add(b.support()[j], g));
    if (!u) continue;
    for (const auto& p : u->arcs())
      for (const auto& q : b.fiber_at(j).arcs())
        for (const Rational& x : {p.left, p.right()})
          for (const Rational& y : {q.left, q.right()}) pts.insert(frac(Rational(x - y)));
  }
  return {pts.begin(), pts.end()};
}

bool g_meets(const HybridSet& a, const HybridSet& b, ElementId g) {
  const auto& f = a.group().finite();
  for (auto y : b.support())
    if (a.find(f.add(y, g))) return true;
  return false;
}

}  // namespace

Rational overlap_integral(const HybridSet& a, const HybridSet& b) {
  require_same_group(a, b);
  const auto& f = a.group().finite();
  Rational total = 0;
  for (ElementId g = 0; g < f.order(); ++g) {
    if (!g_meets(a, b, g)) continue;
    if (!a.group().has_torus()) {
      total += overlap_measure(a, b, Point{g, 0});
      continue;
    }
    auto pts = breakpoints(a, b, g);
    if (pts.empty()) pts.push_back(0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Rational lo = pts[i];
      Rational hi = i + 1 < pts.size() ? pts[i + 1] : pts[0] + 1;
      Rational flo = overlap_measure(a, b, Point{g, lo});
      Rational fhi = overlap_measure(a, b, Point{g, frac(hi)});
      total += (hi - lo) * (flo + fhi) / 2;
    }
  }
  return total / Rational(f.order());
}

std::vector<Point> candidate_shifts(const HybridSet& a, const HybridSet& b) {
  require_same_group(a, b);
  std::vector<Point> out;
  const auto& f = a.group().finite();
  for (ElementId g = 0; g < f.order(); ++g) {
    if (!g_meets(a, b, g)) continue;
    if (!a.group().has_torus()) {
      out.push_back({g, 0});
      continue;
    }
    auto pts = breakpoints(a, b, g);
    if (pts.empty()) pts.push_back(0);
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Rational hi = i + 1 < pts.size() ? pts[i + 1] : pts[0] + 1;
      xs.push_back(pts[i]);
      xs.push_back(frac(Rational((pts[i] + hi) / 2)));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (auto& x : xs) out.push_back({g, x});
  }
  return out;
}

std::optional<ETransformStep> choose_e(const HybridSet& a, const HybridSet& b, EPolicy policy) {
  require_same_group(a, b);
  if (sgn(a.measure()) <= 0 || sgn(b.measure()) <= 0) fail(ErrorKind::PreconditionViolation, "m(A) and m(B) must be positive");
  if (a.measure() + b.measure() > 1) fail(ErrorKind::PreconditionViolation, "m(A)+m(B) exceeds 1");
  if (stabilizer(sumset(a, b)).is_compact_open()) {
    fail(ErrorKind::PreconditionAperiodicity, "A+B is periodic with respect to a compact open subgroup");
  }
  const Rational bound = (1 - b.measure()) * b.measure();
  std::optional<ETransformStep> best;
  for (const auto& e : candidate_shifts(a, b)) {
    Point neg{a.group().finite().neg(e.f), -e.x};
    HybridSet be = intersect(translate(a, neg), b);
    if (be.empty()) continue;
    const Rational& m = be.measure();
    if (sgn(m) == 0) {
      if (policy == EPolicy::PreferZero) return e_transform(a, b, e);
      continue;
    }
    if (m > bound) continue;
    if (!best || m < best->m_be) best = e_transform(a, b, e);
  }
  return best;
}

TransformTranscript transform_sequence(const HybridSet& a, const HybridSet& b, std::size_t max_steps) {
  require_same_group(a, b);
  TransformTranscript t;
  const HybridSet target = sumset(a, b);
  if (target.measure() != a.measure() + b.measure()) fail(ErrorKind::PreconditionViolation, "pair is not sur-critical");
  if (stabilizer(target).is_compact_open()) {
    fail(ErrorKind::PreconditionAperiodicity, "H(A+B) is compact open");
  }
  HybridSet ca = a, cb = b;
  while (true) {
    if (t.steps.size() >= max_steps) {
      t.stop_reason = "max-steps";
      return t;
    }
    std::optional<ETransformStep> step;
    try {
      step = choose_e(ca, cb, EPolicy::PreferPositive);
    } catch (const Error& err) {
      t.stop_reason = to_string(err.kind());
      return t;
    }
    if (!step) {
      t.stop_reason = "no-candidate";
      return t;
    }
    SequenceStep s{*step, false, false};
    s.sum_similar = similar(sumset(step->ae, step->be), target);
    Rational prev = cb.measure();
    s.shrink_bound = sgn(step->m_be) > 0 && step->m_be <= (1 - prev) * prev;
    ca = step->ae;
    cb = step->be;
    bool ok = s.sum_similar && s.shrink_bound;
    std::string reason = !s.sum_similar ? "sum-changed" : "bound-failed";
    t.steps.push_back(std::move(s));
    if (!ok) {
      t.stop_reason = reason;
      return t;
    }
  }
}

}  // namespace kneser
