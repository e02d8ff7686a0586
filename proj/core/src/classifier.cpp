#include "kneser/classifier.hpp"

#include <algorithm>

#include "kneser/errors.hpp"

namespace kneser {

const char* to_string(ERefinement r) { return r == ERefinement::E1 ? "E1" : "E2"; }

const char* to_string(Roman r) {
  switch (r) {
    case Roman::I: return "I";
    case Roman::II: return "II";
    case Roman::III: return "III";
    case Roman::IV: return "IV";
  }
  return "?";
}

std::vector<std::string> ClassificationReport::conclusions() const {
  std::vector<std::string> out;
  if (p) out.push_back("P");
  if (e) out.push_back("E");
  if (k) out.push_back("K");
  if (qp) out.push_back("QP");
  return out;
}

std::optional<PWitness> check_p(const HybridSet& a, const HybridSet& b) {
  require_same_group(a, b);
  for (const auto& k : a.group().subgroups()) {
    if (is_periodic_wrt(a, k) && is_periodic_wrt(b, k)) return PWitness{k};
  }
  return std::nullopt;
}

namespace {

bool proper_subgroup_of(const Subgroup& k, const Subgroup& within) {
  if (k.size() >= within.size()) return false;
  return std::all_of(k.members().begin(), k.members().end(), [&](ElementId e) { return within.contains(e); });
}

void refine(EWitness& w, const HybridSet& a, const HybridSet& b, const HybridSet& sum,
            std::vector<std::string>* diagnostics) {
  w.refinement = ERefinement::E1;
  if (!w.h.is_compact_open()) {
    if (diagnostics) diagnostics->push_back("E: H(A+B) is not compact open");
    w.refinement = ERefinement::E2;
    return;
  }
  if (add_subgroup(sum, w.h) == sum) return;
  w.refinement = ERefinement::E2;
  const Subgroup& hk = w.h.finite_projection();
  auto comp = complementary_kind(a, b);
  if (comp.kind == ComplementaryKind::ComplementaryWrt && comp.k && *comp.k == hk) {
    w.e2_detail = "complementary";
    return;
  }
  for (auto& d : find_qp_decompositions(a, b, hk)) {
    if (d.a0.measure() + d.b0.measure() == w.h.measure()) {
      w.e2_detail = "quasi-periodic";
      w.e2_decomposition = std::move(d);
      return;
    }
  }
  if (diagnostics) diagnostics->push_back("E: E2 structure not located");
}

}  // namespace

std::optional<EWitness> check_e(const HybridSet& a, const HybridSet& b, std::vector<std::string>* diagnostics) {
  require_same_group(a, b);
  HybridSet sum = sumset(a, b);
  const Rational base = a.measure() + b.measure();
  auto valid = [&](const HybridSet& x, const HybridSet& y) {
    return x.measure() + y.measure() > base && sumset(x, y).measure() == sum.measure();
  };
  struct Candidate {
    HybridSet x, y;
    std::string method;
  };
  std::vector<Candidate> candidates;
  auto add_family = [&](HybridSet x, HybridSet y, const std::string& tag) {
    ensure(subset(a, x) && subset(b, y), "saturation lost part of the original set");
    candidates.push_back({x, y, tag});
    candidates.push_back({x, b, tag + "-one-sided"});
    candidates.push_back({a, y, tag + "-one-sided"});
  };
  bool measure_form = true;
  try {
    add_family(saturate(a, b, sum), saturate(b, a, sum), "saturation");
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::DegenerateFiber) throw;
    measure_form = false;
    if (diagnostics) diagnostics->push_back("E: null fiber, using setwise saturation");
  }
  add_family(saturate_strict(b, sum), saturate_strict(a, sum), "strict-saturation");
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto& c = candidates[i];
    if (!valid(c.x, c.y)) continue;
    if (i > 0 && diagnostics) {
      diagnostics->push_back("E: joint saturation guard failed, used " + c.method);
    }
    (void)measure_form;
    EWitness w{std::move(c.x), std::move(c.y), ERefinement::E1, stabilizer(sum), c.method, {}, {}};
    refine(w, a, b, sum, diagnostics);
    return w;
  }
  return std::nullopt;
}

namespace {

std::optional<IntervalUnion> fit_interval(const HybridSet& s, const Character& psi, long long n,
                                          const Rational& length) {
  const auto& f = s.group().finite();
  ElementId base = s.support().front();
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < s.fiber_count(); ++i) {
    Rational shift = psi.value(f.sub(s.support()[i], base));
    IntervalUnion img = torus::translate(torus::scale(s.fiber_at(i), static_cast<std::uint64_t>(n)), shift);
    arcs.insert(arcs.end(), img.arcs().begin(), img.arcs().end());
  }
  IntervalUnion phi = IntervalUnion::from_arcs(std::move(arcs));
  Arc e = torus::enclosing_arc(phi);
  if (e.length > length) return std::nullopt;
  return IntervalUnion::arc(e.left, e.left + length);
}

}  // namespace

std::optional<KWitness> check_k(const HybridSet& a, const HybridSet& b) {
  require_same_group(a, b);
  const auto& g = a.group();
  if (!g.has_torus() || a.empty() || b.empty()) return std::nullopt;
  std::size_t max_n = 1;
  for (const auto* s : {&a, &b})
    for (std::size_t i = 0; i < s->fiber_count(); ++i) max_n = std::max(max_n, s->fiber_at(i).positive_arc_count());
  const Rational order(g.finite_order());
  const auto& subs = g.subgroups();
  for (std::size_t idx = 0; idx < subs.size(); ++idx) {
    const Subgroup& k = subs[idx];
    if (!in_single_coset(a, k) || !in_single_coset(b, k)) continue;
    Rational la = a.measure() * order / Rational(k.size());
    Rational lb = b.measure() * order / Rational(k.size());
    if (la > 1 || lb > 1) continue;
    for (const auto& psi : dual(k)) {
      for (long long n = 1; n <= static_cast<long long>(max_n); ++n) {
        auto i = fit_interval(a, psi, n, la);
        if (!i) continue;
        auto j = fit_interval(b, psi, n, lb);
        if (!j) continue;
        return KWitness{k, psi, n, *i, *j, Point{a.support().front(), 0}, Point{b.support().front(), 0}};
      }
    }
  }
  return std::nullopt;
}

bool qp_four_check(const QPDecomposition& d, const HybridSet& a, const HybridSet& b) {
  HybridSet ak = add_subgroup(a, d.k), bk = add_subgroup(b, d.k);
  Rational mk(d.k.size(), a.group().finite_order());
  mk.canonicalize();
  return sumset(ak, bk).measure() == ak.measure() + bk.measure() - mk;
}

std::optional<QPWitness> check_qp(const HybridSet& a, const HybridSet& b, const Subgroup* within) {
  require_same_group(a, b);
  for (const auto& k : a.group().subgroups()) {
    if (within && !proper_subgroup_of(k, *within)) continue;
    auto ue = unique_expression_cosets(a, b, k);
    if (ue.empty()) continue;
    std::optional<QPWitness> found;
    for_each_qp_decomposition(a, b, k, [&](const QPDecomposition& d) {
      if (!std::binary_search(ue.begin(), ue.end(), d.ue_witness)) return false;
      if (sumset(d.a0, d.b0).measure() != d.a0.measure() + d.b0.measure()) return false;
      found = QPWitness{d, qp_four_check(d, a, b)};
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

ClassificationReport classify(const HybridSet& a, const HybridSet& b) {
  require_same_group(a, b);
  if (sgn(a.measure()) <= 0 || sgn(b.measure()) <= 0) {
    fail(ErrorKind::PreconditionViolation, "classification needs m(A) > 0 and m(B) > 0");
  }
  ClassificationReport r;
  r.sum = sumset(a, b);
  r.m_a = a.measure();
  r.m_b = b.measure();
  r.m_sum = r.sum.measure();
  r.sur_critical = r.m_sum == r.m_a + r.m_b;
  if (!r.sur_critical) fail(ErrorKind::PreconditionViolation, "pair is not sur-critical");

  r.p = check_p(a, b);
  r.e = check_e(a, b, &r.diagnostics);
  r.k = check_k(a, b);
  r.qp = check_qp(a, b);
  if (!r.p && !r.e && !r.k && !r.qp) {
    fail(ErrorKind::ClassificationIncomplete, "no conclusion found for " + a.to_string() + " + " + b.to_string());
  }
  if (r.qp && !r.qp->qp4) r.diagnostics.push_back("QP: (QP.4) identity failed");
  if (r.p || r.e || r.k) {
    r.roman = Roman::I;
    return r;
  }

  QPDecomposition current = r.qp->decomposition;
  while (true) {
    r.cascade.push_back(current.k);
    const HybridSet& a0 = current.a0;
    const HybridSet& b0 = current.b0;
    if (sgn(a0.measure()) == 0 || sgn(b0.measure()) == 0) {
      r.roman = Roman::IV;
      return r;
    }
    if (check_p(a0, b0) || check_e(a0, b0)) {
      r.roman = Roman::I;
      r.diagnostics.push_back("cascade: (A0,B0) satisfies (P) or (E)");
      return r;
    }
    if (check_k(a0, b0)) {
      r.roman = Roman::II;
      return r;
    }
    if (current.k.size() == 1) {
      r.roman = Roman::III;
      return r;
    }
    auto next = check_qp(a0, b0, &current.k);
    if (!next) {
      fail(ErrorKind::ClassificationIncomplete, "cascade stalled below " + current.k.to_string());
    }
    current = std::move(next->decomposition);
  }
}

std::pair<HybridSet, HybridSet> construct_qp_pair(const FiniteAbelianGroup& f, const std::vector<ElementId>& a_prime,
                                                  const std::vector<ElementId>& b_prime, const IntervalUnion& c,
                                                  const IntervalUnion& d,
                                                  std::optional<std::pair<ElementId, ElementId>> seed) {
  auto violation = [](const std::string& clause) { fail(ErrorKind::PreconditionViolation, clause); };
  HybridGroup g(f, 1);
  HybridGroup gf(f, 0);
  HybridSet ap = HybridSet::from_elements(gf, a_prime);
  HybridSet bp = HybridSet::from_elements(gf, b_prime);
  if (ap.empty() || bp.empty()) violation("A' and B' must be nonempty");
  if (ap.fiber_count() + bp.fiber_count() < 3) violation("one of A', B' needs at least two elements");
  HybridSet sp = sumset(ap, bp);
  if (sp.fiber_count() + 1 != ap.fiber_count() + bp.fiber_count()) violation("|A'+B'| = |A'|+|B'|-1 fails");
  if (c.empty() || d.empty()) violation("C and D must be nonempty");
  if (torus::sum(c, d).measure() != c.measure() + d.measure()) violation("m(C+D) = m(C)+m(D) fails");

  auto unique = [&](ElementId x, ElementId y) {
    ElementId t = f.add(x, y);
    int count = 0;
    for (auto u : ap.support())
      for (auto v : bp.support())
        if (f.add(u, v) == t) ++count;
    return count == 1;
  };
  if (seed) {
    if (!ap.find(seed->first) || !bp.find(seed->second)) violation("a' and b' must lie in A' and B'");
    if (!unique(seed->first, seed->second)) violation("a'+b' is not a unique expression element");
  } else {
    for (auto u : ap.support()) {
      for (auto v : bp.support())
        if (unique(u, v)) {
          seed = std::make_pair(u, v);
          break;
        }
      if (seed) break;
    }
    if (!seed) violation("A'+B' has no unique expression element");
  }
  std::vector<std::pair<ElementId, IntervalUnion>> fa, fb;
  for (auto u : ap.support()) fa.emplace_back(u, u == seed->first ? c : IntervalUnion::full());
  for (auto v : bp.support()) fb.emplace_back(v, v == seed->second ? d : IntervalUnion::full());
  HybridSet a = HybridSet::from_fibers(g, std::move(fa));
  HybridSet b = HybridSet::from_fibers(g, std::move(fb));
  Rational mk(1, f.order());
  mk.canonicalize();
  Rational expected = mk * Rational(sp.fiber_count() - 1) + torus::sum(c, d).measure() * mk;
  HybridSet s = sumset(a, b);
  ensure(s.measure() == expected, "lifted sumset measure differs from the construction identity");
  ensure(s.measure() == a.measure() + b.measure(), "lifted pair is not sur-critical");
  return {std::move(a), std::move(b)};
}

}  // namespace kneser
