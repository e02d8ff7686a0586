#include "kneser/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "kneser/errors.hpp"

namespace kneser {

const char* to_string(CriticalityKind kind) {
  switch (kind) {
    case CriticalityKind::Subcritical: return "SUBCRITICAL";
    case CriticalityKind::Surcritical: return "SURCRITICAL";
    case CriticalityKind::Supercritical: return "SUPERCRITICAL";
  }
  return "?";
}

const char* to_string(ComplementaryKind kind) {
  switch (kind) {
    case ComplementaryKind::NotComplementary: return "NOT_COMPLEMENTARY";
    case ComplementaryKind::Complementary: return "COMPLEMENTARY";
    case ComplementaryKind::ComplementaryWrt: return "COMPLEMENTARY_WRT";
  }
  return "?";
}

CriticalityVerdict criticality(const HybridSet& a, const HybridSet& b, const HybridSet& sum) {
  require_same_group(a, b);
  CriticalityVerdict v{CriticalityKind::Surcritical, sum.measure(), a.measure() + b.measure()};
  int c = cmp(v.lhs, v.rhs);
  if (c < 0) v.kind = CriticalityKind::Subcritical;
  if (c > 0) v.kind = CriticalityKind::Supercritical;
  return v;
}

CriticalityVerdict criticality(const HybridSet& a, const HybridSet& b) {
  require_same_group(a, b);
  return criticality(a, b, sumset(a, b));
}

SubcriticalData subcritical_data(const HybridSet& a, const HybridSet& b) {
  HybridSet sum = sumset(a, b);
  if (criticality(a, b, sum).kind != CriticalityKind::Subcritical) {
    fail(ErrorKind::PreconditionNotSubcritical, "pair is not subcritical");
  }
  ClosedSubgroupRep h = stabilizer(sum);
  return {std::move(sum), std::move(h)};
}

KneserIdentityReport kneser_identity_check(const HybridSet& a, const HybridSet& b, const SubcriticalData& d) {
  KneserIdentityReport r{d.h, d.sum.measure(), 0, 0, d.h.measure()};
  r.compact_open = d.h.is_compact_open();
  if (!r.compact_open) return r;
  r.sum_periodic = add_subgroup(d.sum, d.h) == d.sum;
  r.m_a_h = add_subgroup(a, d.h).measure();
  r.m_b_h = add_subgroup(b, d.h).measure();
  r.identity = r.m_sum == r.m_a_h + r.m_b_h - r.m_h;
  return r;
}

KneserIdentityReport kneser_identity_check(const HybridSet& a, const HybridSet& b) {
  return kneser_identity_check(a, b, subcritical_data(a, b));
}

bool overspill_check(const HybridSet& a, const HybridSet& b, const SubcriticalData& d) {
  if (!d.h.is_compact_open()) return false;
  Rational rhs = a.measure() + b.measure();
  for (const auto* s : {&a, &b}) {
    for (const auto& piece : coset_decomposition(*s, d.h)) {
      if (piece.piece.measure() + d.sum.measure() < rhs) return false;
    }
  }
  return true;
}

bool overspill_check(const HybridSet& a, const HybridSet& b) {
  return overspill_check(a, b, subcritical_data(a, b));
}

bool hholes_check(const HybridSet& a, const HybridSet& b, const SubcriticalData& d) {
  if (!d.h.is_compact_open()) return false;
  Rational mh = d.h.measure();
  Rational min_a = 2, min_b = 2;
  for (const auto& p : coset_decomposition(a, d.h)) min_a = std::min(min_a, Rational(p.piece.measure()));
  for (const auto& p : coset_decomposition(b, d.h)) min_b = std::min(min_b, Rational(p.piece.measure()));
  return min_a + min_b > mh;
}

bool hholes_check(const HybridSet& a, const HybridSet& b) { return hholes_check(a, b, subcritical_data(a, b)); }

bool difference_set_period_check(const HybridSet& a, const HybridSet& b, const SubcriticalData& d) {
  if (!d.h.is_compact_open()) return false;
  HybridSet diff = difference_set(a, b);
  return add_subgroup(diff, d.h) == diff;
}

bool difference_set_period_check(const HybridSet& a, const HybridSet& b) {
  return difference_set_period_check(a, b, subcritical_data(a, b));
}

bool saturation_identity_check(const HybridSet& a, const HybridSet& b, const SubcriticalData& d) {
  if (!d.h.is_compact_open()) return false;
  const bool torus = a.group().has_torus();
  auto side = [&](const HybridSet& x, const HybridSet& y) {
    HybridSet expected = add_subgroup(x, d.h);
    if (saturate_strict(y, d.sum) != expected) return false;
    if (!torus || y.null_fibers().empty()) {
      if (saturate(x, y, d.sum) != expected) return false;
    }
    return true;
  };
  return side(a, b) && side(b, a);
}

bool saturation_identity_check(const HybridSet& a, const HybridSet& b) {
  return saturation_identity_check(a, b, subcritical_data(a, b));
}

namespace {

struct SideChoice {
  HybridSet s1, s0;
  std::uint32_t coset;
};

// Splits with S0 = S restricted to one coset of K and S1 ~ S1 + K.
std::vector<SideChoice> side_choices(const HybridSet& s, const Subgroup& k) {
  std::vector<SideChoice> out;
  auto pieces = coset_decomposition(s, k);
  std::vector<bool> periodic(pieces.size());
  std::size_t bad = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    periodic[i] = is_periodic_wrt(pieces[i].piece, k);
    if (!periodic[i]) ++bad;
  }
  if (bad > 1) return out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (bad == 1 && periodic[i]) continue;
    const std::uint32_t c = k.coset_of(pieces[i].representative);
    std::vector<ElementId> support;
    std::vector<IntervalUnion> fibers;
    for (std::size_t j = 0; j < s.fiber_count(); ++j) {
      if (k.coset_of(s.support()[j]) == c) continue;
      support.push_back(s.support()[j]);
      if (s.group().has_torus()) fibers.push_back(s.fiber_at(j));
    }
    out.push_back({HybridSet(s.group(), std::move(support), std::move(fibers)), pieces[i].piece, c});
  }
  return out;
}

bool shape_valid(const HybridSet& s, const HybridSet& s1, const HybridSet& s0, const Subgroup& k) {
  if (s0.empty() || !in_single_coset(s0, k)) return false;
  if (unite(s1, s0) != s) return false;
  if (!intersect(s1, s0).empty()) return false;
  if (!s1.empty()) {
    if (!is_periodic_wrt(s1, k)) return false;
    if (!intersect(add_subgroup(s1, k), s0).empty()) return false;
  }
  return true;
}

}  // namespace

bool is_qp_decomposition(const HybridSet& a, const HybridSet& b, const QPDecomposition& d) {
  if (d.a1.empty() && d.b1.empty()) return false;
  if (!shape_valid(a, d.a1, d.a0, d.k) || !shape_valid(b, d.b1, d.b0, d.k)) return false;
  const auto& f = a.group().finite();
  return d.ue_witness == d.k.canonical(f.add(d.a0.support().front(), d.b0.support().front()));
}

bool for_each_qp_decomposition(const HybridSet& a, const HybridSet& b, const Subgroup& k,
                               const std::function<bool(const QPDecomposition&)>& visit) {
  require_same_group(a, b);
  if (!(k.group() == a.group().finite())) fail(ErrorKind::GroupMismatch, "subgroup of a different group");
  if (a.empty() || b.empty()) return false;
  const auto& f = a.group().finite();
  auto ca = side_choices(a, k);
  if (ca.empty()) return false;
  auto cb = side_choices(b, k);
  for (const auto& x : ca) {
    for (const auto& y : cb) {
      if (x.s1.empty() && y.s1.empty()) continue;
      QPDecomposition d{k, x.s1, x.s0, y.s1, y.s0,
                        k.canonical(f.add(x.s0.support().front(), y.s0.support().front()))};
      if (visit(d)) return true;
    }
  }
  return false;
}

std::vector<QPDecomposition> find_qp_decompositions(const HybridSet& a, const HybridSet& b, const Subgroup& k,
                                                    QPSearchOptions options) {
  require_same_group(a, b);
  if (!(k.group() == a.group().finite())) fail(ErrorKind::GroupMismatch, "subgroup of a different group");
  const auto& f = a.group().finite();
  std::vector<QPDecomposition> out;
  if (a.empty() || b.empty()) return out;
  auto ca = side_choices(a, k);
  auto cb = side_choices(b, k);
  for (const auto& x : ca) {
    for (const auto& y : cb) {
      if (x.s1.empty() && y.s1.empty()) continue;
      QPDecomposition d{k, x.s1, x.s0, y.s1, y.s0,
                        k.canonical(f.add(x.s0.support().front(), y.s0.support().front()))};
      if (options.maximal_period) {
        for (const auto& big : a.group().subgroups()) {
          if (big.size() <= k.size()) break;
          bool contains_k = std::all_of(k.members().begin(), k.members().end(),
                                        [&](ElementId e) { return big.contains(e); });
          if (!contains_k) continue;
          QPDecomposition e{big, d.a1, d.a0, d.b1, d.b0,
                            big.canonical(f.add(d.a0.support().front(), d.b0.support().front()))};
          if (is_qp_decomposition(a, b, e)) {
            d = std::move(e);
            break;
          }
        }
      }
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<QPDecomposition> find_qp_decompositions(const HybridSet& a, const HybridSet& b,
                                                    const ClosedSubgroupRep& k, QPSearchOptions options) {
  if (!k.is_compact_open()) fail(ErrorKind::NotCompactOpen, "quasi-periods must be compact open");
  return find_qp_decompositions(a, b, k.finite_projection(), options);
}

std::vector<ElementId> unique_expression_cosets(const HybridSet& a, const HybridSet& b, const Subgroup& k) {
  require_same_group(a, b);
  const auto& f = a.group().finite();
  std::vector<std::uint32_t> ca, cb;
  for (auto e : a.support()) ca.push_back(k.coset_of(e));
  for (auto e : b.support()) cb.push_back(k.coset_of(e));
  for (auto* v : {&ca, &cb}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  std::map<std::uint32_t, int> count;
  for (auto x : ca)
    for (auto y : cb) ++count[k.coset_of(f.add(k.coset_rep(x), k.coset_rep(y)))];
  std::vector<ElementId> out;
  for (const auto& [c, n] : count)
    if (n == 1) out.push_back(k.coset_rep(c));
  return out;
}

std::vector<ElementId> unique_expression_cosets(const HybridSet& a, const HybridSet& b,
                                                const ClosedSubgroupRep& k) {
  if (!k.is_compact_open()) fail(ErrorKind::NotCompactOpen, "unique expression needs a compact open subgroup");
  return unique_expression_cosets(a, b, k.finite_projection());
}

bool is_qp_split(const HybridSet& s, const QPSplit& split) {
  return !split.s1.empty() && shape_valid(s, split.s1, split.s0, split.k);
}

std::vector<QPSplit> find_qp_splits(const HybridSet& s, const Subgroup& k) {
  std::vector<QPSplit> out;
  for (auto& c : side_choices(s, k))
    if (!c.s1.empty()) out.push_back({k, std::move(c.s1), std::move(c.s0)});
  return out;
}

QPSplit compose_splits(const HybridSet& s, const QPSplit& outer, const QPSplit& inner) {
  bool nested = std::all_of(inner.k.members().begin(), inner.k.members().end(),
                            [&](ElementId e) { return outer.k.contains(e); });
  if (!nested) fail(ErrorKind::InvalidArgument, "inner quasi-period must lie in the outer one");
  if (unite(inner.s1, inner.s0) != outer.s0) {
    fail(ErrorKind::InvalidArgument, "inner split does not decompose the outer S0");
  }
  HybridSet s1 = unite(outer.s1, inner.s1);
  ensure(unite(s1, inner.s0) == s, "composed split does not cover S");
  return {inner.k, std::move(s1), inner.s0};
}

RegularityReport essential_regularity(const HybridSet& s) {
  RegularityReport r;
  r.inner_measure = s.measure();
  r.closure_measure = s.measure();
  Rational interior(0);
  for (std::size_t i = 0; i < s.fiber_count(); ++i) interior += torus::interior_measure(s.fiber_at(i));
  r.interior_closure_measure = interior / Rational(s.group().finite_order());
  r.regular = r.inner_measure == r.closure_measure && r.closure_measure == r.interior_closure_measure;
  r.topologically_regular = !s.group().has_torus() || !s.has_degenerate();
  return r;
}

bool pair_essentially_regular(const HybridSet& a, const HybridSet& b) {
  return essential_regularity(a).regular && essential_regularity(b).regular &&
         essential_regularity(sumset(a, b)).regular;
}

ComplementaryReport complementary_kind(const HybridSet& a, const HybridSet& b) {
  require_same_group(a, b);
  ComplementaryReport r;
  if (a.empty() || b.empty()) return r;
  Rational total = a.measure() + b.measure();
  if (sumset(a, b).measure() != total) return r;
  if (total == 1) {
    r.kind = ComplementaryKind::Complementary;
    return r;
  }
  Rational size = total * Rational(a.group().finite_order());
  if (size.get_den() != 1) return r;
  for (const auto& k : a.group().subgroups()) {
    if (Rational(k.size()) != size) continue;
    if (in_single_coset(a, k) && in_single_coset(b, k)) {
      r.kind = ComplementaryKind::ComplementaryWrt;
      r.k = k;
      return r;
    }
  }
  return r;
}

bool reducible_by_null_components(const HybridSet& a, const HybridSet& b) {
  HybridSet a2 = nondegenerate(a), b2 = nondegenerate(b);
  if (a2.empty() || b2.empty()) return false;
  if (a2 == a && b2 == b) return false;
  return sumset(a2, b2).measure() < sumset(a, b).measure();
}

}  // namespace kneser
