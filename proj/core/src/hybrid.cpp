#include "kneser/hybrid.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "kneser/errors.hpp"

namespace kneser {

struct HybridGroup::Impl {
  FiniteAbelianGroup finite;
  int torus_dim = 0;
  mutable std::once_flag once;
  mutable std::vector<Subgroup> subgroups;
  mutable std::vector<std::shared_ptr<const Subgroup>> ptrs;
};

HybridGroup::HybridGroup() : HybridGroup(FiniteAbelianGroup(), 0) {}

HybridGroup::HybridGroup(FiniteAbelianGroup finite, int torus_dim) : impl_(std::make_shared<Impl>()) {
  if (torus_dim != 0 && torus_dim != 1) {
    fail(ErrorKind::InvalidArgument, "torus dimension must be 0 or 1");
  }
  impl_->finite = std::move(finite);
  impl_->torus_dim = torus_dim;
}

const FiniteAbelianGroup& HybridGroup::finite() const { return impl_->finite; }
int HybridGroup::torus_dim() const { return impl_->torus_dim; }

const std::vector<Subgroup>& HybridGroup::subgroups() const {
  std::call_once(impl_->once, [this] {
    impl_->subgroups = enumerate_subgroups(impl_->finite);
    for (const auto& s : impl_->subgroups) impl_->ptrs.push_back(std::make_shared<const Subgroup>(s));
  });
  return impl_->subgroups;
}

std::shared_ptr<const Subgroup> HybridGroup::subgroup_ptr(std::size_t i) const {
  subgroups();
  return impl_->ptrs.at(i);
}

std::string HybridGroup::to_string() const {
  std::string s = finite().to_string();
  if (has_torus()) s = finite().order() == 1 ? "T" : s + " x T";
  return s;
}

bool operator==(const HybridGroup& a, const HybridGroup& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->torus_dim == b.impl_->torus_dim && a.impl_->finite == b.impl_->finite;
}

std::string format_point(const HybridGroup& g, const Point& p) {
  std::string f = g.finite().format(p.f);
  if (!g.has_torus()) return f;
  return "(" + f + ", " + to_string(frac(p.x)) + ")";
}

namespace {

const IntervalUnion& full_fiber() {
  static const IntervalUnion full = IntervalUnion::full();
  return full;
}

std::vector<char>& scratch_mask(std::size_t n) {
  thread_local std::vector<char> mask;
  mask.assign(n, 0);
  return mask;
}

}  // namespace

HybridSet::HybridSet(HybridGroup g) : group_(std::move(g)), measure_(0) {}

HybridSet::HybridSet(HybridGroup g, std::vector<ElementId> support, std::vector<IntervalUnion> fibers)
    : group_(std::move(g)), support_(std::move(support)), fibers_(std::move(fibers)) {
  const unsigned long order = group_.finite_order();
  if (!group_.has_torus()) {
    fibers_.clear();
    measure_ = Rational(static_cast<unsigned long>(support_.size()), order);
    measure_.canonicalize();
    return;
  }
  ensure(fibers_.size() == support_.size(), "fiber list does not match support");
  unsigned long full = 0;
  Rational partial(0);
  for (const auto& u : fibers_) {
    if (u.is_full())
      ++full;
    else
      partial += u.measure();
  }
  measure_ = (partial + Rational(full)) / Rational(order);
}

HybridSet HybridSet::from_fibers(HybridGroup g, std::vector<std::pair<ElementId, IntervalUnion>> fibers) {
  const auto n = g.finite_order();
  for (const auto& [f, u] : fibers) {
    if (f >= n) fail(ErrorKind::InvalidArgument, "fiber index outside the finite group");
    if (!g.has_torus() && !u.empty() && !u.is_full()) {
      fail(ErrorKind::InvalidArgument, "d = 0 fibers must be present (T) or empty");
    }
  }
  std::sort(fibers.begin(), fibers.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<ElementId> support;
  std::vector<IntervalUnion> out;
  for (auto& [f, u] : fibers) {
    if (u.empty()) continue;
    if (!support.empty() && support.back() == f) {
      out.back() = torus::unite(out.back(), u);
    } else {
      support.push_back(f);
      out.push_back(std::move(u));
    }
  }
  return HybridSet(std::move(g), std::move(support), std::move(out));
}

HybridSet HybridSet::from_elements(HybridGroup g, std::vector<ElementId> elements) {
  for (auto e : elements)
    if (e >= g.finite_order()) fail(ErrorKind::InvalidArgument, "element outside the finite group");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<IntervalUnion> fibers;
  if (g.has_torus()) fibers.assign(elements.size(), IntervalUnion::full());
  return HybridSet(std::move(g), std::move(elements), std::move(fibers));
}

HybridSet HybridSet::whole(HybridGroup g) {
  std::vector<ElementId> all(g.finite_order());
  std::iota(all.begin(), all.end(), 0);
  return from_elements(std::move(g), std::move(all));
}

HybridSet HybridSet::from_subgroup(HybridGroup g, const Subgroup& k) {
  if (!(k.group() == g.finite())) fail(ErrorKind::GroupMismatch, "subgroup of a different group");
  return from_elements(std::move(g), k.members());
}

const IntervalUnion& HybridSet::fiber_at(std::size_t i) const {
  if (!group_.has_torus()) return full_fiber();
  return fibers_[i];
}

const IntervalUnion* HybridSet::find(ElementId f) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), f);
  if (it == support_.end() || *it != f) return nullptr;
  return &fiber_at(static_cast<std::size_t>(it - support_.begin()));
}

bool HybridSet::contains(const Point& p) const {
  const IntervalUnion* u = find(p.f);
  if (!u) return false;
  return !group_.has_torus() || u->contains(p.x);
}

bool HybridSet::has_degenerate() const {
  return std::any_of(fibers_.begin(), fibers_.end(), [](const IntervalUnion& u) { return u.has_degenerate(); });
}

std::vector<ElementId> HybridSet::null_fibers() const {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < fibers_.size(); ++i)
    if (fibers_[i].is_null()) out.push_back(support_[i]);
  return out;
}

std::vector<std::pair<ElementId, IntervalUnion>> HybridSet::fibers() const {
  std::vector<std::pair<ElementId, IntervalUnion>> out;
  out.reserve(support_.size());
  for (std::size_t i = 0; i < support_.size(); ++i) out.emplace_back(support_[i], fiber_at(i));
  return out;
}

std::string HybridSet::to_string() const {
  const auto& f = group_.finite();
  std::string s = "{";
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) s += group_.has_torus() ? ", " : ",";
    s += f.format(support_[i]);
    if (group_.has_torus()) s += ": " + fibers_[i].to_string();
  }
  return s + "}";
}

ClosedSubgroupRep::ClosedSubgroupRep(HybridGroup g, TorusPeriodGroup torus,
                                     std::vector<std::pair<ElementId, Rational>> graph)
    : group_(std::move(g)), torus_(torus), graph_(std::move(graph)) {
  if (!group_.has_torus()) torus_ = TorusPeriodGroup::whole();
  if (!torus_.all && torus_.q == 0) fail(ErrorKind::InvalidArgument, "cyclic torus part of order 0");
  const auto& f = group_.finite();
  for (auto& [e, x] : graph_) {
    if (e >= f.order()) fail(ErrorKind::InvalidArgument, "graph element outside the finite group");
    if (torus_.all) {
      x = 0;
    } else {
      Rational q(static_cast<unsigned long>(torus_.q));
      x = frac(x * q) / q;
    }
  }
  std::sort(graph_.begin(), graph_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < graph_.size(); ++i) {
    if (graph_[i].first == graph_[i - 1].first) {
      fail(ErrorKind::InvalidArgument, "graph assigns two torus cosets to one element");
    }
  }
  std::vector<ElementId> proj;
  proj.reserve(graph_.size());
  for (const auto& [e, x] : graph_) proj.push_back(e);
  projection_ = std::make_shared<const Subgroup>(f, std::move(proj));
  for (const auto& [e1, x1] : graph_) {
    for (const auto& [e2, x2] : graph_) {
      if (!contains(Point{f.add(e1, e2), x1 + x2})) {
        fail(ErrorKind::InvalidArgument, "graph is not closed under addition");
      }
    }
  }
}

ClosedSubgroupRep::ClosedSubgroupRep(HybridGroup g, std::shared_ptr<const Subgroup> k)
    : group_(std::move(g)), torus_(TorusPeriodGroup::whole()), projection_(std::move(k)) {
  graph_.reserve(projection_->size());
  for (auto m : projection_->members()) graph_.emplace_back(m, Rational(0));
}

ClosedSubgroupRep ClosedSubgroupRep::compact_open(HybridGroup g, const Subgroup& k) {
  if (!(k.group() == g.finite())) fail(ErrorKind::GroupMismatch, "subgroup of a different group");
  return ClosedSubgroupRep(std::move(g), std::make_shared<const Subgroup>(k));
}

ClosedSubgroupRep ClosedSubgroupRep::whole(HybridGroup g) {
  auto all = Subgroup::whole(g.finite());
  return compact_open(std::move(g), all);
}

bool ClosedSubgroupRep::contains(const Point& p) const {
  auto it = std::lower_bound(graph_.begin(), graph_.end(), p.f,
                             [](const auto& a, ElementId f) { return a.first < f; });
  if (it == graph_.end() || it->first != p.f) return false;
  if (!group_.has_torus()) return true;
  return torus_.contains(p.x - it->second);
}

Rational ClosedSubgroupRep::measure() const {
  if (!torus_.all) return 0;
  Rational r(static_cast<unsigned long>(graph_.size()), group_.finite_order());
  r.canonicalize();
  return r;
}

std::string ClosedSubgroupRep::to_string() const {
  if (torus_.all) {
    std::string k = projection_->to_string();
    if (!group_.has_torus()) return k;
    if (group_.finite_order() == 1) return "T";
    return k + " x T";
  }
  const auto& f = group_.finite();
  std::string s = "{";
  for (std::size_t i = 0; i < graph_.size(); ++i) {
    if (i) s += ", ";
    s += "(" + f.format(graph_[i].first) + ", " + kneser::to_string(graph_[i].second) + ")";
  }
  return s + "} + {0} x " + torus_.to_string();
}

void require_same_group(const HybridSet& a, const HybridSet& b) {
  if (a.group() != b.group()) {
    fail(ErrorKind::GroupMismatch, a.group().to_string() + " vs " + b.group().to_string());
  }
}

HybridSet sumset(const HybridSet& a, const HybridSet& b) {
  require_same_group(a, b);
  if (a.empty() || b.empty()) fail(ErrorKind::EmptyOperand, "sumset with an empty operand");
  const auto& g = a.group();
  const auto& f = g.finite();
  const std::uint32_t n = f.order();
  if (!g.has_torus()) {
    auto& mask = scratch_mask(n);
    std::size_t count = 0;
    for (auto x : a.support())
      for (auto y : b.support()) {
        auto s = f.add(x, y);
        if (!mask[s]) {
          mask[s] = 1;
          ++count;
        }
      }
    std::vector<ElementId> support;
    support.reserve(count);
    for (ElementId e = 0; e < n; ++e)
      if (mask[e]) support.push_back(e);
    return HybridSet(g, std::move(support), {});
  }
  std::vector<std::vector<Arc>> acc(n);
  auto& state = scratch_mask(n);  // 0 untouched, 1 partial, 2 full
  for (std::size_t i = 0; i < a.fiber_count(); ++i) {
    const auto& u = a.fiber_at(i);
    for (std::size_t j = 0; j < b.fiber_count(); ++j) {
      ElementId s = f.add(a.support()[i], b.support()[j]);
      if (state[s] == 2) continue;
      const auto& v = b.fiber_at(j);
      if (u.is_full() || v.is_full()) {
        state[s] = 2;
        acc[s].clear();
        continue;
      }
      state[s] = 1;
      for (const auto& x : u.arcs())
        for (const auto& y : v.arcs()) acc[s].push_back({x.left + y.left, x.length + y.length});
    }
  }
  std::vector<ElementId> support;
  std::vector<IntervalUnion> fibers;
  for (ElementId e = 0; e < n; ++e) {
    if (!state[e]) continue;
    support.push_back(e);
    fibers.push_back(state[e] == 2 ? IntervalUnion::full() : IntervalUnion::from_arcs(std::move(acc[e])));
  }
  return HybridSet(g, std::move(support), std::move(fibers));
}

HybridSet nondegenerate(const HybridSet& s) {
  if (!s.group().has_torus() || !s.has_degenerate()) return s;
  std::vector<ElementId> support;
  std::vector<IntervalUnion> fibers;
  for (std::size_t i = 0; i < s.fiber_count(); ++i) {
    const auto& u = s.fiber_at(i);
    if (sgn(u.measure()) == 0) continue;
    support.push_back(s.support()[i]);
    fibers.push_back(u.nondegenerate());
  }
  return HybridSet(s.group(), std::move(support), std::move(fibers));
}

ClosedSubgroupRep stabilizer(const HybridSet& s) {
  const auto& g = s.group();
  const auto& f = g.finite();
  HybridSet nd = nondegenerate(s);
  if (nd.empty()) return ClosedSubgroupRep::whole(g);
  const auto& supp = nd.support();
  const std::uint32_t n = f.order();

  auto& mask = scratch_mask(n);
  for (auto e : supp) mask[e] = 1;
  std::vector<ElementId> shifts;
  for (auto e : supp) {
    ElementId t = f.sub(e, supp.front());
    bool ok = true;
    for (auto x : supp)
      if (!mask[f.add(x, t)]) {
        ok = false;
        break;
      }
    if (ok) shifts.push_back(t);
  }
  std::sort(shifts.begin(), shifts.end());

  bool all_full = true;
  std::uint64_t q = 0;
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < nd.fiber_count(); ++i) {
    const auto& u = nd.fiber_at(i);
    if (u.is_full()) continue;
    if (all_full) pivot = i;
    all_full = false;
    q = std::gcd(q, torus::periods(u).q);
  }
  if (!g.has_torus() || all_full) {
    return ClosedSubgroupRep::compact_open(g, Subgroup::from_closed(f, shifts));
  }

  const ElementId f0 = supp[pivot];
  const IntervalUnion& u0 = nd.fiber_at(pivot);
  std::vector<std::pair<ElementId, Rational>> graph;
  for (auto t : shifts) {
    const IntervalUnion* target = nd.find(f.add(f0, t));
    if (target->is_full()) continue;
    for (const auto& arc : target->arcs()) {
      Rational x = frac(arc.left - u0.arcs().front().left);
      bool ok = true;
      for (std::size_t i = 0; i < nd.fiber_count() && ok; ++i) {
        const auto& u = nd.fiber_at(i);
        if (u.is_full()) continue;
        const IntervalUnion* w = nd.find(f.add(supp[i], t));
        ok = !w->is_full() && torus::translate(u, x) == *w;
      }
      if (ok) {
        graph.emplace_back(t, x);
        break;
      }
    }
  }
  return ClosedSubgroupRep(g, TorusPeriodGroup::cyclic(q), std::move(graph));
}

HybridSet saturate(const HybridSet& a, const HybridSet& b, const HybridSet& target) {
  require_same_group(a, b);
  require_same_group(b, target);
  if (b.empty()) fail(ErrorKind::EmptyOperand, "saturation by an empty set");
  const auto& g = b.group();
  const auto& f = g.finite();
  const std::uint32_t n = f.order();
  if (!g.has_torus()) return saturate_strict(b, target);
  if (!b.null_fibers().empty()) {
    fail(ErrorKind::DegenerateFiber, "saturation by a set with a null fiber at " + f.format(b.null_fibers().front()));
  }
  std::vector<ElementId> support;
  std::vector<IntervalUnion> fibers;
  for (ElementId z = 0; z < n; ++z) {
    IntervalUnion r = IntervalUnion::full();
    for (std::size_t j = 0; j < b.fiber_count() && !r.empty(); ++j) {
      const IntervalUnion* w = target.find(f.add(z, b.support()[j]));
      if (!w) {
        r = IntervalUnion();
        break;
      }
      r = torus::intersect(r, torus::erode(b.fiber_at(j), *w));
    }
    if (!r.empty()) {
      support.push_back(z);
      fibers.push_back(std::move(r));
    }
  }
  return HybridSet(g, std::move(support), std::move(fibers));
}

HybridSet saturate_strict(const HybridSet& b, const HybridSet& target) {
  require_same_group(b, target);
  if (b.empty()) fail(ErrorKind::EmptyOperand, "saturation by an empty set");
  const auto& g = b.group();
  const auto& f = g.finite();
  const std::uint32_t n = f.order();
  if (!g.has_torus()) {
    auto& mask = scratch_mask(n);
    for (auto e : target.support()) mask[e] = 1;
    std::vector<ElementId> support;
    for (ElementId z = 0; z < n; ++z) {
      bool ok = true;
      for (auto y : b.support())
        if (!mask[f.add(z, y)]) {
          ok = false;
          break;
        }
      if (ok) support.push_back(z);
    }
    return HybridSet(g, std::move(support), {});
  }
  std::vector<ElementId> support;
  std::vector<IntervalUnion> fibers;
  for (ElementId z = 0; z < n; ++z) {
    IntervalUnion r = IntervalUnion::full();
    for (std::size_t j = 0; j < b.fiber_count() && !r.empty(); ++j) {
      const IntervalUnion* w = target.find(f.add(z, b.support()[j]));
      if (!w) {
        r = IntervalUnion();
        break;
      }
      r = torus::intersect(r, torus::erode_strict(b.fiber_at(j), *w));
    }
    if (!r.empty()) {
      support.push_back(z);
      fibers.push_back(std::move(r));
    }
  }
  return HybridSet(g, std::move(support), std::move(fibers));
}

std::vector<CosetPiece> coset_decomposition(const HybridSet& s, const Subgroup& k) {
  if (!(k.group() == s.group().finite())) fail(ErrorKind::GroupMismatch, "subgroup of a different group");
  std::vector<std::pair<std::uint32_t, std::size_t>> order;
  order.reserve(s.fiber_count());
  for (std::size_t i = 0; i < s.fiber_count(); ++i) order.emplace_back(k.coset_of(s.support()[i]), i);
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<CosetPiece> out;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    std::vector<ElementId> support;
    std::vector<IntervalUnion> fibers;
    while (j < order.size() && order[j].first == order[i].first) {
      support.push_back(s.support()[order[j].second]);
      if (s.group().has_torus()) fibers.push_back(s.fiber_at(order[j].second));
      ++j;
    }
    out.push_back({k.coset_rep(order[i].first), HybridSet(s.group(), std::move(support), std::move(fibers))});
    i = j;
  }
  return out;
}

std::vector<CosetPiece> coset_decomposition(const HybridSet& s, const ClosedSubgroupRep& k) {
  if (!k.is_compact_open()) fail(ErrorKind::NotCompactOpen, "coset decomposition needs a compact open subgroup");
  return coset_decomposition(s, k.finite_projection());
}

bool similar(const HybridSet& s, const HybridSet& t) {
  require_same_group(s, t);
  if (s.measure() != t.measure()) return false;
  if (!s.group().has_torus()) return s.support() == t.support();
  return nondegenerate(s) == nondegenerate(t);
}

bool subset(const HybridSet& s, const HybridSet& t) {
  require_same_group(s, t);
  for (std::size_t i = 0; i < s.fiber_count(); ++i) {
    const IntervalUnion* w = t.find(s.support()[i]);
    if (!w) return false;
    if (s.group().has_torus() && !torus::subset(s.fiber_at(i), *w)) return false;
  }
  return true;
}

bool subset_ae(const HybridSet& s, const HybridSet& t) {
  require_same_group(s, t);
  for (std::size_t i = 0; i < s.fiber_count(); ++i) {
    const auto& u = s.fiber_at(i);
    if (s.group().has_torus() && sgn(u.measure()) == 0) continue;
    const IntervalUnion* w = t.find(s.support()[i]);
    if (!w) return false;
    if (s.group().has_torus() && !torus::subset_ae(u, *w)) return false;
  }
  return true;
}

HybridSet translate(const HybridSet& s, const Point& p) {
  const auto& f = s.group().finite();
  if (p.f >= f.order()) fail(ErrorKind::InvalidArgument, "translation by an element outside the group");
  std::vector<std::pair<ElementId, IntervalUnion>> fibers;
  fibers.reserve(s.fiber_count());
  for (std::size_t i = 0; i < s.fiber_count(); ++i) {
    fibers.emplace_back(f.add(s.support()[i], p.f),
                        s.group().has_torus() ? torus::translate(s.fiber_at(i), p.x) : s.fiber_at(i));
  }
  return HybridSet::from_fibers(s.group(), std::move(fibers));
}

HybridSet negate(const HybridSet& s) {
  const auto& f = s.group().finite();
  std::vector<std::pair<ElementId, IntervalUnion>> fibers;
  fibers.reserve(s.fiber_count());
  for (std::size_t i = 0; i < s.fiber_count(); ++i) {
    fibers.emplace_back(f.neg(s.support()[i]),
                        s.group().has_torus() ? torus::negate(s.fiber_at(i)) : s.fiber_at(i));
  }
  return HybridSet::from_fibers(s.group(), std::move(fibers));
}

HybridSet difference_set(const HybridSet& a, const HybridSet& b) { return sumset(a, negate(b)); }

HybridSet unite(const HybridSet& s, const HybridSet& t) {
  require_same_group(s, t);
  if (t.empty()) return s;
  if (s.empty()) return t;
  const bool torus = s.group().has_torus();
  std::vector<ElementId> support;
  std::vector<IntervalUnion> fibers;
  support.reserve(s.fiber_count() + t.fiber_count());
  std::size_t i = 0, j = 0;
  while (i < s.fiber_count() || j < t.fiber_count()) {
    ElementId x = i < s.fiber_count() ? s.support()[i] : UINT32_MAX;
    ElementId y = j < t.fiber_count() ? t.support()[j] : UINT32_MAX;
    if (x < y) {
      support.push_back(x);
      if (torus) fibers.push_back(s.fiber_at(i));
      ++i;
    } else if (y < x) {
      support.push_back(y);
      if (torus) fibers.push_back(t.fiber_at(j));
      ++j;
    } else {
      support.push_back(x);
      if (torus) fibers.push_back(torus::unite(s.fiber_at(i), t.fiber_at(j)));
      ++i;
      ++j;
    }
  }
  return HybridSet(s.group(), std::move(support), std::move(fibers));
}

HybridSet intersect(const HybridSet& s, const HybridSet& t) {
  require_same_group(s, t);
  std::vector<ElementId> support;
  std::vector<IntervalUnion> fibers;
  for (std::size_t i = 0; i < s.fiber_count(); ++i) {
    const IntervalUnion* w = t.find(s.support()[i]);
    if (!w) continue;
    if (!s.group().has_torus()) {
      support.push_back(s.support()[i]);
      continue;
    }
    IntervalUnion r = torus::intersect(s.fiber_at(i), *w);
    if (r.empty()) continue;
    support.push_back(s.support()[i]);
    fibers.push_back(std::move(r));
  }
  return HybridSet(s.group(), std::move(support), std::move(fibers));
}

HybridSet add_subgroup(const HybridSet& s, const Subgroup& k) {
  const auto& f = s.group().finite();
  if (!(k.group() == f)) fail(ErrorKind::GroupMismatch, "subgroup of a different group");
  const std::uint32_t n = f.order();
  auto& mask = scratch_mask(k.index());
  for (auto e : s.support()) mask[k.coset_of(e)] = 1;
  std::vector<ElementId> support;
  for (ElementId e = 0; e < n; ++e)
    if (mask[k.coset_of(e)]) support.push_back(e);
  std::vector<IntervalUnion> fibers;
  if (s.group().has_torus()) fibers.assign(support.size(), IntervalUnion::full());
  return HybridSet(s.group(), std::move(support), std::move(fibers));
}

HybridSet add_subgroup(const HybridSet& s, const ClosedSubgroupRep& k) {
  if (!k.is_compact_open()) fail(ErrorKind::NotCompactOpen, "S+K is only formed for compact open K");
  return add_subgroup(s, k.finite_projection());
}

bool is_periodic_wrt(const HybridSet& s, const Subgroup& k) {
  const auto& f = s.group().finite();
  for (std::size_t i = 0; i < s.fiber_count(); ++i) {
    ElementId e = s.support()[i];
    for (auto m : k.members()) {
      const IntervalUnion* w = s.find(f.add(e, m));
      if (!w || !w->is_full()) return false;
    }
  }
  return true;
}

bool in_single_coset(const HybridSet& s, const Subgroup& k) {
  if (s.empty()) return false;
  auto c = k.coset_of(s.support().front());
  for (auto e : s.support())
    if (k.coset_of(e) != c) return false;
  return true;
}

}  // namespace kneser
