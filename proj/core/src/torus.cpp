#include "kneser/torus.hpp"

#include <algorithm>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

struct Piece {
  Rational lo;
  Rational hi;
};

// Linear pieces inside [0,1]; the wrapping arc contributes [0, r-1] first and [l, 1] last.
std::vector<Piece> linear_pieces(const IntervalUnion& u) {
  std::vector<Piece> out;
  out.reserve(u.arcs().size() + 1);
  if (u.is_full()) {
    out.push_back({Rational(0), Rational(1)});
    return out;
  }
  const auto& arcs = u.arcs();
  if (!arcs.empty()) {
    Rational r = arcs.back().right();
    if (r >= 1) out.push_back({Rational(0), r - 1});
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    Rational r = arcs[i].right();
    if (r > 1)
      out.push_back({arcs[i].left, Rational(1)});
    else
      out.push_back({arcs[i].left, r});
  }
  return out;
}

}  // namespace

bool TorusPeriodGroup::contains(const Rational& x) const {
  if (all) return true;
  Rational y = frac(x) * Rational(static_cast<unsigned long>(q));
  return y.get_den() == 1;
}

std::string TorusPeriodGroup::to_string() const {
  if (all) return "T";
  if (q == 1) return "0";
  return "(1/" + std::to_string(q) + ")Z/Z";
}

IntervalUnion IntervalUnion::full() {
  IntervalUnion u;
  u.arcs_.push_back({Rational(0), Rational(1)});
  u.measure_ = 1;
  u.full_ = true;
  return u;
}

IntervalUnion IntervalUnion::arc(const Rational& a, const Rational& b) {
  if (b < a) fail(ErrorKind::InvalidArgument, "arc with right end before left end");
  return from_arcs({Arc{a, b - a}});
}

IntervalUnion IntervalUnion::point(const Rational& x) { return from_arcs({Arc{x, Rational(0)}}); }

IntervalUnion normalize(std::vector<Arc> arcs) { return IntervalUnion::from_arcs(std::move(arcs)); }

IntervalUnion IntervalUnion::from_arcs(std::vector<Arc> arcs) {
  std::vector<Piece> pieces;
  pieces.reserve(arcs.size() + 2);
  for (auto& a : arcs) {
    if (sgn(a.length) < 0) fail(ErrorKind::InvalidArgument, "arc with negative length");
    if (a.length >= 1) return full();
    Rational lo = frac(a.left);
    Rational hi = lo + a.length;
    if (hi <= 1) {
      pieces.push_back({std::move(lo), std::move(hi)});
    } else {
      hi -= 1;
      pieces.push_back({std::move(lo), Rational(1)});
      pieces.push_back({Rational(0), std::move(hi)});
    }
  }
  IntervalUnion u;
  if (pieces.empty()) return u;
  std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) {
    if (x.lo != y.lo) return x.lo < y.lo;
    return x.hi < y.hi;
  });
  std::vector<Piece> merged;
  merged.reserve(pieces.size());
  for (auto& p : pieces) {
    if (!merged.empty() && p.lo <= merged.back().hi) {
      if (p.hi > merged.back().hi) merged.back().hi = std::move(p.hi);
    } else {
      merged.push_back(std::move(p));
    }
  }
  if (sgn(merged.front().lo) == 0 && merged.back().hi == 1) {
    if (merged.size() == 1) return full();
    merged.back().hi = merged.front().hi + 1;
    merged.erase(merged.begin());
  }
  u.arcs_.reserve(merged.size());
  for (auto& p : merged) {
    Rational len = p.hi - p.lo;
    u.measure_ += len;
    u.arcs_.push_back({std::move(p.lo), std::move(len)});
  }
  return u;
}

bool IntervalUnion::has_degenerate() const {
  return std::any_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.degenerate(); });
}

std::size_t IntervalUnion::positive_arc_count() const {
  return static_cast<std::size_t>(
      std::count_if(arcs_.begin(), arcs_.end(), [](const Arc& a) { return !a.degenerate(); }));
}

IntervalUnion IntervalUnion::nondegenerate() const {
  if (!has_degenerate()) return *this;
  IntervalUnion u;
  for (const auto& a : arcs_)
    if (!a.degenerate()) u.arcs_.push_back(a);
  u.measure_ = measure_;
  u.full_ = full_;
  return u;
}

bool IntervalUnion::contains(const Rational& x) const {
  if (full_) return true;
  Rational y = frac(x);
  for (const auto& a : arcs_) {
    if (frac(y - a.left) <= a.length) return true;
  }
  return false;
}

std::string IntervalUnion::to_string() const {
  if (full_) return "T";
  if (arcs_.empty()) return "∅";
  std::string s;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (i) s += "∪";
    s += "[" + kneser::to_string(arcs_[i].left) + "," + kneser::to_string(arcs_[i].right()) + "]";
  }
  return s;
}

namespace torus {

IntervalUnion sum(const IntervalUnion& u, const IntervalUnion& v) {
  if (u.empty() || v.empty()) fail(ErrorKind::EmptyOperand, "torus sum of an empty set");
  if (u.is_full() || v.is_full()) return IntervalUnion::full();
  std::vector<Arc> arcs;
  arcs.reserve(u.arcs().size() * v.arcs().size());
  for (const auto& a : u.arcs())
    for (const auto& b : v.arcs()) arcs.push_back({a.left + b.left, a.length + b.length});
  return IntervalUnion::from_arcs(std::move(arcs));
}

IntervalUnion unite(const IntervalUnion& u, const IntervalUnion& v) {
  if (u.empty()) return v;
  if (v.empty()) return u;
  if (u.is_full() || v.is_full()) return IntervalUnion::full();
  std::vector<Arc> arcs(u.arcs());
  arcs.insert(arcs.end(), v.arcs().begin(), v.arcs().end());
  return IntervalUnion::from_arcs(std::move(arcs));
}

IntervalUnion intersect(const IntervalUnion& u, const IntervalUnion& v) {
  if (u.empty() || v.empty()) return {};
  if (u.is_full()) return v;
  if (v.is_full()) return u;
  auto pu = linear_pieces(u);
  auto pv = linear_pieces(v);
  std::vector<Arc> out;
  std::size_t i = 0, j = 0;
  while (i < pu.size() && j < pv.size()) {
    const Rational& lo = pu[i].lo < pv[j].lo ? pv[j].lo : pu[i].lo;
    const Rational& hi = pu[i].hi < pv[j].hi ? pu[i].hi : pv[j].hi;
    if (lo <= hi) out.push_back({lo, hi - lo});
    if (pu[i].hi < pv[j].hi)
      ++i;
    else
      ++j;
  }
  return IntervalUnion::from_arcs(std::move(out));
}

IntervalUnion translate(const IntervalUnion& u, const Rational& x) {
  if (u.empty() || u.is_full() || sgn(x) == 0) return u;
  std::vector<Arc> arcs;
  arcs.reserve(u.arcs().size());
  for (const auto& a : u.arcs()) arcs.push_back({a.left + x, a.length});
  return IntervalUnion::from_arcs(std::move(arcs));
}

IntervalUnion negate(const IntervalUnion& u) {
  if (u.empty() || u.is_full()) return u;
  std::vector<Arc> arcs;
  arcs.reserve(u.arcs().size());
  for (const auto& a : u.arcs()) arcs.push_back({-a.right(), a.length});
  return IntervalUnion::from_arcs(std::move(arcs));
}

IntervalUnion scale(const IntervalUnion& u, std::uint64_t n) {
  if (n == 0) {
    if (u.empty()) return u;
    return IntervalUnion::point(Rational(0));
  }
  if (u.empty() || u.is_full()) return u;
  Rational k(static_cast<unsigned long>(n));
  std::vector<Arc> arcs;
  arcs.reserve(u.arcs().size());
  for (const auto& a : u.arcs()) arcs.push_back({a.left * k, a.length * k});
  return IntervalUnion::from_arcs(std::move(arcs));
}

IntervalUnion preimage(const IntervalUnion& u, std::uint64_t n, const Rational& c) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "preimage under multiplier 0");
  if (u.empty() || u.is_full()) return u;
  Rational k(static_cast<unsigned long>(n));
  std::vector<Arc> arcs;
  arcs.reserve(u.arcs().size() * n);
  for (const auto& a : u.arcs()) {
    Rational base = (a.left - c) / k;
    Rational len = a.length / k;
    for (std::uint64_t j = 0; j < n; ++j)
      arcs.push_back({base + Rational(static_cast<unsigned long>(j)) / k, len});
  }
  return IntervalUnion::from_arcs(std::move(arcs));
}

bool subset(const IntervalUnion& u, const IntervalUnion& v) {
  if (u.empty() || v.is_full()) return true;
  return intersect(u, v) == u;
}

bool similar(const IntervalUnion& u, const IntervalUnion& v) {
  if (u.measure() != v.measure()) return false;
  return u.nondegenerate() == v.nondegenerate();
}

bool subset_ae(const IntervalUnion& u, const IntervalUnion& v) {
  if (sgn(u.measure()) == 0 || v.is_full()) return true;
  if (u.measure() > v.measure()) return false;
  return subset(u.nondegenerate(), v);
}

namespace {

IntervalUnion erode_by(const IntervalUnion& j, bool include_degenerate, const IntervalUnion& w) {
  if (w.is_full()) return IntervalUnion::full();
  IntervalUnion result = IntervalUnion::full();
  for (const auto& a : j.arcs()) {
    if (a.degenerate() && !include_degenerate) continue;
    std::vector<Arc> fits;
    for (const auto& b : w.arcs())
      if (b.length >= a.length) fits.push_back({b.left - a.left, b.length - a.length});
    result = intersect(result, IntervalUnion::from_arcs(std::move(fits)));
    if (result.empty()) break;
  }
  return result;
}

}  // namespace

IntervalUnion erode(const IntervalUnion& j, const IntervalUnion& w) {
  if (sgn(j.measure()) == 0) {
    fail(ErrorKind::ZeroMeasureStructuringElement, "erosion by a measure-zero fiber");
  }
  return erode_by(j, false, w);
}

IntervalUnion erode_strict(const IntervalUnion& j, const IntervalUnion& w) {
  if (j.empty()) return IntervalUnion::full();
  return erode_by(j, true, w);
}

TorusPeriodGroup periods(const IntervalUnion& u) {
  if (sgn(u.measure()) == 0 || u.is_full()) return TorusPeriodGroup::whole();
  IntervalUnion n = u.nondegenerate();
  const auto& arcs = n.arcs();
  std::uint64_t q = 0;
  for (const auto& a : arcs) {
    Rational t = frac(a.left - arcs.front().left);
    if (translate(n, t) == n) ++q;
  }
  return TorusPeriodGroup::cyclic(q);
}

Rational interior_measure(const IntervalUnion& u) { return u.measure(); }

IntervalUnion complement_closure(const IntervalUnion& u) {
  if (u.is_full()) return {};
  IntervalUnion n = u.nondegenerate();
  if (n.empty()) return IntervalUnion::full();
  const auto& arcs = n.arcs();
  std::vector<Arc> gaps;
  gaps.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    Rational end = arcs[i].right();
    Rational next = i + 1 < arcs.size() ? arcs[i + 1].left : arcs.front().left + 1;
    gaps.push_back({end, next - end});
  }
  return IntervalUnion::from_arcs(std::move(gaps));
}

Arc enclosing_arc(const IntervalUnion& u) {
  if (u.empty()) fail(ErrorKind::EmptyOperand, "enclosing arc of an empty set");
  if (u.is_full()) return {Rational(0), Rational(1)};
  const auto& arcs = u.arcs();
  if (arcs.size() == 1) return arcs.front();
  std::size_t best = 0;
  Rational best_gap = -1;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    Rational next = i + 1 < arcs.size() ? arcs[i + 1].left : arcs.front().left + 1;
    Rational gap = next - arcs[i].right();
    if (gap > best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  std::size_t start = best + 1 < arcs.size() ? best + 1 : 0;
  return {arcs[start].left, 1 - best_gap};
}

}  // namespace torus
}  // namespace kneser
