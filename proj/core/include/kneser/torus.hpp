#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kneser/rational.hpp"

namespace kneser {

// Closed arc [left, left+length] of T = R/Z. length 1 is the whole circle,
// length 0 a single point. The right end may exceed 1 for arcs through 0.
struct Arc {
  Rational left;
  Rational length;

  Rational right() const { return left + length; }
  bool degenerate() const { return sgn(length) == 0; }
  friend bool operator==(const Arc& a, const Arc& b) {
    return a.left == b.left && a.length == b.length;
  }
  friend bool operator<(const Arc& a, const Arc& b) {
    if (a.left != b.left) return a.left < b.left;
    return a.length < b.length;
  }
};

// Closed subgroups of T: everything, or the cyclic group (1/q)Z/Z.
struct TorusPeriodGroup {
  bool all = true;
  std::uint64_t q = 0;

  static TorusPeriodGroup whole() { return {true, 0}; }
  static TorusPeriodGroup cyclic(std::uint64_t order) { return {false, order}; }
  bool contains(const Rational& x) const;
  std::string to_string() const;
  friend bool operator==(const TorusPeriodGroup& a, const TorusPeriodGroup& b) {
    return a.all == b.all && (a.all || a.q == b.q);
  }
};

// Finite union of closed rational arcs in canonical form: sorted by left end,
// pairwise disjoint and non-touching, with at most one arc wrapping through 0
// (always listed last).
class IntervalUnion {
 public:
  IntervalUnion() = default;

  static IntervalUnion empty_set() { return {}; }
  static IntervalUnion full();
  static IntervalUnion arc(const Rational& a, const Rational& b);  // [a, b], b >= a
  static IntervalUnion point(const Rational& x);
  static IntervalUnion from_arcs(std::vector<Arc> arcs);  // normalize

  const std::vector<Arc>& arcs() const { return arcs_; }
  const Rational& measure() const { return measure_; }
  bool empty() const { return arcs_.empty(); }
  bool is_full() const { return full_; }
  bool is_null() const { return !arcs_.empty() && sgn(measure_) == 0; }
  bool has_degenerate() const;
  std::size_t positive_arc_count() const;
  IntervalUnion nondegenerate() const;
  bool contains(const Rational& x) const;
  std::string to_string() const;

  friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
    return a.full_ == b.full_ && a.arcs_ == b.arcs_;
  }
  friend bool operator<(const IntervalUnion& a, const IntervalUnion& b) { return a.arcs_ < b.arcs_; }

 private:
  std::vector<Arc> arcs_;
  Rational measure_;
  bool full_ = false;
};

IntervalUnion normalize(std::vector<Arc> arcs);

namespace torus {

// Minkowski sum; throws EmptyOperand if either side is empty.
IntervalUnion sum(const IntervalUnion& u, const IntervalUnion& v);
IntervalUnion unite(const IntervalUnion& u, const IntervalUnion& v);
IntervalUnion intersect(const IntervalUnion& u, const IntervalUnion& v);
IntervalUnion translate(const IntervalUnion& u, const Rational& x);
IntervalUnion negate(const IntervalUnion& u);
IntervalUnion scale(const IntervalUnion& u, std::uint64_t n);
// {x : n*x + c in u} for n >= 1.
IntervalUnion preimage(const IntervalUnion& u, std::uint64_t n, const Rational& c);
bool subset(const IntervalUnion& u, const IntervalUnion& v);
// Equality up to null sets: same nondegenerate arcs.
bool similar(const IntervalUnion& u, const IntervalUnion& v);
// Null-set containment: m(u \ v) = 0.
bool subset_ae(const IntervalUnion& u, const IntervalUnion& v);

// Closure of {x : m((x+j) \ w) = 0}. Throws ZeroMeasureStructuringElement if m(j) = 0.
IntervalUnion erode(const IntervalUnion& j, const IntervalUnion& w);
// {x : x+j contained in w} setwise, degenerate arcs of j included. Empty j gives T.
IntervalUnion erode_strict(const IntervalUnion& j, const IntervalUnion& w);

TorusPeriodGroup periods(const IntervalUnion& u);
Rational interior_measure(const IntervalUnion& u);
IntervalUnion complement_closure(const IntervalUnion& u);

// Shortest closed arc containing u (u nonempty). The full circle gives length 1.
Arc enclosing_arc(const IntervalUnion& u);

}  // namespace torus
}  // namespace kneser
