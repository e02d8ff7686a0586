#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kneser/group.hpp"
#include "kneser/torus.hpp"

namespace kneser {

// G = F x T^d with d in {0,1}. Cheap to copy; the subgroup lattice of F is
// computed on first use and shared between copies.
class HybridGroup {
 public:
  HybridGroup();
  HybridGroup(FiniteAbelianGroup finite, int torus_dim);

  const FiniteAbelianGroup& finite() const;
  std::uint32_t finite_order() const { return finite().order(); }
  int torus_dim() const;
  bool has_torus() const { return torus_dim() == 1; }

  const std::vector<Subgroup>& subgroups() const;
  std::shared_ptr<const Subgroup> subgroup_ptr(std::size_t i) const;

  std::string to_string() const;  // "Z/5 x T"
  friend bool operator==(const HybridGroup& a, const HybridGroup& b);
  friend bool operator!=(const HybridGroup& a, const HybridGroup& b) { return !(a == b); }

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

struct Point {
  ElementId f = 0;
  Rational x;  // torus coordinate, ignored when d = 0
  friend bool operator==(const Point& a, const Point& b) { return a.f == b.f && a.x == b.x; }
};

std::string format_point(const HybridGroup& g, const Point& p);

// Subset of G stored fiber by fiber over F. Empty fibers are never stored;
// for d = 0 every stored fiber is the single point (reported as T).
class HybridSet {
 public:
  explicit HybridSet(HybridGroup g = HybridGroup());

  static HybridSet from_fibers(HybridGroup g, std::vector<std::pair<ElementId, IntervalUnion>> fibers);
  static HybridSet from_elements(HybridGroup g, std::vector<ElementId> elements);  // full fibers
  static HybridSet whole(HybridGroup g);
  static HybridSet from_subgroup(HybridGroup g, const Subgroup& k);  // K' x T

  const HybridGroup& group() const { return group_; }
  const std::vector<ElementId>& support() const { return support_; }
  const IntervalUnion& fiber_at(std::size_t i) const;
  const IntervalUnion* find(ElementId f) const;  // nullptr when the fiber is empty
  std::size_t fiber_count() const { return support_.size(); }
  bool empty() const { return support_.empty(); }
  const Rational& measure() const { return measure_; }
  bool contains(const Point& p) const;
  bool has_degenerate() const;
  // Elements f whose fiber is nonempty but null.
  std::vector<ElementId> null_fibers() const;
  std::vector<std::pair<ElementId, IntervalUnion>> fibers() const;

  // "{0,1,3}" when d = 0, "{0: T, 1: [0,1/2]}" when d = 1, "{}" when empty.
  std::string to_string() const;

  friend bool operator==(const HybridSet& a, const HybridSet& b) {
    return a.support_ == b.support_ && a.fibers_ == b.fibers_ && a.group_ == b.group_;
  }
  friend bool operator!=(const HybridSet& a, const HybridSet& b) { return !(a == b); }
  friend bool operator<(const HybridSet& a, const HybridSet& b) {
    if (a.support_ != b.support_) return a.support_ < b.support_;
    return a.fibers_ < b.fibers_;
  }

  // Trusted constructor: support sorted and duplicate free, fibers nonempty
  // (fibers ignored and may be empty when d = 0).
  HybridSet(HybridGroup g, std::vector<ElementId> support, std::vector<IntervalUnion> fibers);

 private:
  HybridGroup group_;
  std::vector<ElementId> support_;
  std::vector<IntervalUnion> fibers_;
  Rational measure_;
};

// Closed subgroup of F x T: a torus part (T or (1/q)Z/Z) and a graph of
// pairs (f, x) with x taken modulo the torus part. d = 0 always reports T.
class ClosedSubgroupRep {
 public:
  ClosedSubgroupRep(HybridGroup g, TorusPeriodGroup torus, std::vector<std::pair<ElementId, Rational>> graph);
  static ClosedSubgroupRep compact_open(HybridGroup g, const Subgroup& k);
  static ClosedSubgroupRep whole(HybridGroup g);

  const HybridGroup& group() const { return group_; }
  const TorusPeriodGroup& torus_component() const { return torus_; }
  const std::vector<std::pair<ElementId, Rational>>& graph() const { return graph_; }
  bool is_compact_open() const { return torus_.all; }
  const Subgroup& finite_projection() const { return *projection_; }
  bool contains(const Point& p) const;
  Rational measure() const;
  std::string to_string() const;

  friend bool operator==(const ClosedSubgroupRep& a, const ClosedSubgroupRep& b) {
    return a.torus_ == b.torus_ && a.graph_ == b.graph_ && a.group_ == b.group_;
  }

 private:
  HybridGroup group_;
  TorusPeriodGroup torus_;
  std::vector<std::pair<ElementId, Rational>> graph_;
  std::shared_ptr<const Subgroup> projection_;

  ClosedSubgroupRep(HybridGroup g, std::shared_ptr<const Subgroup> k);
};

struct CosetPiece {
  ElementId representative;
  HybridSet piece;
};

HybridSet sumset(const HybridSet& a, const HybridSet& b);
inline const Rational& measure(const HybridSet& s) { return s.measure(); }
ClosedSubgroupRep stabilizer(const HybridSet& s);

// Closure of {z : m((z+B) \ target) = 0}. Throws DegenerateFiber for d = 1 when
// B has a null nonempty fiber. `a` is only used for the A-containment check
// when target is A+B.
HybridSet saturate(const HybridSet& a, const HybridSet& b, const HybridSet& target);
// Setwise {z : z+B contained in target}; no restriction on B.
HybridSet saturate_strict(const HybridSet& b, const HybridSet& target);

std::vector<CosetPiece> coset_decomposition(const HybridSet& s, const ClosedSubgroupRep& k);
std::vector<CosetPiece> coset_decomposition(const HybridSet& s, const Subgroup& k);

bool similar(const HybridSet& s, const HybridSet& t);
bool subset(const HybridSet& s, const HybridSet& t);
bool subset_ae(const HybridSet& s, const HybridSet& t);
HybridSet translate(const HybridSet& s, const Point& p);
HybridSet negate(const HybridSet& s);
HybridSet difference_set(const HybridSet& a, const HybridSet& b);
HybridSet unite(const HybridSet& s, const HybridSet& t);
HybridSet intersect(const HybridSet& s, const HybridSet& t);
HybridSet nondegenerate(const HybridSet& s);

// S + (K' x T); for d = 0 this is S + K'.
HybridSet add_subgroup(const HybridSet& s, const Subgroup& k);
HybridSet add_subgroup(const HybridSet& s, const ClosedSubgroupRep& k);
// S + (K' x T) ~ S.
bool is_periodic_wrt(const HybridSet& s, const Subgroup& k);
// Support of S meets exactly one coset of K'.
bool in_single_coset(const HybridSet& s, const Subgroup& k);

void require_same_group(const HybridSet& a, const HybridSet& b);

}  // namespace kneser
