#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kneser/hybrid.hpp"

namespace kneser {

enum class CriticalityKind { Subcritical, Surcritical, Supercritical };
const char* to_string(CriticalityKind kind);

struct CriticalityVerdict {
  CriticalityKind kind;
  Rational lhs;  // m(A+B)
  Rational rhs;  // m(A)+m(B)
};

CriticalityVerdict criticality(const HybridSet& a, const HybridSet& b);
CriticalityVerdict criticality(const HybridSet& a, const HybridSet& b, const HybridSet& sum);

// A+B and H(A+B) for a pair known to be subcritical.
struct SubcriticalData {
  HybridSet sum;
  ClosedSubgroupRep h;
};
// Throws PreconditionNotSubcritical.
SubcriticalData subcritical_data(const HybridSet& a, const HybridSet& b);

struct KneserIdentityReport {
  ClosedSubgroupRep h;
  Rational m_sum, m_a_h, m_b_h, m_h;
  bool compact_open = false;
  bool sum_periodic = false;  // A+B = A+B+H
  bool identity = false;      // m(A+B) = m(A+H) + m(B+H) - m(H)
  bool holds() const { return compact_open && sum_periodic && identity; }
};

KneserIdentityReport kneser_identity_check(const HybridSet& a, const HybridSet& b);
KneserIdentityReport kneser_identity_check(const HybridSet& a, const HybridSet& b,
                                           const SubcriticalData& d);
bool overspill_check(const HybridSet& a, const HybridSet& b);
bool overspill_check(const HybridSet& a, const HybridSet& b, const SubcriticalData& d);
bool hholes_check(const HybridSet& a, const HybridSet& b);
bool hholes_check(const HybridSet& a, const HybridSet& b, const SubcriticalData& d);
bool difference_set_period_check(const HybridSet& a, const HybridSet& b);
bool difference_set_period_check(const HybridSet& a, const HybridSet& b, const SubcriticalData& d);
// {z : z+B c_m A+B} = {z : z+B c A+B} = A+H, and the mirror statement for B.
bool saturation_identity_check(const HybridSet& a, const HybridSet& b);
bool saturation_identity_check(const HybridSet& a, const HybridSet& b, const SubcriticalData& d);

struct QPDecomposition {
  Subgroup k;  // finite part K' of the compact open subgroup K = K' x T
  HybridSet a1, a0, b1, b0;
  ElementId ue_witness;  // canonical representative of the coset A0+B0+K
  ClosedSubgroupRep subgroup() const { return ClosedSubgroupRep::compact_open(a1.group(), k); }
};

struct QPSearchOptions {
  bool maximal_period = false;
};

// Every partition meeting the (QP.1) shape conditions for K = K' x T.
std::vector<QPDecomposition> find_qp_decompositions(const HybridSet& a, const HybridSet& b,
                                                    const Subgroup& k, QPSearchOptions options = {});
std::vector<QPDecomposition> find_qp_decompositions(const HybridSet& a, const HybridSet& b,
                                                    const ClosedSubgroupRep& k,
                                                    QPSearchOptions options = {});
// Same decompositions and order as above without maximal_period; stops once visit returns true.
bool for_each_qp_decomposition(const HybridSet& a, const HybridSet& b, const Subgroup& k,
                               const std::function<bool(const QPDecomposition&)>& visit);
// Re-checks the shape invariants of a decomposition from scratch.
bool is_qp_decomposition(const HybridSet& a, const HybridSet& b, const QPDecomposition& d);

// Canonical representatives of the cosets of A+B+K with a unique (a+K, b+K) expression.
std::vector<ElementId> unique_expression_cosets(const HybridSet& a, const HybridSet& b, const Subgroup& k);
std::vector<ElementId> unique_expression_cosets(const HybridSet& a, const HybridSet& b,
                                                const ClosedSubgroupRep& k);

// Single-set quasi-periodic split S = S1 u S0 with respect to K' x T.
struct QPSplit {
  Subgroup k;
  HybridSet s1, s0;
};
bool is_qp_split(const HybridSet& s, const QPSplit& split);
std::vector<QPSplit> find_qp_splits(const HybridSet& s, const Subgroup& k);
// Outer split of S w.r.t. K0 and a split of its S0 w.r.t. K1 <= K0 give a split of S w.r.t. K1.
QPSplit compose_splits(const HybridSet& s, const QPSplit& outer, const QPSplit& inner);

struct RegularityReport {
  Rational inner_measure;
  Rational closure_measure;
  Rational interior_closure_measure;
  bool regular = false;  // the three measures agree
  bool topologically_regular = false;  // S is the closure of its interior
};
RegularityReport essential_regularity(const HybridSet& s);
// A, B and A+B all essentially regular.
bool pair_essentially_regular(const HybridSet& a, const HybridSet& b);

enum class ComplementaryKind { NotComplementary, Complementary, ComplementaryWrt };
const char* to_string(ComplementaryKind kind);
struct ComplementaryReport {
  ComplementaryKind kind = ComplementaryKind::NotComplementary;
  std::optional<Subgroup> k;  // finite part for ComplementaryWrt
};
ComplementaryReport complementary_kind(const HybridSet& a, const HybridSet& b);

// Removing null components of A or B lowers m(A+B).
bool reducible_by_null_components(const HybridSet& a, const HybridSet& b);

}  // namespace kneser
