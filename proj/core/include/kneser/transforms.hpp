#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kneser/hybrid.hpp"

namespace kneser {

struct ETransformStep {
  Point e;
  HybridSet ae, be;  // A u (B+e), (A-e) n B
  Rational m_a, m_b, m_ae, m_be;
};

// Asserts A_e + B_e c A + B always, and the measure sum identity when B_e is nonempty.
ETransformStep e_transform(const HybridSet& a, const HybridSet& b, const Point& e);

// f(e) = m((A-e) n B)
Rational overlap_measure(const HybridSet& a, const HybridSet& b, const Point& e);
// Exact value of the integral of f over G; equals m(A)m(B).
Rational overlap_integral(const HybridSet& a, const HybridSet& b);

enum class EPolicy {
  PreferZero,      // an e with B_e nonempty and null wins when one exists
  PreferPositive,  // smallest positive m(B_e) only
};

// Candidate shifts: every (g, x) with x a breakpoint of f(g, .) or a midpoint
// between consecutive breakpoints. For d = 0, every g.
std::vector<Point> candidate_shifts(const HybridSet& a, const HybridSet& b);

// Throws PreconditionViolation (measures) or PreconditionAperiodicity (A+B has a
// compact open period; always the case for d = 0).
std::optional<ETransformStep> choose_e(const HybridSet& a, const HybridSet& b,
                                        EPolicy policy = EPolicy::PreferZero);

struct SequenceStep {
  ETransformStep step;
  bool sum_similar = false;   // A(n)+B(n) ~ A+B
  bool shrink_bound = false;  // 0 < m(B(n)) <= (1-m(B(n-1))) m(B(n-1))
};

struct TransformTranscript {
  std::vector<SequenceStep> steps;
  std::string stop_reason;  // max-steps, sum-changed, bound-failed, no-candidate, or an error kind
};

// Requires a sur-critical pair whose sumset stabilizer is not compact open.
TransformTranscript transform_sequence(const HybridSet& a, const HybridSet& b, std::size_t max_steps);

}  // namespace kneser
