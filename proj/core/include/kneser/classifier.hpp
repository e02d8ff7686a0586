#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kneser/structure.hpp"

namespace kneser {

struct PWitness {
  Subgroup k;  // finite part of K = K' x T (K = K' when d = 0)
};

enum class ERefinement { E1, E2 };
const char* to_string(ERefinement r);

struct EWitness {
  HybridSet a_ext, b_ext;
  ERefinement refinement = ERefinement::E1;
  ClosedSubgroupRep h;
  std::string method;     // which extension produced the witness
  std::string e2_detail;  // "complementary" or "quasi-periodic" when E2
  std::optional<QPDecomposition> e2_decomposition;
};

// chi(k, x) = psi(k) + n*x on K = K' x T; A in a + chi^-1(I), B in b + chi^-1(J).
struct KWitness {
  Subgroup k;
  Character psi;
  long long n;
  IntervalUnion i, j;
  Point a, b;
};

struct QPWitness {
  QPDecomposition decomposition;
  bool qp4 = false;
};

enum class Roman { I, II, III, IV };
const char* to_string(Roman r);

struct ClassificationReport {
  Rational m_a, m_b, m_sum;
  HybridSet sum;
  bool sur_critical = false;
  std::optional<PWitness> p;
  std::optional<EWitness> e;
  std::optional<KWitness> k;
  std::optional<QPWitness> qp;
  std::optional<Roman> roman;
  std::vector<Subgroup> cascade;  // quasi-periods along the descending chain
  std::vector<std::string> diagnostics;

  std::vector<std::string> conclusions() const;
};

std::optional<PWitness> check_p(const HybridSet& a, const HybridSet& b);
std::optional<EWitness> check_e(const HybridSet& a, const HybridSet& b,
                                std::vector<std::string>* diagnostics = nullptr);
std::optional<KWitness> check_k(const HybridSet& a, const HybridSet& b);
// With `within`, only proper subgroups of it are tried.
std::optional<QPWitness> check_qp(const HybridSet& a, const HybridSet& b, const Subgroup* within = nullptr);
bool qp_four_check(const QPDecomposition& d, const HybridSet& a, const HybridSet& b);

// Throws PreconditionViolation unless m(A), m(B) > 0 and the pair is sur-critical;
// throws ClassificationIncomplete if no conclusion is found.
ClassificationReport classify(const HybridSet& a, const HybridSet& b);

// The lifting construction over G = F x T with K = {0} x T. When a' and b' are
// not given, the first unique expression pair in index order is used.
std::pair<HybridSet, HybridSet> construct_qp_pair(const FiniteAbelianGroup& f,
                                                  const std::vector<ElementId>& a_prime,
                                                  const std::vector<ElementId>& b_prime,
                                                  const IntervalUnion& c, const IntervalUnion& d,
                                                  std::optional<std::pair<ElementId, ElementId>> seed = std::nullopt);

}  // namespace kneser
