#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kneser/hybrid.hpp"

namespace kneser {

struct ResidueClass {
  std::uint64_t residue = 0;  // reduced mod p^level
  std::uint32_t level = 1;    // modulus p^level, level >= 1
  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

// S = base u (offset + p S) inside Z_p.
struct RecursiveSetDef {
  std::uint32_t p = 2;
  std::vector<ResidueClass> base;
  std::uint64_t offset = 0;  // reduced mod p

  // Throws InvalidArgument unless p is prime and every class is reduced.
  void validate() const;
  std::string to_string(const std::string& name) const;  // setlang rset form
  friend bool operator==(const RecursiveSetDef&, const RecursiveSetDef&) = default;
};

bool is_prime(std::uint64_t n);
std::uint64_t checked_power(std::uint64_t p, std::uint32_t n);  // throws BoundExceeded past 2^32

struct TruncationPair {
  std::uint32_t depth = 0;
  HybridGroup group;  // Z/p^depth
  HybridSet inner;    // residual cell excluded
  HybridSet outer;    // residual cell included
  Rational inner_measure, outer_measure;
};

TruncationPair truncate(const RecursiveSetDef& def, std::uint32_t n);

struct TruncatedSumReport {
  std::uint32_t depth = 0;
  HybridSet outer_sum;          // outer(A) + outer(B)
  Rational lower, upper;        // bracket for m(A+B)
  Rational inner_sum_measure;   // m(inner(A) + inner(B))
  std::uint64_t stabilizer_order = 0;  // of outer_sum
  bool sur_critical_outer = false;     // m(outer sum) = m(outer A) + m(outer B)
};

// Throws PrimeMismatch if the definitions use different primes.
TruncatedSumReport sum_truncations(const RecursiveSetDef& a, const RecursiveSetDef& b, std::uint32_t n);

// The set {0,1} u (2 + 7 C) in Z_7.
RecursiveSetDef seven_adic_example();

}  // namespace kneser
