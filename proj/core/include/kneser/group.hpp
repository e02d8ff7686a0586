#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "kneser/rational.hpp"

namespace kneser {

// Elements of F are addressed by mixed-radix index; coordinate 0 is most
// significant, so index order is lexicographic order of coordinates.
using ElementId = std::uint32_t;

inline constexpr std::uint64_t kDefaultSubgroupBound = 10000;

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup();  // trivial group Z/1
  explicit FiniteAbelianGroup(std::vector<std::uint32_t> moduli);

  const std::vector<std::uint32_t>& moduli() const { return moduli_; }
  std::uint32_t order() const { return order_; }
  std::size_t rank() const { return moduli_.size(); }

  ElementId zero() const { return 0; }
  ElementId add(ElementId a, ElementId b) const;
  ElementId sub(ElementId a, ElementId b) const;
  ElementId neg(ElementId a) const;
  ElementId mul(std::uint64_t k, ElementId a) const;
  std::uint32_t element_order(ElementId a) const;

  std::vector<std::uint32_t> coords(ElementId a) const;
  ElementId from_coords(const std::vector<std::uint32_t>& c) const;
  // Reduces arbitrary integers into canonical residues.
  ElementId from_integers(const std::vector<long long>& c) const;

  // "3" for rank one, "(1,0)" otherwise.
  std::string format(ElementId a) const;
  std::string to_string() const;  // "Z/4 x Z/2"

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.moduli_ == b.moduli_;
  }

 private:
  std::vector<std::uint32_t> moduli_;
  std::vector<std::uint32_t> stride_;
  std::uint32_t order_ = 1;
};

struct Coset {
  ElementId representative;
  std::vector<ElementId> members;
};

class Subgroup {
 public:
  // members must be closed under addition; validated.
  Subgroup(const FiniteAbelianGroup& g, std::vector<ElementId> members);
  // Skips the closure check; members must already form a subgroup.
  static Subgroup from_closed(const FiniteAbelianGroup& g, std::vector<ElementId> members);
  static Subgroup trivial(const FiniteAbelianGroup& g);
  static Subgroup whole(const FiniteAbelianGroup& g);
  static Subgroup generated_by(const FiniteAbelianGroup& g, const std::vector<ElementId>& gens);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<ElementId>& members() const { return members_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(members_.size()); }
  std::uint32_t index() const { return group_.order() / size(); }
  bool contains(ElementId a) const { return coset_of_[a] == coset_of_[0]; }

  // Coset number of an element; cosets are numbered by increasing representative.
  std::uint32_t coset_of(ElementId a) const { return coset_of_[a]; }
  ElementId coset_rep(std::uint32_t c) const { return reps_[c]; }
  ElementId canonical(ElementId a) const { return reps_[coset_of_[a]]; }
  // Index of a member within members(); undefined for non-members.
  std::uint32_t position(ElementId a) const { return pos_[a]; }
  std::vector<Coset> cosets() const;
  std::string to_string() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.members_ == b.members_;
  }

 private:
  FiniteAbelianGroup group_;
  std::vector<ElementId> members_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<ElementId> reps_;
  std::vector<std::uint32_t> pos_;

  Subgroup(const FiniteAbelianGroup& g, std::vector<ElementId> members, bool validate);
};

std::vector<Coset> cosets_of(const Subgroup& k);

// All subgroups, each exactly once, by descending size (ties by member list).
// Throws BoundExceeded when the order exceeds `bound`.
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g,
                                          std::uint64_t bound = kDefaultSubgroupBound);

// Homomorphism psi: K -> Q/Z stored as numerators over the exponent of F,
// aligned with K.members().
class Character {
 public:
  Character(std::shared_ptr<const Subgroup> domain, std::uint64_t denominator,
            std::vector<std::uint64_t> numerators);

  const Subgroup& domain() const { return *domain_; }
  std::uint64_t denominator() const { return den_; }
  const std::vector<std::uint64_t>& numerators() const { return num_; }
  Rational value(ElementId k) const;  // k must lie in the domain
  bool is_zero() const;
  std::string to_string() const;  // "{0: 0, 1: 1/2}"

  friend bool operator==(const Character& a, const Character& b) {
    return a.den_ == b.den_ && a.num_ == b.num_ && a.domain_->members() == b.domain_->members();
  }

 private:
  std::shared_ptr<const Subgroup> domain_;
  std::uint64_t den_;
  std::vector<std::uint64_t> num_;
};

struct CharacterRep {
  Character psi;
  long long n;  // torus multiplier, nonzero
};

// Every homomorphism K -> Q/Z (the full dual, |K| of them), in a fixed order.
std::vector<Character> dual(const Subgroup& k);

// Homomorphisms psi: K -> (1/q)Z/Z paired with every nonzero n in [n_lo, n_hi].
std::vector<CharacterRep> characters_onto(const Subgroup& k, std::uint64_t q, long long n_lo = 1,
                                          long long n_hi = 1);

}  // namespace kneser
