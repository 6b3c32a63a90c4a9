#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "weilcomb/checked_int.hpp"

namespace weilcomb {

// Elements of the elementary abelian 2-group G = (Z/2)^k are bit vectors of
// length k; the group operation is XOR on indices.  The generators are written
// s1, ..., sk (s_i corresponds to bit i-1).
struct GroupElement {
  unsigned index = 0;

  constexpr GroupElement() = default;
  constexpr explicit GroupElement(unsigned i) : index(i) {}

  constexpr bool is_identity() const { return index == 0; }

  friend constexpr GroupElement operator*(GroupElement a, GroupElement b) {
    return GroupElement{a.index ^ b.index};
  }
  friend constexpr auto operator<=>(GroupElement, GroupElement) = default;
};

inline constexpr GroupElement identity_element{0};

// i-th generator s_{i+1} of (Z/2)^k, for 0 <= i < rank.
constexpr GroupElement generator(unsigned i) { return GroupElement{1u << i}; }

// Ranks are small by design: enumerative routines are exponential (or worse)
// in 2^k, so the library enforces a configurable working cap (default 6) for
// search entry points and a hard structural limit for ring elements.
inline constexpr unsigned kDefaultRankCap = 6;
inline constexpr unsigned kHardRankLimit = 12;

// Renders an element as a product of generators, e.g. "s1*s3"; the identity
// prints as "1".  `rank` controls validation only (index must fit in rank bits).
std::string to_string(GroupElement g, unsigned rank);

// An element of the integral group ring Z[(Z/2)^k], stored as the dense vector
// of its 2^k integer coefficients indexed by group-element index.  All
// arithmetic is exact and overflow-checked.
class GroupRingElt {
 public:
  // Zero element of the given rank.
  explicit GroupRingElt(unsigned rank);
  GroupRingElt(unsigned rank, std::vector<Coeff> coeffs);

  static GroupRingElt zero(unsigned rank) { return GroupRingElt(rank); }
  // Multiplicative unit, i.e. the basis element of the identity.
  static GroupRingElt unit(unsigned rank);
  // Basis element [g].
  static GroupRingElt basis(unsigned rank, GroupElement g);
  // Constant element t * sum_{g in G} [g]  (t times the norm element).
  static GroupRingElt constant(unsigned rank, Coeff t);

  unsigned rank() const { return rank_; }
  std::size_t group_order() const { return coeffs_.size(); }

  Coeff operator[](GroupElement g) const { return coeffs_.at(g.index); }
  Coeff& operator[](GroupElement g) { return coeffs_.at(g.index); }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  // True when every coefficient equals the same value t (reported through
  // `value`); the zero element is constant with t = 0.
  bool is_constant(Coeff* value = nullptr) const;
  Coeff min_coeff() const;
  Coeff max_coeff() const;
  // Sum of all coefficients (the augmentation map).
  Coeff augmentation() const;
  // Support of the element, ascending by index.
  std::vector<GroupElement> support() const;
  // True when this[g] >= other[g] for all g.
  bool dominates(const GroupRingElt& other) const;

  GroupRingElt& operator+=(const GroupRingElt& rhs);
  GroupRingElt& operator-=(const GroupRingElt& rhs);
  GroupRingElt& operator*=(Coeff scalar);

  friend GroupRingElt operator+(GroupRingElt lhs, const GroupRingElt& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend GroupRingElt operator-(GroupRingElt lhs, const GroupRingElt& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend GroupRingElt operator-(GroupRingElt x) {
    x *= -1;
    return x;
  }
  friend GroupRingElt operator*(GroupRingElt lhs, Coeff scalar) {
    lhs *= scalar;
    return lhs;
  }
  friend GroupRingElt operator*(Coeff scalar, GroupRingElt rhs) {
    rhs *= scalar;
    return rhs;
  }
  // Ring product: the XOR convolution (x*y)[h] = sum_{g} x[g] * y[g^h].
  friend GroupRingElt operator*(const GroupRingElt& lhs, const GroupRingElt& rhs);

  friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;

  // Compact textual form such as "3 + 2*s1 + s1*s2", in index order.
  std::string to_string() const;

 private:
  unsigned rank_;
  std::vector<Coeff> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const GroupRingElt& x);

// The norm element N = sum_{g in G} [g].
GroupRingElt norm_element(unsigned rank);

// Group translate g.x, defined by (g.x)[h] = x[g*h].  Translation by g is a
// ring automorphism of order at most 2.
GroupRingElt translate(GroupElement g, const GroupRingElt& x);

// Defect locus of x against a target: the group elements where x falls short,
// { g : x[g] < target[g] }, ascending by index.  Empty iff target <= x
// pointwise, i.e. iff x - target has no negative coefficient.
std::vector<GroupElement> defect(const GroupRingElt& x, const GroupRingElt& target);

// Stabilizer subgroup { g : g.x == x }, ascending by index.  Always contains
// the identity and is closed under the group operation.
std::vector<GroupElement> stabilizer(const GroupRingElt& x);

// Throws std::invalid_argument when `rank` exceeds `cap` (used by search entry
// points honouring the configurable working cap).
void require_rank_within(unsigned rank, unsigned cap);

}  // namespace weilcomb
