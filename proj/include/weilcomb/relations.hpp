#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weilcomb/groupring.hpp"
#include "weilcomb/intlattice.hpp"
#include "weilcomb/weilmodel.hpp"

namespace weilcomb {

// One multiplicative generator slot: a class eigenvalue or its conjugate.
struct GeneratorSlot {
  std::string name;        // "alpha1" or "alpha1^c"
  std::size_t class_index = 0;
  bool conjugate = false;
  GroupRingElt divisor;    // doubled units
};

// The ordered slot list over a list of Weil classes: for each class, first the
// plain slot, then the conjugate slot (divisor translated by c).
class GeneratorSet {
 public:
  GeneratorSet(FieldContext ctx, std::vector<WeilClass> classes);

  const FieldContext& ctx() const { return ctx_; }
  const std::vector<WeilClass>& classes() const { return classes_; }
  const std::vector<GeneratorSlot>& slots() const { return slots_; }
  std::size_t slot_count() const { return slots_.size(); }

 private:
  FieldContext ctx_;
  std::vector<WeilClass> classes_;
  std::vector<GeneratorSlot> slots_;
};

// A multiplicative relation  prod_slots gamma_slot^(e_slot) = q^j  at divisor
// level: sum_slots e_slot * divisor_slot = j * (all-2 vector).  Exponents are
// nonnegative in the primary use; signed vectors are allowed for lattice
// algebra.
struct Relation {
  std::vector<Coeff> exponents;
  Coeff q_power = 0;

  Coeff degree() const;  // sum of exponents
  // The extended vector (exponents..., q_power) used for lattice algebra.
  std::vector<Coeff> extended() const;

  friend bool operator==(const Relation&, const Relation&) = default;
};

// True iff sum_slots e_slot * divisor_slot = j * (all-2).
bool is_relation(const GeneratorSet& gens, const std::vector<Coeff>& e, Coeff j);
bool is_relation(const GeneratorSet& gens, const Relation& rel);

// If e determines a relation (the weighted divisor sum is a constant vector
// with even value), returns its q-power.
std::optional<Coeff> q_power_of(const GeneratorSet& gens, const std::vector<Coeff>& e);

// All relations of degree exactly 2 with j = 1: the unordered pairs of
// distinct slots whose divisors sum to the all-2 vector.  Contains every
// conjugate pair alpha*alpha^c = q plus any cross-class pair of complementary
// sections.  Ordered by slot index pairs.
std::vector<Relation> degree2_relations(const GeneratorSet& gens);

// Sublattice of extended vectors spanned by the degree-2 relations.
struct RelationLattice {
  std::vector<std::vector<Coeff>> basis;  // extended vectors
};

RelationLattice degree2_lattice(const GeneratorSet& gens);

// Exact integer membership of the relation's extended vector in the lattice.
// On membership, `certificate` holds integer coefficients over the basis; on
// failure `obstruction` pins the coordinate and congruence that rules it out.
struct MembershipResult {
  bool member = false;
  std::vector<Coeff> certificate;
  std::optional<LatticeObstruction> obstruction;
};

MembershipResult lattice_membership(const Relation& rel, const RelationLattice& lat);

// Human-readable form of an obstruction, naming the offending coordinate via
// the generator set when provided ("q" for the q-power coordinate).
std::string describe_obstruction(const LatticeObstruction& obs, const GeneratorSet* gens);

// Ceiling for exotic enumeration; requests above it are refused to keep the
// runtime predictable.
inline constexpr unsigned kExoticDegreeCeiling = 8;

// Enumerates every nonnegative relation of degree <= max_degree (q-power
// determined by the divisor sum) and returns those outside the degree-2
// sublattice, ordered by (degree, lexicographic exponents).
std::vector<Relation> find_exotic(const GeneratorSet& gens, unsigned max_degree);

// Auxiliary nonnegative test: coefficients over the degree-2 relations that
// reproduce `rel` as a sum (monoid membership), if any exist.  Reported
// alongside lattice membership; which of the two notions captures
// "reducible to degree 2" is a modeling question, so both are exposed.
std::optional<std::vector<Coeff>> monoid_certificate(const GeneratorSet& gens,
                                                     const Relation& rel,
                                                     const std::vector<Relation>& degree2);

}  // namespace weilcomb
