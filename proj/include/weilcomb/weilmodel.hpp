#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "weilcomb/groupring.hpp"

namespace weilcomb {

// Ambient arithmetic context: the Galois group G = (Z/2)^k of a multiquadratic
// CM field together with the complex-conjugation element c.  All divisor
// combinatorics happens relative to such a context.
struct FieldContext {
  unsigned rank = 0;
  GroupElement conj;

  FieldContext(unsigned k, GroupElement c);

  std::size_t group_order() const { return std::size_t{1} << rank; }
  // The norm element N = sum of all group elements (divisor of q in halved
  // units; the divisor of q in doubled units is 2N).
  GroupRingElt norm() const { return norm_element(rank); }
  // Divisor of q in doubled units: the all-2 vector.
  GroupRingElt q_divisor() const { return GroupRingElt::constant(rank, 2); }
  // <c>-cosets {g, c*g}, listed by ascending representative (the smaller
  // index); 2^(k-1) cosets for k >= 1, one degenerate coset for k = 0.
  std::vector<std::array<GroupElement, 2>> cosets() const;

  friend bool operator==(const FieldContext&, const FieldContext&) = default;
};

// The standard context of the running example: k = 3 with c = s1*s2*s3.
FieldContext standard_context();

enum class WeilKind { ordinary, supersingular };

std::string to_string(WeilKind kind);
WeilKind weil_kind_from_string(const std::string& s);

// An isogeny-class-level Weil q-number, represented purely by the divisor of
// its normalized valuation vector in DOUBLED UNITS: q itself maps to the all-2
// vector, a supersingular class to the all-1 vector, and an ordinary class to
// a {0,2}-valued section.
struct WeilClass {
  std::string label;
  WeilKind kind = WeilKind::ordinary;
  GroupRingElt divisor;

  friend bool operator==(const WeilClass&, const WeilClass&) = default;
};

// True when m is a section: all entries in {0,2} and m[g] + m[c*g] = 2 for
// every g (one prime chosen per <c>-coset).
bool is_section(const FieldContext& ctx, const GroupRingElt& m);

// Ordinariness test at divisor level: min(m[g], m[c*g]) = 0 for all g (the
// divisor shares nothing with its conjugate).  Holds for every section and
// fails for the supersingular all-1 divisor.
bool is_ordinary_divisor(const FieldContext& ctx, const GroupRingElt& m);

// Validating constructors.  make_ordinary requires a section; the supersingular
// divisor is always the all-1 vector.
WeilClass make_ordinary(const FieldContext& ctx, std::string label, GroupRingElt divisor);
WeilClass make_ordinary_by_index(const FieldContext& ctx, std::string label,
                                 std::size_t section_index);
WeilClass make_supersingular(const FieldContext& ctx, std::string label);

// Throws std::invalid_argument unless `cls` satisfies the invariants of its
// kind within `ctx`.
void validate_class(const FieldContext& ctx, const WeilClass& cls);

// All sections of the context in lexicographic order on coefficient vectors;
// there are exactly 2^(2^(k-1)) of them.  k = 0 yields an empty list (only
// supersingular classes exist over the rationals).
std::vector<GroupRingElt> enumerate_sections(const FieldContext& ctx);

// The sections whose class is elliptic (field degree 2), same order.
std::vector<GroupRingElt> enumerate_elliptic_sections(const FieldContext& ctx);

// Honda–Tate style classification data of a divisor class.
struct Classification {
  std::vector<GroupElement> stab;
  unsigned field_degree = 0;
  bool is_elliptic = false;
  unsigned dimension = 0;
};

// Classification of an ordinary section: field_degree = 2^k / |stabilizer|,
// elliptic iff field_degree = 2, dimension = field_degree / 2.
Classification classify_section(const FieldContext& ctx, const GroupRingElt& m);

// Classification of a class of either kind.  Supersingular classes are
// elliptic of dimension 1 by definition (their stabilizer is all of G; the
// ordinary field-degree formula does not apply and the elliptic values are
// assigned directly).
Classification classify(const FieldContext& ctx, const WeilClass& cls);

// Partition of the section list (in enumeration order) by the equivalence
// generated by translate(c, .) when mod_c and by every translate(g, .) when
// mod_galois.  Classes are sorted by smallest member index and list member
// indices ascending.
struct OrbitReport {
  std::vector<GroupRingElt> sections;
  std::vector<std::vector<std::size_t>> classes;
};

OrbitReport orbits(const FieldContext& ctx, bool mod_c, bool mod_galois);

// For each class of `report`, the number of its sections counted up to
// c-conjugation (used by the census summary "classes 1+1+1+1+4").
std::vector<std::size_t> class_sizes_mod_c(const FieldContext& ctx, const OrbitReport& report);

// The running example's constructions (require k = 3, c = s1*s2*s3):
//   alpha1 <- section of (1+s2)(1+s3)      alpha2 <- section of (1+s1)(1+s3)
//   alpha3 <- section of (1+s1)(1+s2)      alpha4 <- section of (1+s1s2)(1+s1s3)
//   beta   <- section supported on {1, s1, s2, s3} (trivial stabilizer)
std::vector<WeilClass> standard_triple(const FieldContext& ctx);
std::vector<WeilClass> standard_quadruple(const FieldContext& ctx);
WeilClass construct_beta(const FieldContext& ctx);

}  // namespace weilcomb
