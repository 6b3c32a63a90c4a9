#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "weilcomb/groupring.hpp"
#include "weilcomb/weilmodel.hpp"

namespace weilcomb {

// A product of elliptic curves over F_q: each factor is an elliptic Weil
// class with a multiplicity (number of copies of that curve).  Total dimension
// is the sum of the multiplicities, so every factor class must be elliptic
// (ordinary with field degree 2, or supersingular).
struct ProductFactor {
  WeilClass cls;
  unsigned multiplicity = 1;
};

class ProductSpec {
 public:
  ProductSpec(FieldContext ctx, std::vector<ProductFactor> factors);

  const FieldContext& ctx() const { return ctx_; }
  const std::vector<ProductFactor>& factors() const { return factors_; }
  unsigned total_dimension() const { return total_dimension_; }

 private:
  FieldContext ctx_;
  std::vector<ProductFactor> factors_;
  unsigned total_dimension_ = 0;
};

// A Frobenius eigenvalue on H^n of the product, recorded as the exponent pair
// (e_i, ebar_i) of (alpha_i, alpha_i^c) per factor class.  Each of e_i and
// ebar_i is bounded by the factor's multiplicity (each curve copy contributes
// one alpha_i-eigenvector and one alpha_i^c-eigenvector to H^1).
struct EigenvalueMonomial {
  std::vector<std::array<unsigned, 2>> exponents;

  unsigned degree() const;
  // Global conjugate: swap e_i and ebar_i in every factor.
  EigenvalueMonomial conjugate() const;
  // Rendering such as "alpha1*alpha2^2*alpha3^c" ("1" for the empty monomial).
  std::string to_string(const ProductSpec& spec) const;

  friend bool operator==(const EigenvalueMonomial&, const EigenvalueMonomial&) = default;
};

// All eigenvalue monomials of degree exactly n, ordered lexicographically on
// the flattened exponent tuple (e_1, ebar_1, e_2, ebar_2, ...).
std::vector<EigenvalueMonomial> eigenvalue_monomials(const ProductSpec& spec, unsigned n);

// Divisor of the monomial in doubled units:
//   sum_i e_i * div_i + ebar_i * translate(c, div_i).
GroupRingElt divisor_of_monomial(const ProductSpec& spec, const EigenvalueMonomial& mon);

// Largest j such that the monomial's divisor dominates j * (all-2 vector),
// i.e. the eigenvalue is divisible by q^j at divisor level.
unsigned tate_coniveau(const ProductSpec& spec, const EigenvalueMonomial& mon);

// One eigenvalue slot of a monomial: copy `copy` of factor `factor`, either
// the alpha_i eigenvector (conjugate = false) or the alpha_i^c one.
struct EigenvalueSlot {
  std::size_t factor = 0;
  bool conjugate = false;
  unsigned copy = 0;

  friend bool operator==(const EigenvalueSlot&, const EigenvalueSlot&) = default;
};

struct WitnessPair {
  EigenvalueSlot left;
  EigenvalueSlot right;

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

// Maximum number of disjoint slot pairs whose divisors sum exactly to the
// all-2 vector (each pair's product is q at divisor level), together with one
// maximal witness.  Ordinary slots pair with complementary sections,
// supersingular slots pair with each other; ordinary-supersingular pairs are
// ruled out by parity.
struct WitnessedResult {
  unsigned j = 0;
  std::vector<WitnessPair> pairs;
};

WitnessedResult witnessed_coniveau(const ProductSpec& spec, const EigenvalueMonomial& mon);

// Aggregated per-monomial coniveau analysis for H^n of a product.
struct MonomialReport {
  EigenvalueMonomial monomial;
  unsigned tate = 0;
  unsigned witnessed = 0;
  std::vector<WitnessPair> witness_pairs;
};

struct ConiveauReport {
  unsigned degree = 0;
  std::vector<MonomialReport> monomials;
  // Indices into `monomials` of the gap monomials (tate > witnessed).
  std::vector<std::size_t> gaps;
};

ConiveauReport analyze(const ProductSpec& spec, unsigned n, unsigned jobs = 1);

// --- Exhaustive verifiers -------------------------------------------------

// Counterexample payloads keep enough data to reproduce the configuration.
struct Lemma1Counterexample {
  unsigned k = 0;
  unsigned c = 0;
  std::array<GroupRingElt, 3> divisors;
};

struct Lemma1Report {
  std::uint64_t configurations_checked = 0;
  std::uint64_t contexts_scanned = 0;
  std::vector<Lemma1Counterexample> counterexamples;
};

// For every rank k <= kmax, every valid conjugation element c, and every
// unordered triple (with repetition) drawn from {supersingular} united with
// the elliptic sections of the context: whenever the triple's divisor sum
// dominates the all-2 vector, some pair of the triple must sum exactly to the
// all-2 vector.  Reports all configurations checked; the counterexample list
// is expected to be empty.
Lemma1Report verify_lemma1(unsigned kmax, unsigned jobs = 1,
                           unsigned rank_cap = kDefaultRankCap);

struct Thm2Counterexample {
  bool conjugated_variant = false;
  std::array<Coeff, 3> n;
};

struct Thm2Report {
  std::uint64_t configurations_checked = 0;
  std::vector<Thm2Counterexample> counterexamples;
  // Structural facts that extend the bounded scan to all nonnegative
  // exponents: m1, m2, m3 all vanish at c, and m1, m2, translate(c, m3) all
  // vanish at s1*s2.
  bool zero_at_c = false;
  bool zero_at_s1s2 = false;
};

// For all (n1,n2,n3) in [0,bound]^3 minus the origin: n1*m1 + n2*m2 + n3*m3
// must not dominate the all-1 vector (the divisor of p^(r/2) in doubled
// units), and likewise with m3 replaced by translate(c, m3).  Also asserts
// the structural zero coefficients that certify the claim for all n.
Thm2Report verify_thm2(const FieldContext& ctx, Coeff bound);

// --- Desk-scale equality scans ---------------------------------------------

struct EqualityGap {
  unsigned k = 0;
  unsigned c = 0;
  std::vector<WeilClass> classes;
  std::vector<unsigned> multiplicities;
  EigenvalueMonomial monomial;
  unsigned tate = 0;
  unsigned witnessed = 0;
};

struct EqualityScanReport {
  std::uint64_t specs_checked = 0;
  std::uint64_t monomials_checked = 0;
  std::vector<EqualityGap> gaps;
};

// Exhausts every product with at most `max_classes` distinct elliptic classes
// (drawn from the supersingular class plus all elliptic sections of each
// context with k <= kmax), multiplicities up to max_mult, and all monomials
// of degree <= max_degree, recording every monomial with tate != witnessed.
EqualityScanReport scan_equality_small_products(unsigned kmax, unsigned max_classes,
                                                unsigned max_mult, unsigned max_degree,
                                                unsigned jobs = 1);

// Exhausts degree-3 monomials for the maximal product per context (every
// elliptic class of the context, each with multiplicity max_mult); any
// product with fewer classes or smaller multiplicities embeds into it.
EqualityScanReport scan_equality_degree3(unsigned kmax, unsigned max_mult,
                                         unsigned jobs = 1);

}  // namespace weilcomb
