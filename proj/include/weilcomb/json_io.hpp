#pragma once

#include <string>

#include <json.hpp>

#include "weilcomb/coniveau.hpp"
#include "weilcomb/groupring.hpp"
#include "weilcomb/relations.hpp"
#include "weilcomb/weilmodel.hpp"

namespace weilcomb::io {

using nlohmann::json;

// Group-ring elements serialize as plain arrays of 2^k integers; group
// elements as their integer index.
json to_json(const GroupRingElt& x);
GroupRingElt groupring_from_json(unsigned rank, const json& j);

json to_json(const FieldContext& ctx);
json to_json(const WeilClass& cls);
json to_json(const Classification& cl);

json to_json(const ProductSpec& spec);
json to_json(const EigenvalueSlot& slot);
json to_json(const WitnessPair& pair);

// {spec, degree, monomials: [{exponents, tate, witnessed, witness_pairs}],
//  gaps: [{index, exponents, name, tate, witnessed}]}
json to_json(const ProductSpec& spec, const ConiveauReport& report);

// {configurations_checked, contexts_scanned, counterexamples: [...]}
json to_json(const Lemma1Report& report);
// {configurations_checked, counterexamples, zero_at_c, zero_at_s1s2}
json to_json(const Thm2Report& report);
json to_json(const EqualityScanReport& report);

// {exponents: {slot-name: int, ...}, q_power: int}; zero exponents included
// so the slot set is always explicit.
json to_json(const GeneratorSet& gens, const Relation& rel);
Relation relation_from_json(const GeneratorSet& gens, const json& j);

// {member, certificate: [...]|null, obstruction: string|null}
json to_json(const GeneratorSet& gens, const MembershipResult& result);

// Human-readable relation rendering such as "alpha1*(beta^c)^2 = q^3".
std::string relation_to_string(const GeneratorSet& gens, const Relation& rel);

}  // namespace weilcomb::io
