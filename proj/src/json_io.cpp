#include "weilcomb/json_io.hpp"

#include <stdexcept>

namespace weilcomb::io {

json to_json(const GroupRingElt& x) { return json(x.coeffs()); }

GroupRingElt groupring_from_json(unsigned rank, const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("group-ring element must be a JSON array of integers");
  }
  std::vector<Coeff> coeffs;
  coeffs.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_number_integer()) {
      throw std::invalid_argument("group-ring coefficients must be integers");
    }
    coeffs.push_back(entry.get<Coeff>());
  }
  return GroupRingElt(rank, std::move(coeffs));
}

json to_json(const FieldContext& ctx) {
  return json{{"k", ctx.rank}, {"c", ctx.conj.index}};
}

json to_json(const WeilClass& cls) {
  return json{{"label", cls.label},
              {"kind", to_string(cls.kind)},
              {"divisor", to_json(cls.divisor)}};
}

json to_json(const Classification& cl) {
  json stab = json::array();
  for (GroupElement g : cl.stab) stab.push_back(g.index);
  return json{{"stabilizer", std::move(stab)},
              {"field_degree", cl.field_degree},
              {"elliptic", cl.is_elliptic},
              {"dimension", cl.dimension}};
}

json to_json(const ProductSpec& spec) {
  json factors = json::array();
  for (const auto& f : spec.factors()) {
    json entry = to_json(f.cls);
    entry["multiplicity"] = f.multiplicity;
    factors.push_back(std::move(entry));
  }
  return json{{"context", to_json(spec.ctx())},
              {"factors", std::move(factors)},
              {"total_dimension", spec.total_dimension()}};
}

json to_json(const EigenvalueSlot& slot) {
  return json{{"factor", slot.factor}, {"conjugate", slot.conjugate}, {"copy", slot.copy}};
}

json to_json(const WitnessPair& pair) {
  return json{{"left", to_json(pair.left)}, {"right", to_json(pair.right)}};
}

namespace {

json exponents_to_json(const EigenvalueMonomial& mon) {
  json out = json::array();
  for (const auto& [e, ebar] : mon.exponents) out.push_back(json::array({e, ebar}));
  return out;
}

}  // namespace

json to_json(const ProductSpec& spec, const ConiveauReport& report) {
  json monomials = json::array();
  for (const auto& row : report.monomials) {
    json pairs = json::array();
    for (const auto& pair : row.witness_pairs) pairs.push_back(to_json(pair));
    monomials.push_back(json{{"exponents", exponents_to_json(row.monomial)},
                             {"name", row.monomial.to_string(spec)},
                             {"tate", row.tate},
                             {"witnessed", row.witnessed},
                             {"witness_pairs", std::move(pairs)}});
  }
  json gaps = json::array();
  for (std::size_t index : report.gaps) {
    const auto& row = report.monomials[index];
    gaps.push_back(json{{"index", index},
                        {"exponents", exponents_to_json(row.monomial)},
                        {"name", row.monomial.to_string(spec)},
                        {"tate", row.tate},
                        {"witnessed", row.witnessed}});
  }
  return json{{"spec", to_json(spec)},
              {"degree", report.degree},
              {"monomials", std::move(monomials)},
              {"gaps", std::move(gaps)}};
}

json to_json(const Lemma1Report& report) {
  json counterexamples = json::array();
  for (const auto& ce : report.counterexamples) {
    counterexamples.push_back(json{{"k", ce.k},
                                   {"c", ce.c},
                                   {"divisors",
                                    json::array({to_json(ce.divisors[0]), to_json(ce.divisors[1]),
                                                 to_json(ce.divisors[2])})}});
  }
  return json{{"configurations_checked", report.configurations_checked},
              {"contexts_scanned", report.contexts_scanned},
              {"counterexamples", std::move(counterexamples)}};
}

json to_json(const Thm2Report& report) {
  json counterexamples = json::array();
  for (const auto& ce : report.counterexamples) {
    counterexamples.push_back(json{{"conjugated_variant", ce.conjugated_variant},
                                   {"n", json::array({ce.n[0], ce.n[1], ce.n[2]})}});
  }
  return json{{"configurations_checked", report.configurations_checked},
              {"counterexamples", std::move(counterexamples)},
              {"zero_at_c", report.zero_at_c},
              {"zero_at_s1s2", report.zero_at_s1s2}};
}

json to_json(const EqualityScanReport& report) {
  json gaps = json::array();
  for (const auto& gap : report.gaps) {
    json classes = json::array();
    for (const auto& cls : gap.classes) classes.push_back(to_json(cls));
    gaps.push_back(json{{"k", gap.k},
                        {"c", gap.c},
                        {"classes", std::move(classes)},
                        {"multiplicities", gap.multiplicities},
                        {"exponents", exponents_to_json(gap.monomial)},
                        {"tate", gap.tate},
                        {"witnessed", gap.witnessed}});
  }
  return json{{"specs_checked", report.specs_checked},
              {"monomials_checked", report.monomials_checked},
              {"gaps", std::move(gaps)}};
}

json to_json(const GeneratorSet& gens, const Relation& rel) {
  if (rel.exponents.size() != gens.slot_count()) {
    throw std::invalid_argument("relation dimension does not match the generator set");
  }
  json exponents = json::object();
  for (std::size_t s = 0; s < gens.slot_count(); ++s) {
    exponents[gens.slots()[s].name] = rel.exponents[s];
  }
  return json{{"exponents", std::move(exponents)}, {"q_power", rel.q_power}};
}

Relation relation_from_json(const GeneratorSet& gens, const json& j) {
  if (!j.is_object() || !j.contains("exponents") || !j.contains("q_power")) {
    throw std::invalid_argument("relation JSON must have fields {exponents, q_power}");
  }
  Relation rel;
  rel.exponents.assign(gens.slot_count(), 0);
  for (const auto& [name, value] : j.at("exponents").items()) {
    bool matched = false;
    for (std::size_t s = 0; s < gens.slot_count(); ++s) {
      if (gens.slots()[s].name == name) {
        rel.exponents[s] = value.get<Coeff>();
        matched = true;
        break;
      }
    }
    if (!matched) throw std::invalid_argument("unknown relation slot '" + name + "'");
  }
  rel.q_power = j.at("q_power").get<Coeff>();
  return rel;
}

json to_json(const GeneratorSet& gens, const MembershipResult& result) {
  json out{{"member", result.member}};
  if (result.member) {
    out["certificate"] = json(result.certificate);
    out["obstruction"] = nullptr;
  } else {
    out["certificate"] = nullptr;
    out["obstruction"] =
        result.obstruction ? json(describe_obstruction(*result.obstruction, &gens)) : json();
  }
  return out;
}

std::string relation_to_string(const GeneratorSet& gens, const Relation& rel) {
  if (rel.exponents.size() != gens.slot_count()) {
    throw std::invalid_argument("relation dimension does not match the generator set");
  }
  std::string lhs;
  for (std::size_t s = 0; s < gens.slot_count(); ++s) {
    const Coeff e = rel.exponents[s];
    if (e == 0) continue;
    if (!lhs.empty()) lhs += "*";
    const std::string& name = gens.slots()[s].name;
    const bool needs_parens = name.find('^') != std::string::npos;
    if (e == 1) {
      lhs += name;
    } else if (needs_parens) {
      lhs += "(" + name + ")^" + std::to_string(e);
    } else {
      lhs += name + "^" + std::to_string(e);
    }
  }
  if (lhs.empty()) lhs = "1";
  std::string rhs = "q";
  if (rel.q_power != 1) rhs += "^" + std::to_string(rel.q_power);
  if (rel.q_power == 0) rhs = "1";
  return lhs + " = " + rhs;
}

}  // namespace weilcomb::io
