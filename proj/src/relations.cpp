#include "weilcomb/relations.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace weilcomb {

GeneratorSet::GeneratorSet(FieldContext ctx, std::vector<WeilClass> classes)
    : ctx_(ctx), classes_(std::move(classes)) {
  std::set<std::string> labels;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const WeilClass& cls = classes_[i];
    validate_class(ctx_, cls);
    if (!labels.insert(cls.label).second) {
      throw std::invalid_argument("duplicate class label '" + cls.label + "'");
    }
    slots_.push_back(GeneratorSlot{cls.label, i, false, cls.divisor});
    slots_.push_back(GeneratorSlot{cls.label + "^c", i, true, translate(ctx_.conj, cls.divisor)});
  }
}

Coeff Relation::degree() const {
  Coeff total = 0;
  for (Coeff e : exponents) total = checked::add(total, e);
  return total;
}

std::vector<Coeff> Relation::extended() const {
  std::vector<Coeff> out = exponents;
  out.push_back(q_power);
  return out;
}

namespace {

// Weighted divisor sum over the slots, exact.
GroupRingElt weighted_sum(const GeneratorSet& gens, const std::vector<Coeff>& e) {
  if (e.size() != gens.slot_count()) {
    throw std::invalid_argument("exponent vector has " + std::to_string(e.size()) +
                                " entries; generator set has " +
                                std::to_string(gens.slot_count()) + " slots");
  }
  GroupRingElt sum(gens.ctx().rank);
  for (std::size_t s = 0; s < e.size(); ++s) {
    if (e[s] != 0) sum += e[s] * gens.slots()[s].divisor;
  }
  return sum;
}

}  // namespace

bool is_relation(const GeneratorSet& gens, const std::vector<Coeff>& e, Coeff j) {
  return weighted_sum(gens, e) == GroupRingElt::constant(gens.ctx().rank, checked::mul(2, j));
}

bool is_relation(const GeneratorSet& gens, const Relation& rel) {
  return is_relation(gens, rel.exponents, rel.q_power);
}

std::optional<Coeff> q_power_of(const GeneratorSet& gens, const std::vector<Coeff>& e) {
  const GroupRingElt sum = weighted_sum(gens, e);
  Coeff value = 0;
  if (!sum.is_constant(&value) || value % 2 != 0) return std::nullopt;
  return value / 2;
}

std::vector<Relation> degree2_relations(const GeneratorSet& gens) {
  const GroupRingElt q_div = gens.ctx().q_divisor();
  std::vector<Relation> out;
  for (std::size_t a = 0; a < gens.slot_count(); ++a) {
    for (std::size_t b = a + 1; b < gens.slot_count(); ++b) {
      if (gens.slots()[a].divisor + gens.slots()[b].divisor == q_div) {
        Relation rel;
        rel.exponents.assign(gens.slot_count(), 0);
        rel.exponents[a] = 1;
        rel.exponents[b] = 1;
        rel.q_power = 1;
        out.push_back(std::move(rel));
      }
    }
  }
  return out;
}

RelationLattice degree2_lattice(const GeneratorSet& gens) {
  RelationLattice lat;
  for (const Relation& rel : degree2_relations(gens)) {
    lat.basis.push_back(rel.extended());
  }
  return lat;
}

MembershipResult lattice_membership(const Relation& rel, const RelationLattice& lat) {
  const std::vector<Coeff> target = rel.extended();
  for (const auto& column : lat.basis) {
    if (column.size() != target.size()) {
      throw std::invalid_argument("lattice basis dimension does not match the relation");
    }
  }
  const IntegerSolveResult solved = solve_integer_combination(lat.basis, target);
  MembershipResult out;
  out.member = solved.solvable;
  out.certificate = solved.solution;
  out.obstruction = solved.obstruction;
  return out;
}

std::string describe_obstruction(const LatticeObstruction& obs, const GeneratorSet* gens) {
  std::string where = "coordinate " + std::to_string(obs.row);
  if (gens != nullptr) {
    if (obs.row < gens->slot_count()) {
      where += " (slot " + gens->slots()[obs.row].name + ")";
    } else if (obs.row == gens->slot_count()) {
      where += " (q-power)";
    }
  }
  if (obs.modulus == 0) {
    return where + ": lattice vanishes there, but the relation has residue " +
           std::to_string(obs.residue);
  }
  return where + ": residue " + std::to_string(obs.residue) + " modulo " +
         std::to_string(obs.modulus);
}

std::vector<Relation> find_exotic(const GeneratorSet& gens, unsigned max_degree) {
  if (max_degree < 2) {
    throw std::invalid_argument("find_exotic requires max_degree >= 2");
  }
  if (max_degree > kExoticDegreeCeiling) {
    throw std::invalid_argument("max_degree " + std::to_string(max_degree) +
                                " exceeds the ceiling " + std::to_string(kExoticDegreeCeiling));
  }
  const RelationLattice lat = degree2_lattice(gens);
  const std::size_t nslots = gens.slot_count();
  std::vector<Relation> out;

  // For each total degree, walk exponent vectors in lexicographic order,
  // keeping the weighted divisor sum incrementally.
  std::vector<Coeff> e(nslots, 0);
  GroupRingElt sum(gens.ctx().rank);
  const std::function<void(std::size_t, unsigned)> dfs = [&](std::size_t pos, unsigned budget) {
    if (pos == nslots) {
      if (budget != 0) return;
      Coeff value = 0;
      if (!sum.is_constant(&value) || value % 2 != 0) return;
      Relation rel{e, value / 2};
      if (!lattice_membership(rel, lat).member) out.push_back(std::move(rel));
      return;
    }
    for (unsigned v = 0; v <= budget; ++v) {
      e[pos] = v;
      if (v > 0) sum += gens.slots()[pos].divisor;  // incremental: one unit at a time
      dfs(pos + 1, budget - v);
    }
    if (budget > 0) sum -= static_cast<Coeff>(budget) * gens.slots()[pos].divisor;
    e[pos] = 0;
  };
  for (unsigned degree = 0; degree <= max_degree; ++degree) {
    dfs(0, degree);
  }
  return out;
}

std::optional<std::vector<Coeff>> monoid_certificate(const GeneratorSet& gens,
                                                     const Relation& rel,
                                                     const std::vector<Relation>& degree2) {
  if (rel.exponents.size() != gens.slot_count()) {
    throw std::invalid_argument("relation dimension does not match the generator set");
  }
  if (rel.q_power < 0) return std::nullopt;
  for (Coeff e : rel.exponents) {
    if (e < 0) return std::nullopt;
  }

  // Each degree-2 relation carries q-power 1, so a nonnegative combination
  // reaching q_power = j uses exactly j generators (counted with
  // multiplicity).  Depth-first search with a nonnegativity prune.
  std::vector<Coeff> residual = rel.exponents;
  std::vector<Coeff> counts(degree2.size(), 0);
  std::optional<std::vector<Coeff>> found;
  const std::function<void(std::size_t, Coeff)> dfs = [&](std::size_t g, Coeff remaining) {
    if (found) return;
    if (remaining == 0) {
      if (std::all_of(residual.begin(), residual.end(), [](Coeff r) { return r == 0; })) {
        found = counts;
      }
      return;
    }
    if (g == degree2.size()) return;
    // Max usable copies of generator g: limited by remaining budget and by
    // the residual on its support.
    Coeff cap = remaining;
    for (std::size_t s = 0; s < residual.size(); ++s) {
      if (degree2[g].exponents[s] != 0) {
        cap = std::min(cap, residual[s] / degree2[g].exponents[s]);
      }
    }
    for (Coeff use = cap; use >= 0 && !found; --use) {
      if (use != 0) {
        for (std::size_t s = 0; s < residual.size(); ++s) {
          residual[s] -= use * degree2[g].exponents[s];
        }
      }
      counts[g] = use;
      dfs(g + 1, remaining - use);
      if (use != 0) {
        for (std::size_t s = 0; s < residual.size(); ++s) {
          residual[s] += use * degree2[g].exponents[s];
        }
      }
      counts[g] = 0;
    }
  };
  dfs(0, rel.q_power);
  return found;
}

}  // namespace weilcomb
