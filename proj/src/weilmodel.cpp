#include "weilcomb/weilmodel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace weilcomb {

namespace {

// Find-with-path-compression over a plain parent vector.
std::size_t uf_find(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

void uf_union(std::vector<std::size_t>& parent, std::size_t a, std::size_t b) {
  a = uf_find(parent, a);
  b = uf_find(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

}  // namespace

FieldContext::FieldContext(unsigned k, GroupElement c) : rank(k), conj(c) {
  require_rank_within(k, kHardRankLimit);
  if (c.index >= group_order()) {
    throw std::invalid_argument("conjugation element index " + std::to_string(c.index) +
                                " out of range for rank " + std::to_string(k));
  }
  if (k == 0 && !c.is_identity()) {
    throw std::invalid_argument("rank 0 requires the identity as conjugation element");
  }
  if (k >= 1 && c.is_identity()) {
    throw std::invalid_argument("conjugation element must not be the identity for rank >= 1");
  }
}

std::vector<std::array<GroupElement, 2>> FieldContext::cosets() const {
  std::vector<std::array<GroupElement, 2>> out;
  for (unsigned g = 0; g < group_order(); ++g) {
    const unsigned cg = g ^ conj.index;
    if (g <= cg) out.push_back({GroupElement{g}, GroupElement{cg}});
  }
  return out;
}

FieldContext standard_context() { return FieldContext(3, GroupElement{7}); }

std::string to_string(WeilKind kind) {
  return kind == WeilKind::ordinary ? "ordinary" : "supersingular";
}

WeilKind weil_kind_from_string(const std::string& s) {
  if (s == "ordinary") return WeilKind::ordinary;
  if (s == "supersingular") return WeilKind::supersingular;
  throw std::invalid_argument("unknown Weil class kind '" + s + "'");
}

bool is_section(const FieldContext& ctx, const GroupRingElt& m) {
  if (m.rank() != ctx.rank) return false;
  for (unsigned g = 0; g < ctx.group_order(); ++g) {
    const Coeff a = m[GroupElement{g}];
    if (a != 0 && a != 2) return false;
    if (a + m[ctx.conj * GroupElement{g}] != 2) return false;
  }
  return true;
}

bool is_ordinary_divisor(const FieldContext& ctx, const GroupRingElt& m) {
  if (m.rank() != ctx.rank) {
    throw std::invalid_argument("rank mismatch in is_ordinary_divisor()");
  }
  for (unsigned g = 0; g < ctx.group_order(); ++g) {
    const Coeff a = m[GroupElement{g}];
    const Coeff b = m[ctx.conj * GroupElement{g}];
    if (std::min(a, b) != 0) return false;
  }
  return true;
}

WeilClass make_ordinary(const FieldContext& ctx, std::string label, GroupRingElt divisor) {
  WeilClass cls{std::move(label), WeilKind::ordinary, std::move(divisor)};
  validate_class(ctx, cls);
  return cls;
}

WeilClass make_ordinary_by_index(const FieldContext& ctx, std::string label,
                                 std::size_t section_index) {
  const auto sections = enumerate_sections(ctx);
  if (section_index >= sections.size()) {
    throw std::invalid_argument("section index " + std::to_string(section_index) +
                                " out of range; context has " + std::to_string(sections.size()) +
                                " sections");
  }
  return WeilClass{std::move(label), WeilKind::ordinary, sections[section_index]};
}

WeilClass make_supersingular(const FieldContext& ctx, std::string label) {
  return WeilClass{std::move(label), WeilKind::supersingular,
                   GroupRingElt::constant(ctx.rank, 1)};
}

void validate_class(const FieldContext& ctx, const WeilClass& cls) {
  if (cls.label.empty()) throw std::invalid_argument("class label must be nonempty");
  if (cls.divisor.rank() != ctx.rank) {
    throw std::invalid_argument("class '" + cls.label + "': divisor rank " +
                                std::to_string(cls.divisor.rank()) + " does not match context rank " +
                                std::to_string(ctx.rank));
  }
  if (cls.kind == WeilKind::supersingular) {
    Coeff t = 0;
    if (!cls.divisor.is_constant(&t) || t != 1) {
      throw std::invalid_argument("class '" + cls.label +
                                  "': supersingular divisor must be the all-1 vector");
    }
    return;
  }
  if (!is_section(ctx, cls.divisor)) {
    throw std::invalid_argument("class '" + cls.label +
                                "': ordinary divisor must be a section (entries in {0,2} with "
                                "m[g] + m[c*g] = 2 for all g)");
  }
}

std::vector<GroupRingElt> enumerate_sections(const FieldContext& ctx) {
  if (ctx.rank == 0) return {};
  const auto cosets = ctx.cosets();
  if (cosets.size() > 20) {
    throw std::length_error("section census of size 2^" + std::to_string(cosets.size()) +
                            " exceeds the enumeration budget");
  }
  const std::size_t count = std::size_t{1} << cosets.size();
  std::vector<GroupRingElt> out;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    GroupRingElt m(ctx.rank);
    for (std::size_t t = 0; t < cosets.size(); ++t) {
      const GroupElement chosen = (mask >> t) & 1 ? cosets[t][1] : cosets[t][0];
      m[chosen] = 2;
    }
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(),
            [](const GroupRingElt& a, const GroupRingElt& b) { return a.coeffs() < b.coeffs(); });
  return out;
}

std::vector<GroupRingElt> enumerate_elliptic_sections(const FieldContext& ctx) {
  std::vector<GroupRingElt> out;
  for (auto& m : enumerate_sections(ctx)) {
    if (classify_section(ctx, m).is_elliptic) out.push_back(std::move(m));
  }
  return out;
}

Classification classify_section(const FieldContext& ctx, const GroupRingElt& m) {
  if (!is_section(ctx, m)) {
    throw std::invalid_argument("classify_section: input is not a section of the context");
  }
  Classification out;
  out.stab = stabilizer(m);
  out.field_degree = static_cast<unsigned>(ctx.group_order() / out.stab.size());
  out.is_elliptic = out.field_degree == 2;
  out.dimension = out.field_degree / 2;
  return out;
}

Classification classify(const FieldContext& ctx, const WeilClass& cls) {
  validate_class(ctx, cls);
  if (cls.kind == WeilKind::supersingular) {
    Classification out;
    out.stab = stabilizer(cls.divisor);  // all of G
    out.field_degree = 2;
    out.is_elliptic = true;
    out.dimension = 1;
    return out;
  }
  return classify_section(ctx, cls.divisor);
}

OrbitReport orbits(const FieldContext& ctx, bool mod_c, bool mod_galois) {
  OrbitReport report;
  report.sections = enumerate_sections(ctx);
  std::map<std::vector<Coeff>, std::size_t> index_of;
  for (std::size_t i = 0; i < report.sections.size(); ++i) {
    index_of.emplace(report.sections[i].coeffs(), i);
  }

  std::vector<std::size_t> parent(report.sections.size());
  std::iota(parent.begin(), parent.end(), 0);

  std::vector<GroupElement> movers;
  if (mod_c) movers.push_back(ctx.conj);
  if (mod_galois) {
    // Generators suffice: the translations they induce generate all of them.
    for (unsigned i = 0; i < ctx.rank; ++i) movers.push_back(generator(i));
  }
  for (std::size_t i = 0; i < report.sections.size(); ++i) {
    for (GroupElement g : movers) {
      const auto moved = translate(g, report.sections[i]);
      uf_union(parent, i, index_of.at(moved.coeffs()));
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> grouped;
  for (std::size_t i = 0; i < parent.size(); ++i) {
    grouped[uf_find(parent, i)].push_back(i);
  }
  for (auto& [root, members] : grouped) {
    report.classes.push_back(std::move(members));
  }
  return report;
}

std::vector<std::size_t> class_sizes_mod_c(const FieldContext& ctx, const OrbitReport& report) {
  std::vector<std::size_t> out;
  for (const auto& members : report.classes) {
    std::set<std::vector<Coeff>> canon;
    for (std::size_t i : members) {
      const auto& m = report.sections.at(i);
      canon.insert(std::min(m.coeffs(), translate(ctx.conj, m).coeffs()));
    }
    out.push_back(canon.size());
  }
  return out;
}

namespace {

void require_standard_context(const FieldContext& ctx, const char* what) {
  if (!(ctx == standard_context())) {
    throw std::invalid_argument(std::string(what) +
                                " requires the standard context k=3, c=s1*s2*s3");
  }
}

// Doubled section obtained from a product of (1 + g) factors in halved units.
GroupRingElt doubled_product_section(const FieldContext& ctx,
                                     std::initializer_list<GroupElement> gs) {
  GroupRingElt halved = GroupRingElt::unit(ctx.rank);
  for (GroupElement g : gs) {
    halved = halved * (GroupRingElt::unit(ctx.rank) + GroupRingElt::basis(ctx.rank, g));
  }
  return 2 * halved;
}

}  // namespace

std::vector<WeilClass> standard_triple(const FieldContext& ctx) {
  require_standard_context(ctx, "standard_triple");
  const GroupElement s1 = generator(0), s2 = generator(1), s3 = generator(2);
  return {
      make_ordinary(ctx, "alpha1", doubled_product_section(ctx, {s2, s3})),
      make_ordinary(ctx, "alpha2", doubled_product_section(ctx, {s1, s3})),
      make_ordinary(ctx, "alpha3", doubled_product_section(ctx, {s1, s2})),
  };
}

std::vector<WeilClass> standard_quadruple(const FieldContext& ctx) {
  require_standard_context(ctx, "standard_quadruple");
  auto out = standard_triple(ctx);
  const GroupElement s1s2{3}, s1s3{5};
  out.push_back(make_ordinary(ctx, "alpha4", doubled_product_section(ctx, {s1s2, s1s3})));
  return out;
}

WeilClass construct_beta(const FieldContext& ctx) {
  require_standard_context(ctx, "construct_beta");
  GroupRingElt halved = GroupRingElt::unit(ctx.rank);
  for (unsigned i = 0; i < 3; ++i) {
    halved += GroupRingElt::basis(ctx.rank, generator(i));
  }
  return make_ordinary(ctx, "beta", 2 * halved);
}

}  // namespace weilcomb
