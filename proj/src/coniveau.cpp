#include "weilcomb/coniveau.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace weilcomb {

namespace {

// Runs `work(chunk, lo, hi)` over [0, count) split into at most `jobs`
// contiguous chunks.  Chunk boundaries depend only on (count, jobs), so any
// result placed by index is deterministic regardless of scheduling.
void run_chunked(unsigned jobs, std::size_t count,
                 const std::function<void(unsigned, std::size_t, std::size_t)>& work) {
  if (count == 0) return;
  jobs = std::max(1u, jobs);
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  if (jobs == 1) {
    work(0, 0, count);
    return;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> threads;
  const std::size_t base = count / jobs;
  const std::size_t extra = count % jobs;
  std::size_t lo = 0;
  for (unsigned t = 0; t < jobs; ++t) {
    const std::size_t hi = lo + base + (t < extra ? 1 : 0);
    threads.emplace_back([&, t, lo, hi]() {
      try {
        work(t, lo, hi);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
    lo = hi;
  }
  for (auto& th : threads) th.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

}  // namespace

ProductSpec::ProductSpec(FieldContext ctx, std::vector<ProductFactor> factors)
    : ctx_(ctx), factors_(std::move(factors)) {
  std::set<std::string> labels;
  for (const auto& f : factors_) {
    validate_class(ctx_, f.cls);
    if (f.multiplicity < 1) {
      throw std::invalid_argument("factor '" + f.cls.label + "': multiplicity must be >= 1");
    }
    if (!labels.insert(f.cls.label).second) {
      throw std::invalid_argument("duplicate factor label '" + f.cls.label + "'");
    }
    const Classification cl = classify(ctx_, f.cls);
    if (!cl.is_elliptic) {
      throw std::invalid_argument("factor '" + f.cls.label + "' is not elliptic (field degree " +
                                  std::to_string(cl.field_degree) +
                                  "); the product models elliptic curves only");
    }
    total_dimension_ += f.multiplicity;
  }
}

unsigned EigenvalueMonomial::degree() const {
  unsigned n = 0;
  for (const auto& [e, ebar] : exponents) n += e + ebar;
  return n;
}

EigenvalueMonomial EigenvalueMonomial::conjugate() const {
  EigenvalueMonomial out = *this;
  for (auto& [e, ebar] : out.exponents) std::swap(e, ebar);
  return out;
}

std::string EigenvalueMonomial::to_string(const ProductSpec& spec) const {
  if (exponents.size() != spec.factors().size()) {
    throw std::invalid_argument("monomial arity does not match the product");
  }
  std::string out;
  const auto append = [&out](const std::string& name, unsigned power, bool wrap) {
    if (power == 0) return;
    if (!out.empty()) out += "*";
    if (power == 1) {
      out += name;
    } else if (wrap) {
      out += "(" + name + ")^" + std::to_string(power);
    } else {
      out += name + "^" + std::to_string(power);
    }
  };
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const std::string& label = spec.factors()[i].cls.label;
    append(label, exponents[i][0], false);
    append(label + "^c", exponents[i][1], true);
  }
  return out.empty() ? "1" : out;
}

std::vector<EigenvalueMonomial> eigenvalue_monomials(const ProductSpec& spec, unsigned n) {
  if (n > 2 * spec.total_dimension()) {
    throw std::invalid_argument("degree " + std::to_string(n) + " exceeds 2 x total dimension " +
                                std::to_string(2 * spec.total_dimension()));
  }
  const std::size_t r = spec.factors().size();
  std::vector<unsigned> caps(2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    caps[2 * i] = caps[2 * i + 1] = spec.factors()[i].multiplicity;
  }
  std::vector<unsigned> suffix(2 * r + 1, 0);
  for (std::size_t t = 2 * r; t-- > 0;) suffix[t] = suffix[t + 1] + caps[t];

  std::vector<EigenvalueMonomial> out;
  std::vector<unsigned> expo(2 * r, 0);
  const std::function<void(std::size_t, unsigned)> dfs = [&](std::size_t pos, unsigned remaining) {
    if (pos == 2 * r) {
      EigenvalueMonomial mon;
      mon.exponents.resize(r);
      for (std::size_t i = 0; i < r; ++i) mon.exponents[i] = {expo[2 * i], expo[2 * i + 1]};
      out.push_back(std::move(mon));
      return;
    }
    const unsigned lo = suffix[pos + 1] < remaining ? remaining - suffix[pos + 1] : 0;
    const unsigned hi = std::min(caps[pos], remaining);
    for (unsigned v = lo; v <= hi; ++v) {
      expo[pos] = v;
      dfs(pos + 1, remaining - v);
    }
    expo[pos] = 0;
  };
  dfs(0, n);
  return out;
}

namespace {

void validate_monomial(const ProductSpec& spec, const EigenvalueMonomial& mon) {
  if (mon.exponents.size() != spec.factors().size()) {
    throw std::invalid_argument("monomial arity does not match the product");
  }
  for (std::size_t i = 0; i < mon.exponents.size(); ++i) {
    const unsigned mult = spec.factors()[i].multiplicity;
    if (mon.exponents[i][0] > mult || mon.exponents[i][1] > mult) {
      throw std::invalid_argument("monomial exponent exceeds multiplicity of factor '" +
                                  spec.factors()[i].cls.label + "'");
    }
  }
}

}  // namespace

GroupRingElt divisor_of_monomial(const ProductSpec& spec, const EigenvalueMonomial& mon) {
  validate_monomial(spec, mon);
  GroupRingElt d(spec.ctx().rank);
  for (std::size_t i = 0; i < mon.exponents.size(); ++i) {
    const GroupRingElt& div = spec.factors()[i].cls.divisor;
    const auto [e, ebar] = mon.exponents[i];
    if (e > 0) d += static_cast<Coeff>(e) * div;
    if (ebar > 0) d += static_cast<Coeff>(ebar) * translate(spec.ctx().conj, div);
  }
  return d;
}

unsigned tate_coniveau(const ProductSpec& spec, const EigenvalueMonomial& mon) {
  const GroupRingElt d = divisor_of_monomial(spec, mon);
  return static_cast<unsigned>(d.min_coeff() / 2);
}

WitnessedResult witnessed_coniveau(const ProductSpec& spec, const EigenvalueMonomial& mon) {
  validate_monomial(spec, mon);
  const unsigned rank = spec.ctx().rank;

  // Slots in deterministic order: factor-major, alpha before alpha^c, copies
  // ascending; grouped by their divisor coefficient vector.
  std::map<std::vector<Coeff>, std::vector<EigenvalueSlot>> groups;
  for (std::size_t i = 0; i < mon.exponents.size(); ++i) {
    const GroupRingElt& div = spec.factors()[i].cls.divisor;
    const GroupRingElt cdiv = translate(spec.ctx().conj, div);
    for (unsigned t = 0; t < mon.exponents[i][0]; ++t) {
      groups[div.coeffs()].push_back(EigenvalueSlot{i, false, t});
    }
    for (unsigned t = 0; t < mon.exponents[i][1]; ++t) {
      groups[cdiv.coeffs()].push_back(EigenvalueSlot{i, true, t});
    }
  }

  // Two slots pair exactly when their divisors are complementary (sum the
  // all-2 vector).  The compatibility graph is a union of complete bipartite
  // graphs between complementary groups plus cliques on self-complementary
  // groups, so greedy counting is an exact maximum matching.
  WitnessedResult out;
  const std::vector<Coeff> all2(std::size_t{1} << rank, 2);
  for (const auto& [key, slots] : groups) {
    std::vector<Coeff> comp(key.size());
    for (std::size_t g = 0; g < key.size(); ++g) comp[g] = all2[g] - key[g];
    if (comp == key) {
      for (std::size_t t = 0; t + 1 < slots.size(); t += 2) {
        out.pairs.push_back(WitnessPair{slots[t], slots[t + 1]});
      }
    } else if (key < comp) {
      const auto it = groups.find(comp);
      if (it == groups.end()) continue;
      const std::size_t pairs = std::min(slots.size(), it->second.size());
      for (std::size_t t = 0; t < pairs; ++t) {
        out.pairs.push_back(WitnessPair{slots[t], it->second[t]});
      }
    }
  }
  out.j = static_cast<unsigned>(out.pairs.size());
  return out;
}

ConiveauReport analyze(const ProductSpec& spec, unsigned n, unsigned jobs) {
  ConiveauReport report;
  report.degree = n;
  auto monomials = eigenvalue_monomials(spec, n);
  report.monomials.resize(monomials.size());
  run_chunked(jobs, monomials.size(), [&](unsigned, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      MonomialReport row;
      row.monomial = std::move(monomials[i]);
      row.tate = tate_coniveau(spec, row.monomial);
      WitnessedResult wit = witnessed_coniveau(spec, row.monomial);
      row.witnessed = wit.j;
      row.witness_pairs = std::move(wit.pairs);
      report.monomials[i] = std::move(row);
    }
  });
  for (std::size_t i = 0; i < report.monomials.size(); ++i) {
    if (report.monomials[i].tate > report.monomials[i].witnessed) {
      report.gaps.push_back(i);
    }
  }
  return report;
}

// --- Verifiers --------------------------------------------------------------

Lemma1Report verify_lemma1(unsigned kmax, unsigned jobs, unsigned rank_cap) {
  if (kmax < 1) throw std::invalid_argument("verify_lemma1 requires kmax >= 1");
  require_rank_within(kmax, rank_cap);

  struct ContextSpec {
    unsigned k;
    unsigned c;
  };
  std::vector<ContextSpec> contexts;
  for (unsigned k = 1; k <= kmax; ++k) {
    for (unsigned c = 1; c < (1u << k); ++c) contexts.push_back({k, c});
  }

  struct ContextResult {
    std::uint64_t checked = 0;
    std::vector<Lemma1Counterexample> counterexamples;
  };
  std::vector<ContextResult> results(contexts.size());

  run_chunked(jobs, contexts.size(), [&](unsigned, std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const FieldContext ctx(contexts[idx].k, GroupElement{contexts[idx].c});
      std::vector<GroupRingElt> pool;
      pool.push_back(GroupRingElt::constant(ctx.rank, 1));  // supersingular divisor
      for (auto& m : enumerate_elliptic_sections(ctx)) pool.push_back(std::move(m));

      const GroupRingElt q_div = ctx.q_divisor();
      ContextResult& res = results[idx];
      for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i; j < pool.size(); ++j) {
          const GroupRingElt dij = pool[i] + pool[j];
          for (std::size_t l = j; l < pool.size(); ++l) {
            ++res.checked;
            const GroupRingElt sum = dij + pool[l];
            if (!sum.dominates(q_div)) continue;
            const bool witnessed = dij == q_div || pool[i] + pool[l] == q_div ||
                                   pool[j] + pool[l] == q_div;
            if (!witnessed) {
              res.counterexamples.push_back(
                  Lemma1Counterexample{ctx.rank, ctx.conj.index, {pool[i], pool[j], pool[l]}});
            }
          }
        }
      }
    }
  });

  Lemma1Report report;
  report.contexts_scanned = contexts.size();
  for (auto& res : results) {
    report.configurations_checked += res.checked;
    for (auto& ce : res.counterexamples) report.counterexamples.push_back(std::move(ce));
  }
  return report;
}

Thm2Report verify_thm2(const FieldContext& ctx, Coeff bound) {
  if (!(ctx == standard_context())) {
    throw std::invalid_argument("verify_thm2 requires the standard context k=3, c=s1*s2*s3");
  }
  if (bound < 1) throw std::invalid_argument("verify_thm2 requires bound >= 1");

  const auto triple = standard_triple(ctx);
  const GroupRingElt& m1 = triple[0].divisor;
  const GroupRingElt& m2 = triple[1].divisor;
  const GroupRingElt& m3 = triple[2].divisor;
  const GroupRingElt cm3 = translate(ctx.conj, m3);
  const GroupRingElt all1 = GroupRingElt::constant(ctx.rank, 1);

  const GroupElement at_c = ctx.conj;
  const GroupElement at_s1s2 = generator(0) * generator(1);

  Thm2Report report;
  report.zero_at_c = m1[at_c] == 0 && m2[at_c] == 0 && m3[at_c] == 0;
  report.zero_at_s1s2 = m1[at_s1s2] == 0 && m2[at_s1s2] == 0 && cm3[at_s1s2] == 0;

  for (int variant = 0; variant < 2; ++variant) {
    const GroupRingElt& third = variant == 0 ? m3 : cm3;
    for (Coeff n1 = 0; n1 <= bound; ++n1) {
      for (Coeff n2 = 0; n2 <= bound; ++n2) {
        for (Coeff n3 = 0; n3 <= bound; ++n3) {
          if (n1 == 0 && n2 == 0 && n3 == 0) continue;
          ++report.configurations_checked;
          const GroupRingElt sum = n1 * m1 + n2 * m2 + n3 * third;
          if (defect(sum, all1).empty()) {
            report.counterexamples.push_back(Thm2Counterexample{variant == 1, {n1, n2, n3}});
          }
        }
      }
    }
  }
  return report;
}

// --- Equality scans ---------------------------------------------------------

namespace {

// A product spec flattened for tight enumeration loops: one entry per
// (class, conjugate) slot with its divisor, cap, and divisor-group id.
struct FastSpec {
  std::size_t group_order = 0;
  std::vector<std::vector<Coeff>> slot_div;  // per slot
  std::vector<unsigned> slot_cap;
  std::vector<std::size_t> slot_group;       // divisor-group id per slot
  std::vector<std::size_t> complement;       // group id -> complementary id or npos
  std::size_t group_count = 0;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

FastSpec build_fast_spec(const FieldContext& ctx, const std::vector<const WeilClass*>& classes,
                         const std::vector<unsigned>& mults) {
  FastSpec fs;
  fs.group_order = ctx.group_order();
  std::map<std::vector<Coeff>, std::size_t> ids;
  const auto id_of = [&](const std::vector<Coeff>& v) {
    return ids.emplace(v, ids.size()).first->second;
  };
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const GroupRingElt& div = classes[i]->divisor;
    const GroupRingElt cdiv = translate(ctx.conj, div);
    fs.slot_div.push_back(div.coeffs());
    fs.slot_cap.push_back(mults[i]);
    fs.slot_group.push_back(id_of(div.coeffs()));
    fs.slot_div.push_back(cdiv.coeffs());
    fs.slot_cap.push_back(mults[i]);
    fs.slot_group.push_back(id_of(cdiv.coeffs()));
  }
  fs.group_count = ids.size();
  fs.complement.assign(fs.group_count, FastSpec::npos);
  for (const auto& [vec, id] : ids) {
    std::vector<Coeff> comp(vec.size());
    for (std::size_t g = 0; g < vec.size(); ++g) comp[g] = 2 - vec[g];
    const auto it = ids.find(comp);
    if (it != ids.end()) fs.complement[id] = it->second;
  }
  return fs;
}

// Witnessed coniveau from group counts alone (see witnessed_coniveau).
unsigned witnessed_from_counts(const FastSpec& fs, const std::vector<unsigned>& counts) {
  unsigned total = 0;
  for (std::size_t id = 0; id < fs.group_count; ++id) {
    const std::size_t comp = fs.complement[id];
    if (comp == FastSpec::npos) continue;
    if (comp == id) {
      total += counts[id] / 2;
    } else if (id < comp) {
      total += std::min(counts[id], counts[comp]);
    }
  }
  return total;
}

// Enumerates every exponent vector over the slots with slotwise caps and
// total degree <= max_degree (or exactly == max_degree when `exact`),
// maintaining the running divisor and group counts; calls `leaf(expo)` for
// each complete assignment.  Returns the number of leaves visited; records
// equality violations through `on_gap(expo, tate, witnessed)`.
template <typename OnGap>
std::uint64_t scan_fast_spec(const FastSpec& fs, unsigned max_degree, bool exact,
                             const OnGap& on_gap) {
  const std::size_t nslots = fs.slot_cap.size();
  std::vector<unsigned> suffix(nslots + 1, 0);
  for (std::size_t t = nslots; t-- > 0;) suffix[t] = suffix[t + 1] + fs.slot_cap[t];

  std::vector<unsigned> expo(nslots, 0);
  std::vector<Coeff> divisor(fs.group_order, 0);
  std::vector<unsigned> counts(fs.group_count, 0);
  std::uint64_t leaves = 0;

  const std::function<void(std::size_t, unsigned)> dfs = [&](std::size_t pos, unsigned budget) {
    if (pos == nslots) {
      ++leaves;
      Coeff min_coeff = divisor[0];
      for (std::size_t g = 1; g < divisor.size(); ++g) min_coeff = std::min(min_coeff, divisor[g]);
      const unsigned tate = static_cast<unsigned>(min_coeff / 2);
      const unsigned witnessed = witnessed_from_counts(fs, counts);
      if (tate != witnessed) on_gap(expo, tate, witnessed);
      return;
    }
    const unsigned lo = exact && suffix[pos + 1] < budget ? budget - suffix[pos + 1] : 0;
    const unsigned hi = std::min(fs.slot_cap[pos], budget);
    for (unsigned v = lo; v <= hi; ++v) {
      expo[pos] = v;
      if (v > 0) {
        counts[fs.slot_group[pos]] += v;
        for (std::size_t g = 0; g < divisor.size(); ++g) {
          divisor[g] += static_cast<Coeff>(v) * fs.slot_div[pos][g];
        }
      }
      dfs(pos + 1, budget - v);
      if (v > 0) {
        counts[fs.slot_group[pos]] -= v;
        for (std::size_t g = 0; g < divisor.size(); ++g) {
          divisor[g] -= static_cast<Coeff>(v) * fs.slot_div[pos][g];
        }
      }
    }
    expo[pos] = 0;
  };
  dfs(0, max_degree);
  return leaves;
}

// Pool of candidate elliptic classes of a context: the supersingular class
// followed by the elliptic sections, labeled by full-census index.
std::vector<WeilClass> elliptic_pool(const FieldContext& ctx) {
  std::vector<WeilClass> pool;
  pool.push_back(make_supersingular(ctx, "ss"));
  const auto sections = enumerate_sections(ctx);
  for (std::size_t i = 0; i < sections.size(); ++i) {
    if (classify_section(ctx, sections[i]).is_elliptic) {
      pool.push_back(make_ordinary(ctx, "sec" + std::to_string(i), sections[i]));
    }
  }
  return pool;
}

EqualityGap make_gap(const FieldContext& ctx, const std::vector<const WeilClass*>& classes,
                     const std::vector<unsigned>& mults, const std::vector<unsigned>& expo,
                     unsigned tate, unsigned witnessed) {
  EqualityGap gap;
  gap.k = ctx.rank;
  gap.c = ctx.conj.index;
  for (const WeilClass* cls : classes) gap.classes.push_back(*cls);
  gap.multiplicities = mults;
  gap.monomial.exponents.resize(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    gap.monomial.exponents[i] = {expo[2 * i], expo[2 * i + 1]};
  }
  gap.tate = tate;
  gap.witnessed = witnessed;
  return gap;
}

}  // namespace

EqualityScanReport scan_equality_small_products(unsigned kmax, unsigned max_classes,
                                                unsigned max_mult, unsigned max_degree,
                                                unsigned jobs) {
  if (kmax < 1) throw std::invalid_argument("scan requires kmax >= 1");
  require_rank_within(kmax, kDefaultRankCap);
  if (max_classes < 1 || max_mult < 1) {
    throw std::invalid_argument("scan requires max_classes >= 1 and max_mult >= 1");
  }

  struct Job {
    FieldContext ctx;
    std::vector<std::size_t> cls;
    std::vector<unsigned> mult;
  };
  std::vector<Job> jobs_list;
  std::vector<std::vector<WeilClass>> pools;
  std::vector<FieldContext> contexts;
  for (unsigned k = 1; k <= kmax; ++k) {
    for (unsigned c = 1; c < (1u << k); ++c) {
      const FieldContext ctx(k, GroupElement{c});
      contexts.push_back(ctx);
      pools.push_back(elliptic_pool(ctx));
      const std::size_t pool_size = pools.back().size();

      // All ascending index tuples of size 1..max_classes, each with every
      // multiplicity vector in [1, max_mult]^size.
      std::vector<std::size_t> cls;
      const std::function<void(std::size_t)> pick = [&](std::size_t first) {
        if (!cls.empty()) {
          std::vector<unsigned> mult(cls.size(), 1);
          for (;;) {
            jobs_list.push_back(Job{ctx, cls, mult});
            std::size_t t = 0;
            while (t < mult.size() && mult[t] == max_mult) mult[t++] = 1;
            if (t == mult.size()) break;
            ++mult[t];
          }
        }
        if (cls.size() == max_classes) return;
        for (std::size_t next = first; next < pool_size; ++next) {
          cls.push_back(next);
          pick(next + 1);
          cls.pop_back();
        }
      };
      pick(0);
    }
  }

  struct JobResult {
    std::uint64_t monomials = 0;
    std::vector<EqualityGap> gaps;
  };
  std::vector<JobResult> results(jobs_list.size());

  // Pool lookup by context identity (contexts are few).
  const auto pool_for = [&](const FieldContext& ctx) -> const std::vector<WeilClass>& {
    for (std::size_t i = 0; i < contexts.size(); ++i) {
      if (contexts[i] == ctx) return pools[i];
    }
    throw std::logic_error("context pool missing");
  };

  run_chunked(jobs, jobs_list.size(), [&](unsigned, std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const Job& job = jobs_list[idx];
      const auto& pool = pool_for(job.ctx);
      std::vector<const WeilClass*> classes;
      for (std::size_t ci : job.cls) classes.push_back(&pool[ci]);
      const FastSpec fs = build_fast_spec(job.ctx, classes, job.mult);
      results[idx].monomials = scan_fast_spec(
          fs, max_degree, /*exact=*/false,
          [&](const std::vector<unsigned>& expo, unsigned tate, unsigned witnessed) {
            results[idx].gaps.push_back(
                make_gap(job.ctx, classes, job.mult, expo, tate, witnessed));
          });
    }
  });

  EqualityScanReport report;
  report.specs_checked = jobs_list.size();
  for (auto& res : results) {
    report.monomials_checked += res.monomials;
    for (auto& gap : res.gaps) report.gaps.push_back(std::move(gap));
  }
  return report;
}

EqualityScanReport scan_equality_degree3(unsigned kmax, unsigned max_mult, unsigned jobs) {
  if (kmax < 1) throw std::invalid_argument("scan requires kmax >= 1");
  require_rank_within(kmax, kDefaultRankCap);
  if (max_mult < 1) throw std::invalid_argument("scan requires max_mult >= 1");

  std::vector<FieldContext> contexts;
  for (unsigned k = 1; k <= kmax; ++k) {
    for (unsigned c = 1; c < (1u << k); ++c) contexts.emplace_back(k, GroupElement{c});
  }

  struct CtxResult {
    std::uint64_t monomials = 0;
    std::vector<EqualityGap> gaps;
  };
  std::vector<CtxResult> results(contexts.size());

  run_chunked(jobs, contexts.size(), [&](unsigned, std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const FieldContext& ctx = contexts[idx];
      const auto pool = elliptic_pool(ctx);
      std::vector<const WeilClass*> classes;
      for (const auto& cls : pool) classes.push_back(&cls);
      const std::vector<unsigned> mults(pool.size(), max_mult);
      const FastSpec fs = build_fast_spec(ctx, classes, mults);
      results[idx].monomials = scan_fast_spec(
          fs, 3, /*exact=*/true,
          [&](const std::vector<unsigned>& expo, unsigned tate, unsigned witnessed) {
            results[idx].gaps.push_back(make_gap(ctx, classes, mults, expo, tate, witnessed));
          });
    }
  });

  EqualityScanReport report;
  report.specs_checked = contexts.size();
  for (auto& res : results) {
    report.monomials_checked += res.monomials;
    for (auto& gap : res.gaps) report.gaps.push_back(std::move(gap));
  }
  return report;
}

}  // namespace weilcomb
