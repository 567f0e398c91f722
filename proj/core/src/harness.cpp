#include "softtop/harness.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <nlohmann/json.hpp>

#include "softtop/constructions.hpp"
#include "softtop/errors.hpp"
#include "softtop/funcspace.hpp"
#include "softtop/mapping.hpp"

namespace softtop {

namespace {

constexpr std::array<ClaimInfo, 12> kRegistry{{
    {Claim::Prop1, "PROP1", true,
     "every parameter slice of a soft topology is a crisp topology"},
    {Claim::Thm1, "THM1", true,
     "a map into a product is continuous iff all projection composites are"},
    {Claim::Thm2, "THM2", true,
     "a map from a sum is continuous iff all inclusion composites are"},
    {Claim::Thm3, "THM3", true, "parameter slices commute with products and sums"},
    {Claim::Remark1, "REMARK1", true,
     "every evaluation map on a pointwise function space is continuous"},
    {Claim::Prop2, "PROP2", true,
     "a map into a function space is continuous iff all evaluation composites are"},
    {Claim::Thm4, "THM4", false,
     "separation axioms transfer from the codomain to the function space"},
    {Claim::Thm5, "THM5", true,
     "function spaces turn disjoint sums of domains into products"},
    {Claim::Thm6, "THM6", true,
     "function spaces turn products of codomains into products"},
    {Claim::Thm7, "THM7", true,
     "with continuous evaluation, uncurrying preserves continuity"},
    {Claim::EvalSubbaseEq, "EVAL_SUBBASE_EQ", false,
     "the pointwise subbase and the evaluation preimages generate equal topologies"},
    {Claim::ContDefEq, "CONT_DEF_EQ", false,
     "pointwise continuity at every soft point equals preimage continuity"},
}};

}  // namespace

std::span<const ClaimInfo> claim_registry() { return kRegistry; }

const ClaimInfo& claim_info(Claim claim) {
  for (const auto& info : kRegistry)
    if (info.id == claim) return info;
  throw UnknownClaim("<internal>");
}

Claim parse_claim(std::string_view name) {
  for (const auto& info : kRegistry)
    if (info.name == name) return info.id;
  throw UnknownClaim(std::string(name));
}

std::string_view to_string(TopologyStyle style) {
  switch (style) {
    case TopologyStyle::Indiscrete: return "indiscrete";
    case TopologyStyle::Discrete: return "discrete";
    case TopologyStyle::RandomSubbase: return "random-subbase";
  }
  return "?";
}

namespace {

// Deterministic uniform draws on top of the standard engine; avoids the
// distribution classes so the stream is pinned by the seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }
  bool coin() { return (engine_() >> 32) & 1; }

  std::size_t below(std::size_t n) {
    std::size_t mask = 1;
    while (mask < n) mask <<= 1;
    --mask;
    while (true) {
      std::size_t v = static_cast<std::size_t>(engine_()) & mask;
      if (v < n) return v;
    }
  }

 private:
  std::mt19937_64 engine_;
};

SoftSet random_soft_set(const ContextPtr& ctx, Rng& rng) {
  Bitset bits(ctx->bit_width());
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (rng.coin()) bits.set(i);
  return SoftSet(ctx, std::move(bits));
}

SoftSpace build_space(const ContextPtr& ctx, const SpaceSpec& spec, Rng& rng,
                      const GenerationLimits& limits) {
  switch (spec.style) {
    case TopologyStyle::Indiscrete: return SoftSpace::indiscrete(ctx);
    case TopologyStyle::Discrete: return SoftSpace::discrete(ctx);
    case TopologyStyle::RandomSubbase: {
      std::vector<SoftSet> subbase;
      for (std::size_t i = 0; i < spec.generators; ++i)
        subbase.push_back(random_soft_set(ctx, rng));
      return generate_from_subbase(ctx, std::move(subbase), limits).space;
    }
  }
  throw Error("unreachable style");
}

}  // namespace

std::string InstanceSpec::to_string() const {
  std::ostringstream out;
  out << "seed=" << seed << " params=" << params << " spaces=[";
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    if (i) out << ", ";
    out << "|X|=" << spaces[i].size << " " << softtop::to_string(spaces[i].style);
    if (spaces[i].style == TopologyStyle::RandomSubbase)
      out << "(k=" << spaces[i].generators << ")";
  }
  out << "]";
  return out.str();
}

std::string Instance::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    const auto& space = spaces[i];
    out << "space" << i << ": universe={";
    const auto& u = space.context()->universe();
    for (std::size_t j = 0; j < u.size(); ++j) out << (j ? "," : "") << u[j];
    out << "} params={";
    const auto& ps = space.context()->params();
    for (std::size_t j = 0; j < ps.size(); ++j) out << (j ? "," : "") << ps[j];
    out << "} opens=[";
    const std::size_t shown = std::min<std::size_t>(space.open_count(), 16);
    for (std::size_t j = 0; j < shown; ++j)
      out << (j ? ", " : "") << space.opens()[j].to_string();
    if (shown < space.open_count())
      out << ", ... (" << space.open_count() << " opens total)";
    out << "]\n";
  }
  return out.str();
}

Instance generate_instance(const InstanceSpec& spec, const GenerationLimits& limits) {
  Rng rng(spec.seed);
  std::vector<std::string> params;
  for (std::size_t i = 0; i < spec.params; ++i) params.push_back("e" + std::to_string(i + 1));

  Instance instance;
  std::size_t next_elem = 1;
  for (const auto& space_spec : spec.spaces) {
    std::vector<std::string> universe;
    for (std::size_t i = 0; i < space_spec.size; ++i)
      universe.push_back("x" + std::to_string(next_elem++));
    ContextPtr ctx = Context::make(std::move(universe), params);
    instance.spaces.push_back(build_space(ctx, space_spec, rng, limits));
  }
  return instance;
}

// ---------------------------------------------------------------------------
// Shrinking

namespace {

SoftSpace restrict_space_universe(const SoftSpace& space, std::size_t drop_elem) {
  const ContextPtr& ctx = space.context();
  std::vector<std::string> universe;
  for (std::size_t i = 0; i < ctx->universe_size(); ++i)
    if (i != drop_elem) universe.push_back(ctx->element_name(i));
  ContextPtr sub = Context::make(std::move(universe), ctx->params());
  std::vector<SoftSet> opens;
  for (const auto& open : space.opens()) {
    Bitset bits(sub->bit_width());
    std::size_t k = 0;
    for (std::size_t p = 0; p < ctx->param_count(); ++p)
      for (std::size_t e = 0; e < ctx->universe_size(); ++e) {
        if (e == drop_elem) continue;
        if (open.contains(e, p)) bits.set(k);
        ++k;
      }
    opens.emplace_back(sub, std::move(bits));
  }
  return SoftSpace::trusted(sub, std::move(opens));
}

SoftSpace restrict_space_params(const SoftSpace& space, std::size_t drop_param) {
  const ContextPtr& ctx = space.context();
  std::vector<std::string> params;
  for (std::size_t i = 0; i < ctx->param_count(); ++i)
    if (i != drop_param) params.push_back(ctx->param_name(i));
  ContextPtr sub = Context::make(ctx->universe(), std::move(params));
  std::vector<SoftSet> opens;
  for (const auto& open : space.opens()) {
    Bitset bits(sub->bit_width());
    std::size_t k = 0;
    for (std::size_t p = 0; p < ctx->param_count(); ++p) {
      if (p == drop_param) continue;
      for (std::size_t e = 0; e < ctx->universe_size(); ++e) {
        if (open.contains(e, p)) bits.set(k);
        ++k;
      }
    }
    opens.emplace_back(sub, std::move(bits));
  }
  return SoftSpace::trusted(sub, std::move(opens));
}

std::optional<SoftSpace> drop_open(const SoftSpace& space, std::size_t idx) {
  const SoftSet& victim = space.opens()[idx];
  if (victim.is_null() || victim.is_absolute()) return std::nullopt;
  std::vector<SoftSet> opens;
  for (std::size_t i = 0; i < space.open_count(); ++i)
    if (i != idx) opens.push_back(space.opens()[i]);
  if (!validate_axioms(space.context(), opens).valid()) return std::nullopt;
  return SoftSpace::trusted(space.context(), std::move(opens));
}

}  // namespace

Instance shrink_instance(Instance failing,
                         const std::function<bool(const Instance&)>& still_fails) {
  bool changed = true;
  while (changed) {
    changed = false;

    // Universe elements, later ones first so earlier names stay stable.
    for (std::size_t si = 0; si < failing.spaces.size(); ++si) {
      for (std::size_t e = failing.spaces[si].context()->universe_size(); e-- > 0;) {
        if (failing.spaces[si].context()->universe_size() <= 1) break;
        Instance candidate = failing;
        candidate.spaces[si] = restrict_space_universe(candidate.spaces[si], e);
        if (still_fails(candidate)) {
          failing = std::move(candidate);
          changed = true;
        }
      }
    }

    // Parameters are shared across the bundle and dropped everywhere at once.
    if (!failing.spaces.empty()) {
      for (std::size_t p = failing.spaces[0].context()->param_count(); p-- > 0;) {
        if (failing.spaces[0].context()->param_count() <= 1) break;
        Instance candidate = failing;
        bool applicable = true;
        for (auto& space : candidate.spaces) {
          if (space.context()->param_count() <= p) {
            applicable = false;
            break;
          }
          space = restrict_space_params(space, p);
        }
        if (applicable && still_fails(candidate)) {
          failing = std::move(candidate);
          changed = true;
        }
      }
    }

    // Opens, one at a time, keeping the collection a topology.
    for (std::size_t si = 0; si < failing.spaces.size(); ++si) {
      for (std::size_t oi = failing.spaces[si].open_count(); oi-- > 0;) {
        auto reduced = drop_open(failing.spaces[si], oi);
        if (!reduced) continue;
        Instance candidate = failing;
        candidate.spaces[si] = std::move(*reduced);
        if (still_fails(candidate)) {
          failing = std::move(candidate);
          changed = true;
        }
      }
    }
  }
  return failing;
}

// ---------------------------------------------------------------------------
// Claim evaluation

namespace {

struct CheckOutcome {
  bool ok = true;
  bool vacuous = false;
  std::string label;
  std::string witness;
};

// Calls fn(point_map) for every total map into a codomain of size n.
template <typename Fn>
void for_each_point_map(std::size_t domain_size, std::size_t codomain_size,
                        std::size_t cap, Fn&& fn) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < domain_size; ++i) {
    total *= codomain_size;
    if (total > cap)
      throw EnumerationTooLarge("point map scan exceeds cap of " + std::to_string(cap));
  }
  std::vector<std::uint32_t> points(domain_size, 0);
  while (true) {
    fn(points);
    std::size_t i = domain_size;
    bool done = true;
    while (i-- > 0) {
      if (++points[i] < codomain_size) {
        done = false;
        break;
      }
      points[i] = 0;
    }
    if (done) return;
  }
}

FuncspaceLimits fs_limits(const RunOptions& opts) {
  return FuncspaceLimits{opts.max_functions, opts.limits};
}

std::vector<CheckOutcome> evaluate_claim(Claim claim, const Instance& instance,
                                         const RunOptions& opts) {
  std::vector<CheckOutcome> outcomes;
  const SeparationVariant variant =
      opts.variant.value_or(SeparationVariant::ParamDisjoint);

  switch (claim) {
    case Claim::Prop1: {
      const SoftSpace& space = instance.spaces.at(0);
      CheckOutcome outcome;
      for (std::size_t e = 0; e < space.context()->param_count(); ++e) {
        auto violation =
            crisp_axiom_violation(space.context()->universe_size(), space.param_slices(e));
        if (violation) {
          outcome.ok = false;
          outcome.witness =
              "slice at " + space.context()->param_name(e) + ": " + *violation;
          break;
        }
      }
      outcomes.push_back(std::move(outcome));
      break;
    }

    case Claim::Thm1: {
      const SoftSpace& domain = instance.spaces.at(0);
      SpaceFamily targets =
          SpaceFamily::of({instance.spaces.at(1), instance.spaces.at(2)});
      ProductSpace product = product_space(targets, opts.limits);
      for_each_point_map(
          domain.context()->universe_size(),
          product.structure.tuple_context->universe_size(), opts.max_functions,
          [&](const std::vector<std::uint32_t>& pm) {
            SoftMapping f = SoftMapping::over_common_params(
                domain.context(), product.structure.tuple_context, pm);
            BiconditionalVerdict v = check_product_factorization(domain, targets, product, f);
            outcomes.push_back({v.agree(), false, "", v.detail});
          });
      break;
    }

    case Claim::Thm2: {
      SpaceFamily sources =
          SpaceFamily::of({instance.spaces.at(0), instance.spaces.at(1)});
      const SoftSpace& target = instance.spaces.at(2);
      SumSpace sum = sum_space(sources);
      for_each_point_map(sum.structure.union_context->universe_size(),
                         target.context()->universe_size(), opts.max_functions,
                         [&](const std::vector<std::uint32_t>& pm) {
                           SoftMapping f = SoftMapping::over_common_params(
                               sum.structure.union_context, target.context(), pm);
                           BiconditionalVerdict v =
                               check_sum_factorization(sources, sum, target, f);
                           outcomes.push_back({v.agree(), false, "", v.detail});
                         });
      break;
    }

    case Claim::Thm3: {
      SpaceFamily family =
          SpaceFamily::of({instance.spaces.at(0), instance.spaces.at(1)});
      ParamTopologyVerdict v = check_param_topologies(family, opts.limits);
      outcomes.push_back({v.agree(), false, "", v.detail});
      break;
    }

    case Claim::Remark1: {
      FunctionSpace fs =
          pointwise_space(instance.spaces.at(0), instance.spaces.at(1), fs_limits(opts));
      auto bad = discontinuous_evaluation(fs);
      outcomes.push_back({!bad.has_value(), false, "",
                          bad ? "evaluation at " + bad->to_string() + " discontinuous"
                              : ""});
      break;
    }

    case Claim::Prop2: {
      FunctionSpace fs =
          pointwise_space(instance.spaces.at(0), instance.spaces.at(1), fs_limits(opts));
      const SoftSpace& z = instance.spaces.at(2);
      for_each_point_map(z.context()->universe_size(), fs.functions.size(),
                         opts.max_functions, [&](const std::vector<std::uint32_t>& pm) {
                           SoftMapping g = SoftMapping::over_common_params(
                               z.context(), fs.fn_context, pm);
                           BiconditionalVerdict v =
                               check_evaluation_factorization(fs, z, g);
                           outcomes.push_back({v.agree(), false, "", v.detail});
                         });
      break;
    }

    case Claim::Thm4: {
      const SoftSpace& domain = instance.spaces.at(0);
      const SoftSpace& codomain = instance.spaces.at(1);
      FunctionSpace fs = pointwise_space(domain, codomain, fs_limits(opts));
      for (int level = 0; level <= 2; ++level) {
        CheckOutcome outcome;
        outcome.label = "T" + std::to_string(level);
        SeparationResult hyp = separation_axiom(codomain, level, variant);
        if (!hyp.holds) {
          outcome.vacuous = true;
        } else {
          SeparationResult concl = separation_axiom(fs.space, level, variant);
          outcome.ok = concl.holds;
          if (!concl.holds && concl.witness)
            outcome.witness = "codomain is T" + std::to_string(level) + " under " +
                              std::string(softtop::to_string(variant)) +
                              " but the function space is not; failing pair " +
                              concl.witness->first.to_string() + ", " +
                              concl.witness->second.to_string();
        }
        outcomes.push_back(std::move(outcome));
      }
      break;
    }

    case Claim::Thm5: {
      SpaceFamily domains =
          SpaceFamily::of({instance.spaces.at(0), instance.spaces.at(1)});
      SumDomainIso iso = sum_domain_iso(domains, instance.spaces.at(2), fs_limits(opts));
      IsoReport report = check_sum_domain_iso(iso);
      outcomes.push_back({report.ok(), false, "", report.detail});
      break;
    }

    case Claim::Thm6: {
      SpaceFamily codomains =
          SpaceFamily::of({instance.spaces.at(1), instance.spaces.at(2)});
      ProductCodomainIso iso =
          product_codomain_iso(instance.spaces.at(0), codomains, fs_limits(opts));
      IsoReport report = check_product_codomain_iso(iso);
      outcomes.push_back({report.ok(), false, "", report.detail});
      break;
    }

    case Claim::Thm7: {
      ExponentialSetup setup = exponential_setup(
          instance.spaces.at(0), instance.spaces.at(1), instance.spaces.at(2),
          fs_limits(opts));
      ExponentialVerdict v = check_exponential_law(setup);
      outcomes.push_back({v.inverses_hold && v.switching_continuous, false, "roundtrip",
                          v.inverses_hold ? "" : "curry/uncurry round trip failed"});
      CheckOutcome conditional;
      conditional.label = "conditional";
      conditional.vacuous = !v.evaluation_continuous;
      conditional.ok = v.conditional_holds;
      conditional.witness = v.detail;
      outcomes.push_back(std::move(conditional));
      break;
    }

    case Claim::EvalSubbaseEq: {
      FunctionSpace fs =
          pointwise_space(instance.spaces.at(0), instance.spaces.at(1), fs_limits(opts));
      SubbaseComparison cmp = compare_pointwise_subbases(fs, opts.limits);
      outcomes.push_back(
          {cmp.equal, false, "",
           cmp.equal ? ""
                     : "literal subbase yields " + std::to_string(fs.space.open_count()) +
                           " opens, evaluation preimages yield " +
                           std::to_string(cmp.via_preimages.open_count())});
      break;
    }

    case Claim::ContDefEq: {
      const SoftSpace& domain = instance.spaces.at(0);
      const SoftSpace& codomain = instance.spaces.at(1);
      if (!same_params(domain.context(), codomain.context()))
        throw ParamMismatch("identity-parameter scan needs a common parameter set");
      const auto points = SoftSet::absolute_set(domain.context()).soft_points();
      for_each_point_map(
          domain.context()->universe_size(), codomain.context()->universe_size(),
          opts.max_functions, [&](const std::vector<std::uint32_t>& pm) {
            SoftMapping f = SoftMapping::over_common_params(domain.context(),
                                                            codomain.context(), pm);
            const bool global = is_continuous(f, domain, codomain).holds;
            bool pointwise = true;
            for (const auto& p : points)
              if (!is_continuous_at(f, domain, codomain, p)) {
                pointwise = false;
                break;
              }
            outcomes.push_back({global == pointwise, false, "",
                                global != pointwise
                                    ? "map " + f.to_string() + ": preimage route " +
                                          (global ? "holds" : "fails") +
                                          ", pointwise route " +
                                          (pointwise ? "holds" : "fails")
                                    : ""});
          });
      break;
    }
  }
  return outcomes;
}

bool claim_fails_on(Claim claim, const Instance& instance, const RunOptions& opts) {
  try {
    for (const auto& outcome : evaluate_claim(claim, instance, opts))
      if (!outcome.ok) return true;
    return false;
  } catch (const Error&) {
    return false;  // mutations that break preconditions are rejected
  }
}

// ---------------------------------------------------------------------------
// Instance grids

struct ClaimShape {
  std::size_t space_count;
  std::size_t max_size;
  std::vector<std::size_t> param_choices;
  bool heavy;  // builds function spaces
};

ClaimShape claim_shape(Claim claim) {
  switch (claim) {
    case Claim::Prop1: return {1, 3, {1, 2}, false};
    case Claim::Thm1: return {3, 2, {1, 2}, false};
    case Claim::Thm2: return {3, 2, {1, 2}, false};
    case Claim::Thm3: return {2, 2, {1, 2}, false};
    case Claim::Remark1: return {2, 2, {1, 2}, true};
    case Claim::Prop2: return {3, 2, {1, 2}, true};
    case Claim::Thm4: return {2, 2, {1, 2}, true};
    case Claim::Thm5: return {3, 2, {1}, true};
    case Claim::Thm6: return {3, 2, {1}, true};
    case Claim::Thm7: return {3, 2, {1, 2}, true};
    case Claim::EvalSubbaseEq: return {2, 2, {1, 2}, true};
    case Claim::ContDefEq: return {2, 2, {1, 2}, false};
  }
  throw UnknownClaim("<internal>");
}

constexpr std::array<TopologyStyle, 3> kStyles{
    TopologyStyle::Indiscrete, TopologyStyle::Discrete, TopologyStyle::RandomSubbase};

std::vector<InstanceSpec> exhaustive_grid(Claim claim, const RunOptions& opts) {
  const ClaimShape shape = claim_shape(claim);
  const std::size_t seeds_per_cell =
      shape.heavy ? std::min<std::size_t>(opts.samples, 10) : opts.samples;

  std::vector<InstanceSpec> grid;
  std::vector<std::size_t> sizes(shape.space_count, 1);
  // For the factorization scans the theorem-bearing sizes are pinned at the
  // maximum; smaller spaces are covered by the other claims' grids.
  const bool pin_sizes = (claim == Claim::Thm1 || claim == Claim::Thm2);
  if (pin_sizes) sizes.assign(shape.space_count, shape.max_size);

  while (true) {
    for (std::size_t params : shape.param_choices) {
      std::vector<std::size_t> style_idx(shape.space_count, 0);
      while (true) {
        bool has_random = false;
        InstanceSpec spec;
        spec.params = params;
        for (std::size_t s = 0; s < shape.space_count; ++s) {
          SpaceSpec ss;
          ss.size = sizes[s];
          ss.style = kStyles[style_idx[s]];
          has_random = has_random || ss.style == TopologyStyle::RandomSubbase;
          spec.spaces.push_back(ss);
        }
        if (has_random) {
          Rng seeder(opts.seed * 0x9E3779B97F4A7C15ull + grid.size());
          for (std::size_t k = 0; k < seeds_per_cell; ++k) {
            spec.seed = seeder.raw();
            grid.push_back(spec);
          }
        } else {
          spec.seed = opts.seed;
          grid.push_back(spec);
        }
        std::size_t s = 0;
        while (s < shape.space_count && ++style_idx[s] == kStyles.size()) {
          style_idx[s] = 0;
          ++s;
        }
        if (s == shape.space_count) break;
      }
    }
    if (pin_sizes) break;
    std::size_t s = 0;
    while (s < shape.space_count && ++sizes[s] > shape.max_size) {
      sizes[s] = 1;
      ++s;
    }
    if (s == shape.space_count) break;
  }
  return grid;
}

InstanceSpec sample_spec(Claim claim, Rng& rng) {
  const ClaimShape shape = claim_shape(claim);
  InstanceSpec spec;
  spec.params = shape.param_choices[rng.below(shape.param_choices.size())];
  for (std::size_t s = 0; s < shape.space_count; ++s) {
    SpaceSpec ss;
    ss.size = 1 + rng.below(shape.max_size);
    ss.style = kStyles[rng.below(kStyles.size())];
    spec.spaces.push_back(ss);
  }
  spec.seed = rng.raw();
  return spec;
}

}  // namespace

std::string VerdictReport::render() const {
  std::ostringstream out;
  out << "[" << claim << "] " << (law ? "law" : "experiment") << ": instances=" << instances
      << " agreements=" << agreements << " counterexamples=" << counterexamples.size()
      << " -- " << (law ? (passed() ? "PASS" : "FAIL") : "REPORT") << "\n";
  for (const auto& note : notes) out << "  note: " << note << "\n";
  const std::size_t shown = std::min<std::size_t>(counterexamples.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) {
    out << "  counterexample " << (i + 1) << ":\n";
    std::istringstream lines(counterexamples[i].instance);
    for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
    out << "    witness: " << counterexamples[i].witness << "\n";
  }
  if (shown < counterexamples.size())
    out << "  ... " << (counterexamples.size() - shown) << " more counterexamples\n";
  return out.str();
}

std::string VerdictReport::to_json() const {
  nlohmann::json j;
  j["claim"] = claim;
  j["class"] = law ? "law" : "experiment";
  j["instances"] = instances;
  j["agreements"] = agreements;
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& cex : counterexamples)
    j["counterexamples"].push_back({{"instance", cex.instance}, {"witness", cex.witness}});
  j["notes"] = notes;
  j["versions"] = {{"softtop", "0.1.0"}, {"report_schema", 1}};
  return j.dump();
}

VerdictReport run_claim(Claim claim, const RunOptions& options) {
  const ClaimInfo& info = claim_info(claim);
  VerdictReport report;
  report.claim = std::string(info.name);
  report.law = info.law;

  struct LabelTally {
    std::size_t total = 0, vacuous = 0, held = 0;
  };
  std::vector<std::pair<std::string, LabelTally>> tallies;
  auto tally = [&](const CheckOutcome& outcome) {
    if (outcome.label.empty()) return;
    auto it = std::find_if(tallies.begin(), tallies.end(),
                           [&](const auto& t) { return t.first == outcome.label; });
    if (it == tallies.end()) {
      tallies.push_back({outcome.label, {}});
      it = tallies.end() - 1;
    }
    ++it->second.total;
    if (outcome.vacuous)
      ++it->second.vacuous;
    else if (outcome.ok)
      ++it->second.held;
  };

  std::size_t skipped = 0;
  auto run_one = [&](const InstanceSpec& spec) {
    Instance instance;
    std::vector<CheckOutcome> outcomes;
    try {
      instance = generate_instance(spec, options.limits);
      outcomes = evaluate_claim(claim, instance, options);
    } catch (const ResourceLimitError&) {
      ++skipped;
      return false;
    } catch (const EmptyFunctionSpace&) {
      ++skipped;
      return false;
    }
    bool shrunk_this_instance = false;
    for (auto& outcome : outcomes) {
      ++report.instances;
      if (outcome.ok || outcome.vacuous) {
        ++report.agreements;
      } else {
        Counterexample cex;
        cex.witness = outcome.witness;
        cex.instance = spec.to_string() + "\n" + instance.to_string();
        if (options.shrink_counterexamples && !shrunk_this_instance) {
          shrunk_this_instance = true;
          Instance small = shrink_instance(
              instance, [&](const Instance& cand) { return claim_fails_on(claim, cand, options); });
          cex.instance += "shrunk:\n" + small.to_string();
          // replay on the shrunk instance for a matching witness
          try {
            for (const auto& replay : evaluate_claim(claim, small, options))
              if (!replay.ok) {
                cex.witness = replay.witness + " (on the shrunk instance)";
                break;
              }
          } catch (const Error&) {
          }
        }
        report.counterexamples.push_back(std::move(cex));
      }
      tally(outcome);
    }
    return true;
  };

  if (options.exhaustive) {
    for (const auto& spec : exhaustive_grid(claim, options)) run_one(spec);
  } else {
    Rng master(options.seed);
    std::size_t done = 0, attempts = 0;
    const std::size_t max_attempts = options.samples * 20 + 50;
    while (done < options.samples && attempts < max_attempts) {
      ++attempts;
      if (run_one(sample_spec(claim, master))) ++done;
    }
  }

  if (skipped > 0)
    report.notes.push_back(std::to_string(skipped) +
                           " instances skipped (size caps or empty function space)");
  if (claim == Claim::Thm4)
    report.notes.push_back("variant=" +
                           std::string(to_string(options.variant.value_or(
                               SeparationVariant::ParamDisjoint))));
  for (const auto& [label, t] : tallies) {
    std::ostringstream note;
    note << label << ": " << t.total << " checks, " << t.vacuous
         << " vacuous (hypothesis failed), " << t.held << " held of "
         << (t.total - t.vacuous) << " applicable";
    report.notes.push_back(note.str());
  }
  return report;
}

}  // namespace softtop
