#include "softtop/constructions.hpp"

#include <algorithm>
#include <unordered_set>

#include "softtop/errors.hpp"

namespace softtop {

namespace {

void require_common_params(std::span<const ContextPtr> ctxs) {
  for (std::size_t i = 1; i < ctxs.size(); ++i)
    if (!same_params(ctxs[0], ctxs[i]))
      throw ParamMismatch("family members must share one parameter set");
}

}  // namespace

std::size_t ProductStructure::component(std::size_t tuple, std::size_t s) const {
  std::size_t radix = 1;
  for (std::size_t k = s + 1; k < factors.size(); ++k) radix *= factors[k]->universe_size();
  return (tuple / radix) % factors[s]->universe_size();
}

std::size_t ProductStructure::tuple_of(std::span<const std::size_t> components) const {
  std::size_t tuple = 0;
  for (std::size_t s = 0; s < factors.size(); ++s)
    tuple = tuple * factors[s]->universe_size() + components[s];
  return tuple;
}

SoftMapping ProductStructure::projection(std::size_t s) const {
  std::vector<std::uint32_t> points(tuple_context->universe_size());
  for (std::size_t t = 0; t < points.size(); ++t)
    points[t] = static_cast<std::uint32_t>(component(t, s));
  return SoftMapping::over_common_params(tuple_context, factors[s], std::move(points));
}

SoftSet ProductStructure::cylinder(std::size_t s, const SoftSet& f) const {
  require_same_context(factors[s], f.context());
  const std::size_t n = tuple_context->universe_size();
  Bitset bits(tuple_context->bit_width());
  for (std::size_t p = 0; p < tuple_context->param_count(); ++p) {
    const Bitset slice = f.slice(p);
    for (std::size_t t = 0; t < n; ++t)
      if (slice.test(component(t, s))) bits.set(p * n + t);
  }
  return SoftSet(tuple_context, std::move(bits));
}

ProductStructure make_product_structure(std::vector<ContextPtr> factors) {
  if (factors.empty()) throw InvalidContext("product of an empty family");
  require_common_params(factors);

  std::vector<std::string> names;
  std::vector<std::size_t> odometer(factors.size(), 0);
  while (true) {
    std::vector<std::string> parts;
    parts.reserve(factors.size());
    for (std::size_t s = 0; s < factors.size(); ++s)
      parts.push_back(factors[s]->element_name(odometer[s]));
    names.push_back(tuple_name(parts));
    std::size_t s = factors.size();
    while (s-- > 0) {
      if (++odometer[s] < factors[s]->universe_size()) break;
      odometer[s] = 0;
      if (s == 0) goto done;
    }
  }
done:
  ProductStructure out;
  out.tuple_context = Context::make(std::move(names), factors[0]->params());
  out.factors = std::move(factors);
  return out;
}

std::size_t SumStructure::owner(std::size_t elem) const {
  std::size_t s = 0;
  while (s + 1 < offsets.size() && elem >= offsets[s + 1]) ++s;
  return s;
}

SoftMapping SumStructure::inclusion(std::size_t s) const {
  std::vector<std::uint32_t> points(summands[s]->universe_size());
  for (std::size_t i = 0; i < points.size(); ++i)
    points[i] = static_cast<std::uint32_t>(offsets[s] + i);
  return SoftMapping::over_common_params(summands[s], union_context, std::move(points));
}

SoftSet SumStructure::embed(std::size_t s, const SoftSet& f) const {
  return inclusion(s).image(f);
}

SoftSet SumStructure::restrict_to(std::size_t s, const SoftSet& f) const {
  return inclusion(s).preimage(f);
}

SumStructure make_sum_structure(std::vector<ContextPtr> summands) {
  if (summands.empty()) throw InvalidContext("sum of an empty family");
  require_common_params(summands);

  std::vector<std::string> names;
  std::vector<std::size_t> offsets;
  std::unordered_set<std::string_view> seen;
  for (const auto& ctx : summands) {
    offsets.push_back(names.size());
    for (const auto& name : ctx->universe()) {
      if (!seen.insert(name).second) throw UniverseOverlap(name);
      names.push_back(name);
    }
  }
  SumStructure out;
  out.union_context = Context::make(std::move(names), summands[0]->params());
  out.summands = std::move(summands);
  out.offsets = std::move(offsets);
  return out;
}

SpaceFamily SpaceFamily::of(std::vector<SoftSpace> members) {
  if (members.empty()) throw InvalidContext("family must be non-empty");
  std::vector<ContextPtr> ctxs;
  for (const auto& m : members) ctxs.push_back(m.context());
  require_common_params(ctxs);
  return SpaceFamily{std::move(members)};
}

std::vector<ContextPtr> SpaceFamily::contexts() const {
  std::vector<ContextPtr> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.context());
  return out;
}

ProductSpace product_space(const SpaceFamily& family, const GenerationLimits& limits) {
  ProductStructure structure = make_product_structure(family.contexts());
  std::vector<SoftSet> subbase;
  for (std::size_t s = 0; s < family.members.size(); ++s)
    for (const auto& open : family.members[s].opens())
      subbase.push_back(structure.cylinder(s, open));
  GeneratedSpace generated =
      generate_from_subbase(structure.tuple_context, std::move(subbase), limits);
  return ProductSpace{std::move(structure), std::move(generated.space)};
}

SumSpace sum_space(const SpaceFamily& family) {
  SumStructure structure = make_sum_structure(family.contexts());
  const ContextPtr& ctx = structure.union_context;
  std::vector<SoftSet> opens;
  std::vector<std::size_t> choice(family.members.size(), 0);
  while (true) {
    SoftSet open = SoftSet::null_set(ctx);
    for (std::size_t s = 0; s < family.members.size(); ++s)
      open = open | structure.embed(s, family.members[s].opens()[choice[s]]);
    opens.push_back(std::move(open));
    std::size_t s = 0;
    while (s < family.members.size() &&
           ++choice[s] == family.members[s].opens().size()) {
      choice[s] = 0;
      ++s;
    }
    if (s == family.members.size()) break;
  }
  SoftSpace space = SoftSpace::trusted(ctx, std::move(opens));
  return SumSpace{std::move(structure), std::move(space)};
}

SoftMapping diagonal_map(std::span<const SoftMapping> maps, const ProductStructure& target) {
  if (maps.empty() || maps.size() != target.arity())
    throw InvalidContext("one mapping per product factor required");
  const ContextPtr& source = maps.front().source();
  for (const auto& m : maps) {
    require_same_context(source, m.source());
    if (!m.identity_params())
      throw ParamMismatch("diagonal map requires identity parameter maps");
  }
  std::vector<std::uint32_t> points(source->universe_size());
  std::vector<std::size_t> comps(maps.size());
  for (std::size_t x = 0; x < points.size(); ++x) {
    for (std::size_t s = 0; s < maps.size(); ++s) comps[s] = maps[s].point(x);
    points[x] = static_cast<std::uint32_t>(target.tuple_of(comps));
  }
  return SoftMapping::over_common_params(source, target.tuple_context, std::move(points));
}

SoftMapping glued_map(std::span<const SoftMapping> maps, const SumStructure& source) {
  if (maps.empty() || maps.size() != source.arity())
    throw InvalidContext("one mapping per summand required");
  const ContextPtr& target = maps.front().target();
  for (std::size_t s = 0; s < maps.size(); ++s) {
    require_same_context(maps[s].source(), source.summands[s]);
    require_same_context(target, maps[s].target());
    if (!maps[s].identity_params())
      throw ParamMismatch("glued map requires identity parameter maps");
  }
  std::vector<std::uint32_t> points(source.union_context->universe_size());
  for (std::size_t x = 0; x < points.size(); ++x) {
    const std::size_t s = source.owner(x);
    points[x] = static_cast<std::uint32_t>(maps[s].point(x - source.offsets[s]));
  }
  return SoftMapping::over_common_params(source.union_context, target, std::move(points));
}

SoftMapping product_map(std::span<const SoftMapping> maps, const ProductStructure& source,
                        const ProductStructure& target) {
  if (maps.size() != source.arity() || maps.size() != target.arity())
    throw InvalidContext("one mapping per factor required");
  for (std::size_t s = 0; s < maps.size(); ++s) {
    require_same_context(maps[s].source(), source.factors[s]);
    require_same_context(maps[s].target(), target.factors[s]);
    if (!maps[s].identity_params())
      throw ParamMismatch("product map requires identity parameter maps");
  }
  std::vector<std::uint32_t> points(source.tuple_context->universe_size());
  std::vector<std::size_t> comps(maps.size());
  for (std::size_t t = 0; t < points.size(); ++t) {
    for (std::size_t s = 0; s < maps.size(); ++s)
      comps[s] = maps[s].point(source.component(t, s));
    points[t] = static_cast<std::uint32_t>(target.tuple_of(comps));
  }
  return SoftMapping::over_common_params(source.tuple_context, target.tuple_context,
                                         std::move(points));
}

SoftMapping sum_map(std::span<const SoftMapping> maps, const SumStructure& source,
                    const SumStructure& target) {
  if (maps.size() != source.arity() || maps.size() != target.arity())
    throw InvalidContext("one mapping per summand required");
  for (std::size_t s = 0; s < maps.size(); ++s) {
    require_same_context(maps[s].source(), source.summands[s]);
    require_same_context(maps[s].target(), target.summands[s]);
    if (!maps[s].identity_params())
      throw ParamMismatch("sum map requires identity parameter maps");
  }
  std::vector<std::uint32_t> points(source.union_context->universe_size());
  for (std::size_t x = 0; x < points.size(); ++x) {
    const std::size_t s = source.owner(x);
    points[x] = static_cast<std::uint32_t>(target.offsets[s] +
                                           maps[s].point(x - source.offsets[s]));
  }
  return SoftMapping::over_common_params(source.union_context, target.union_context,
                                         std::move(points));
}

BiconditionalVerdict check_product_factorization(const SoftSpace& domain,
                                                 const SpaceFamily& targets,
                                                 const ProductSpace& product,
                                                 const SoftMapping& f) {
  BiconditionalVerdict verdict;
  verdict.lhs = is_continuous(f, domain, product.space).holds;
  verdict.rhs = true;
  for (std::size_t s = 0; s < targets.members.size(); ++s) {
    SoftMapping composite = compose(product.structure.projection(s), f);
    auto r = is_continuous(composite, domain, targets.members[s]);
    if (!r) {
      verdict.rhs = false;
      verdict.detail = "projection composite " + std::to_string(s) +
                       " discontinuous at open " + r.witness->to_string();
      break;
    }
  }
  if (!verdict.agree())
    verdict.detail = "map " + f.to_string() + ": into-product continuity " +
                     (verdict.lhs ? "holds" : "fails") +
                     " but componentwise continuity " + (verdict.rhs ? "holds" : "fails");
  return verdict;
}

BiconditionalVerdict check_sum_factorization(const SpaceFamily& sources, const SumSpace& sum,
                                             const SoftSpace& target, const SoftMapping& f) {
  BiconditionalVerdict verdict;
  verdict.lhs = is_continuous(f, sum.space, target).holds;
  verdict.rhs = true;
  for (std::size_t s = 0; s < sources.members.size(); ++s) {
    SoftMapping composite = compose(f, sum.structure.inclusion(s));
    if (!is_continuous(composite, sources.members[s], target)) {
      verdict.rhs = false;
      break;
    }
  }
  if (!verdict.agree())
    verdict.detail = "map " + f.to_string() + ": from-sum continuity " +
                     (verdict.lhs ? "holds" : "fails") +
                     " but summandwise continuity " + (verdict.rhs ? "holds" : "fails");
  return verdict;
}

ParamTopologyVerdict check_param_topologies(const SpaceFamily& family,
                                            const GenerationLimits& limits) {
  ParamTopologyVerdict verdict;
  verdict.product_ok = true;

  ProductSpace product = product_space(family, limits);
  const std::size_t params = family.members.front().context()->param_count();
  for (std::size_t e = 0; e < params; ++e) {
    std::vector<CrispTopology> slices;
    for (const auto& member : family.members) slices.push_back(member.param_topology(e));
    CrispTopology crisp = crisp_product(slices);
    CrispTopology soft_side = product.space.param_topology(e);
    if (!(crisp == soft_side)) {
      verdict.product_ok = false;
      verdict.detail = "product slice mismatch at parameter " +
                       family.members.front().context()->param_name(e) + ": soft " +
                       soft_side.to_string() + " vs crisp " + crisp.to_string();
      break;
    }
  }

  // The sum clause only applies to families with pairwise disjoint universes.
  try {
    make_sum_structure(family.contexts());
    verdict.sum_applicable = true;
  } catch (const UniverseOverlap&) {
    verdict.sum_applicable = false;
  }
  if (verdict.sum_applicable) {
    verdict.sum_ok = true;
    SumSpace sum = sum_space(family);
    for (std::size_t e = 0; e < params; ++e) {
      std::vector<CrispTopology> slices;
      for (const auto& member : family.members) slices.push_back(member.param_topology(e));
      CrispTopology crisp = crisp_sum(slices);
      CrispTopology soft_side = sum.space.param_topology(e);
      if (!(crisp == soft_side)) {
        verdict.sum_ok = false;
        verdict.detail = "sum slice mismatch at parameter " +
                         family.members.front().context()->param_name(e) + ": soft " +
                         soft_side.to_string() + " vs crisp " + crisp.to_string();
        break;
      }
    }
  }
  return verdict;
}

}  // namespace softtop
