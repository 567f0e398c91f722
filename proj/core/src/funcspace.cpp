#include "softtop/funcspace.hpp"

#include <algorithm>
#include <array>

#include "softtop/errors.hpp"

namespace softtop {

namespace {

SoftSet maps_sending_impl(const ContextPtr& fn_ctx, std::span<const SoftMapping> fns,
                          const SoftSet& f, const SoftSet& g) {
  const std::size_t n = fn_ctx->universe_size();
  Bitset bits(fn_ctx->bit_width());
  for (std::size_t p = 0; p < fn_ctx->param_count(); ++p) {
    const Bitset fe = f.slice(p);
    const Bitset ge = g.slice(p);
    for (std::size_t i = 0; i < fns.size(); ++i) {
      bool inside = true;
      for (std::size_t x = fe.find_first(); x != Bitset::npos; x = fe.find_next(x))
        if (!ge.test(fns[i].point(x))) {
          inside = false;
          break;
        }
      if (inside) bits.set(p * n + i);
    }
  }
  return SoftSet(fn_ctx, std::move(bits));
}

}  // namespace

std::vector<SoftMapping> enumerate_functions(const SoftSpace& domain,
                                             const SoftSpace& codomain,
                                             const FuncspaceLimits& limits) {
  if (!same_params(domain.context(), codomain.context()))
    throw ParamMismatch("function spaces require one common parameter set");
  const std::size_t nx = domain.context()->universe_size();
  const std::size_t ny = codomain.context()->universe_size();

  std::size_t total = 1;
  for (std::size_t i = 0; i < nx; ++i) {
    if (total > limits.max_functions / ny + 1) total = limits.max_functions + 1;
    else total *= ny;
    if (total > limits.max_functions)
      throw EnumerationTooLarge("candidate function count exceeds cap of " +
                                std::to_string(limits.max_functions));
  }

  std::vector<SoftMapping> out;
  std::vector<std::uint32_t> points(nx, 0);
  while (true) {
    SoftMapping candidate =
        SoftMapping::over_common_params(domain.context(), codomain.context(), points);
    if (is_continuous(candidate, domain, codomain)) out.push_back(std::move(candidate));
    std::size_t i = nx;
    while (i-- > 0) {
      if (++points[i] < ny) break;
      points[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::optional<std::size_t> FunctionSpace::index_of(
    std::span<const std::uint32_t> point_map) const {
  auto it = std::lower_bound(functions.begin(), functions.end(), point_map,
                             [](const SoftMapping& f, std::span<const std::uint32_t> v) {
                               return std::lexicographical_compare(
                                   f.point_map().begin(), f.point_map().end(), v.begin(),
                                   v.end());
                             });
  if (it == functions.end()) return std::nullopt;
  if (!std::equal(it->point_map().begin(), it->point_map().end(), point_map.begin(),
                  point_map.end()))
    return std::nullopt;
  return static_cast<std::size_t>(it - functions.begin());
}

std::optional<std::size_t> FunctionSpace::index_of(const SoftMapping& f) const {
  return index_of(f.point_map());
}

FunctionSpace pointwise_space(const SoftSpace& domain, const SoftSpace& codomain,
                              const FuncspaceLimits& limits) {
  std::vector<SoftMapping> functions = enumerate_functions(domain, codomain, limits);
  if (functions.empty())
    throw EmptyFunctionSpace("no soft continuous mapping exists between the spaces");

  std::vector<std::string> names;
  names.reserve(functions.size());
  for (std::size_t i = 0; i < functions.size(); ++i) names.push_back("f" + std::to_string(i));
  ContextPtr fn_ctx = Context::make(std::move(names), domain.context()->params());

  std::vector<SoftSet> subbase;
  const std::vector<SoftPoint> points = SoftSet::absolute_set(domain.context()).soft_points();
  for (const auto& open : codomain.opens())
    for (const auto& p : points)
      subbase.push_back(maps_sending_impl(fn_ctx, functions, p.to_soft_set(), open));

  GeneratedSpace generated = generate_from_subbase(fn_ctx, std::move(subbase), limits.gen);
  return FunctionSpace{domain, codomain, std::move(functions), std::move(fn_ctx),
                       std::move(generated.space)};
}

SoftSet maps_sending(const FunctionSpace& fs, const SoftSet& f, const SoftSet& g) {
  require_same_context(fs.domain.context(), f.context());
  require_same_context(fs.codomain.context(), g.context());
  return maps_sending_impl(fs.fn_context, fs.functions, f, g);
}

SoftMapping evaluation(const FunctionSpace& fs, const SoftPoint& p) {
  require_same_context(fs.domain.context(), p.context);
  std::vector<std::uint32_t> points(fs.functions.size());
  for (std::size_t i = 0; i < fs.functions.size(); ++i)
    points[i] = static_cast<std::uint32_t>(fs.functions[i].point(p.elem));
  return SoftMapping::over_common_params(fs.fn_context, fs.codomain.context(),
                                         std::move(points));
}

std::optional<SoftPoint> discontinuous_evaluation(const FunctionSpace& fs) {
  const std::vector<SoftPoint> points =
      SoftSet::absolute_set(fs.domain.context()).soft_points();
  for (const auto& p : points)
    if (!is_continuous(evaluation(fs, p), fs.space, fs.codomain)) return p;
  return std::nullopt;
}

BiconditionalVerdict check_evaluation_factorization(const FunctionSpace& fs,
                                                    const SoftSpace& z,
                                                    const SoftMapping& g) {
  require_same_context(g.target(), fs.fn_context);
  BiconditionalVerdict verdict;
  verdict.lhs = is_continuous(g, z, fs.space).holds;
  verdict.rhs = true;
  for (const auto& p : SoftSet::absolute_set(fs.domain.context()).soft_points()) {
    if (!is_continuous(compose(evaluation(fs, p), g), z, fs.codomain)) {
      verdict.rhs = false;
      break;
    }
  }
  if (!verdict.agree())
    verdict.detail = "map " + g.to_string() + ": continuity into the function space " +
                     (verdict.lhs ? "holds" : "fails") + " while the evaluation composites " +
                     (verdict.rhs ? "are all continuous" : "are not all continuous");
  return verdict;
}

SubbaseComparison compare_pointwise_subbases(const FunctionSpace& fs,
                                             const GenerationLimits& limits) {
  std::vector<SoftSet> subbase;
  for (std::size_t x = 0; x < fs.domain.context()->universe_size(); ++x) {
    SoftMapping ev = evaluation(fs, SoftPoint{fs.domain.context(), x, 0});
    for (const auto& open : fs.codomain.opens()) subbase.push_back(ev.preimage(open));
  }
  GeneratedSpace generated =
      generate_from_subbase(fs.fn_context, std::move(subbase), limits);
  SubbaseComparison out{std::move(generated.space), false};
  out.equal = (out.via_preimages == fs.space);
  return out;
}

SumDomainIso sum_domain_iso(const SpaceFamily& domains, const SoftSpace& codomain,
                            const FuncspaceLimits& limits) {
  SumSpace summed = sum_space(domains);
  std::vector<FunctionSpace> factors;
  for (const auto& member : domains.members)
    factors.push_back(pointwise_space(member, codomain, limits));

  std::vector<SoftSpace> factor_spaces;
  for (const auto& f : factors) factor_spaces.push_back(f.space);
  ProductSpace product = product_space(SpaceFamily::of(std::move(factor_spaces)), limits.gen);

  FunctionSpace glued = pointwise_space(summed.space, codomain, limits);

  const std::size_t arity = factors.size();
  const SumStructure& sum = summed.structure;

  // tuple of factor functions -> the pasted function on the summed domain
  std::vector<std::uint32_t> fwd(product.structure.tuple_context->universe_size());
  for (std::size_t t = 0; t < fwd.size(); ++t) {
    std::vector<std::uint32_t> pasted(sum.union_context->universe_size());
    for (std::size_t x = 0; x < pasted.size(); ++x) {
      const std::size_t s = sum.owner(x);
      const std::size_t fn = product.structure.component(t, s);
      pasted[x] =
          static_cast<std::uint32_t>(factors[s].functions[fn].point(x - sum.offsets[s]));
    }
    auto idx = glued.index_of(pasted);
    if (!idx) throw Error("pasted function is not continuous on the summed domain");
    fwd[t] = static_cast<std::uint32_t>(*idx);
  }
  SoftMapping forward = SoftMapping::over_common_params(product.structure.tuple_context,
                                                        glued.fn_context, std::move(fwd));

  // glued function -> the tuple of its restrictions
  std::vector<std::uint32_t> bwd(glued.functions.size());
  for (std::size_t g = 0; g < bwd.size(); ++g) {
    std::vector<std::size_t> comps(arity);
    for (std::size_t s = 0; s < arity; ++s) {
      std::vector<std::uint32_t> restriction(sum.summands[s]->universe_size());
      for (std::size_t x = 0; x < restriction.size(); ++x)
        restriction[x] =
            static_cast<std::uint32_t>(glued.functions[g].point(sum.offsets[s] + x));
      auto idx = factors[s].index_of(restriction);
      if (!idx) throw Error("restriction of a continuous function is not continuous");
      comps[s] = *idx;
    }
    bwd[g] = static_cast<std::uint32_t>(product.structure.tuple_of(comps));
  }
  SoftMapping backward = SoftMapping::over_common_params(
      glued.fn_context, product.structure.tuple_context, std::move(bwd));

  return SumDomainIso{std::move(summed), std::move(factors), std::move(product),
                      std::move(glued),  std::move(forward), std::move(backward)};
}

namespace {

bool mutually_inverse(const SoftMapping& fwd, const SoftMapping& bwd) {
  for (std::size_t i = 0; i < fwd.point_map().size(); ++i)
    if (bwd.point(fwd.point(i)) != i) return false;
  for (std::size_t i = 0; i < bwd.point_map().size(); ++i)
    if (fwd.point(bwd.point(i)) != i) return false;
  return true;
}

}  // namespace

IsoReport check_sum_domain_iso(const SumDomainIso& iso) {
  IsoReport report;
  report.mutually_inverse = mutually_inverse(iso.forward, iso.backward);
  report.forward_continuous = is_continuous(iso.forward, iso.product.space, iso.glued.space);
  report.backward_continuous =
      is_continuous(iso.backward, iso.glued.space, iso.product.space);
  report.homeomorphism = is_homeomorphism(iso.forward, iso.product.space, iso.glued.space);
  if (!report.ok()) {
    report.detail = "pasting map: inverse=" + std::to_string(report.mutually_inverse) +
                    " fwd_cont=" + std::to_string(report.forward_continuous.holds) +
                    " bwd_cont=" + std::to_string(report.backward_continuous.holds);
  }
  return report;
}

ProductCodomainIso product_codomain_iso(const SoftSpace& domain,
                                        const SpaceFamily& codomains,
                                        const FuncspaceLimits& limits) {
  ProductSpace codomain_product = product_space(codomains, limits.gen);
  std::vector<FunctionSpace> factors;
  for (const auto& member : codomains.members)
    factors.push_back(pointwise_space(domain, member, limits));

  std::vector<SoftSpace> factor_spaces;
  for (const auto& f : factors) factor_spaces.push_back(f.space);
  ProductSpace product = product_space(SpaceFamily::of(std::move(factor_spaces)), limits.gen);

  FunctionSpace tupled = pointwise_space(domain, codomain_product.space, limits);

  const std::size_t arity = factors.size();
  const std::size_t nx = domain.context()->universe_size();

  // tuple of maps (f_s : X -> Y_s) -> the map x -> (f_s(x))_s
  std::vector<std::uint32_t> fwd(product.structure.tuple_context->universe_size());
  for (std::size_t t = 0; t < fwd.size(); ++t) {
    std::vector<std::uint32_t> tupled_points(nx);
    std::vector<std::size_t> comps(arity);
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t s = 0; s < arity; ++s)
        comps[s] = factors[s].functions[product.structure.component(t, s)].point(x);
      tupled_points[x] =
          static_cast<std::uint32_t>(codomain_product.structure.tuple_of(comps));
    }
    auto idx = tupled.index_of(tupled_points);
    if (!idx) throw Error("tupled function is not continuous into the product");
    fwd[t] = static_cast<std::uint32_t>(*idx);
  }
  SoftMapping forward = SoftMapping::over_common_params(product.structure.tuple_context,
                                                        tupled.fn_context, std::move(fwd));

  // map into the product -> the tuple of its projection composites
  std::vector<std::uint32_t> bwd(tupled.functions.size());
  for (std::size_t g = 0; g < bwd.size(); ++g) {
    std::vector<std::size_t> comps(arity);
    for (std::size_t s = 0; s < arity; ++s) {
      std::vector<std::uint32_t> component(nx);
      for (std::size_t x = 0; x < nx; ++x)
        component[x] = static_cast<std::uint32_t>(
            codomain_product.structure.component(tupled.functions[g].point(x), s));
      auto idx = factors[s].index_of(component);
      if (!idx) throw Error("projection composite is not continuous");
      comps[s] = *idx;
    }
    bwd[g] = static_cast<std::uint32_t>(product.structure.tuple_of(comps));
  }
  SoftMapping backward = SoftMapping::over_common_params(
      tupled.fn_context, product.structure.tuple_context, std::move(bwd));

  return ProductCodomainIso{std::move(codomain_product), std::move(factors),
                            std::move(product),          std::move(tupled),
                            std::move(forward),          std::move(backward)};
}

IsoReport check_product_codomain_iso(const ProductCodomainIso& iso) {
  IsoReport report;
  report.mutually_inverse = mutually_inverse(iso.forward, iso.backward);
  report.forward_continuous = is_continuous(iso.forward, iso.product.space, iso.tupled.space);
  report.backward_continuous =
      is_continuous(iso.backward, iso.tupled.space, iso.product.space);
  report.forward_open = is_open_map(iso.forward, iso.product.space, iso.tupled.space);
  report.backward_open = is_open_map(iso.backward, iso.tupled.space, iso.product.space);
  report.homeomorphism = is_homeomorphism(iso.forward, iso.product.space, iso.tupled.space);
  if (!report.ok()) {
    report.detail = "tupling map: inverse=" + std::to_string(report.mutually_inverse) +
                    " fwd_cont=" + std::to_string(report.forward_continuous.holds) +
                    " bwd_cont=" + std::to_string(report.backward_continuous.holds) +
                    " fwd_open=" + std::to_string(report.forward_open->holds) +
                    " bwd_open=" + std::to_string(report.backward_open->holds);
  }
  return report;
}

ExponentialSetup exponential_setup(const SoftSpace& z, const SoftSpace& x,
                                   const SoftSpace& y, const FuncspaceLimits& limits) {
  ProductSpace zx = product_space(SpaceFamily::of({z, x}), limits.gen);
  FunctionSpace yz = pointwise_space(z, y, limits);
  FunctionSpace y_zx = pointwise_space(zx.space, y, limits);
  FunctionSpace yz_x = pointwise_space(x, yz.space, limits);
  ProductSpace yz_z = product_space(SpaceFamily::of({yz.space, z}), limits.gen);

  std::vector<std::uint32_t> eval_points(yz_z.structure.tuple_context->universe_size());
  for (std::size_t t = 0; t < eval_points.size(); ++t) {
    const std::size_t fn = yz_z.structure.component(t, 0);
    const std::size_t zi = yz_z.structure.component(t, 1);
    eval_points[t] = static_cast<std::uint32_t>(yz.functions[fn].point(zi));
  }
  SoftMapping eval = SoftMapping::over_common_params(yz_z.structure.tuple_context,
                                                     y.context(), std::move(eval_points));

  return ExponentialSetup{z,
                          x,
                          y,
                          std::move(zx),
                          std::move(yz),
                          std::move(y_zx),
                          std::move(yz_x),
                          std::move(yz_z),
                          std::move(eval),
                          limits};
}

SoftMapping induced_map(const ExponentialSetup& setup, const SoftMapping& f) {
  require_same_context(f.source(), setup.zx.structure.tuple_context);
  require_same_context(f.target(), setup.y.context());
  const std::size_t nz = setup.z.context()->universe_size();
  const std::size_t nx = setup.x.context()->universe_size();
  std::vector<std::uint32_t> points(nx);
  for (std::size_t xi = 0; xi < nx; ++xi) {
    std::vector<std::uint32_t> slice(nz);
    for (std::size_t zi = 0; zi < nz; ++zi)
      slice[zi] = static_cast<std::uint32_t>(
          f.point(setup.zx.structure.tuple_of(std::array<std::size_t, 2>{zi, xi})));
    auto idx = setup.yz.index_of(slice);
    if (!idx)
      throw NotPointwiseContinuousSlice(
          "slice at " + setup.x.context()->element_name(xi) + " is not a continuous map");
    points[xi] = static_cast<std::uint32_t>(*idx);
  }
  return SoftMapping::over_common_params(setup.x.context(), setup.yz.fn_context,
                                         std::move(points));
}

SoftMapping uncurried(const ExponentialSetup& setup, const SoftMapping& ghat) {
  require_same_context(ghat.source(), setup.x.context());
  require_same_context(ghat.target(), setup.yz.fn_context);
  std::vector<std::uint32_t> points(setup.zx.structure.tuple_context->universe_size());
  for (std::size_t t = 0; t < points.size(); ++t) {
    const std::size_t zi = setup.zx.structure.component(t, 0);
    const std::size_t xi = setup.zx.structure.component(t, 1);
    points[t] = static_cast<std::uint32_t>(setup.yz.functions[ghat.point(xi)].point(zi));
  }
  return SoftMapping::over_common_params(setup.zx.structure.tuple_context,
                                         setup.y.context(), std::move(points));
}

SoftMapping switching(const ProductStructure& source, const ProductStructure& target) {
  if (source.arity() != 2 || target.arity() != 2)
    throw InvalidContext("switching applies to binary products");
  if (!same_context(source.factors[0], target.factors[1]) ||
      !same_context(source.factors[1], target.factors[0]))
    throw ContextMismatch("switching requires swapped factors");
  std::vector<std::uint32_t> points(source.tuple_context->universe_size());
  for (std::size_t t = 0; t < points.size(); ++t) {
    const std::size_t a = source.component(t, 0);
    const std::size_t b = source.component(t, 1);
    points[t] =
        static_cast<std::uint32_t>(target.tuple_of(std::array<std::size_t, 2>{b, a}));
  }
  return SoftMapping::over_common_params(source.tuple_context, target.tuple_context,
                                         std::move(points));
}

ExponentialVerdict check_exponential_law(const ExponentialSetup& setup) {
  ExponentialVerdict verdict;
  verdict.evaluation_continuous =
      is_continuous(setup.eval, setup.yz_z.space, setup.y).holds;

  ProductSpace z_yz =
      product_space(SpaceFamily::of({setup.z, setup.yz.space}), setup.limits.gen);
  SoftMapping swap = switching(z_yz.structure, setup.yz_z.structure);
  verdict.switching_continuous =
      is_continuous(swap, z_yz.space, setup.yz_z.space).holds &&
      is_continuous(switching(setup.yz_z.structure, z_yz.structure), setup.yz_z.space,
                    z_yz.space)
          .holds;

  // Curry every map Z x X -> Y whose slices are continuous and check the
  // round trip; record whether currying lands in the continuous maps.
  verdict.inverses_hold = true;
  verdict.curried_side_closed = true;
  for (const auto& f : setup.y_zx.functions) {
    std::optional<SoftMapping> ghat;
    try {
      ghat = induced_map(setup, f);
    } catch (const NotPointwiseContinuousSlice&) {
      continue;
    }
    ++verdict.curryable;
    if (!(uncurried(setup, *ghat) == f)) verdict.inverses_hold = false;
    if (!is_continuous(*ghat, setup.x, setup.yz.space).holds)
      verdict.curried_side_closed = false;
  }

  verdict.conditional_holds = true;
  verdict.uncurried_side_closed = true;
  verdict.curried = setup.yz_x.functions.size();
  for (const auto& ghat : setup.yz_x.functions) {
    SoftMapping f = uncurried(setup, ghat);
    if (!(induced_map(setup, f) == ghat)) verdict.inverses_hold = false;
    const bool f_continuous = is_continuous(f, setup.zx.space, setup.y).holds;
    if (!f_continuous) verdict.uncurried_side_closed = false;
    if (verdict.evaluation_continuous) {
      SoftMapping one_times_ghat = product_map(
          std::array<SoftMapping, 2>{SoftMapping::identity(setup.z.context()), ghat},
          setup.zx.structure, z_yz.structure);
      SoftMapping factored = compose(setup.eval, compose(swap, one_times_ghat));
      if (!(factored == f)) {
        verdict.conditional_holds = false;
        verdict.detail = "factorization mismatch for " + ghat.to_string();
      }
      if (!f_continuous) {
        verdict.conditional_holds = false;
        verdict.detail = "uncurried map discontinuous despite continuous evaluation: " +
                         ghat.to_string();
      }
    }
  }
  return verdict;
}

}  // namespace softtop
