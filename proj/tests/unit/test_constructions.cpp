#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "softtop/constructions.hpp"
#include "softtop/errors.hpp"

using namespace softtop;

namespace {

SoftSpace random_space(const ContextPtr& ctx, std::mt19937_64& rng, std::size_t k = 2) {
  std::vector<SoftSet> subbase;
  for (std::size_t i = 0; i < k; ++i) subbase.push_back(testing::random_soft_set(ctx, rng));
  return generate_from_subbase(ctx, std::move(subbase)).space;
}

}  // namespace

TEST_CASE("product structure indexing is lexicographic in factor order") {
  auto ca = Context::make({"a", "b"}, {"e1"});
  auto cb = Context::make({"0", "1", "2"}, {"e1"});
  ProductStructure ps = make_product_structure({ca, cb});
  CHECK(ps.tuple_context->universe_size() == 6);
  CHECK(ps.tuple_context->element_name(0) == "(a,0)");
  CHECK(ps.tuple_context->element_name(5) == "(b,2)");
  for (std::size_t t = 0; t < 6; ++t) {
    std::size_t comps[2] = {ps.component(t, 0), ps.component(t, 1)};
    CHECK(ps.tuple_of(comps) == t);
  }
  CHECK_THROWS_AS(
      make_product_structure({ca, Context::make({"0"}, {"k9"})}), ParamMismatch);
}

TEST_CASE("cylinders have the displayed slice shape") {
  auto ca = Context::make({"a", "b"}, {"e1", "e2"});
  auto cb = Context::make({"0", "1"}, {"e1", "e2"});
  ProductStructure ps = make_product_structure({ca, cb});
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    SoftSet f = testing::random_soft_set(ca, rng);
    SoftSet cyl = ps.cylinder(0, f);
    // slice at e is F(e) x X_2, checked pointwise
    for (std::size_t e = 0; e < 2; ++e)
      for (std::size_t t = 0; t < ps.tuple_context->universe_size(); ++t)
        CHECK(cyl.contains(t, e) == f.contains(ps.component(t, 0), e));
    CHECK(ps.cylinder(0, f) == ps.projection(0).preimage(f));
  }
}

TEST_CASE("product of one space is the same space up to relabeling") {
  auto ctx = Context::make({"a", "b"}, {"e1"});
  std::mt19937_64 rng(4);
  SoftSpace space = random_space(ctx, rng);
  ProductSpace prod = product_space(SpaceFamily::of({space}));
  CHECK(prod.space.open_count() == space.open_count());
  for (const auto& open : space.opens())
    CHECK(prod.space.is_open(prod.structure.cylinder(0, open)));
}

TEST_CASE("products of indiscrete and discrete factors") {
  auto ca = Context::make({"a", "b"}, {"e1"});
  auto cb = Context::make({"0"}, {"e1"});
  ProductSpace ind = product_space(
      SpaceFamily::of({SoftSpace::indiscrete(ca), SoftSpace::indiscrete(cb)}));
  CHECK(ind.space.open_count() == 2);

  ProductSpace mixed = product_space(
      SpaceFamily::of({SoftSpace::discrete(ca), SoftSpace::indiscrete(cb)}));
  // the tuple universe {(a,0),(b,0)} carries the full power set
  CHECK(mixed.space.open_count() == 4);
  CHECK(mixed.space == SoftSpace::discrete(mixed.structure.tuple_context));
}

TEST_CASE("projections from products are continuous") {
  std::mt19937_64 rng(6);
  auto ca = Context::make({"a", "b"}, {"e1", "e2"});
  auto cb = Context::make({"0", "1"}, {"e1", "e2"});
  for (int trial = 0; trial < 10; ++trial) {
    SpaceFamily family = SpaceFamily::of({random_space(ca, rng), random_space(cb, rng)});
    ProductSpace prod = product_space(family);
    for (std::size_t s = 0; s < 2; ++s)
      CHECK(is_continuous(prod.structure.projection(s), prod.space, family.members[s])
                .holds);
  }
}

TEST_CASE("sum spaces") {
  auto ca = Context::make({"a"}, {"e1"});
  auto cb = Context::make({"b"}, {"e1"});
  SumSpace sum =
      sum_space(SpaceFamily::of({SoftSpace::indiscrete(ca), SoftSpace::indiscrete(cb)}));
  CHECK(sum.space.open_count() == 4);  // every block choice of empty/full

  SumSpace single = sum_space(SpaceFamily::of({SoftSpace::indiscrete(ca)}));
  CHECK(single.space.open_count() == 2);

  auto cc = Context::make({"c", "d"}, {"e1"});
  SumSpace discs =
      sum_space(SpaceFamily::of({SoftSpace::discrete(ca), SoftSpace::discrete(cc)}));
  CHECK(discs.space == SoftSpace::discrete(discs.structure.union_context));

  CHECK_THROWS_AS(
      sum_space(SpaceFamily::of({SoftSpace::indiscrete(ca), SoftSpace::indiscrete(ca)})),
      UniverseOverlap);
}

TEST_CASE("sum opens equal the restriction-membership filter") {
  std::mt19937_64 rng(8);
  auto ca = Context::make({"a", "b"}, {"e1", "e2"});
  auto cb = Context::make({"c"}, {"e1", "e2"});
  for (int trial = 0; trial < 8; ++trial) {
    SpaceFamily family = SpaceFamily::of({random_space(ca, rng), random_space(cb, rng)});
    SumSpace sum = sum_space(family);
    auto filtered = testing::sum_opens_via_filter(family);
    REQUIRE(sum.space.open_count() == filtered.size());
    for (const auto& open : filtered) CHECK(sum.space.is_open(open));
    // inclusions are continuous
    for (std::size_t s = 0; s < 2; ++s)
      CHECK(is_continuous(sum.structure.inclusion(s), family.members[s], sum.space).holds);
  }
}

TEST_CASE("diagonal and glued maps satisfy their factorization identities") {
  auto cx = Context::make({"a", "b"}, {"e1"});
  auto cy1 = Context::make({"0", "1"}, {"e1"});
  auto cy2 = Context::make({"u", "v"}, {"e1"});
  ProductStructure prod = make_product_structure({cy1, cy2});

  SoftMapping f1 = SoftMapping::over_common_params(cx, cy1, {0, 1});
  SoftMapping f2 = SoftMapping::over_common_params(cx, cy2, {1, 1});
  SoftMapping diag = diagonal_map(std::array<SoftMapping, 2>{f1, f2}, prod);
  CHECK(compose(prod.projection(0), diag) == f1);
  CHECK(compose(prod.projection(1), diag) == f2);

  // single-member family: the diagonal is the original map modulo 1-tuples
  ProductStructure one = make_product_structure({cy1});
  SoftMapping diag1 = diagonal_map(std::array<SoftMapping, 1>{f1}, one);
  for (std::size_t x = 0; x < 2; ++x) CHECK(one.component(diag1.point(x), 0) == f1.point(x));

  // constant maps tuple into the constant pair
  SoftMapping c1 = SoftMapping::over_common_params(cx, cy1, {0, 0});
  SoftMapping c2 = SoftMapping::over_common_params(cx, cy2, {1, 1});
  SoftMapping pair = diagonal_map(std::array<SoftMapping, 2>{c1, c2}, prod);
  CHECK(pair.point(0) == pair.point(1));

  SumStructure sum = make_sum_structure({cx, Context::make({"c"}, {"e1"})});
  SoftMapping g1 = SoftMapping::over_common_params(cx, cy1, {1, 0});
  SoftMapping g2 = SoftMapping::over_common_params(sum.summands[1], cy1, {0});
  SoftMapping glued = glued_map(std::array<SoftMapping, 2>{g1, g2}, sum);
  CHECK(compose(glued, sum.inclusion(0)) == g1);
  CHECK(compose(glued, sum.inclusion(1)) == g2);

  // a single summand glues to the original map
  SumStructure lone = make_sum_structure({cx});
  SoftMapping glued1 = glued_map(std::array<SoftMapping, 1>{g1}, lone);
  CHECK(std::equal(glued1.point_map().begin(), glued1.point_map().end(),
                   g1.point_map().begin(), g1.point_map().end()));
}

TEST_CASE("product and sum maps of identities are identities") {
  auto ca = Context::make({"a", "b"}, {"e1"});
  auto cb = Context::make({"0"}, {"e1"});
  ProductStructure prod = make_product_structure({ca, cb});
  SoftMapping pm = product_map(
      std::array<SoftMapping, 2>{SoftMapping::identity(ca), SoftMapping::identity(cb)},
      prod, prod);
  CHECK(pm == SoftMapping::identity(prod.tuple_context));

  SumStructure sum = make_sum_structure({ca, cb});
  SoftMapping sm = sum_map(
      std::array<SoftMapping, 2>{SoftMapping::identity(ca), SoftMapping::identity(cb)},
      sum, sum);
  CHECK(sm == SoftMapping::identity(sum.union_context));
}

TEST_CASE("combinators of continuous maps are continuous") {
  std::mt19937_64 rng(14);
  auto cx1 = Context::make({"a", "b"}, {"e1"});
  auto cx2 = Context::make({"c", "d"}, {"e1"});
  auto cy1 = Context::make({"0", "1"}, {"e1"});
  auto cy2 = Context::make({"u", "v"}, {"e1"});
  int productive = 0;
  for (int trial = 0; trial < 60 && productive < 25; ++trial) {
    SpaceFamily sources = SpaceFamily::of({random_space(cx1, rng), random_space(cx2, rng)});
    SpaceFamily targets = SpaceFamily::of({random_space(cy1, rng), random_space(cy2, rng)});
    std::vector<std::uint32_t> pm1{static_cast<std::uint32_t>(rng() % 2),
                                   static_cast<std::uint32_t>(rng() % 2)};
    std::vector<std::uint32_t> pm2{static_cast<std::uint32_t>(rng() % 2),
                                   static_cast<std::uint32_t>(rng() % 2)};
    SoftMapping m1 = SoftMapping::over_common_params(cx1, cy1, pm1);
    SoftMapping m2 = SoftMapping::over_common_params(cx2, cy2, pm2);
    if (!is_continuous(m1, sources.members[0], targets.members[0]).holds) continue;
    if (!is_continuous(m2, sources.members[1], targets.members[1]).holds) continue;
    ++productive;

    ProductSpace sp = product_space(sources);
    ProductSpace tp = product_space(targets);
    SoftMapping pm = product_map(std::array<SoftMapping, 2>{m1, m2}, sp.structure,
                                 tp.structure);
    CHECK(is_continuous(pm, sp.space, tp.space).holds);

    SumSpace ss = sum_space(sources);
    SumSpace ts = sum_space(targets);
    SoftMapping sm =
        sum_map(std::array<SoftMapping, 2>{m1, m2}, ss.structure, ts.structure);
    CHECK(is_continuous(sm, ss.space, ts.space).holds);
  }
  CHECK(productive > 0);
}

TEST_CASE("continuity into a product is componentwise on a desk scan") {
  std::mt19937_64 rng(16);
  auto cx = Context::make({"a", "b"}, {"e1"});
  auto cy1 = Context::make({"0", "1"}, {"e1"});
  auto cy2 = Context::make({"u", "v"}, {"e1"});
  for (int trial = 0; trial < 6; ++trial) {
    SoftSpace domain = random_space(cx, rng);
    SpaceFamily targets = SpaceFamily::of({random_space(cy1, rng), random_space(cy2, rng)});
    ProductSpace prod = product_space(targets);
    const std::size_t tuples = prod.structure.tuple_context->universe_size();
    for (std::size_t i = 0; i < tuples; ++i)
      for (std::size_t j = 0; j < tuples; ++j) {
        SoftMapping f = SoftMapping::over_common_params(
            cx, prod.structure.tuple_context,
            {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
        BiconditionalVerdict v = check_product_factorization(domain, targets, prod, f);
        CHECK(v.agree());
      }
  }
}

TEST_CASE("continuity from a sum is summandwise on a desk scan") {
  std::mt19937_64 rng(18);
  auto cx1 = Context::make({"a", "b"}, {"e1"});
  auto cx2 = Context::make({"c", "d"}, {"e1"});
  auto cy = Context::make({"0", "1"}, {"e1"});
  for (int trial = 0; trial < 6; ++trial) {
    SpaceFamily sources = SpaceFamily::of({random_space(cx1, rng), random_space(cx2, rng)});
    SoftSpace target = random_space(cy, rng);
    SumSpace sum = sum_space(sources);
    for (std::size_t mask = 0; mask < 16; ++mask) {
      SoftMapping f = SoftMapping::over_common_params(
          sum.structure.union_context, cy,
          {static_cast<std::uint32_t>(mask & 1), static_cast<std::uint32_t>((mask >> 1) & 1),
           static_cast<std::uint32_t>((mask >> 2) & 1),
           static_cast<std::uint32_t>((mask >> 3) & 1)});
      BiconditionalVerdict v = check_sum_factorization(sources, sum, target, f);
      CHECK(v.agree());
    }
  }
}

TEST_CASE("parameter topologies commute with products and sums") {
  std::mt19937_64 rng(20);
  auto cx1 = Context::make({"a", "b"}, {"e1", "e2"});
  auto cx2 = Context::make({"c"}, {"e1", "e2"});
  for (int trial = 0; trial < 10; ++trial) {
    SpaceFamily family = SpaceFamily::of({random_space(cx1, rng), random_space(cx2, rng)});
    ParamTopologyVerdict verdict = check_param_topologies(family);
    CHECK(verdict.product_ok);
    CHECK(verdict.sum_applicable);
    CHECK(verdict.sum_ok);
  }

  // single-member families agree trivially
  SpaceFamily one = SpaceFamily::of({random_space(cx1, rng)});
  CHECK(check_param_topologies(one).agree());

  // overlapping universes: the sum clause does not apply, the product still does
  SpaceFamily overlapping =
      SpaceFamily::of({random_space(cx1, rng), random_space(cx1, rng)});
  ParamTopologyVerdict verdict = check_param_topologies(overlapping);
  CHECK(!verdict.sum_applicable);
  CHECK(verdict.product_ok);
  CHECK(verdict.agree());
}

TEST_CASE("initial topology along the projections recovers the product topology") {
  std::mt19937_64 rng(22);
  auto ca = Context::make({"a", "b"}, {"e1"});
  auto cb = Context::make({"0", "1"}, {"e1"});
  SpaceFamily family = SpaceFamily::of({random_space(ca, rng), random_space(cb, rng)});
  ProductSpace prod = product_space(family);
  std::vector<std::pair<SoftMapping, SoftSpace>> maps;
  for (std::size_t s = 0; s < 2; ++s)
    maps.emplace_back(prod.structure.projection(s), family.members[s]);
  CHECK(initial_topology(prod.structure.tuple_context, maps).space == prod.space);
}
