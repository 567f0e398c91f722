#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "softtop/errors.hpp"
#include "softtop/topology.hpp"

using namespace softtop;

namespace {

SoftSpace sierpinski() {
  // opens {null, absolute, {e1:{a}}} over X={a,b}, E={e1}
  auto ctx = Context::make({"a", "b"}, {"e1"});
  return SoftSpace::from_opens(ctx, {SoftSet::null_set(ctx), SoftSet::absolute_set(ctx),
                                     SoftSet::make(ctx, {{"e1", {"a"}}})});
}

SoftSpace random_space(const ContextPtr& ctx, std::mt19937_64& rng, std::size_t k = 2) {
  std::vector<SoftSet> subbase;
  for (std::size_t i = 0; i < k; ++i) subbase.push_back(testing::random_soft_set(ctx, rng));
  return generate_from_subbase(ctx, std::move(subbase)).space;
}

}  // namespace

TEST_CASE("validate_axioms accepts the indiscrete and discrete topologies") {
  auto ctx = Context::make({"a", "b"}, {"e1", "e2"});
  CHECK(validate_axioms(ctx, SoftSpace::indiscrete(ctx).opens()).valid());
  CHECK(validate_axioms(ctx, SoftSpace::discrete(ctx).opens()).valid());
}

TEST_CASE("validate_axioms reports a union escape with its witness") {
  auto ctx = Context::make({"a", "b", "c"}, {"e1"});
  std::vector<SoftSet> opens{SoftSet::null_set(ctx), SoftSet::absolute_set(ctx),
                             SoftSet::make(ctx, {{"e1", {"a"}}}),
                             SoftSet::make(ctx, {{"e1", {"b"}}})};
  ValidationReport report = validate_axioms(ctx, opens);
  REQUIRE(!report.valid());
  bool found_union = false;
  const SoftSet missing = SoftSet::make(ctx, {{"e1", {"a", "b"}}});
  for (const auto& v : report.violations)
    if (v.kind == ValidationReport::Kind::UnionEscapes) {
      found_union = true;
      CHECK(v.witnesses.at(2) == missing);
    }
  CHECK(found_union);
  CHECK_THROWS_AS(SoftSpace::from_opens(ctx, opens), AxiomViolation);
}

TEST_CASE("validate_axioms reports missing null and absolute sets") {
  auto ctx = Context::make({"a"}, {"e1"});
  ValidationReport report = validate_axioms(ctx, {});
  REQUIRE(report.violations.size() == 2);
  CHECK(report.violations[0].kind == ValidationReport::Kind::MissingNull);
  CHECK(report.violations[1].kind == ValidationReport::Kind::MissingAbsolute);
}

TEST_CASE("closed sets") {
  auto ctx = Context::make({"a", "b"}, {"e1"});
  SoftSpace ind = SoftSpace::indiscrete(ctx);
  auto closed = ind.closed_sets();
  REQUIRE(closed.size() == 2);
  CHECK(closed[0].is_null());
  CHECK(closed[1].is_absolute());

  SoftSpace disc = SoftSpace::discrete(ctx);
  CHECK(disc.closed_sets().size() == disc.open_count());

  SoftSpace s = sierpinski();
  auto cs = s.closed_sets();
  REQUIRE(cs.size() == 3);
  CHECK(std::find(cs.begin(), cs.end(),
                  SoftSet::make(s.context(), {{"e1", {"b"}}})) != cs.end());
}

TEST_CASE("closure against the closed-superset enumeration") {
  SoftSpace s = sierpinski();
  auto ctx = s.context();
  SoftSet b = SoftSet::make(ctx, {{"e1", {"b"}}});
  CHECK(s.closure(b) == b);  // computed below by the oracle too

  // oracle: intersect closed supersets listed explicitly
  for (const auto& f : testing::all_soft_sets(ctx)) {
    SoftSet expected = SoftSet::absolute_set(ctx);
    for (const auto& c : s.closed_sets())
      if (f.subset_of(c)) expected = expected & c;
    CHECK(s.closure(f) == expected);
  }

  SoftSpace ind = SoftSpace::indiscrete(ctx);
  SoftSet a = SoftSet::make(ctx, {{"e1", {"a"}}});
  CHECK(ind.closure(a).is_absolute());
  for (const auto& c : s.closed_sets()) CHECK(s.closure(c) == c);
}

TEST_CASE("closure laws on random spaces") {
  auto ctx = Context::make({"a", "b"}, {"e1", "e2"});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    SoftSpace space = random_space(ctx, rng);
    CHECK(space.closure(SoftSet::null_set(ctx)).is_null());
    for (int inner = 0; inner < 10; ++inner) {
      SoftSet f = testing::random_soft_set(ctx, rng);
      SoftSet g = f | testing::random_soft_set(ctx, rng);
      SoftSet cf = space.closure(f);
      CHECK(f.subset_of(cf));
      CHECK(space.closure(cf) == cf);
      CHECK(cf.subset_of(space.closure(g)));
    }
  }
}

TEST_CASE("parameter topologies") {
  auto ctx = Context::make({"a", "b"}, {"e1", "e2"});
  SoftSpace ind = SoftSpace::indiscrete(ctx);
  CHECK(ind.param_topology(0).sets.size() == 2);
  SoftSpace disc = SoftSpace::discrete(ctx);
  CHECK(disc.param_topology("e1").sets.size() == 4);  // the full power set

  auto ctx1 = Context::make({"a", "b"}, {"e1", "e2"});
  SoftSpace s = SoftSpace::from_opens(
      ctx1, {SoftSet::null_set(ctx1), SoftSet::absolute_set(ctx1),
             SoftSet::make(ctx1, {{"e1", {"a"}}})});
  CHECK(s.param_topology("e2").sets.size() == 2);  // slices at e2 are empty or full
  CHECK_THROWS_AS(s.param_topology("nope"), UnknownParameter);
}

TEST_CASE("generation from the empty and singleton subbases") {
  auto ctx = Context::make({"a", "b"}, {"e1"});
  GeneratedSpace empty = generate_from_subbase(ctx, {});
  CHECK(empty.space == SoftSpace::indiscrete(ctx));

  SoftSet s = SoftSet::make(ctx, {{"e1", {"a"}}});
  GeneratedSpace single = generate_from_subbase(ctx, {s});
  CHECK(single.space.open_count() == 3);
  CHECK(single.space.is_open(s));
  CHECK(single.certificates_valid());
}

TEST_CASE("generation matches an independent fixpoint on the two-generator example") {
  auto ctx = Context::make({"a", "b"}, {"e1", "e2"});
  SoftSet a = SoftSet::make(ctx, {{"e1", {"a"}}, {"e2", {"a", "b"}}});
  SoftSet b = SoftSet::make(ctx, {{"e1", {"a", "b"}}, {"e2", {"b"}}});
  GeneratedSpace generated = generate_from_subbase(ctx, {a, b});

  // oracle: saturate the collection by exhaustive iteration over all soft sets
  std::vector<SoftSet> saturated{SoftSet::null_set(ctx), SoftSet::absolute_set(ctx), a, b};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<SoftSet> next = saturated;
    for (const auto& u : saturated)
      for (const auto& v : saturated)
        for (SoftSet w : {u | v, u & v})
          if (std::find(next.begin(), next.end(), w) == next.end()) {
            next.push_back(w);
            grew = true;
          }
    saturated = std::move(next);
  }
  CHECK(generated.space.open_count() == saturated.size());
  for (const auto& w : saturated) CHECK(generated.space.is_open(w));

  // the expected value, worked out by hand and by the oracle: five opens
  CHECK(generated.space.open_count() == 5);
  CHECK(generated.space.is_open(a & b));
  CHECK((a | b).is_absolute());
  CHECK(generated.certificates_valid());

  // the materialized certificates re-evaluate to their opens
  for (std::size_t i = 0; i < generated.space.open_count(); ++i) {
    SubbaseCertificate cert = generated.certificate(i);
    SoftSet value = SoftSet::null_set(ctx);
    for (const auto& term : cert.terms) {
      SoftSet meet = SoftSet::absolute_set(ctx);
      for (std::size_t member : term) meet = meet & generated.subbase[member];
      value = value | meet;
    }
    CHECK(value == generated.space.opens()[i]);
  }
}

TEST_CASE("generation is minimal against the all-topologies oracle") {
  auto ctx = Context::make({"a", "b"}, {"e1", "e2"});
  auto every_topology = testing::all_topologies(ctx);
  auto sets = testing::all_soft_sets(ctx);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<SoftSet> subbase;
    const std::size_t size = rng() % 3;
    for (std::size_t i = 0; i < size; ++i) subbase.push_back(sets[rng() % sets.size()]);
    GeneratedSpace generated = generate_from_subbase(ctx, subbase);
    auto minimal = testing::minimal_topology_containing(ctx, subbase, every_topology);
    REQUIRE(generated.space.open_count() == minimal.size());
    for (const auto& open : minimal) CHECK(generated.space.is_open(open));
  }
}

TEST_CASE("generation respects the size cap") {
  auto ctx = Context::make({"a", "b", "c", "d"}, {"e1", "e2", "e3"});
  std::vector<SoftSet> subbase;
  for (const auto& p : SoftSet::absolute_set(ctx).soft_points())
    subbase.push_back(p.to_soft_set());
  CHECK_THROWS_AS(generate_from_subbase(ctx, subbase, GenerationLimits{512}),
                  TopologyTooLarge);
}

TEST_CASE("generate_from_base and the base/subbase predicates") {
  auto ctx = Context::make({"a", "b"}, {"e1"});
  SoftSet s = SoftSet::make(ctx, {{"e1", {"a"}}});
  SoftSpace from_base = generate_from_base(ctx, {s});
  CHECK(from_base == generate_from_subbase(ctx, {s}).space);

  SoftSpace space = from_base;
  CHECK(is_base(space, space.opens()));  // a topology is its own base
  std::vector<SoftSet> just_s{s};
  // {s} alone cannot union up to the absolute set, so it is no base; as a
  // subbase it works because the empty intersection contributes it.
  CHECK(!is_base(space, just_s));
  CHECK(is_subbase(space, just_s));

  // a collection whose union closure is not intersection-closed is no base
  auto big = Context::make({"a", "b", "c"}, {"e1"});
  std::vector<SoftSet> bad{SoftSet::make(big, {{"e1", {"a", "b"}}}),
                           SoftSet::make(big, {{"e1", {"b", "c"}}})};
  CHECK_THROWS_AS(generate_from_base(big, bad), NotABase);
}

TEST_CASE("subbase check against the certificate-search oracle") {
  // Singleton-slice candidates over one parameter: their intersections and
  // unions reach all four soft sets, so they do form a subbase of the
  // discrete topology. (Computed by the oracle; asserting its output.)
  auto ctx = Context::make({"a", "b"}, {"e1"});
  SoftSpace disc = SoftSpace::discrete(ctx);
  std::vector<SoftSet> singletons{SoftSet::make(ctx, {{"e1", {"a"}}}),
                                  SoftSet::make(ctx, {{"e1", {"b"}}})};
  const bool oracle =
      testing::oracle_subbases_equal(ctx, singletons, disc.opens(), GenerationLimits{});
  CHECK(oracle == true);
  CHECK(is_subbase(disc, singletons) == oracle);

  // With a second parameter the same candidates no longer generate the
  // discrete topology: no union of intersections isolates an e2 slice.
  auto ctx2 = Context::make({"a", "b"}, {"e1", "e2"});
  SoftSpace disc2 = SoftSpace::discrete(ctx2);
  std::vector<SoftSet> candidates{SoftSet::make(ctx2, {{"e1", {"a"}}}),
                                  SoftSet::make(ctx2, {{"e1", {"b"}}})};
  CHECK(!is_subbase(disc2, candidates));
  CHECK(!testing::oracle_subbases_equal(ctx2, candidates, disc2.opens(),
                                        GenerationLimits{}));
}

TEST_CASE("neighborhoods") {
  SoftSpace s = sierpinski();
  auto ctx = s.context();
  SoftPoint a = SoftPoint::make(ctx, "a", "e1");
  SoftPoint b = SoftPoint::make(ctx, "b", "e1");

  CHECK(s.is_neighborhood(a, SoftSet::absolute_set(ctx)));
  CHECK(s.is_neighborhood(b, SoftSet::absolute_set(ctx)));
  CHECK(s.is_neighborhood(a, SoftSet::make(ctx, {{"e1", {"a", "b"}}})));
  CHECK(s.is_neighborhood(a, SoftSet::make(ctx, {{"e1", {"a"}}})));
  CHECK(!s.is_neighborhood(b, SoftSet::make(ctx, {{"e1", {"b"}}})));

  SoftSpace ind = SoftSpace::indiscrete(ctx);
  for (const auto& f : testing::all_soft_sets(ctx)) {
    if (f.is_absolute()) continue;
    CHECK(!ind.is_neighborhood(a, f));  // the only open around a is everything
  }

  // listing agrees with the predicate on a small context
  auto nbhds = s.neighborhoods(a);
  for (const auto& f : testing::all_soft_sets(ctx)) {
    const bool listed = std::find(nbhds.begin(), nbhds.end(), f) != nbhds.end();
    CHECK(listed == s.is_neighborhood(a, f));
  }

  // every open is a neighborhood of each of its points
  std::mt19937_64 rng(5);
  auto ctx2 = Context::make({"a", "b"}, {"e1", "e2"});
  for (int trial = 0; trial < 10; ++trial) {
    SoftSpace space = random_space(ctx2, rng);
    for (const auto& u : space.opens())
      for (const auto& p : u.soft_points()) CHECK(space.is_neighborhood(p, u));
  }
}

TEST_CASE("neighborhood listing falls back to open neighborhoods on wide contexts") {
  std::vector<std::string> universe;
  for (int i = 0; i < 9; ++i) universe.push_back("u" + std::to_string(i));
  auto ctx = Context::make(universe, {"e1", "e2"});  // 18 bits, past the cutoff
  SoftSet u = SoftSet::make(ctx, {{"e1", {"u0", "u1"}}});
  SoftSpace space = SoftSpace::from_opens(
      ctx, {SoftSet::null_set(ctx), SoftSet::absolute_set(ctx), u});
  SoftPoint p = SoftPoint::make(ctx, "u0", "e1");
  auto nbhds = space.neighborhoods(p);
  REQUIRE(nbhds.size() == 2);  // only the opens containing the point
  CHECK(std::find(nbhds.begin(), nbhds.end(), u) != nbhds.end());
  // the predicate still sees non-open neighborhoods
  CHECK(space.is_neighborhood(p, u | SoftSet::make(ctx, {{"e2", {"u5"}}})));
}

TEST_CASE("separation axioms on the canonical spaces") {
  auto ctx = Context::make({"a", "b"}, {"e1"});
  SoftSpace disc = SoftSpace::discrete(ctx);
  for (auto variant : {SeparationVariant::FullDisjoint, SeparationVariant::ParamDisjoint,
                       SeparationVariant::PointAbsent})
    for (int level = 0; level <= 2; ++level)
      CHECK(separation_axiom(disc, level, variant).holds);

  SoftSpace ind = SoftSpace::indiscrete(ctx);
  SeparationResult t0 = separation_axiom(ind, 0);
  CHECK(!t0.holds);
  CHECK(t0.witness.has_value());

  SoftSpace s = sierpinski();
  CHECK(separation_axiom(s, 0).holds);
  SeparationResult t1 = separation_axiom(s, 1);
  CHECK(!t1.holds);
  REQUIRE(t1.witness.has_value());
  // no open holds b while excluding a
  CHECK(t1.witness->first.elem != t1.witness->second.elem);
}

TEST_CASE("separation hierarchy and oracle agreement on random spaces") {
  std::mt19937_64 rng(17);
  auto ctx = Context::make({"a", "b"}, {"e1", "e2"});
  for (int trial = 0; trial < 15; ++trial) {
    SoftSpace space = random_space(ctx, rng);
    for (auto variant : {SeparationVariant::FullDisjoint, SeparationVariant::ParamDisjoint,
                         SeparationVariant::PointAbsent}) {
      bool t2 = separation_axiom(space, 2, variant).holds;
      bool t1 = separation_axiom(space, 1, variant).holds;
      bool t0 = separation_axiom(space, 0, variant).holds;
      if (t2) CHECK(t1);
      if (t1) CHECK(t0);
      for (int level = 0; level <= 2; ++level)
        CHECK(separation_axiom(space, level, variant).holds ==
              testing::oracle_separation(space, level, variant));
    }
  }
}
