#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace softtop::testing {

std::vector<SoftSet> all_soft_sets(const ContextPtr& ctx) {
  const std::size_t width = ctx->bit_width();
  if (width > 16) throw std::runtime_error("context too large to enumerate");
  std::vector<SoftSet> out;
  out.reserve(std::size_t{1} << width);
  for (std::size_t mask = 0; mask < (std::size_t{1} << width); ++mask) {
    Bitset bits(width);
    for (std::size_t i = 0; i < width; ++i)
      if (mask & (std::size_t{1} << i)) bits.set(i);
    out.emplace_back(ctx, std::move(bits));
  }
  return out;
}

bool is_topology(const ContextPtr& ctx, std::span<const SoftSet> collection) {
  auto member = [&](const SoftSet& s) {
    for (const auto& t : collection)
      if (t == s) return true;
    return false;
  };
  if (!member(SoftSet::null_set(ctx)) || !member(SoftSet::absolute_set(ctx))) return false;
  for (const auto& a : collection)
    for (const auto& b : collection) {
      if (!member(a | b)) return false;
      if (!member(a & b)) return false;
    }
  return true;
}

std::vector<std::vector<SoftSet>> all_topologies(const ContextPtr& ctx) {
  const std::size_t width = ctx->bit_width();
  if (width > 4) throw std::runtime_error("context too large to enumerate topologies");
  const std::vector<SoftSet> sets = all_soft_sets(ctx);
  std::vector<std::vector<SoftSet>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << sets.size()); ++mask) {
    std::vector<SoftSet> collection;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (mask & (std::size_t{1} << i)) collection.push_back(sets[i]);
    if (is_topology(ctx, collection)) out.push_back(std::move(collection));
  }
  return out;
}

std::vector<SoftSet> minimal_topology_containing(
    const ContextPtr& ctx, std::span<const SoftSet> subbase,
    const std::vector<std::vector<SoftSet>>& all) {
  std::vector<SoftSet> acc = all_soft_sets(ctx);  // discrete: contains everything
  std::sort(acc.begin(), acc.end());
  for (const auto& topology : all) {
    bool contains_subbase = true;
    for (const auto& s : subbase) {
      if (std::find(topology.begin(), topology.end(), s) == topology.end()) {
        contains_subbase = false;
        break;
      }
    }
    if (!contains_subbase) continue;
    std::vector<SoftSet> sorted = topology;
    std::sort(sorted.begin(), sorted.end());
    std::vector<SoftSet> next;
    std::set_intersection(acc.begin(), acc.end(), sorted.begin(), sorted.end(),
                          std::back_inserter(next),
                          [](const SoftSet& a, const SoftSet& b) { return a < b; });
    acc = std::move(next);
  }
  return acc;
}

namespace {

bool oracle_disjoint(const SoftSet& f, const SoftSet& g, const SoftPoint& p,
                     const SoftPoint& q, SeparationVariant variant) {
  const std::size_t n = f.context()->universe_size();
  switch (variant) {
    case SeparationVariant::FullDisjoint: {
      for (std::size_t e = 0; e < f.context()->param_count(); ++e)
        for (std::size_t x = 0; x < n; ++x)
          if (f.contains(x, e) && g.contains(x, e)) return false;
      return true;
    }
    case SeparationVariant::ParamDisjoint: {
      for (std::size_t x = 0; x < n; ++x) {
        if (f.contains(x, p.param) && g.contains(x, p.param)) return false;
        if (f.contains(x, q.param) && g.contains(x, q.param)) return false;
      }
      return true;
    }
    case SeparationVariant::PointAbsent:
      return !f.contains(q.elem, q.param) && !g.contains(p.elem, p.param);
  }
  return false;
}

}  // namespace

bool oracle_separation(const SoftSpace& space, int level, SeparationVariant variant) {
  const ContextPtr& ctx = space.context();
  std::vector<SoftPoint> points;
  for (std::size_t e = 0; e < ctx->param_count(); ++e)
    for (std::size_t x = 0; x < ctx->universe_size(); ++x)
      points.push_back(SoftPoint{ctx, x, e});

  for (const auto& p : points)
    for (const auto& q : points) {
      if (p.elem == q.elem && p.param == q.param) continue;
      bool separated = false;
      if (level == 0) {
        for (const auto& u : space.opens())
          if (u.contains(p.elem, p.param) != u.contains(q.elem, q.param)) separated = true;
      } else if (level == 1) {
        for (const auto& u : space.opens())
          if (u.contains(p.elem, p.param) && !u.contains(q.elem, q.param)) separated = true;
      } else {
        for (const auto& u : space.opens())
          for (const auto& v : space.opens())
            if (u.contains(p.elem, p.param) && v.contains(q.elem, q.param) &&
                oracle_disjoint(u, v, p, q, variant))
              separated = true;
      }
      if (!separated) return false;
    }
  return true;
}

bool oracle_subbases_equal(const ContextPtr& ctx, std::span<const SoftSet> a,
                           std::span<const SoftSet> b, const GenerationLimits& limits) {
  SoftSpace from_a =
      generate_from_subbase(ctx, std::vector<SoftSet>(a.begin(), a.end()), limits).space;
  SoftSpace from_b =
      generate_from_subbase(ctx, std::vector<SoftSet>(b.begin(), b.end()), limits).space;
  for (const auto& s : a)
    if (!from_b.is_open(s)) return false;
  for (const auto& s : b)
    if (!from_a.is_open(s)) return false;
  return true;
}

std::vector<SoftSet> sum_opens_via_filter(const SpaceFamily& family) {
  SumStructure structure = make_sum_structure(family.contexts());
  std::vector<SoftSet> out;
  for (const auto& candidate : all_soft_sets(structure.union_context)) {
    bool open = true;
    for (std::size_t s = 0; s < family.members.size() && open; ++s)
      open = family.members[s].is_open(structure.restrict_to(s, candidate));
    if (open) out.push_back(candidate);
  }
  return out;
}

SoftSet random_soft_set(const ContextPtr& ctx, std::mt19937_64& rng) {
  Bitset bits(ctx->bit_width());
  for (std::size_t i = 0; i < bits.size(); ++i)
    if ((rng() >> 33) & 1) bits.set(i);
  return SoftSet(ctx, std::move(bits));
}

}  // namespace softtop::testing
