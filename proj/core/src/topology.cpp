#include "softtop/topology.hpp"

#include <algorithm>
#include <deque>

#include "softtop/errors.hpp"

namespace softtop {

namespace {

std::vector<SoftSet> canonicalize(std::vector<SoftSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

}  // namespace

std::string ValidationReport::to_string() const {
  if (valid()) return "valid";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.message;
  }
  return out;
}

ValidationReport validate_axioms(const ContextPtr& ctx, std::span<const SoftSet> opens) {
  for (const auto& f : opens) require_same_context(ctx, f.context());

  std::vector<SoftSet> list = canonicalize({opens.begin(), opens.end()});
  std::unordered_set<Bitset, BitsetHash> index;
  for (const auto& f : list) index.insert(f.bits());

  ValidationReport report;
  const SoftSet null = SoftSet::null_set(ctx);
  const SoftSet full = SoftSet::absolute_set(ctx);
  if (!index.count(null.bits()))
    report.violations.push_back({ValidationReport::Kind::MissingNull,
                                 {null},
                                 "null soft set missing from the collection"});
  if (!index.count(full.bits()))
    report.violations.push_back({ValidationReport::Kind::MissingAbsolute,
                                 {full},
                                 "absolute soft set missing from the collection"});

  bool union_done = false, inter_done = false;
  for (std::size_t i = 0; i < list.size() && !(union_done && inter_done); ++i)
    for (std::size_t j = i + 1; j < list.size() && !(union_done && inter_done); ++j) {
      if (!union_done) {
        SoftSet u = list[i] | list[j];
        if (!index.count(u.bits())) {
          report.violations.push_back({ValidationReport::Kind::UnionEscapes,
                                       {list[i], list[j], u},
                                       "union of " + list[i].to_string() + " and " +
                                           list[j].to_string() + " is missing: " +
                                           u.to_string()});
          union_done = true;
        }
      }
      if (!inter_done) {
        SoftSet w = list[i] & list[j];
        if (!index.count(w.bits())) {
          report.violations.push_back({ValidationReport::Kind::IntersectionEscapes,
                                       {list[i], list[j], w},
                                       "intersection of " + list[i].to_string() + " and " +
                                           list[j].to_string() + " is missing: " +
                                           w.to_string()});
          inter_done = true;
        }
      }
    }
  return report;
}

SoftSpace::SoftSpace(ContextPtr ctx, std::vector<SoftSet> opens)
    : ctx_(std::move(ctx)), opens_(std::move(opens)) {
  for (const auto& f : opens_) index_.insert(f.bits());
}

SoftSpace SoftSpace::indiscrete(ContextPtr ctx) {
  std::vector<SoftSet> opens{SoftSet::null_set(ctx), SoftSet::absolute_set(ctx)};
  return SoftSpace(std::move(ctx), canonicalize(std::move(opens)));
}

SoftSpace SoftSpace::discrete(ContextPtr ctx) {
  const std::size_t width = ctx->bit_width();
  if (width > 22) throw TopologyTooLarge(std::size_t{1} << 22);
  const std::size_t total = std::size_t{1} << width;
  std::vector<SoftSet> opens;
  opens.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    Bitset bits(width);
    for (std::size_t i = 0; i < width; ++i)
      if (mask & (std::size_t{1} << i)) bits.set(i);
    opens.emplace_back(ctx, std::move(bits));
  }
  return SoftSpace(std::move(ctx), std::move(opens));
}

SoftSpace SoftSpace::from_opens(ContextPtr ctx, std::vector<SoftSet> opens) {
  ValidationReport report = validate_axioms(ctx, opens);
  if (!report.valid()) throw AxiomViolation(report.to_string());
  return SoftSpace(std::move(ctx), canonicalize(std::move(opens)));
}

SoftSpace SoftSpace::trusted(ContextPtr ctx, std::vector<SoftSet> opens) {
  for (const auto& f : opens) require_same_context(ctx, f.context());
  return SoftSpace(std::move(ctx), canonicalize(std::move(opens)));
}

bool SoftSpace::is_open(const SoftSet& f) const {
  require_same_context(ctx_, f.context());
  return index_.count(f.bits()) != 0;
}

bool SoftSpace::is_closed(const SoftSet& f) const { return is_open(f.complemented()); }

std::vector<SoftSet> SoftSpace::closed_sets() const {
  std::vector<SoftSet> out;
  out.reserve(opens_.size());
  for (const auto& f : opens_) out.push_back(f.complemented());
  return canonicalize(std::move(out));
}

SoftSet SoftSpace::closure(const SoftSet& f) const {
  require_same_context(ctx_, f.context());
  SoftSet acc = SoftSet::absolute_set(ctx_);
  for (const auto& open : opens_) {
    SoftSet closed = open.complemented();
    if (f.subset_of(closed)) acc = acc & closed;
  }
  return acc;
}

std::vector<Bitset> SoftSpace::param_slices(std::size_t param) const {
  std::vector<Bitset> out;
  out.reserve(opens_.size());
  for (const auto& f : opens_) out.push_back(f.slice(param));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CrispTopology SoftSpace::param_topology(std::size_t param) const {
  if (param >= ctx_->param_count())
    throw UnknownParameter(std::to_string(param));
  auto sets = param_slices(param);
  if (auto violation = crisp_axiom_violation(ctx_->universe_size(), sets))
    throw AxiomViolation("parameter topology at " + ctx_->param_name(param) +
                         " is not a topology: " + *violation);
  return CrispTopology::from_sets(ctx_->universe_size(), std::move(sets));
}

CrispTopology SoftSpace::param_topology(std::string_view param_name) const {
  auto p = ctx_->param_index(param_name);
  if (!p) throw UnknownParameter(std::string(param_name));
  return param_topology(*p);
}

std::vector<SoftSet> SoftSpace::neighborhoods(const SoftPoint& p) const {
  require_same_context(ctx_, p.context);
  std::vector<SoftSet> around;  // opens containing p
  for (const auto& g : opens_)
    if (g.contains(p)) around.push_back(g);

  const std::size_t width = ctx_->bit_width();
  if (width > 16) return around;

  std::vector<SoftSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << width); ++mask) {
    Bitset bits(width);
    for (std::size_t i = 0; i < width; ++i)
      if (mask & (std::size_t{1} << i)) bits.set(i);
    SoftSet f(ctx_, std::move(bits));
    for (const auto& g : around)
      if (g.subset_of(f)) {
        out.push_back(f);
        break;
      }
  }
  return canonicalize(std::move(out));
}

bool SoftSpace::is_neighborhood(const SoftPoint& p, const SoftSet& f) const {
  require_same_context(ctx_, f.context());
  for (const auto& g : opens_)
    if (g.contains(p) && g.subset_of(f)) return true;
  return false;
}

SubbaseCertificate GeneratedSpace::certificate(std::size_t open_index) const {
  SubbaseCertificate cert;
  const Bitset& bases = open_certs[open_index];
  for (std::size_t b = bases.find_first(); b != Bitset::npos; b = bases.find_next(b)) {
    std::vector<std::size_t> term;
    const Bitset& members = base_certs[b];
    for (std::size_t s = members.find_first(); s != Bitset::npos; s = members.find_next(s))
      term.push_back(s);
    cert.terms.push_back(std::move(term));
  }
  return cert;
}

bool GeneratedSpace::certificates_valid() const {
  const ContextPtr& ctx = space.context();
  for (std::size_t i = 0; i < space.open_count(); ++i) {
    SoftSet value = SoftSet::null_set(ctx);
    const Bitset& bases = open_certs[i];
    for (std::size_t b = bases.find_first(); b != Bitset::npos; b = bases.find_next(b)) {
      SoftSet term = SoftSet::absolute_set(ctx);
      const Bitset& members = base_certs[b];
      for (std::size_t s = members.find_first(); s != Bitset::npos;
           s = members.find_next(s))
        term = term & subbase[s];
      value = value | term;
    }
    if (!(value == space.opens()[i])) return false;
  }
  return true;
}

GeneratedSpace generate_from_subbase(ContextPtr ctx, std::vector<SoftSet> subbase,
                                     const GenerationLimits& limits) {
  for (const auto& f : subbase) require_same_context(ctx, f.context());

  // Intersection closure, seeded with the absolute set (the empty
  // intersection). Certificates track which subbase members were meeted.
  struct BaseEntry {
    SoftSet value;
    Bitset members;
  };
  std::vector<BaseEntry> base;
  std::unordered_set<Bitset, BitsetHash> base_index;
  auto add_base = [&](SoftSet value, Bitset members) {
    if (!base_index.insert(value.bits()).second) return;
    if (base.size() >= limits.max_opens) throw TopologyTooLarge(limits.max_opens);
    base.push_back({std::move(value), std::move(members)});
  };
  add_base(SoftSet::absolute_set(ctx), Bitset(subbase.size()));
  for (std::size_t s = 0; s < subbase.size(); ++s) {
    Bitset members(subbase.size());
    members.set(s);
    add_base(subbase[s], std::move(members));
  }
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (i == j) continue;
      SoftSet meet = base[i].value & base[j].value;
      if (!base_index.count(meet.bits()))
        add_base(std::move(meet), base[i].members | base[j].members);
    }

  // Union closure over the base, one generator join at a time.
  struct OpenEntry {
    SoftSet value;
    Bitset bases;
  };
  std::vector<OpenEntry> opens;
  std::unordered_set<Bitset, BitsetHash> open_index;
  std::deque<std::size_t> todo;
  auto add_open = [&](SoftSet value, Bitset bases) -> bool {
    if (!open_index.insert(value.bits()).second) return false;
    if (opens.size() >= limits.max_opens) throw TopologyTooLarge(limits.max_opens);
    opens.push_back({std::move(value), std::move(bases)});
    return true;
  };
  add_open(SoftSet::null_set(ctx), Bitset(base.size()));  // empty union
  for (std::size_t b = 0; b < base.size(); ++b) {
    Bitset bases(base.size());
    bases.set(b);
    if (add_open(base[b].value, std::move(bases))) todo.push_back(opens.size() - 1);
  }
  while (!todo.empty()) {
    const std::size_t cur = todo.front();
    todo.pop_front();
    for (std::size_t b = 0; b < base.size(); ++b) {
      SoftSet join = opens[cur].value | base[b].value;
      if (open_index.count(join.bits())) continue;
      Bitset bases = opens[cur].bases;
      bases.set(b);
      add_open(std::move(join), std::move(bases));
      todo.push_back(opens.size() - 1);
    }
  }

  // Canonical order, certificates reordered alongside.
  std::vector<std::size_t> order(opens.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return opens[a].value < opens[b].value;
  });

  GeneratedSpace out{SoftSpace::trusted(ctx, {}), std::move(subbase), {}, {}, {}};
  std::vector<SoftSet> sorted_opens;
  sorted_opens.reserve(opens.size());
  out.open_certs.reserve(opens.size());
  for (std::size_t i : order) {
    sorted_opens.push_back(opens[i].value);
    out.open_certs.push_back(std::move(opens[i].bases));
  }
  out.base.reserve(base.size());
  out.base_certs.reserve(base.size());
  for (auto& entry : base) {
    out.base.push_back(std::move(entry.value));
    out.base_certs.push_back(std::move(entry.members));
  }
  out.space = SoftSpace::trusted(std::move(ctx), std::move(sorted_opens));
  return out;
}

SoftSpace generate_from_base(ContextPtr ctx, std::vector<SoftSet> base,
                             const GenerationLimits& limits) {
  for (const auto& f : base) require_same_context(ctx, f.context());
  std::unordered_set<Bitset, BitsetHash> seen;
  std::deque<SoftSet> todo;
  std::vector<SoftSet> opens;
  auto add = [&](SoftSet value, bool enqueue) {
    if (!seen.insert(value.bits()).second) return;
    if (opens.size() >= limits.max_opens) throw TopologyTooLarge(limits.max_opens);
    if (enqueue) todo.push_back(value);
    opens.push_back(std::move(value));
  };
  add(SoftSet::null_set(ctx), false);
  add(SoftSet::absolute_set(ctx), false);
  for (const auto& b : base) add(b, true);
  while (!todo.empty()) {
    SoftSet cur = std::move(todo.front());
    todo.pop_front();
    for (const auto& b : base) {
      SoftSet join = cur | b;
      if (!seen.count(join.bits())) add(std::move(join), true);
    }
  }
  ValidationReport report = validate_axioms(ctx, opens);
  if (!report.valid())
    throw NotABase("collection is not a base: " + report.to_string());
  return SoftSpace::trusted(std::move(ctx), std::move(opens));
}

bool is_base(const SoftSpace& space, std::span<const SoftSet> candidate) {
  for (const auto& f : candidate)
    if (!space.is_open(f)) return false;
  // U is a union of members iff the members below U join back to U.
  for (const auto& open : space.opens()) {
    if (open.is_null()) continue;  // empty union
    SoftSet join = SoftSet::null_set(space.context());
    for (const auto& b : candidate)
      if (b.subset_of(open)) join = join | b;
    if (!(join == open)) return false;
  }
  return true;
}

bool is_subbase(const SoftSpace& space, std::span<const SoftSet> candidate) {
  for (const auto& f : candidate)
    if (!space.is_open(f)) return false;
  // The base induced by the candidate: all finite intersections (the empty
  // intersection contributes the absolute set).
  std::vector<SoftSet> meets{SoftSet::absolute_set(space.context())};
  std::unordered_set<Bitset, BitsetHash> seen{meets.front().bits()};
  for (const auto& f : candidate)
    if (seen.insert(f.bits()).second) meets.push_back(f);
  for (std::size_t i = 0; i < meets.size(); ++i)
    for (std::size_t j = 0; j < meets.size(); ++j) {
      if (i == j) continue;
      SoftSet meet = meets[i] & meets[j];
      if (seen.insert(meet.bits()).second) meets.push_back(std::move(meet));
    }
  return is_base(space, meets);
}

std::string_view to_string(SeparationVariant v) {
  switch (v) {
    case SeparationVariant::FullDisjoint: return "FULL_DISJOINT";
    case SeparationVariant::ParamDisjoint: return "PARAM_DISJOINT";
    case SeparationVariant::PointAbsent: return "POINT_ABSENT";
  }
  return "?";
}

std::optional<SeparationVariant> parse_variant(std::string_view name) {
  if (name == "FULL_DISJOINT" || name == "full") return SeparationVariant::FullDisjoint;
  if (name == "PARAM_DISJOINT" || name == "param") return SeparationVariant::ParamDisjoint;
  if (name == "POINT_ABSENT" || name == "point") return SeparationVariant::PointAbsent;
  return std::nullopt;
}

namespace {

bool disjoint_per_variant(const SoftSet& f, const SoftSet& g, const SoftPoint& p,
                          const SoftPoint& q, SeparationVariant variant) {
  switch (variant) {
    case SeparationVariant::FullDisjoint:
      return (f & g).is_null();
    case SeparationVariant::ParamDisjoint:
      return !f.slice(p.param).intersects(g.slice(p.param)) &&
             !f.slice(q.param).intersects(g.slice(q.param));
    case SeparationVariant::PointAbsent:
      return !f.contains(q) && !g.contains(p);
  }
  return false;
}

}  // namespace

SeparationResult separation_axiom(const SoftSpace& space, int level,
                                  SeparationVariant variant) {
  const ContextPtr& ctx = space.context();
  std::vector<SoftPoint> points = SoftSet::absolute_set(ctx).soft_points();
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const SoftPoint& p = points[i];
      const SoftPoint& q = points[j];
      bool ok = false;
      if (level == 0) {
        for (const auto& u : space.opens())
          if (u.contains(p) != u.contains(q)) {
            ok = true;
            break;
          }
      } else if (level == 1) {
        bool fwd = false, bwd = false;
        for (const auto& u : space.opens()) {
          fwd = fwd || (u.contains(p) && !u.contains(q));
          bwd = bwd || (u.contains(q) && !u.contains(p));
          if (fwd && bwd) break;
        }
        ok = fwd && bwd;
      } else {
        for (const auto& u : space.opens()) {
          if (!u.contains(p)) continue;
          for (const auto& v : space.opens()) {
            if (!v.contains(q)) continue;
            if (disjoint_per_variant(u, v, p, q, variant)) {
              ok = true;
              break;
            }
          }
          if (ok) break;
        }
      }
      if (!ok) return SeparationResult{false, std::make_pair(p, q)};
    }
  return SeparationResult{true, std::nullopt};
}

}  // namespace softtop
