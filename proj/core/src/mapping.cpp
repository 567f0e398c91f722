#include "softtop/mapping.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "softtop/errors.hpp"

namespace softtop {

SoftMapping::SoftMapping(ContextPtr source, ContextPtr target,
                         std::vector<std::uint32_t> point_map,
                         std::vector<std::uint32_t> param_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      point_map_(std::move(point_map)),
      param_map_(std::move(param_map)) {}

SoftMapping SoftMapping::make(ContextPtr source, ContextPtr target,
                              std::vector<std::uint32_t> point_map,
                              std::vector<std::uint32_t> param_map) {
  if (point_map.size() != source->universe_size())
    throw InvalidContext("point map must be total on the source universe");
  if (param_map.size() != source->param_count())
    throw InvalidContext("parameter map must be total on the source parameters");
  for (auto v : point_map)
    if (v >= target->universe_size()) throw UnknownElement(std::to_string(v));
  for (auto v : param_map)
    if (v >= target->param_count()) throw UnknownParameter(std::to_string(v));
  return SoftMapping(std::move(source), std::move(target), std::move(point_map),
                     std::move(param_map));
}

SoftMapping SoftMapping::over_common_params(ContextPtr source, ContextPtr target,
                                            std::vector<std::uint32_t> point_map) {
  if (!same_params(source, target))
    throw ParamMismatch("identity parameter map requires equal parameter lists");
  std::vector<std::uint32_t> params(source->param_count());
  std::iota(params.begin(), params.end(), 0);
  return make(std::move(source), std::move(target), std::move(point_map), std::move(params));
}

SoftMapping SoftMapping::from_names(ContextPtr source, ContextPtr target,
                                    const std::map<std::string, std::string>& points,
                                    const std::map<std::string, std::string>& params) {
  std::vector<std::uint32_t> point_map(source->universe_size(),
                                       std::numeric_limits<std::uint32_t>::max());
  for (const auto& [from, to] : points) {
    auto i = source->element_index(from);
    if (!i) throw UnknownElement(from);
    auto j = target->element_index(to);
    if (!j) throw UnknownElement(to);
    point_map[*i] = static_cast<std::uint32_t>(*j);
  }
  for (std::size_t i = 0; i < point_map.size(); ++i)
    if (point_map[i] == std::numeric_limits<std::uint32_t>::max())
      throw InvalidContext("point map missing element: " + source->element_name(i));

  std::vector<std::uint32_t> param_map(source->param_count(),
                                       std::numeric_limits<std::uint32_t>::max());
  if (params.empty()) {
    if (!same_params(source, target))
      throw ParamMismatch("omitted parameter map requires equal parameter lists");
    std::iota(param_map.begin(), param_map.end(), 0);
  } else {
    for (const auto& [from, to] : params) {
      auto i = source->param_index(from);
      if (!i) throw UnknownParameter(from);
      auto j = target->param_index(to);
      if (!j) throw UnknownParameter(to);
      param_map[*i] = static_cast<std::uint32_t>(*j);
    }
    for (std::size_t i = 0; i < param_map.size(); ++i)
      if (param_map[i] == std::numeric_limits<std::uint32_t>::max())
        throw InvalidContext("parameter map missing parameter: " + source->param_name(i));
  }
  return SoftMapping(std::move(source), std::move(target), std::move(point_map),
                     std::move(param_map));
}

SoftMapping SoftMapping::identity(ContextPtr ctx) {
  std::vector<std::uint32_t> points(ctx->universe_size());
  std::iota(points.begin(), points.end(), 0);
  std::vector<std::uint32_t> params(ctx->param_count());
  std::iota(params.begin(), params.end(), 0);
  return SoftMapping(ctx, ctx, std::move(points), std::move(params));
}

bool SoftMapping::identity_params() const {
  if (!same_params(source_, target_)) return false;
  for (std::size_t i = 0; i < param_map_.size(); ++i)
    if (param_map_[i] != i) return false;
  return true;
}

namespace {

bool is_bijection(std::span<const std::uint32_t> map, std::size_t target_size) {
  if (map.size() != target_size) return false;
  std::vector<bool> hit(target_size, false);
  for (auto v : map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace

bool SoftMapping::point_bijective() const {
  return is_bijection(point_map_, target_->universe_size());
}

bool SoftMapping::param_bijective() const {
  return is_bijection(param_map_, target_->param_count());
}

SoftSet SoftMapping::image(const SoftSet& f) const {
  require_same_context(source_, f.context());
  Bitset bits(target_->bit_width());
  const std::size_t n_src = source_->universe_size();
  const std::size_t n_tgt = target_->universe_size();
  for (std::size_t p = 0; p < source_->param_count(); ++p) {
    const std::size_t tp = param_map_[p];
    for (std::size_t e = 0; e < n_src; ++e)
      if (f.contains(e, p)) bits.set(tp * n_tgt + point_map_[e]);
  }
  return SoftSet(target_, std::move(bits));
}

SoftSet SoftMapping::preimage(const SoftSet& g) const {
  require_same_context(target_, g.context());
  Bitset bits(source_->bit_width());
  const std::size_t n_src = source_->universe_size();
  for (std::size_t p = 0; p < source_->param_count(); ++p) {
    const std::size_t tp = param_map_[p];
    for (std::size_t e = 0; e < n_src; ++e)
      if (g.contains(point_map_[e], tp)) bits.set(p * n_src + e);
  }
  return SoftSet(source_, std::move(bits));
}

SoftPoint SoftMapping::image_point(const SoftPoint& p) const {
  require_same_context(source_, p.context);
  return SoftPoint{target_, point_map_[p.elem], param_map_[p.param]};
}

std::string SoftMapping::to_string() const {
  std::string out = "points{";
  for (std::size_t i = 0; i < point_map_.size(); ++i) {
    if (i) out += ",";
    out += source_->element_name(i) + "->" + target_->element_name(point_map_[i]);
  }
  out += "} params{";
  for (std::size_t i = 0; i < param_map_.size(); ++i) {
    if (i) out += ",";
    out += source_->param_name(i) + "->" + target_->param_name(param_map_[i]);
  }
  return out + "}";
}

SoftMapping compose(const SoftMapping& outer, const SoftMapping& inner) {
  require_same_context(inner.target(), outer.source());
  std::vector<std::uint32_t> points(inner.source()->universe_size());
  for (std::size_t i = 0; i < points.size(); ++i)
    points[i] = static_cast<std::uint32_t>(outer.point(inner.point(i)));
  std::vector<std::uint32_t> params(inner.source()->param_count());
  for (std::size_t i = 0; i < params.size(); ++i)
    params[i] = static_cast<std::uint32_t>(outer.param(inner.param(i)));
  return SoftMapping::make(inner.source(), outer.target(), std::move(points),
                           std::move(params));
}

SoftMapping inverse(const SoftMapping& m) {
  if (!m.point_bijective() || !m.param_bijective())
    throw InvalidContext("inverse requires a bijective mapping");
  std::vector<std::uint32_t> points(m.target()->universe_size());
  for (std::size_t i = 0; i < m.point_map().size(); ++i)
    points[m.point(i)] = static_cast<std::uint32_t>(i);
  std::vector<std::uint32_t> params(m.target()->param_count());
  for (std::size_t i = 0; i < m.param_map().size(); ++i)
    params[m.param(i)] = static_cast<std::uint32_t>(i);
  return SoftMapping::make(m.target(), m.source(), std::move(points), std::move(params));
}

SoftMapping inclusion(ContextPtr sub, ContextPtr full) {
  if (!same_params(sub, full))
    throw ParamMismatch("inclusion requires equal parameter lists");
  std::vector<std::uint32_t> points;
  points.reserve(sub->universe_size());
  for (const auto& name : sub->universe()) {
    auto i = full->element_index(name);
    if (!i) throw UnknownElement(name);
    points.push_back(static_cast<std::uint32_t>(*i));
  }
  return SoftMapping::over_common_params(std::move(sub), std::move(full), std::move(points));
}

ContinuityResult is_continuous(const SoftMapping& m, const SoftSpace& source,
                               const SoftSpace& target) {
  require_same_context(m.source(), source.context());
  require_same_context(m.target(), target.context());
  for (const auto& open : target.opens())
    if (!source.is_open(m.preimage(open))) return {false, open};
  return {true, std::nullopt};
}

bool is_continuous_at(const SoftMapping& m, const SoftSpace& source,
                      const SoftSpace& target, const SoftPoint& p) {
  require_same_context(m.source(), source.context());
  require_same_context(m.target(), target.context());
  const SoftPoint q = m.image_point(p);
  // images of the opens around p, computed once
  std::vector<SoftSet> around;
  for (const auto& f : source.opens())
    if (f.contains(p)) around.push_back(m.image(f));
  for (const auto& h : target.opens()) {
    if (!h.contains(q)) continue;
    bool found = false;
    for (const auto& image : around)
      if (image.subset_of(h)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

ContinuityResult is_open_map(const SoftMapping& m, const SoftSpace& source,
                             const SoftSpace& target) {
  require_same_context(m.source(), source.context());
  require_same_context(m.target(), target.context());
  for (const auto& open : source.opens())
    if (!target.is_open(m.image(open))) return {false, open};
  return {true, std::nullopt};
}

bool is_homeomorphism(const SoftMapping& m, const SoftSpace& source,
                      const SoftSpace& target) {
  if (!m.point_bijective() || !m.param_bijective()) return false;
  if (!is_continuous(m, source, target)) return false;
  return is_continuous(inverse(m), target, source).holds;
}

GeneratedSpace initial_topology(ContextPtr ctx,
                                std::span<const std::pair<SoftMapping, SoftSpace>> family,
                                const GenerationLimits& limits) {
  std::vector<SoftSet> subbase;
  for (const auto& [m, space] : family) {
    require_same_context(ctx, m.source());
    require_same_context(m.target(), space.context());
    for (const auto& open : space.opens()) subbase.push_back(m.preimage(open));
  }
  return generate_from_subbase(std::move(ctx), std::move(subbase), limits);
}

}  // namespace softtop
