#include "softtop/soft_set.hpp"

#include <array>

#include "softtop/errors.hpp"

namespace softtop {

SoftPoint SoftPoint::make(ContextPtr ctx, std::string_view elem_name,
                          std::string_view param_name) {
  auto e = ctx->element_index(elem_name);
  if (!e) throw UnknownElement(std::string(elem_name));
  auto p = ctx->param_index(param_name);
  if (!p) throw UnknownParameter(std::string(param_name));
  return SoftPoint{std::move(ctx), *e, *p};
}

SoftSet SoftPoint::to_soft_set() const {
  Bitset bits(context->bit_width());
  bits.set(param * context->universe_size() + elem);
  return SoftSet(context, std::move(bits));
}

SoftSet::SoftSet(ContextPtr ctx, Bitset bits) : ctx_(std::move(ctx)), bits_(std::move(bits)) {
  if (bits_.size() != ctx_->bit_width())
    throw InvalidContext("bit width does not match context");
}

SoftSet SoftSet::null_set(ContextPtr ctx) {
  Bitset bits(ctx->bit_width());
  return SoftSet(std::move(ctx), std::move(bits));
}

SoftSet SoftSet::absolute_set(ContextPtr ctx) {
  Bitset bits(ctx->bit_width(), true);
  return SoftSet(std::move(ctx), std::move(bits));
}

SoftSet SoftSet::make(ContextPtr ctx,
                      const std::map<std::string, std::vector<std::string>>& assignments) {
  Bitset bits(ctx->bit_width());
  const std::size_t n = ctx->universe_size();
  for (const auto& [param_name, elems] : assignments) {
    auto p = ctx->param_index(param_name);
    if (!p) throw UnknownParameter(param_name);
    for (const auto& elem_name : elems) {
      auto e = ctx->element_index(elem_name);
      if (!e) throw UnknownElement(elem_name);
      bits.set(*p * n + *e);
    }
  }
  return SoftSet(std::move(ctx), std::move(bits));
}

SoftSet SoftSet::constant(ContextPtr ctx, std::span<const std::string> subset) {
  Bitset mask(ctx->universe_size());
  for (const auto& name : subset) {
    auto e = ctx->element_index(name);
    if (!e) throw UnknownElement(name);
    mask.set(*e);
  }
  return constant(std::move(ctx), mask);
}

SoftSet SoftSet::constant(ContextPtr ctx, const Bitset& subset) {
  if (subset.size() != ctx->universe_size())
    throw InvalidContext("subset width does not match universe");
  Bitset bits(ctx->bit_width());
  for (std::size_t p = 0; p < ctx->param_count(); ++p)
    bits.write_slice(p * ctx->universe_size(), subset);
  return SoftSet(std::move(ctx), std::move(bits));
}

bool SoftSet::contains(std::size_t elem, std::size_t param) const {
  return bits_.test(param * ctx_->universe_size() + elem);
}

bool SoftSet::contains(const SoftPoint& p) const {
  require_same_context(ctx_, p.context);
  return contains(p.elem, p.param);
}

Bitset SoftSet::slice(std::size_t param) const {
  const std::size_t n = ctx_->universe_size();
  return bits_.slice(param * n, n);
}

SoftSet SoftSet::united(const SoftSet& other) const {
  require_same_context(ctx_, other.ctx_);
  return SoftSet(ctx_, bits_ | other.bits_);
}

SoftSet SoftSet::intersected(const SoftSet& other) const {
  require_same_context(ctx_, other.ctx_);
  return SoftSet(ctx_, bits_ & other.bits_);
}

SoftSet SoftSet::differenced(const SoftSet& other) const {
  require_same_context(ctx_, other.ctx_);
  return SoftSet(ctx_, bits_ - other.bits_);
}

SoftSet SoftSet::complemented() const { return SoftSet(ctx_, bits_.complemented()); }

bool SoftSet::subset_of(const SoftSet& other) const {
  require_same_context(ctx_, other.ctx_);
  return bits_.is_subset_of(other.bits_);
}

SoftSet SoftSet::sub_soft_set(std::span<const std::string> subset) const {
  Bitset mask(ctx_->universe_size());
  for (const auto& name : subset) {
    auto e = ctx_->element_index(name);
    if (!e) throw UnknownElement(name);
    mask.set(*e);
  }
  return sub_soft_set(mask);
}

SoftSet SoftSet::sub_soft_set(const Bitset& subset) const {
  return intersected(constant(ctx_, subset));
}

std::vector<SoftPoint> SoftSet::soft_points() const {
  std::vector<SoftPoint> out;
  const std::size_t n = ctx_->universe_size();
  for (std::size_t i = bits_.find_first(); i != Bitset::npos; i = bits_.find_next(i))
    out.push_back(SoftPoint{ctx_, i % n, i / n});
  return out;
}

std::string SoftSet::to_string() const {
  std::string out = "{";
  for (std::size_t p = 0; p < ctx_->param_count(); ++p) {
    if (p) out += ", ";
    out += ctx_->param_name(p) + ":{";
    bool first = true;
    for (std::size_t e = 0; e < ctx_->universe_size(); ++e) {
      if (!contains(e, p)) continue;
      if (!first) out += ",";
      first = false;
      out += ctx_->element_name(e);
    }
    out += "}";
  }
  out += "}";
  return out;
}

bool is_subset(const SoftSet& a, const SoftSet& b) { return a.subset_of(b); }

bool equals(const SoftSet& a, const SoftSet& b) {
  require_same_context(a.context(), b.context());
  return a == b;
}

bool point_membership(const SoftPoint& p, const SoftSet& f) { return f.contains(p); }

std::size_t PairProduct::pair_elem(std::size_t l, std::size_t r) const {
  return l * right->universe_size() + r;
}

std::size_t PairProduct::pair_param(std::size_t l, std::size_t r) const {
  return l * right->param_count() + r;
}

PairProduct pair_product(ContextPtr left, ContextPtr right) {
  std::vector<std::string> universe;
  universe.reserve(left->universe_size() * right->universe_size());
  for (const auto& a : left->universe())
    for (const auto& b : right->universe())
      universe.push_back(tuple_name(std::array<std::string, 2>{a, b}));

  std::vector<std::string> params;
  params.reserve(left->param_count() * right->param_count());
  for (const auto& a : left->params())
    for (const auto& b : right->params())
      params.push_back(tuple_name(std::array<std::string, 2>{a, b}));

  PairProduct pp;
  pp.combined = Context::make(universe, std::move(params));
  if (left->params() == right->params())
    pp.diagonal = Context::make(std::move(universe), left->params());
  pp.left = std::move(left);
  pp.right = std::move(right);
  return pp;
}

SoftSet cartesian_product(const PairProduct& pp, const SoftSet& f, const SoftSet& g) {
  require_same_context(pp.left, f.context());
  require_same_context(pp.right, g.context());
  const std::size_t universe = pp.combined->universe_size();
  Bitset bits(pp.combined->bit_width());
  for (std::size_t pe = 0; pe < pp.left->param_count(); ++pe)
    for (std::size_t pk = 0; pk < pp.right->param_count(); ++pk) {
      const std::size_t base = pp.pair_param(pe, pk) * universe;
      for (std::size_t xe = 0; xe < pp.left->universe_size(); ++xe) {
        if (!f.contains(xe, pe)) continue;
        for (std::size_t xk = 0; xk < pp.right->universe_size(); ++xk)
          if (g.contains(xk, pk)) bits.set(base + pp.pair_elem(xe, xk));
      }
    }
  return SoftSet(pp.combined, std::move(bits));
}

SoftSet diagonal_contraction(const PairProduct& pp, const SoftSet& h) {
  if (!pp.diagonal)
    throw ParamMismatch("diagonal contraction requires equal parameter factors");
  require_same_context(pp.combined, h.context());
  const std::size_t universe = pp.combined->universe_size();
  Bitset bits(pp.diagonal->bit_width());
  for (std::size_t p = 0; p < pp.diagonal->param_count(); ++p)
    bits.write_slice(p * universe, h.slice(pp.pair_param(p, p)));
  return SoftSet(pp.diagonal, std::move(bits));
}

SoftSet restrict_universe(const SoftSet& f, std::span<const std::string> sub_universe) {
  if (sub_universe.empty()) throw EmptySubuniverse("sub-universe must be non-empty");
  const ContextPtr& ctx = f.context();
  std::vector<std::size_t> indices;
  indices.reserve(sub_universe.size());
  for (const auto& name : sub_universe) {
    auto e = ctx->element_index(name);
    if (!e) throw UnknownElement(name);
    indices.push_back(*e);
  }
  ContextPtr sub = Context::make(
      std::vector<std::string>(sub_universe.begin(), sub_universe.end()), ctx->params());
  Bitset bits(sub->bit_width());
  for (std::size_t p = 0; p < ctx->param_count(); ++p)
    for (std::size_t i = 0; i < indices.size(); ++i)
      if (f.contains(indices[i], p)) bits.set(p * indices.size() + i);
  return SoftSet(std::move(sub), std::move(bits));
}

}  // namespace softtop
