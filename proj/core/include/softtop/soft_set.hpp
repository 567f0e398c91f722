#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "softtop/bitset.hpp"
#include "softtop/context.hpp"

namespace softtop {

class SoftSet;

// A pair (element, parameter) of a context. Its induced soft set holds
// {element} at the parameter and nothing elsewhere; two points are distinct
// when either coordinate differs.
struct SoftPoint {
  ContextPtr context;
  std::size_t elem = 0;
  std::size_t param = 0;

  static SoftPoint make(ContextPtr ctx, std::string_view elem_name,
                        std::string_view param_name);

  SoftSet to_soft_set() const;
  const std::string& elem_name() const { return context->element_name(elem); }
  const std::string& param_name() const { return context->param_name(param); }
  std::string to_string() const { return elem_name() + "@" + param_name(); }

  friend bool operator==(const SoftPoint& a, const SoftPoint& b) {
    return same_context(a.context, b.context) && a.elem == b.elem && a.param == b.param;
  }
};

// A total assignment of one universe subset per parameter, flattened into a
// single bit vector (bit index = param * |universe| + element). All values
// are immutable; every operation returns a fresh SoftSet.
class SoftSet {
 public:
  SoftSet(ContextPtr ctx, Bitset bits);

  static SoftSet null_set(ContextPtr ctx);      // every slice empty
  static SoftSet absolute_set(ContextPtr ctx);  // every slice = universe

  // Builds from per-parameter element lists; missing parameters mean the
  // empty slice. Unknown identifiers raise UnknownParameter/UnknownElement.
  static SoftSet make(ContextPtr ctx,
                      const std::map<std::string, std::vector<std::string>>& assignments);

  // The constant soft set e -> Y for a universe subset Y.
  static SoftSet constant(ContextPtr ctx, std::span<const std::string> subset);
  static SoftSet constant(ContextPtr ctx, const Bitset& subset);

  const ContextPtr& context() const { return ctx_; }
  const Bitset& bits() const { return bits_; }

  bool contains(std::size_t elem, std::size_t param) const;
  bool contains(const SoftPoint& p) const;
  Bitset slice(std::size_t param) const;

  bool is_null() const { return bits_.none(); }
  bool is_absolute() const { return bits_.all(); }

  SoftSet united(const SoftSet& other) const;
  SoftSet intersected(const SoftSet& other) const;
  SoftSet differenced(const SoftSet& other) const;
  SoftSet complemented() const;

  friend SoftSet operator|(const SoftSet& a, const SoftSet& b) { return a.united(b); }
  friend SoftSet operator&(const SoftSet& a, const SoftSet& b) { return a.intersected(b); }
  friend SoftSet operator-(const SoftSet& a, const SoftSet& b) { return a.differenced(b); }
  friend SoftSet operator~(const SoftSet& a) { return a.complemented(); }

  bool subset_of(const SoftSet& other) const;

  // Slice-wise Y ∩ F(e) over the unchanged context.
  SoftSet sub_soft_set(std::span<const std::string> subset) const;
  SoftSet sub_soft_set(const Bitset& subset) const;

  std::vector<SoftPoint> soft_points() const;

  std::string to_string() const;  // e.g. {e1:{a,b}, e2:{}}

  friend bool operator==(const SoftSet& a, const SoftSet& b) {
    return same_context(a.ctx_, b.ctx_) && a.bits_ == b.bits_;
  }
  // Canonical order within a shared context (bit-vector numeric order).
  friend bool operator<(const SoftSet& a, const SoftSet& b) { return a.bits_ < b.bits_; }

 private:
  ContextPtr ctx_;
  Bitset bits_;
};

bool is_subset(const SoftSet& a, const SoftSet& b);
bool equals(const SoftSet& a, const SoftSet& b);
bool point_membership(const SoftPoint& p, const SoftSet& f);

// Cartesian product of two contexts in the paired-parameter sense: universe
// X1 x X2, parameters E1 x E2. `diagonal` additionally exposes the context
// (X1 x X2, E) when both parameter lists coincide (null otherwise).
struct PairProduct {
  ContextPtr left;
  ContextPtr right;
  ContextPtr combined;  // (X1 x X2, E1 x E2)
  ContextPtr diagonal;  // (X1 x X2, E) or null

  std::size_t pair_elem(std::size_t l, std::size_t r) const;
  std::size_t pair_param(std::size_t l, std::size_t r) const;
};

PairProduct pair_product(ContextPtr left, ContextPtr right);

// Slice at (e,k) is F(e) x G(k).
SoftSet cartesian_product(const PairProduct& pp, const SoftSet& f, const SoftSet& g);

// Restriction of a paired-parameter soft set to the parameter diagonal:
// slice at e is H(e,e). Requires both parameter factors equal.
SoftSet diagonal_contraction(const PairProduct& pp, const SoftSet& h);

// Slice-wise F(e) ∩ Xs, re-anchored to the context (Xs, E).
SoftSet restrict_universe(const SoftSet& f, std::span<const std::string> sub_universe);

}  // namespace softtop
