#pragma once

#include <span>
#include <string>
#include <vector>

#include "softtop/mapping.hpp"
#include "softtop/topology.hpp"

namespace softtop {

// The tuple universe of a list of contexts over one common parameter set.
// Tuple indices are mixed radix with the first factor most significant, so
// the tuple order is lexicographic in factor order.
struct ProductStructure {
  std::vector<ContextPtr> factors;
  ContextPtr tuple_context;

  std::size_t arity() const { return factors.size(); }
  std::size_t component(std::size_t tuple, std::size_t s) const;
  std::size_t tuple_of(std::span<const std::size_t> components) const;

  // (p_s, 1_E) from the tuple context onto factor s.
  SoftMapping projection(std::size_t s) const;
  // p_s^{-1}(F): slice at e is F(e) x the full complement factors.
  SoftSet cylinder(std::size_t s, const SoftSet& f) const;
};

ProductStructure make_product_structure(std::vector<ContextPtr> factors);

// Disjoint union of universes over one common parameter set; elements keep
// their names and are concatenated in summand order.
struct SumStructure {
  std::vector<ContextPtr> summands;
  ContextPtr union_context;
  std::vector<std::size_t> offsets;

  std::size_t arity() const { return summands.size(); }
  std::size_t owner(std::size_t elem) const;

  // (i_s, 1_E) of summand s into the union context.
  SoftMapping inclusion(std::size_t s) const;
  // A summand soft set viewed inside the union universe.
  SoftSet embed(std::size_t s, const SoftSet& f) const;
  // F restricted to summand s, re-anchored to the summand context.
  SoftSet restrict_to(std::size_t s, const SoftSet& f) const;
};

SumStructure make_sum_structure(std::vector<ContextPtr> summands);

// An ordered non-empty list of spaces over one common parameter set.
struct SpaceFamily {
  std::vector<SoftSpace> members;

  static SpaceFamily of(std::vector<SoftSpace> members);
  std::vector<ContextPtr> contexts() const;
};

struct ProductSpace {
  ProductStructure structure;
  SoftSpace space;
};

struct SumSpace {
  SumStructure structure;
  SoftSpace space;
};

// Topology generated by the projection preimages of all factor opens.
ProductSpace product_space(const SpaceFamily& family, const GenerationLimits& limits = {});

// Opens are the slicewise unions of one open per summand; equivalently the
// soft sets whose restriction to every summand is open there.
SumSpace sum_space(const SpaceFamily& family);

// x -> (f_s(x))_s into the tuple universe; all maps share a source and have
// identity parameter maps.
SoftMapping diagonal_map(std::span<const SoftMapping> maps, const ProductStructure& target);

// x -> f_s(x) for the unique summand owning x; all maps share a target.
SoftMapping glued_map(std::span<const SoftMapping> maps, const SumStructure& source);

// Tuplewise (f_1 x ... x f_n) between two product structures.
SoftMapping product_map(std::span<const SoftMapping> maps, const ProductStructure& source,
                        const ProductStructure& target);

// Casewise f_s between two sum structures.
SoftMapping sum_map(std::span<const SoftMapping> maps, const SumStructure& source,
                    const SumStructure& target);

struct BiconditionalVerdict {
  bool lhs = false;
  bool rhs = false;
  std::string detail;

  bool agree() const { return lhs == rhs; }
};

// Continuity into the product versus continuity of every projection
// composite.
BiconditionalVerdict check_product_factorization(const SoftSpace& domain,
                                                 const SpaceFamily& targets,
                                                 const ProductSpace& product,
                                                 const SoftMapping& f);

// Continuity from the sum versus continuity of every inclusion composite.
BiconditionalVerdict check_sum_factorization(const SpaceFamily& sources,
                                             const SumSpace& sum, const SoftSpace& target,
                                             const SoftMapping& f);

struct ParamTopologyVerdict {
  bool product_ok = false;
  bool sum_applicable = false;
  bool sum_ok = false;
  std::string detail;

  bool agree() const { return product_ok && (!sum_applicable || sum_ok); }
};

// Slicing commutes with products and sums: tau_e of the constructed space
// equals the crisp product/sum of the members' tau_e, for every parameter.
ParamTopologyVerdict check_param_topologies(const SpaceFamily& family,
                                            const GenerationLimits& limits = {});

}  // namespace softtop
