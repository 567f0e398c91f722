#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "softtop/constructions.hpp"
#include "softtop/mapping.hpp"
#include "softtop/topology.hpp"

namespace softtop {

struct FuncspaceLimits {
  std::size_t max_functions = 4096;
  GenerationLimits gen{};
};

// All identity-parameter point maps domain -> codomain that are soft
// continuous, in lexicographic order over the domain universe. Throws
// ParamMismatch when the parameter lists differ and EnumerationTooLarge when
// |Y|^|X| exceeds the cap.
std::vector<SoftMapping> enumerate_functions(const SoftSpace& domain,
                                             const SoftSpace& codomain,
                                             const FuncspaceLimits& limits = {});

// The space of soft continuous mappings with its pointwise topology. The
// function universe is indexed f0, f1, ... in enumeration order and carries
// the common parameter set, so the topology is an ordinary SoftSpace.
struct FunctionSpace {
  SoftSpace domain;
  SoftSpace codomain;
  std::vector<SoftMapping> functions;
  ContextPtr fn_context;
  SoftSpace space;  // tau_p

  std::optional<std::size_t> index_of(std::span<const std::uint32_t> point_map) const;
  std::optional<std::size_t> index_of(const SoftMapping& f) const;
};

// Builds the function space; the pointwise topology is generated from the
// soft sets of functions sending each soft point into an open of the
// codomain. Throws EmptyFunctionSpace when no map is continuous.
FunctionSpace pointwise_space(const SoftSpace& domain, const SoftSpace& codomain,
                              const FuncspaceLimits& limits = {});

// Slice at e: the functions whose point image of F(e) lies inside G(e).
SoftSet maps_sending(const FunctionSpace& fs, const SoftSet& f, const SoftSet& g);

// f -> f(x) from the function universe into the codomain, with identity
// parameter map. The parameter of the soft point does not enter the map.
SoftMapping evaluation(const FunctionSpace& fs, const SoftPoint& p);

// Continuity of every evaluation map with respect to tau_p; returns the
// offending point on failure.
std::optional<SoftPoint> discontinuous_evaluation(const FunctionSpace& fs);

// Continuity of g : Z -> (function universe) versus continuity of all
// evaluation composites.
BiconditionalVerdict check_evaluation_factorization(const FunctionSpace& fs,
                                                    const SoftSpace& z,
                                                    const SoftMapping& g);

// The topology generated by the evaluation preimages of codomain opens,
// for comparison with the literal pointwise subbase.
struct SubbaseComparison {
  SoftSpace via_preimages;
  bool equal = false;  // equal to fs.space
};
SubbaseComparison compare_pointwise_subbases(const FunctionSpace& fs,
                                             const GenerationLimits& limits = {});

struct IsoReport {
  bool mutually_inverse = false;
  ContinuityResult forward_continuous;
  ContinuityResult backward_continuous;
  std::optional<ContinuityResult> forward_open;
  std::optional<ContinuityResult> backward_open;
  bool homeomorphism = false;
  std::string detail;

  bool ok() const {
    return mutually_inverse && forward_continuous.holds && backward_continuous.holds &&
           (!forward_open || forward_open->holds) &&
           (!backward_open || backward_open->holds) && homeomorphism;
  }
};

// Gluing along a disjoint family of domains: tuples of maps (f_s : X_s -> Y)
// correspond to maps from the sum of the X_s.
struct SumDomainIso {
  SumSpace sum;                       // sum of the domains
  std::vector<FunctionSpace> factors; // per-domain function spaces
  ProductSpace product;               // product of the factor spaces
  FunctionSpace glued;                // functions on the summed domain
  SoftMapping forward;                // tuple -> glued function
  SoftMapping backward;
};

SumDomainIso sum_domain_iso(const SpaceFamily& domains, const SoftSpace& codomain,
                            const FuncspaceLimits& limits = {});
IsoReport check_sum_domain_iso(const SumDomainIso& iso);

// Tupling along a family of codomains: tuples of maps (f_s : X -> Y_s)
// correspond to maps into the product of the Y_s.
struct ProductCodomainIso {
  ProductSpace codomain_product;      // product of the codomains
  std::vector<FunctionSpace> factors; // per-codomain function spaces
  ProductSpace product;               // product of the factor spaces
  FunctionSpace tupled;               // functions into the product codomain
  SoftMapping forward;
  SoftMapping backward;
};

ProductCodomainIso product_codomain_iso(const SoftSpace& domain, const SpaceFamily& codomains,
                                        const FuncspaceLimits& limits = {});
IsoReport check_product_codomain_iso(const ProductCodomainIso& iso);

// Currying data between maps Z x X -> Y and maps X -> Y^Z.
struct ExponentialSetup {
  SoftSpace z, x, y;
  ProductSpace zx;       // Z x X
  FunctionSpace yz;      // functions Z -> Y
  FunctionSpace y_zx;    // functions Z x X -> Y
  FunctionSpace yz_x;    // functions X -> (function universe of yz)
  ProductSpace yz_z;     // (function universe of yz) x Z
  SoftMapping eval;      // (f, z) -> f(z)
  FuncspaceLimits limits;
};

ExponentialSetup exponential_setup(const SoftSpace& z, const SoftSpace& x,
                                   const SoftSpace& y, const FuncspaceLimits& limits = {});

// f(z,x) -> the map x -> (z -> f(z,x)); every slice must be a continuous map
// Z -> Y, otherwise NotPointwiseContinuousSlice.
SoftMapping induced_map(const ExponentialSetup& setup, const SoftMapping& f);
// Inverse direction: ghat -> ((z,x) -> ghat(x)(z)).
SoftMapping uncurried(const ExponentialSetup& setup, const SoftMapping& ghat);

// Swap of a binary product's components, identity on parameters.
SoftMapping switching(const ProductStructure& source, const ProductStructure& target);

struct ExponentialVerdict {
  bool evaluation_continuous = false;   // hypothesis of the conditional
  bool switching_continuous = false;
  std::size_t curryable = 0;            // maps Z x X -> Y with continuous slices
  std::size_t curried = 0;              // continuous maps X -> Y^Z
  bool inverses_hold = false;           // round trips are identities
  bool conditional_holds = false;       // hypothesis => every uncurried map continuous,
                                        // via the eval-switch-product factorization
  bool curried_side_closed = false;     // currying lands in the continuous maps
  bool uncurried_side_closed = false;   // uncurrying lands in the continuous maps
  std::string detail;
};

ExponentialVerdict check_exponential_law(const ExponentialSetup& setup);

}  // namespace softtop
