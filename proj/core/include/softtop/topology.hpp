#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "softtop/crisp.hpp"
#include "softtop/soft_set.hpp"

namespace softtop {

struct ValidationReport {
  enum class Kind { MissingNull, MissingAbsolute, UnionEscapes, IntersectionEscapes };
  struct Violation {
    Kind kind;
    std::vector<SoftSet> witnesses;  // offending pair, or the produced missing set
    std::string message;
  };
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  std::string to_string() const;
};

// Checks the three axioms: null and absolute sets present, closure under
// pairwise union (finite contexts make this equal to arbitrary union) and
// pairwise intersection. Reports one concrete witness per violated axiom.
ValidationReport validate_axioms(const ContextPtr& ctx, std::span<const SoftSet> opens);

// A soft topological space: a context plus a canonical (sorted, deduplicated)
// collection of open soft sets satisfying the axioms.
class SoftSpace {
 public:
  static SoftSpace indiscrete(ContextPtr ctx);
  static SoftSpace discrete(ContextPtr ctx);  // throws TopologyTooLarge past the cap

  // Validating constructor; throws AxiomViolation with the report text.
  static SoftSpace from_opens(ContextPtr ctx, std::vector<SoftSet> opens);
  // For collections closed by construction (generators); only canonicalizes.
  static SoftSpace trusted(ContextPtr ctx, std::vector<SoftSet> opens);

  const ContextPtr& context() const { return ctx_; }
  std::span<const SoftSet> opens() const { return opens_; }
  std::size_t open_count() const { return opens_.size(); }

  bool is_open(const SoftSet& f) const;
  bool is_closed(const SoftSet& f) const;
  std::vector<SoftSet> closed_sets() const;

  // Smallest closed superset.
  SoftSet closure(const SoftSet& f) const;

  // Raw slices {F(e) : F open}, without the axiom check.
  std::vector<Bitset> param_slices(std::size_t param) const;
  // tau_e, verified to satisfy the crisp axioms.
  CrispTopology param_topology(std::size_t param) const;
  CrispTopology param_topology(std::string_view param_name) const;

  // Neighborhoods of a point: soft sets containing an open containing the
  // point. Enumerates all soft sets when the context has at most 16 bits,
  // otherwise lists only the open neighborhoods.
  std::vector<SoftSet> neighborhoods(const SoftPoint& p) const;
  bool is_neighborhood(const SoftPoint& p, const SoftSet& f) const;

  friend bool operator==(const SoftSpace& a, const SoftSpace& b) {
    return same_context(a.ctx_, b.ctx_) && a.opens_ == b.opens_;
  }

 private:
  SoftSpace(ContextPtr ctx, std::vector<SoftSet> opens);

  ContextPtr ctx_;
  std::vector<SoftSet> opens_;
  std::unordered_set<Bitset, BitsetHash> index_;
};

struct GenerationLimits {
  std::size_t max_opens = 4096;
};

// A human-readable decomposition of one open: a union of finite
// intersections of subbase members (indices into the original subbase).
struct SubbaseCertificate {
  std::vector<std::vector<std::size_t>> terms;
};

// Output of subbase generation. Opens are canonical; two parallel tables
// record, for every open, which base elements union to it and, for every
// base element, which subbase members intersect to it.
struct GeneratedSpace {
  SoftSpace space;
  std::vector<SoftSet> subbase;    // input, order preserved
  std::vector<SoftSet> base;       // finite intersections (absolute = empty one)
  std::vector<Bitset> base_certs;  // per base element: subbase index set
  std::vector<Bitset> open_certs;  // per open: base index set

  SubbaseCertificate certificate(std::size_t open_index) const;
  bool certificates_valid() const;  // re-evaluates every certificate
};

// Smallest soft topology containing the subbase: close under pairwise
// intersection (seeded with the absolute set), then under unions, then add
// the null set. Throws TopologyTooLarge past limits.max_opens.
GeneratedSpace generate_from_subbase(ContextPtr ctx, std::vector<SoftSet> subbase,
                                     const GenerationLimits& limits = {});

// Unions of subcollections of the base plus the null and absolute sets.
// Throws NotABase when the result fails the axioms (the input was no base).
SoftSpace generate_from_base(ContextPtr ctx, std::vector<SoftSet> base,
                             const GenerationLimits& limits = {});

// Every open is a union of candidate members (candidates must be open).
bool is_base(const SoftSpace& space, std::span<const SoftSet> candidate);
// Finite intersections of candidate members form a base.
bool is_subbase(const SoftSpace& space, std::span<const SoftSet> candidate);

enum class SeparationVariant { FullDisjoint, ParamDisjoint, PointAbsent };

std::string_view to_string(SeparationVariant v);
std::optional<SeparationVariant> parse_variant(std::string_view name);

struct SeparationResult {
  bool holds = false;
  std::optional<std::pair<SoftPoint, SoftPoint>> witness;  // failing pair
};

// T0/T1/T2 over all pairs of distinct soft points. `level` is 0, 1 or 2;
// the variant selects the disjointness reading used by T2.
SeparationResult separation_axiom(const SoftSpace& space, int level,
                                  SeparationVariant variant = SeparationVariant::ParamDisjoint);

}  // namespace softtop
