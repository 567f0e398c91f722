#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "softtop/soft_set.hpp"
#include "softtop/topology.hpp"

namespace softtop {

// A soft mapping between contexts: a total point function on universes plus a
// total parameter function. Constructions over a common parameter set use the
// identity parameter map throughout; the general form exists for paired
// projections and initial topologies.
class SoftMapping {
 public:
  static SoftMapping make(ContextPtr source, ContextPtr target,
                          std::vector<std::uint32_t> point_map,
                          std::vector<std::uint32_t> param_map);
  // Identity parameter map; requires both contexts to share one parameter list.
  static SoftMapping over_common_params(ContextPtr source, ContextPtr target,
                                        std::vector<std::uint32_t> point_map);
  static SoftMapping from_names(ContextPtr source, ContextPtr target,
                                const std::map<std::string, std::string>& points,
                                const std::map<std::string, std::string>& params);
  static SoftMapping identity(ContextPtr ctx);

  const ContextPtr& source() const { return source_; }
  const ContextPtr& target() const { return target_; }

  std::size_t point(std::size_t elem) const { return point_map_[elem]; }
  std::size_t param(std::size_t p) const { return param_map_[p]; }
  std::span<const std::uint32_t> point_map() const { return point_map_; }
  std::span<const std::uint32_t> param_map() const { return param_map_; }

  bool identity_params() const;
  bool point_bijective() const;
  bool param_bijective() const;

  SoftSet image(const SoftSet& f) const;
  SoftSet preimage(const SoftSet& g) const;
  SoftPoint image_point(const SoftPoint& p) const;

  std::string to_string() const;

  friend bool operator==(const SoftMapping& a, const SoftMapping& b) {
    return same_context(a.source_, b.source_) && same_context(a.target_, b.target_) &&
           a.point_map_ == b.point_map_ && a.param_map_ == b.param_map_;
  }

 private:
  SoftMapping(ContextPtr source, ContextPtr target, std::vector<std::uint32_t> point_map,
              std::vector<std::uint32_t> param_map);

  ContextPtr source_;
  ContextPtr target_;
  std::vector<std::uint32_t> point_map_;
  std::vector<std::uint32_t> param_map_;
};

// outer after inner; requires inner.target == outer.source.
SoftMapping compose(const SoftMapping& outer, const SoftMapping& inner);
// Requires both maps bijective.
SoftMapping inverse(const SoftMapping& m);
// (i,1_E) of a sub-universe context into the full one.
SoftMapping inclusion(ContextPtr sub, ContextPtr full);

struct ContinuityResult {
  bool holds = false;
  std::optional<SoftSet> witness;  // offending open on failure

  explicit operator bool() const { return holds; }
};

// Preimage of every open of the target space is open in the source space.
ContinuityResult is_continuous(const SoftMapping& m, const SoftSpace& source,
                               const SoftSpace& target);

// Every open neighborhood of the image point admits an open around the point
// whose image it contains.
bool is_continuous_at(const SoftMapping& m, const SoftSpace& source,
                      const SoftSpace& target, const SoftPoint& p);

// Image of every source open is open in the target.
ContinuityResult is_open_map(const SoftMapping& m, const SoftSpace& source,
                             const SoftSpace& target);

// Bijective on points and parameters, continuous, with continuous inverse.
bool is_homeomorphism(const SoftMapping& m, const SoftSpace& source,
                      const SoftSpace& target);

// Smallest topology on `ctx` making every mapping of the family continuous:
// generated from the preimages of all opens of all targets.
GeneratedSpace initial_topology(ContextPtr ctx,
                                std::span<const std::pair<SoftMapping, SoftSpace>> family,
                                const GenerationLimits& limits = {});

}  // namespace softtop
