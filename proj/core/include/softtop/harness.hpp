#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "softtop/topology.hpp"

namespace softtop {

enum class Claim {
  Prop1,
  Thm1,
  Thm2,
  Thm3,
  Remark1,
  Prop2,
  Thm4,
  Thm5,
  Thm6,
  Thm7,
  EvalSubbaseEq,
  ContDefEq,
};

struct ClaimInfo {
  Claim id;
  std::string_view name;
  bool law;  // counterexamples fail the run; experiments only report
  std::string_view summary;
};

std::span<const ClaimInfo> claim_registry();
const ClaimInfo& claim_info(Claim claim);
Claim parse_claim(std::string_view name);  // throws UnknownClaim

enum class TopologyStyle { Indiscrete, Discrete, RandomSubbase };

std::string_view to_string(TopologyStyle style);

struct SpaceSpec {
  std::size_t size = 2;
  TopologyStyle style = TopologyStyle::Indiscrete;
  std::size_t generators = 2;  // subbase size for the random style
};

// A deterministic recipe for a bundle of spaces over one common parameter
// set. Element names are globally distinct across the bundle so that sums
// are always applicable.
struct InstanceSpec {
  std::vector<SpaceSpec> spaces;
  std::size_t params = 1;
  std::uint64_t seed = 0;

  std::string to_string() const;
};

struct Instance {
  std::vector<SoftSpace> spaces;

  std::string to_string() const;
};

Instance generate_instance(const InstanceSpec& spec, const GenerationLimits& limits = {});

struct Counterexample {
  std::string instance;
  std::string witness;
};

struct VerdictReport {
  std::string claim;
  bool law = true;
  std::size_t instances = 0;
  std::size_t agreements = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;

  // Experiments never fail; laws fail on any counterexample.
  bool passed() const { return !law || counterexamples.empty(); }
  std::string render() const;
  std::string to_json() const;
};

struct RunOptions {
  bool exhaustive = false;
  std::size_t samples = 50;  // sampled instances, or seeds per random grid cell
  std::uint64_t seed = 1;
  std::optional<SeparationVariant> variant;  // separation claims only
  GenerationLimits limits{65536};
  std::size_t max_functions = 4096;
  bool shrink_counterexamples = true;
};

VerdictReport run_claim(Claim claim, const RunOptions& options = {});

// Greedy minimization: drops universe elements, parameters and opens while
// the predicate keeps failing. The result fails the same predicate and is no
// larger than the input in any dimension.
Instance shrink_instance(Instance failing,
                         const std::function<bool(const Instance&)>& still_fails);

}  // namespace softtop
