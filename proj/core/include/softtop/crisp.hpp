#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "softtop/bitset.hpp"

namespace softtop {

// A classical (crisp) topology on a finite universe, used for the
// parameter topologies tau_e and as the comparison side when checking that
// products and sums commute with slicing. Kept independent of the soft-set
// machinery on purpose.
struct CrispTopology {
  std::size_t universe = 0;
  std::vector<Bitset> sets;  // sorted, deduplicated

  static CrispTopology from_sets(std::size_t universe, std::vector<Bitset> sets);
  static CrispTopology indiscrete(std::size_t universe);
  static CrispTopology discrete(std::size_t universe);

  bool contains(const Bitset& s) const;

  bool operator==(const CrispTopology& other) const = default;
  std::string to_string() const;
};

// Returns a description of the first violated axiom, or nullopt when the
// collection is a topology on the universe.
std::optional<std::string> crisp_axiom_violation(std::size_t universe,
                                                 std::span<const Bitset> sets);

// Product topology: generated by rectangles U x V. Tuple index convention is
// mixed radix with the left factor most significant.
CrispTopology crisp_product(const CrispTopology& a, const CrispTopology& b);
CrispTopology crisp_product(std::span<const CrispTopology> factors);

// Topological sum on the concatenated universe: opens are exactly the sets
// whose restriction to every summand block is open there.
CrispTopology crisp_sum(std::span<const CrispTopology> summands);

}  // namespace softtop
