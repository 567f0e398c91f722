#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace softtop {

// Fixed-width dynamic bit vector. This is the canonical encoding for every
// subset in the library: slices of soft sets, flattened soft sets, crisp
// opens. Trailing bits past size() are kept zero so equality and hashing are
// structural.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t size, bool fill = false);

  std::size_t size() const { return size_; }
  bool empty_domain() const { return size_ == 0; }

  bool test(std::size_t i) const;
  Bitset& set(std::size_t i, bool value = true);

  std::size_t count() const;
  bool none() const;
  bool all() const;

  bool intersects(const Bitset& other) const;
  bool is_subset_of(const Bitset& other) const;

  Bitset& operator|=(const Bitset& other);
  Bitset& operator&=(const Bitset& other);
  Bitset& operator-=(const Bitset& other);  // set difference

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  Bitset complemented() const;

  // Extracts bits [begin, begin+len) into a new Bitset of width len.
  Bitset slice(std::size_t begin, std::size_t len) const;
  // Writes src into bits [begin, begin+src.size()).
  void write_slice(std::size_t begin, const Bitset& src);

  std::size_t find_first() const;
  std::size_t find_next(std::size_t prev) const;

  bool operator==(const Bitset& other) const = default;
  // Numeric order (low index = least significant); sizes compare first.
  std::strong_ordering operator<=>(const Bitset& other) const;

  std::size_t hash() const;

 private:
  static constexpr std::size_t kBits = 64;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> blocks_;

  void trim();
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace softtop
