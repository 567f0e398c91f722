#include "softtop/bitset.hpp"

#include <bit>
#include <cassert>

namespace softtop {

Bitset::Bitset(std::size_t size, bool fill)
    : size_(size), blocks_((size + kBits - 1) / kBits, fill ? ~std::uint64_t{0} : 0) {
  if (fill) trim();
}

void Bitset::trim() {
  const std::size_t tail = size_ % kBits;
  if (tail != 0 && !blocks_.empty())
    blocks_.back() &= (std::uint64_t{1} << tail) - 1;
}

bool Bitset::test(std::size_t i) const {
  assert(i < size_);
  return (blocks_[i / kBits] >> (i % kBits)) & 1;
}

Bitset& Bitset::set(std::size_t i, bool value) {
  assert(i < size_);
  const std::uint64_t mask = std::uint64_t{1} << (i % kBits);
  if (value)
    blocks_[i / kBits] |= mask;
  else
    blocks_[i / kBits] &= ~mask;
  return *this;
}

std::size_t Bitset::count() const {
  std::size_t n = 0;
  for (auto b : blocks_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

bool Bitset::none() const {
  for (auto b : blocks_)
    if (b != 0) return false;
  return true;
}

bool Bitset::all() const { return count() == size_; }

bool Bitset::intersects(const Bitset& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i] & other.blocks_[i]) return true;
  return false;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i] & ~other.blocks_[i]) return false;
  return true;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= other.blocks_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= other.blocks_[i];
  return *this;
}

Bitset& Bitset::operator-=(const Bitset& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~other.blocks_[i];
  return *this;
}

Bitset Bitset::complemented() const {
  Bitset out(*this);
  for (auto& b : out.blocks_) b = ~b;
  out.trim();
  return out;
}

Bitset Bitset::slice(std::size_t begin, std::size_t len) const {
  assert(begin + len <= size_);
  Bitset out(len);
  for (std::size_t i = 0; i < out.blocks_.size(); ++i) {
    const std::size_t bit = begin + i * kBits;
    const std::size_t blk = bit / kBits;
    const std::size_t off = bit % kBits;
    std::uint64_t v = blocks_[blk] >> off;
    if (off != 0 && blk + 1 < blocks_.size()) v |= blocks_[blk + 1] << (kBits - off);
    out.blocks_[i] = v;
  }
  out.trim();
  return out;
}

void Bitset::write_slice(std::size_t begin, const Bitset& src) {
  assert(begin + src.size_ <= size_);
  for (std::size_t i = 0; i < src.size_; ++i) set(begin + i, src.test(i));
}

std::size_t Bitset::find_first() const { return find_next(npos); }

std::size_t Bitset::find_next(std::size_t prev) const {
  std::size_t start = (prev == npos) ? 0 : prev + 1;
  if (start >= size_) return npos;
  std::size_t blk = start / kBits;
  std::uint64_t cur = blocks_[blk] & (~std::uint64_t{0} << (start % kBits));
  while (true) {
    if (cur != 0) {
      const std::size_t i = blk * kBits + static_cast<std::size_t>(std::countr_zero(cur));
      return i < size_ ? i : npos;
    }
    if (++blk >= blocks_.size()) return npos;
    cur = blocks_[blk];
  }
}

std::strong_ordering Bitset::operator<=>(const Bitset& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  for (std::size_t i = blocks_.size(); i-- > 0;) {
    if (auto c = blocks_[i] <=> other.blocks_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t Bitset::hash() const {
  // FNV-1a over blocks, seeded with the width.
  std::uint64_t h = 1469598103934665603ull ^ (size_ * 1099511628211ull);
  for (auto b : blocks_) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace softtop
