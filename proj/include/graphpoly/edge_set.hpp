#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphpoly {

// Subset of edge indices over a graph's canonical edge order. One bit per
// edge variable; the empty set stands for the monomial 1. An exponent can
// only be 0 or 1 here because squares of edge variables vanish, so a plain
// bit vector is the whole representation.
class EdgeSet {
 public:
  EdgeSet() = default;

  explicit EdgeSet(std::size_t universe_bits)
      : nbits_(universe_bits), blocks_((universe_bits + 63) / 64, 0) {}

  std::size_t universe_size() const { return nbits_; }

  void set(std::size_t i) {
    check_index(i);
    blocks_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  bool test(std::size_t i) const {
    check_index(i);
    return (blocks_[i / 64] >> (i % 64)) & 1;
  }

  bool intersects(const EdgeSet& o) const {
    const std::size_t k = std::min(blocks_.size(), o.blocks_.size());
    for (std::size_t i = 0; i < k; ++i) {
      if (blocks_[i] & o.blocks_[i]) return true;
    }
    return false;
  }

  // Disjoint union is the caller's business; this is a plain bitwise or.
  friend EdgeSet operator|(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet r = a.blocks_.size() >= b.blocks_.size() ? a : b;
    const EdgeSet& s = a.blocks_.size() >= b.blocks_.size() ? b : a;
    for (std::size_t i = 0; i < s.blocks_.size(); ++i) r.blocks_[i] |= s.blocks_[i];
    r.nbits_ = std::max(a.nbits_, b.nbits_);
    return r;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t b : blocks_) c += std::popcount(b);
    return c;
  }

  bool empty() const {
    for (std::uint64_t b : blocks_) {
      if (b) return false;
    }
    return true;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      std::uint64_t b = blocks_[i];
      while (b) {
        out.push_back(i * 64 + std::countr_zero(b));
        b &= b - 1;
      }
    }
    return out;
  }

  // Canonical (arbitrary but fixed) total order so sets can key ordered maps.
  friend std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b) {
    if (auto c = a.nbits_ <=> b.nbits_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }
  friend bool operator==(const EdgeSet& a, const EdgeSet& b) = default;

 private:
  void check_index(std::size_t i) const {
    if (i >= nbits_) {
      throw std::out_of_range("edge index " + std::to_string(i) +
                              " out of range for universe of " + std::to_string(nbits_));
    }
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> blocks_;
};

}  // namespace graphpoly
