#pragma once

// Brute-force reference implementations. These are the ground truth the fast
// routes are checked against, so they deliberately share no iteration helpers
// with the rest of the library: each one walks the subset space with its own
// plain loop.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graphpoly/bigint.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/poly.hpp"

namespace graphpoly {

namespace oracle_detail {

inline void require_small(const Graph& g, int limit = 24) {
  if (g.vertex_count() > limit) {
    throw std::invalid_argument("brute-force oracle limited to n <= " + std::to_string(limit));
  }
}

}  // namespace oracle_detail

// Counts subsets with no edge inside, one popcount bucket per order.
inline Poly brute_independence(const Graph& g) {
  oracle_detail::require_small(g);
  const int n = g.vertex_count();
  std::vector<BigInt> count(n + 1, BigInt(0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool independent = true;
    for (const auto& [u, v] : g.edges()) {
      if ((mask >> (u - 1) & 1) && (mask >> (v - 1) & 1)) {
        independent = false;
        break;
      }
    }
    if (independent) count[std::popcount(mask)] += 1;
  }
  return Poly(std::move(count));
}

// Counts subsets in which every pair of members is adjacent.
inline Poly brute_clique(const Graph& g) {
  oracle_detail::require_small(g);
  const int n = g.vertex_count();
  std::vector<BigInt> count(n + 1, BigInt(0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool clique = true;
    for (int u = 1; u <= n && clique; ++u) {
      if (!(mask >> (u - 1) & 1)) continue;
      for (int v = u + 1; v <= n; ++v) {
        if ((mask >> (v - 1) & 1) && !g.adjacent(u, v)) {
          clique = false;
          break;
        }
      }
    }
    if (clique) count[std::popcount(mask)] += 1;
  }
  return Poly(std::move(count));
}

// Counts subsets touching at least one endpoint of every edge.
inline Poly brute_cover(const Graph& g) {
  oracle_detail::require_small(g);
  const int n = g.vertex_count();
  std::vector<BigInt> count(n + 1, BigInt(0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool covers = true;
    for (const auto& [u, v] : g.edges()) {
      if (!(mask >> (u - 1) & 1) && !(mask >> (v - 1) & 1)) {
        covers = false;
        break;
      }
    }
    if (covers) count[std::popcount(mask)] += 1;
  }
  return Poly(std::move(count));
}

// Counts unordered vertex bipartitions by number of crossing edges. Walks all
// 2^n two-sided assignments and halves at the end (each bipartition is seen
// once per side labeling), unlike the fast route which pins vertex 1.
inline Poly brute_cut(const Graph& g) {
  oracle_detail::require_small(g);
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("cut counting needs at least one vertex");
  const int m = g.edge_count();
  std::vector<BigInt> count(m + 1, BigInt(0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int crossing = 0;
    for (const auto& [u, v] : g.edges()) {
      if ((mask >> (u - 1) & 1) != (mask >> (v - 1) & 1)) ++crossing;
    }
    count[crossing] += 1;
  }
  for (BigInt& c : count) {
    if (c % 2 != 0) throw std::logic_error("two-sided cut tally must be even");
    c /= 2;
  }
  return Poly(std::move(count));
}

}  // namespace graphpoly
