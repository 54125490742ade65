#pragma once

#include <map>
#include <optional>
#include <utility>

#include "graphpoly/bigint.hpp"
#include "graphpoly/edge_set.hpp"

namespace graphpoly {

// Product of two squarefree edge monomials. Any shared edge variable would
// acquire exponent 2 and vanish, so the product is the disjoint union or
// nothing. The empty set is the identity.
inline std::optional<EdgeSet> nil_product(const EdgeSet& a, const EdgeSet& b) {
  if (a.intersects(b)) return std::nullopt;
  return a | b;
}

// One degree slice of the elementary-symmetric-polynomial recursion over the
// edge-monomial algebra: a multiset of surviving squarefree monomials.
// Multiplicities matter because distinct vertex subsets can map to the same
// monomial once isolated vertices (whose monomial is 1) are involved.
class NilLayer {
 public:
  using TermMap = std::map<EdgeSet, BigInt>;

  NilLayer() = default;

  // The layer {1 : 1}, seed of the recursion.
  static NilLayer unit(std::size_t universe_bits) {
    NilLayer l;
    l.terms_.emplace(EdgeSet(universe_bits), BigInt(1));
    return l;
  }

  void add(const EdgeSet& monomial, const BigInt& multiplicity) {
    terms_[monomial] += multiplicity;
  }

  bool empty() const { return terms_.empty(); }

  std::size_t distinct_terms() const { return terms_.size(); }

  // Total number of monomial terms, multiplicities included. This is the
  // coefficient the independence polynomial reads off.
  BigInt term_count() const {
    BigInt total = 0;
    for (const auto& [s, c] : terms_) total += c;
    return total;
  }

  const TermMap& terms() const { return terms_; }

 private:
  TermMap terms_;
};

// Multiply every term of the layer by the monomial zv; terms sharing an edge
// with zv vanish, the rest merge by multiplicity.
inline NilLayer layer_extend(const NilLayer& layer, const EdgeSet& zv) {
  NilLayer out;
  for (const auto& [s, c] : layer.terms()) {
    if (auto p = nil_product(s, zv)) out.add(*p, c);
  }
  return out;
}

}  // namespace graphpoly
