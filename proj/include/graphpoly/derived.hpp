#pragma once

#include <stdexcept>

#include "graphpoly/bigint.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/indep.hpp"
#include "graphpoly/poly.hpp"

namespace graphpoly {

// A vertex set is a clique exactly when it is independent in the complement.
inline Poly clique_polynomial(const Graph& g, std::size_t max_terms = kDefaultMaxWork) {
  return independence_polynomial(complement(g), max_terms);
}

inline int clique_number(const Graph& g) { return clique_polynomial(g).degree(); }

// Covers are complements of independent sets, so the coefficients are those
// of the independence polynomial reversed in a frame of length n+1.
inline Poly vertex_cover_polynomial(const Graph& g, std::size_t max_terms = kDefaultMaxWork) {
  return independence_polynomial(g, max_terms).reversed(g.vertex_count());
}

inline int covering_number(const Graph& g) {
  const Poly p = vertex_cover_polynomial(g);
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.at(k) > 0) return k;
  }
  throw std::logic_error("cover polynomial has no nonzero coefficient");
}

}  // namespace graphpoly
