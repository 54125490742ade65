#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphpoly/bigint.hpp"
#include "graphpoly/edge_set.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/nilalgebra.hpp"
#include "graphpoly/poly.hpp"

namespace graphpoly {

// Degree slices of the elementary symmetric polynomials of the vertex
// monomials, evaluated in the degree-2 nilpotent edge algebra. layers[l]
// holds the surviving terms of e_l; its term count is the number of
// independent sets of order l.
struct EspState {
  std::vector<NilLayer> layers;

  BigInt term_count(std::size_t ell) const {
    return ell < layers.size() ? layers[ell].term_count() : BigInt(0);
  }
};

// Runs the ESP table recursion over the vertex monomials in canonical vertex
// order. Processing vertex v folds its monomial into every slice, highest
// degree first so each step reads the previous vertex's column. Slices past
// the independence number come out empty and are never stored.
inline EspState esp_nil_recursion(const Graph& g, std::size_t max_terms = kDefaultMaxWork) {
  EspState st;
  st.layers.push_back(NilLayer::unit(g.edge_count()));
  std::size_t live = 1;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const EdgeSet zv = incident_edges(g, v);
    for (std::size_t ell = st.layers.size(); ell >= 1; --ell) {
      NilLayer ext = layer_extend(st.layers[ell - 1], zv);
      if (ext.empty()) continue;
      if (ell == st.layers.size()) {
        live += ext.distinct_terms();
        st.layers.push_back(std::move(ext));
      } else {
        for (const auto& [s, c] : ext.terms()) {
          live += st.layers[ell].terms().count(s) ? 0 : 1;
          st.layers[ell].add(s, c);
        }
      }
      if (live > max_terms) {
        throw WorkLimitError("nilpotent ESP recursion exceeded " + std::to_string(max_terms) +
                             " live terms; raise --max-work");
      }
    }
  }
  return st;
}

// Coefficient k is the number of independent sets of order k.
inline Poly independence_polynomial(const Graph& g, std::size_t max_terms = kDefaultMaxWork) {
  const EspState st = esp_nil_recursion(g, max_terms);
  std::vector<BigInt> coeffs;
  coeffs.reserve(st.layers.size());
  for (const NilLayer& layer : st.layers) coeffs.push_back(layer.term_count());
  return Poly(std::move(coeffs));
}

inline int independence_number(const Graph& g, std::size_t max_terms = kDefaultMaxWork) {
  return independence_polynomial(g, max_terms).degree();
}

// Backtracking search for one independent set of the requested order,
// vertices chosen in increasing label order.
inline std::optional<std::vector<int>> find_independent_set(const Graph& g, int k) {
  if (k < 0 || k > g.vertex_count()) return std::nullopt;
  std::vector<int> acc;
  acc.reserve(k);
  auto search = [&](auto&& self, int next) -> bool {
    if (static_cast<int>(acc.size()) == k) return true;
    for (int v = next; v <= g.vertex_count(); ++v) {
      if (g.vertex_count() - v + 1 < k - static_cast<int>(acc.size())) return false;
      bool ok = true;
      for (int u : acc) {
        if (g.adjacent(u, v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      acc.push_back(v);
      if (self(self, v + 1)) return true;
      acc.pop_back();
    }
    return false;
  };
  if (!search(search, 1)) return std::nullopt;
  return acc;
}

// Smallest k such that every product of k algebra elements vanishes; equals
// one plus the independence number. Verified constructively: the recursion
// produced no slice of degree alpha+1, and a witness product of alpha vertex
// monomials is rebuilt and checked nonzero.
inline int nilpotency_index(const Graph& g, std::size_t max_terms = kDefaultMaxWork) {
  const EspState st = esp_nil_recursion(g, max_terms);
  const int alpha = static_cast<int>(st.layers.size()) - 1;
  if (st.term_count(alpha + 1) != 0) throw std::logic_error("slice past alpha is nonempty");
  const auto witness = find_independent_set(g, alpha);
  if (!witness) throw std::logic_error("no independent set of order alpha found");
  EdgeSet product(g.edge_count());
  for (int v : *witness) {
    auto p = nil_product(product, incident_edges(g, v));
    if (!p) throw std::logic_error("witness product of alpha vertex monomials vanished");
    product = std::move(*p);
  }
  return alpha + 1;
}

// All independent sets of order k, each sorted ascending, the list sorted
// lexicographically. Same recursion as esp_nil_recursion but every term
// carries the vertex subset it came from; the one-to-one correspondence
// between surviving terms and independent sets makes the slice of degree k
// exactly the requested list.
inline std::vector<std::vector<int>> enumerate_independent_sets(
    const Graph& g, int k, std::size_t max_terms = kDefaultMaxWork) {
  if (k < 0 || k > g.vertex_count()) {
    throw std::out_of_range("k=" + std::to_string(k) + " not in 0.." +
                            std::to_string(g.vertex_count()));
  }
  using Term = std::pair<std::vector<int>, EdgeSet>;
  std::vector<std::vector<Term>> layers(k + 1);
  layers[0].push_back({{}, EdgeSet(g.edge_count())});
  std::size_t live = 1;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const EdgeSet zv = incident_edges(g, v);
    for (int ell = k; ell >= 1; --ell) {
      for (const auto& [subset, used] : layers[ell - 1]) {
        if (used.intersects(zv)) continue;
        std::vector<int> extended = subset;
        extended.push_back(v);
        layers[ell].emplace_back(std::move(extended), used | zv);
        if (++live > max_terms) {
          throw WorkLimitError("independent-set enumeration exceeded " +
                               std::to_string(max_terms) + " live terms; raise --max-work");
        }
      }
    }
  }
  std::vector<std::vector<int>> out;
  out.reserve(layers[k].size());
  for (auto& [subset, used] : layers[k]) out.push_back(std::move(subset));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace graphpoly
