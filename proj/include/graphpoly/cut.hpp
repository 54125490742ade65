#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphpoly/bigint.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/multipoly.hpp"
#include "graphpoly/poly.hpp"

namespace graphpoly {

// The cut polynomial sums z^k over the unordered bipartitions (S, V\S) with
// exactly k crossing edges; pinning vertex 1 to S makes each bipartition
// count once, so the coefficients total 2^(n-1).

// Per-edge linearization of x_uv = x_u XOR x_v: four equations over the seven
// binaries (x_u, x_v, x_uv, s, t, y, w), each with right-hand side 2. Their
// solution set is exactly the XOR truth table extended by forced slacks.
inline std::vector<std::array<int, 7>> xor_truth_table() {
  std::vector<std::array<int, 7>> rows;
  for (int bits = 0; bits < (1 << 7); ++bits) {
    std::array<int, 7> t{};
    for (int i = 0; i < 7; ++i) t[i] = (bits >> (6 - i)) & 1;
    const auto [xu, xv, xe, s, tt, y, w] = t;
    if (xu + xv - xe + 2 * s == 2 && -xu + xv + xe + 2 * tt == 2 &&
        xu - xv + xe + 2 * y == 2 && xu + xv + xe + 2 * w == 2) {
      rows.push_back(t);
    }
  }
  return rows;
}

// Linear system whose binary solutions are the size-k cuts: variables are
// (x_V | x_E | s_E | t_E | y_E | w_E), row 0 fixes the cut size, and each
// edge contributes the four linearization rows.
struct CutSystem {
  std::vector<std::vector<int>> a;
  std::vector<int> b;

  int rows() const { return static_cast<int>(a.size()); }
  int cols() const { return a.empty() ? 0 : static_cast<int>(a.front().size()); }
};

inline CutSystem build_cut_system(const Graph& g, int k) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  CutSystem sys;
  sys.a.assign(4 * m + 1, std::vector<int>(n + 5 * m, 0));
  sys.b.assign(4 * m + 1, 2);
  sys.b[0] = k;
  for (int e = 0; e < m; ++e) sys.a[0][n + e] = 1;
  const IncidencePair inc = incidence_matrices(g);
  for (int block = 0; block < 4; ++block) {
    for (int e = 0; e < m; ++e) {
      std::vector<int>& row = sys.a[1 + block * m + e];
      for (int v = 0; v < n; ++v) {
        switch (block) {
          case 0: row[v] = inc.c[e][v]; break;
          case 1: row[v] = inc.d[e][v]; break;
          case 2: row[v] = -inc.d[e][v]; break;
          case 3: row[v] = inc.c[e][v]; break;
        }
      }
      row[n + e] = block == 0 ? -1 : 1;
      row[n + (1 + block) * m + e] = 2;
    }
  }
  return sys;
}

// Vertex monomial over the XOR variables: block 1 and 4 exponents follow C,
// block 2 follows D, block 3 follows -D, restricted to the edges at v. Blocks
// 2 and 3 carry a negative exponent on one side of every edge, which is what
// the shifted factor list below repairs.
inline std::vector<Monomial> laurent_vertex_monomials(const Graph& g) {
  std::vector<Monomial> out;
  out.reserve(g.vertex_count());
  for (int v = 1; v <= g.vertex_count(); ++v) {
    Monomial m;
    for (std::size_t e : g.edges_at(v)) {
      const auto idx = static_cast<std::uint32_t>(e);
      const int d = g.edges()[e].first == v ? -1 : 1;
      m = m.times(Monomial::variable(VarId::xor_var(1, idx)))
              .times(Monomial::variable(VarId::xor_var(2, idx), d))
              .times(Monomial::variable(VarId::xor_var(3, idx), -d))
              .times(Monomial::variable(VarId::xor_var(4, idx)));
    }
    out.push_back(std::move(m));
  }
  return out;
}

// Partition function of the cut system as written: one crossing-indicator
// factor per edge, four slack factors per edge, one vertex factor per vertex.
inline FactorList cut_partition_factors(const Graph& g) {
  const int m = g.edge_count();
  FactorList out;
  out.reserve(static_cast<std::size_t>(5) * m + g.vertex_count());
  for (int e = 0; e < m; ++e) {
    const auto idx = static_cast<std::uint32_t>(e);
    MultiPoly f = MultiPoly::constant(1);
    f.add_term(Monomial::variable(VarId::z())
                   .times(Monomial::variable(VarId::xor_var(1, idx), -1))
                   .times(Monomial::variable(VarId::xor_var(2, idx)))
                   .times(Monomial::variable(VarId::xor_var(3, idx)))
                   .times(Monomial::variable(VarId::xor_var(4, idx))),
               1);
    out.push_back(std::move(f));
  }
  for (int block = 1; block <= 4; ++block) {
    for (int e = 0; e < m; ++e) {
      MultiPoly f = MultiPoly::constant(1);
      f.add_term(Monomial::variable(VarId::xor_var(block, static_cast<std::uint32_t>(e)), 2), 1);
      out.push_back(std::move(f));
    }
  }
  for (Monomial& zv : laurent_vertex_monomials(g)) {
    MultiPoly f = MultiPoly::constant(1);
    f.add_term(std::move(zv), 1);
    out.push_back(std::move(f));
  }
  return out;
}

// The monomial that clears every denominator in the raw factor list: one
// z1*z2*z3 per edge. Multiplying the product by it turns the slack-square
// reading into exponent targets (3, 3, 3, 2) per edge.
inline Monomial cut_shift_monomial(const Graph& g) {
  Monomial phi;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto idx = static_cast<std::uint32_t>(e);
    phi = phi.times(Monomial::variable(VarId::xor_var(1, idx)))
              .times(Monomial::variable(VarId::xor_var(2, idx)))
              .times(Monomial::variable(VarId::xor_var(3, idx)));
  }
  return phi;
}

inline std::map<VarId, int> cut_extraction_targets(const Graph& g) {
  std::map<VarId, int> targets;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto idx = static_cast<std::uint32_t>(e);
    targets[VarId::xor_var(1, idx)] = 3;
    targets[VarId::xor_var(2, idx)] = 3;
    targets[VarId::xor_var(3, idx)] = 3;
    targets[VarId::xor_var(4, idx)] = 2;
  }
  return targets;
}

// cut_partition_factors with the shift monomial distributed so every factor
// has nonnegative exponents (a precondition of pruned extraction): the edge
// factor absorbs z1, and the vertex factor of the smaller (larger) endpoint
// absorbs z2 (z3), cancelling the negative exponent it carried there. The
// product equals cut_shift_monomial(g) times the raw product. Factors are
// ordered so a variable's last mention comes as early as possible: the edge
// and slack factors of an edge sit just before the vertex factor of its
// larger endpoint.
inline FactorList cut_shifted_factors(const Graph& g) {
  FactorList out;
  out.reserve(static_cast<std::size_t>(5) * g.edge_count() + g.vertex_count());
  for (int v = 1; v <= g.vertex_count(); ++v) {
    for (std::size_t e : g.edges_at(v)) {
      if (g.edges()[e].second != v) continue;  // grouped under the larger endpoint
      const auto idx = static_cast<std::uint32_t>(e);
      MultiPoly edge_factor;
      edge_factor.add_term(Monomial::variable(VarId::xor_var(1, idx)), 1);
      edge_factor.add_term(Monomial::variable(VarId::z())
                               .times(Monomial::variable(VarId::xor_var(2, idx)))
                               .times(Monomial::variable(VarId::xor_var(3, idx)))
                               .times(Monomial::variable(VarId::xor_var(4, idx))),
                           1);
      out.push_back(std::move(edge_factor));
      for (int block = 1; block <= 4; ++block) {
        MultiPoly slack = MultiPoly::constant(1);
        slack.add_term(Monomial::variable(VarId::xor_var(block, idx), 2), 1);
        out.push_back(std::move(slack));
      }
    }
    Monomial sigma;      // the shift absorbed by this vertex factor
    Monomial sigma_zv;   // sigma times the vertex monomial, now denominator-free
    for (std::size_t e : g.edges_at(v)) {
      const auto idx = static_cast<std::uint32_t>(e);
      const bool smaller = g.edges()[e].first == v;
      sigma = sigma.times(Monomial::variable(VarId::xor_var(smaller ? 2 : 3, idx)));
      sigma_zv = sigma_zv.times(Monomial::variable(VarId::xor_var(1, idx)))
                     .times(Monomial::variable(VarId::xor_var(smaller ? 3 : 2, idx)))
                     .times(Monomial::variable(VarId::xor_var(4, idx)));
    }
    MultiPoly vertex_factor;
    vertex_factor.add_term(std::move(sigma), 1);
    vertex_factor.add_term(std::move(sigma_zv), 1);
    out.push_back(std::move(vertex_factor));
  }
  return out;
}

// Cut polynomial by coefficient extraction on the shifted factor list. The
// raw extraction counts ordered bipartitions, always an even total, and is
// halved into the pinned convention.
inline Poly cut_polynomial_laurent(const Graph& g, std::size_t max_terms = kDefaultMaxWork) {
  if (g.vertex_count() < 1) throw std::invalid_argument("cut polynomial needs a vertex");
  Poly raw;
  try {
    raw = nested_extraction(cut_shifted_factors(g), cut_extraction_targets(g), {true, max_terms});
  } catch (const WorkLimitError& err) {
    throw WorkLimitError(std::string(err.what()) + " (or use the XOR route: --method xor)");
  }
  std::vector<BigInt> halved(raw.degree() + 1);
  for (int k = 0; k <= raw.degree(); ++k) {
    const BigInt& c = raw.at(k);
    if (c % 2 != 0) throw std::logic_error("extraction produced an odd bipartition count");
    halved[k] = c / 2;
  }
  return Poly(std::move(halved));
}

// Reference route: enumerate the 2^(n-1) sides with vertex 1 pinned and
// bucket by crossing count.
inline Poly cut_polynomial_xor(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("cut polynomial needs a vertex");
  if (n > 30) {
    throw std::invalid_argument("xor route enumerates 2^(n-1) assignments; vertex count " +
                                std::to_string(n) + " is past its limit of 30");
  }
  std::vector<BigInt> coeffs(g.edge_count() + 1, BigInt(0));
  const std::uint32_t limit = std::uint32_t{1} << (n - 1);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    int crossing = 0;
    for (const Graph::Edge& e : g.edges()) {
      const int su = e.first == 1 ? 0 : static_cast<int>((mask >> (e.first - 2)) & 1u);
      const int sv = static_cast<int>((mask >> (e.second - 2)) & 1u);
      crossing += su ^ sv;
    }
    ++coeffs[crossing];
  }
  return Poly(std::move(coeffs));
}

// Mean crossing count when each vertex picks a side uniformly at random;
// equals weighted_sum / sum of the cut polynomial, and m/2 in closed form.
inline Rational expected_random_cut(const Poly& cut) {
  const BigInt total = cut.sum();
  if (total == 0) throw std::invalid_argument("cut polynomial is zero");
  return Rational(cut.weighted_sum(), total);
}

}  // namespace graphpoly
