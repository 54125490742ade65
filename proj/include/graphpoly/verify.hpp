#pragma once

#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graphpoly/bigint.hpp"
#include "graphpoly/cut.hpp"
#include "graphpoly/derived.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/indep.hpp"
#include "graphpoly/multipoly.hpp"
#include "graphpoly/nilalgebra.hpp"
#include "graphpoly/oracle.hpp"
#include "graphpoly/poly.hpp"

namespace graphpoly {

// Erdős–Rényi sample on n labeled vertices. Randomness is drawn as raw
// 64-bit words compared against the probability, so the same seed gives the
// same graph on every platform.
inline Graph random_graph(std::mt19937_64& rng, int n, double edge_prob) {
  std::vector<Graph::Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      const double coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (coin < edge_prob) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

inline bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n + 1, 0);
  std::queue<int> frontier;
  frontier.push(1);
  seen[1] = 1;
  int visited = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (std::size_t e : g.edges_at(u)) {
      const auto [a, b] = g.edges()[e];
      const int w = a == u ? b : a;
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        frontier.push(w);
      }
    }
  }
  return visited == n;
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double edge_prob) {
  for (;;) {
    Graph g = random_graph(rng, n, edge_prob);
    if (is_connected(g)) return g;
  }
}

// The four polynomials as produced by the main routes (ESP, complement,
// reversal, XOR enumeration). Kept as a plain struct so tests can corrupt an
// entry and watch the right identity fail.
struct PolySet {
  Poly indep;
  Poly clique;
  Poly cover;
  Poly cut;
};

inline PolySet compute_polys(const Graph& g, std::size_t max_work = kDefaultMaxWork) {
  PolySet ps;
  ps.indep = independence_polynomial(g, max_work);
  ps.clique = clique_polynomial(g, max_work);
  ps.cover = vertex_cover_polynomial(g, max_work);
  ps.cut = cut_polynomial_xor(g);
  return ps;
}

struct PropertyResult {
  std::string property;
  bool pass = false;
  std::string detail;  // empty on pass
};

namespace verify_detail {

inline void expect_equal(std::vector<PropertyResult>& out, const std::string& property,
                         const Poly& got, const Poly& want) {
  if (got == want) {
    out.push_back({property, true, {}});
  } else {
    out.push_back({property, false, "got " + got.to_string() + ", want " + want.to_string()});
  }
}

inline void expect(std::vector<PropertyResult>& out, const std::string& property, bool pass,
                   const std::string& detail) {
  out.push_back({property, pass, pass ? std::string() : detail});
}

}  // namespace verify_detail

// True when every product of k distinct vertex monomials vanishes under
// z_uv^2 = 0; exhaustive over all k-subsets.
inline bool products_of_order_vanish(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (k > n) return true;
  std::vector<EdgeSet> zv;
  zv.reserve(n);
  for (int v = 1; v <= n; ++v) zv.push_back(incident_edges(g, v));
  std::vector<int> pick;
  auto rec = [&](auto&& self, int next, const EdgeSet& acc) -> bool {
    if (static_cast<int>(pick.size()) == k) return false;  // nonzero product found
    for (int v = next; v <= n; ++v) {
      auto prod = nil_product(acc, zv[v - 1]);
      if (!prod) continue;
      pick.push_back(v);
      if (!self(self, v + 1, *prod)) return false;
      pick.pop_back();
    }
    return true;
  };
  return rec(rec, 1, EdgeSet(g.edge_count()));
}

// Every identity the library promises, evaluated on one graph against the
// supplied polynomial set. Size-gated checks (exhaustive nilpotency, the
// extraction and Laurent cross-routes) are simply absent from the result on
// graphs past their gate.
inline std::vector<PropertyResult> check_identities(const Graph& g, const PolySet& ps,
                                                    std::size_t max_work = kDefaultMaxWork) {
  using verify_detail::expect;
  using verify_detail::expect_equal;
  std::vector<PropertyResult> out;
  const int n = g.vertex_count();
  const int m = g.edge_count();

  expect_equal(out, "indep_matches_oracle", ps.indep, brute_independence(g));
  expect_equal(out, "clique_matches_oracle", ps.clique, brute_clique(g));
  expect_equal(out, "cover_matches_oracle", ps.cover, brute_cover(g));
  expect_equal(out, "cut_matches_oracle", ps.cut, brute_cut(g));

  expect(out, "A0_is_1", ps.indep.at(0) == 1, "A0 = " + ps.indep.at(0).str());
  expect(out, "A1_is_n", ps.indep.at(1) == n, "A1 = " + ps.indep.at(1).str());
  const BigInt non_edges = BigInt(n) * (n - 1) / 2 - m;
  expect(out, "A2_is_nC2_minus_m", ps.indep.at(2) == non_edges,
         "A2 = " + ps.indep.at(2).str() + ", want " + non_edges.str());

  expect_equal(out, "cover_is_reversed_indep", ps.cover, ps.indep.reversed(n));
  {
    const int alpha = ps.indep.degree();
    int beta = 0;
    while (beta <= ps.cover.degree() && ps.cover.at(beta) == 0) ++beta;
    expect(out, "gallai_alpha_plus_beta_is_n", alpha + beta == n,
           "alpha " + std::to_string(alpha) + " + beta " + std::to_string(beta) +
               " != " + std::to_string(n));
  }

  const BigInt sides = BigInt(1) << (n - 1);
  expect(out, "cut_total_is_2_pow_n_minus_1", ps.cut.sum() == sides,
         "sum " + ps.cut.sum().str() + ", want " + sides.str());
  {
    const Rational expected = expected_random_cut(ps.cut);
    const Rational half_m(m, 2);
    std::ostringstream detail;
    detail << "expected cut " << expected << ", want " << half_m;
    expect(out, "expected_cut_is_m_over_2", expected == half_m, detail.str());
  }

  {
    const int alpha = independence_number(g, max_work);
    bool ok = false;
    std::string detail;
    try {
      ok = nilpotency_index(g, max_work) == alpha + 1;
      if (!ok) detail = "nilpotency index != alpha + 1";
    } catch (const std::logic_error& err) {
      detail = err.what();
    }
    expect(out, "eta_is_alpha_plus_1", ok, detail);
    if (n <= 10) {
      expect(out, "products_of_eta_vertices_vanish", products_of_order_vanish(g, alpha + 1),
             "a nonzero product of alpha+1 vertex monomials exists");
    }
  }

  {
    bool ok = true;
    std::string detail;
    for (int k = 0; ok && k <= ps.indep.degree(); ++k) {
      const auto sets = enumerate_independent_sets(g, k, max_work);
      if (BigInt(sets.size()) != ps.indep.at(k)) {
        ok = false;
        detail = "k=" + std::to_string(k) + ": " + std::to_string(sets.size()) +
                 " sets, coefficient " + ps.indep.at(k).str();
      }
    }
    expect(out, "enumeration_matches_coefficients", ok, detail);
  }

  if (n <= 12) {
    expect_equal(out, "indep_extraction_route", indep_poly_by_extraction(g, max_work), ps.indep);
    expect_equal(out, "cover_extraction_route", cover_poly_by_extraction(g, max_work), ps.cover);
  }
  if (n <= 10 && m <= 16) {
    expect_equal(out, "cut_laurent_route", cut_polynomial_laurent(g, max_work), ps.cut);
  }
  return out;
}

// Which main-route polynomial run_verification corrupts before checking;
// exercises the harness itself.
enum class FaultSite { none, indep, clique, cover, cut };

inline void inject_fault(PolySet& ps, FaultSite site) {
  auto bump = [](Poly& p) { p.set(0, p.at(0) + 1); };
  switch (site) {
    case FaultSite::none: break;
    case FaultSite::indep: bump(ps.indep); break;
    case FaultSite::clique: bump(ps.clique); break;
    case FaultSite::cover: bump(ps.cover); break;
    case FaultSite::cut: bump(ps.cut); break;
  }
}

struct VerifyOptions {
  std::uint64_t seed = 1;
  int count = 200;
  int max_vertices = 12;
  double edge_prob = 0.3;
  std::size_t max_work = kDefaultMaxWork;
  FaultSite fault = FaultSite::none;
};

struct VerifyFailure {
  int graph_index = 0;
  std::string property;
  std::string detail;
  std::string graph;  // edge-list text, ready for replay via --input
};

struct VerifySummary {
  int graphs = 0;
  std::vector<std::pair<std::string, int>> checked;  // property -> #graphs it ran on
  std::vector<VerifyFailure> failures;

  bool all_passed() const { return failures.empty(); }
};

// Random-graph property sweep: `count` graphs with 1..max_vertices vertices,
// every identity from check_identities on each.
inline VerifySummary run_verification(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  VerifySummary summary;
  std::map<std::string, std::size_t> slot;
  for (int i = 0; i < opt.count; ++i) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(opt.max_vertices));
    const Graph g = random_graph(rng, n, opt.edge_prob);
    PolySet ps = compute_polys(g, opt.max_work);
    inject_fault(ps, opt.fault);
    for (const PropertyResult& r : check_identities(g, ps, opt.max_work)) {
      auto it = slot.find(r.property);
      if (it == slot.end()) {
        it = slot.emplace(r.property, summary.checked.size()).first;
        summary.checked.emplace_back(r.property, 0);
      }
      ++summary.checked[it->second].second;
      if (!r.pass) {
        summary.failures.push_back({i, r.property, r.detail, to_edge_list_text(g)});
      }
    }
    ++summary.graphs;
  }
  return summary;
}

}  // namespace graphpoly
