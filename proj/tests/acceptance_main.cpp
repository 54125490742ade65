// Acceptance gate: eleven checks, one PASS/FAIL line each, nonzero exit on
// any failure. Thresholds (time limits, graph counts, seeds) are pinned here
// so a run is reproducible bit for bit.

#include <array>
#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphpoly/graphpoly.hpp"

using namespace graphpoly;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

int failures = 0;

void criterion(int id, const std::string& desc, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " " << id << ": " << desc;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

// Runs body() and folds an exception into a FAIL line instead of aborting.
template <typename F>
void guarded(int id, const std::string& desc, F body) {
  try {
    body();
  } catch (const std::exception& e) {
    criterion(id, desc, false, std::string("exception: ") + e.what());
  }
}

Graph demo_graph() {
  return parse_edge_list("1 2\n1 6\n2 3\n2 6\n3 4\n3 5\n5 6\n");
}

Graph triangle() {
  return Graph(3, {{1, 2}, {1, 3}, {2, 3}});
}

// 3-cube on labels 1..8; vertex v encodes the bits of v-1, edges flip one bit.
Graph cube() {
  std::vector<Graph::Edge> edges;
  for (int v = 0; v < 8; ++v) {
    for (int b = 0; b < 3; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) edges.push_back({v + 1, w + 1});
    }
  }
  return Graph(8, edges);
}

std::string poly_diff(const Poly& got, const Poly& want) {
  return "got " + got.to_string() + ", want " + want.to_string();
}

int smallest_nonzero(const Poly& p) {
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.at(k) != 0) return k;
  }
  return -1;
}

}  // namespace

int main() {
  const Poly demo_indep{1, 6, 8, 2};
  const Poly demo_cover{0, 0, 0, 2, 8, 6, 1};
  const Poly demo_cut{1, 1, 4, 10, 9, 5, 2};

  guarded(1, "demo graph independence polynomial, ESP and extraction routes, under 1 s", [&] {
    const Graph g = demo_graph();
    const auto t0 = Clock::now();
    const Poly esp = independence_polynomial(g);
    const Poly ext = indep_poly_by_extraction(g);
    const long long ms = ms_since(t0);
    std::string detail;
    if (esp != demo_indep) detail = "esp route: " + poly_diff(esp, demo_indep);
    if (ext != demo_indep) detail += " extraction route: " + poly_diff(ext, demo_indep);
    if (ms >= 1000) detail += " took " + std::to_string(ms) + " ms";
    criterion(1, "demo graph independence polynomial, ESP and extraction routes, under 1 s",
              detail.empty(), detail);
  });

  guarded(2, "demo graph maximum independent sets enumerate exactly, under 1 s", [&] {
    const Graph g = demo_graph();
    const auto t0 = Clock::now();
    const auto sets = enumerate_independent_sets(g, 3);
    const long long ms = ms_since(t0);
    const std::vector<std::vector<int>> want = {{1, 4, 5}, {2, 4, 5}};
    criterion(2, "demo graph maximum independent sets enumerate exactly, under 1 s",
              sets == want && ms < 1000);
  });

  guarded(3, "demo graph cover polynomial, reversal and extraction routes, extraction under 10 s",
          [&] {
            const Graph g = demo_graph();
            const Poly rev = vertex_cover_polynomial(g);
            const auto t0 = Clock::now();
            const Poly ext = cover_poly_by_extraction(g);
            const long long ms = ms_since(t0);
            std::string detail;
            if (rev != demo_cover) detail = "reversal route: " + poly_diff(rev, demo_cover);
            if (ext != demo_cover) detail += " extraction route: " + poly_diff(ext, demo_cover);
            if (ms >= 10000) detail += " extraction took " + std::to_string(ms) + " ms";
            criterion(3,
                      "demo graph cover polynomial, reversal and extraction routes, "
                      "extraction under 10 s",
                      detail.empty(), detail);
          });

  guarded(4, "demo graph cut polynomial, XOR and Laurent routes, Laurent under 2 min", [&] {
    const Graph g = demo_graph();
    const Poly viaxor = cut_polynomial_xor(g);
    const auto t0 = Clock::now();
    const Poly laurent = cut_polynomial_laurent(g);
    const long long ms = ms_since(t0);
    std::string detail;
    if (viaxor != demo_cut) detail = "xor route: " + poly_diff(viaxor, demo_cut);
    if (laurent != demo_cut) detail += " laurent route: " + poly_diff(laurent, demo_cut);
    if (ms >= 120000) detail += " laurent took " + std::to_string(ms) + " ms";
    criterion(4, "demo graph cut polynomial, XOR and Laurent routes, Laurent under 2 min",
              detail.empty(), detail);
  });

  guarded(5, "triangle cut polynomial 1 + 3z^2 and independence polynomial 1 + 3z, under 1 s",
          [&] {
            const Graph g = triangle();
            const auto t0 = Clock::now();
            const Poly cut = cut_polynomial_xor(g);
            const Poly ind = independence_polynomial(g);
            const long long ms = ms_since(t0);
            criterion(5,
                      "triangle cut polynomial 1 + 3z^2 and independence polynomial 1 + 3z, "
                      "under 1 s",
                      cut == Poly{1, 0, 3} && ind == Poly{1, 3} && ms < 1000);
          });

  guarded(6, "expected random cut equals m/2: demo graph and 50 random connected graphs", [&] {
    bool ok = expected_random_cut(cut_polynomial_xor(demo_graph())) == Rational(7, 2);
    std::string detail = ok ? "" : "demo graph expected cut is not 7/2";
    std::mt19937_64 rng(2026);
    for (int i = 0; ok && i < 50; ++i) {
      const int n = 1 + static_cast<int>(rng() % 12);
      const Graph g = random_connected_graph(rng, n, 0.4);
      if (expected_random_cut(cut_polynomial_xor(g)) != Rational(g.edge_count(), 2)) {
        ok = false;
        detail = "graph " + std::to_string(i) + " deviates from m/2";
      }
    }
    criterion(6, "expected random cut equals m/2: demo graph and 50 random connected graphs", ok,
              detail);
  });

  guarded(7, "all four routes match the brute-force oracles on 200 seeded graphs", [&] {
    std::mt19937_64 rng(1);
    bool ok = true;
    std::string detail;
    for (int i = 0; ok && i < 200; ++i) {
      const int n = 1 + static_cast<int>(rng() % 12);
      const Graph g = random_graph(rng, n, 0.3);
      const std::string at = "graph " + std::to_string(i);
      if (independence_polynomial(g) != brute_independence(g)) {
        ok = false;
        detail = at + ": independence route disagrees with oracle";
      } else if (clique_polynomial(g) != brute_clique(g)) {
        ok = false;
        detail = at + ": clique route disagrees with oracle";
      } else if (vertex_cover_polynomial(g) != brute_cover(g)) {
        ok = false;
        detail = at + ": cover route disagrees with oracle";
      } else if (cut_polynomial_xor(g) != brute_cut(g)) {
        ok = false;
        detail = at + ": cut route disagrees with oracle";
      }
    }
    criterion(7, "all four routes match the brute-force oracles on 200 seeded graphs", ok, detail);
  });

  guarded(8, "coefficient, reversal, Gallai, cut-total and nilpotency identities on the same 200",
          [&] {
            std::mt19937_64 rng(1);
            bool ok = true;
            std::string detail;
            for (int i = 0; ok && i < 200; ++i) {
              const int n = 1 + static_cast<int>(rng() % 12);
              const Graph g = random_graph(rng, n, 0.3);
              const int m = g.edge_count();
              const Poly ind = independence_polynomial(g);
              const Poly cover = vertex_cover_polynomial(g);
              const Poly cut = cut_polynomial_xor(g);
              const int alpha = ind.degree();
              const auto fail = [&](const std::string& what) {
                ok = false;
                detail = "graph " + std::to_string(i) + ": " + what;
              };
              if (ind.at(0) != 1 || ind.at(1) != n ||
                  ind.at(2) != BigInt(n) * (n - 1) / 2 - m) {
                fail("low-order coefficients");
              } else if (cover != ind.reversed(n)) {
                fail("cover is not the reversed independence polynomial");
              } else if (alpha + smallest_nonzero(cover) != n) {
                fail("alpha + beta != n");
              } else if (cut.sum() != BigInt(1) << (n - 1)) {
                fail("cut counts do not sum to 2^(n-1)");
              } else if (nilpotency_index(g) != alpha + 1) {
                fail("nilpotency index is not alpha + 1");
              } else {
                const auto witness = find_independent_set(g, alpha);
                std::optional<EdgeSet> prod = EdgeSet(g.edge_count());
                if (witness) {
                  for (int v : *witness) {
                    if (!prod) break;
                    prod = nil_product(*prod, incident_edges(g, v));
                  }
                }
                if (!witness || !prod) {
                  fail("no nonzero product of alpha vertex monomials");
                } else if (n <= 10 && !products_of_order_vanish(g, alpha + 1)) {
                  fail("some product of alpha+1 vertex monomials survives");
                }
              }
            }
            criterion(8,
                      "coefficient, reversal, Gallai, cut-total and nilpotency identities on "
                      "the same 200",
                      ok, detail);
          });

  guarded(9, "3-cube has six maximal independent sets: four of order 2, two of order 4", [&] {
    const Graph g = cube();
    const int n = g.vertex_count();
    int order2 = 0, order4 = 0, other = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      bool indep = true;
      for (auto [u, v] : g.edges()) {
        if ((mask >> (u - 1) & 1) && (mask >> (v - 1) & 1)) {
          indep = false;
          break;
        }
      }
      if (!indep) continue;
      bool maximal = true;
      for (int v = 1; maximal && v <= n; ++v) {
        if (mask >> (v - 1) & 1) continue;
        bool addable = true;
        for (std::size_t e : g.edges_at(v)) {
          const auto [a, b] = g.edges()[e];
          const int w = a == v ? b : a;
          if (mask >> (w - 1) & 1) {
            addable = false;
            break;
          }
        }
        if (addable) maximal = false;
      }
      if (!maximal) continue;
      const int size = __builtin_popcount(mask);
      if (size == 2) ++order2;
      else if (size == 4) ++order4;
      else ++other;
    }
    criterion(9, "3-cube has six maximal independent sets: four of order 2, two of order 4",
              order2 == 4 && order4 == 2 && other == 0,
              "order2=" + std::to_string(order2) + " order4=" + std::to_string(order4) +
                  " other=" + std::to_string(other));
  });

  guarded(10, "ESP recursion matches product expansion on 100 random integer vectors", [&] {
    std::mt19937_64 rng(10);
    bool ok = true;
    for (int trial = 0; ok && trial < 100; ++trial) {
      const std::size_t len = 1 + rng() % 8;
      std::vector<long long> xs(len);
      for (auto& x : xs) x = static_cast<long long>(rng() % 7) - 3;
      std::vector<long long> expanded{1};
      for (long long x : xs) {
        expanded.push_back(0);
        for (std::size_t k = expanded.size() - 1; k >= 1; --k) expanded[k] += expanded[k - 1] * x;
      }
      ok = elementary_symmetric(xs) == expanded;
    }
    criterion(10, "ESP recursion matches product expansion on 100 random integer vectors", ok);
  });

  guarded(11, "XOR slack system has exactly the four expected binary solutions", [&] {
    const std::vector<std::array<int, 7>> want = {
        {0, 0, 0, 1, 1, 1, 1}, {0, 1, 1, 1, 0, 1, 0}, {1, 0, 1, 1, 1, 0, 0}, {1, 1, 0, 0, 1, 1, 0}};
    criterion(11, "XOR slack system has exactly the four expected binary solutions",
              xor_truth_table() == want);
  });

  std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << 11 - failures
            << "/11)\n";
  return failures == 0 ? 0 : 1;
}
