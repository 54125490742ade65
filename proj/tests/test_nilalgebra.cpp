#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>
#include <vector>

#include "graphpoly/esp.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/indep.hpp"
#include "graphpoly/nilalgebra.hpp"

using namespace graphpoly;

namespace {

EdgeSet make_set(std::size_t universe, std::initializer_list<std::size_t> bits) {
  EdgeSet s(universe);
  for (std::size_t b : bits) s.set(b);
  return s;
}

}  // namespace

TEST_CASE("products vanish exactly on shared edges") {
  const EdgeSet a = make_set(8, {0, 1});
  const EdgeSet b = make_set(8, {2, 3});
  const EdgeSet c = make_set(8, {1, 4});
  const auto ab = nil_product(a, b);
  REQUIRE(ab.has_value());
  REQUIRE(ab->indices() == std::vector<std::size_t>{0, 1, 2, 3});
  REQUIRE_FALSE(nil_product(a, c).has_value());
  // the empty monomial is the identity
  const auto ua = nil_product(EdgeSet(8), a);
  REQUIRE(ua.has_value());
  REQUIRE(*ua == a);
}

TEST_CASE("layers carry multiplicities") {
  NilLayer l = NilLayer::unit(4);
  REQUIRE(l.distinct_terms() == 1);
  REQUIRE(l.term_count() == 1);
  l.add(make_set(4, {0}), 2);
  l.add(make_set(4, {0}), 3);
  REQUIRE(l.distinct_terms() == 2);
  REQUIRE(l.term_count() == 6);
}

TEST_CASE("extending a layer multiplies every term") {
  NilLayer l;
  l.add(make_set(4, {0}), 1);
  l.add(make_set(4, {1}), 1);
  const NilLayer e = layer_extend(l, make_set(4, {1, 2}));
  // the {1} term shares edge 1 with the multiplier and dies
  REQUIRE(e.distinct_terms() == 1);
  REQUIRE(e.terms().begin()->first.indices() == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("edgeless graph slices count by multiplicity") {
  // all vertex monomials are 1, so each slice is a single monomial whose
  // multiplicity is a binomial coefficient
  const EspState st = esp_nil_recursion(Graph(3, {}));
  REQUIRE(st.layers.size() == 4);
  std::vector<BigInt> counts;
  for (const NilLayer& l : st.layers) {
    REQUIRE(l.distinct_terms() == 1);
    counts.push_back(l.term_count());
  }
  REQUIRE(counts == std::vector<BigInt>{1, 3, 3, 1});
  REQUIRE(st.term_count(4) == 0);
}

TEST_CASE("elementary symmetric recursion on a tiny vector") {
  const std::vector<long long> xs{2, 3, 5};
  const auto e = elementary_symmetric(xs);
  REQUIRE(e == std::vector<long long>{1, 10, 31, 30});
}

TEST_CASE("elementary symmetric polynomials match the product expansion") {
  // e_l is the coefficient of z^l in prod (1 + z x_i); 100 seeded random
  // integer vectors, entries in [-3, 3], length up to 8
  std::mt19937_64 rng(20260826);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t len = 1 + rng() % 8;
    std::vector<long long> xs(len);
    for (auto& x : xs) x = static_cast<long long>(rng() % 7) - 3;

    std::vector<long long> product{1};
    for (long long x : xs) {
      std::vector<long long> next(product.size() + 1, 0);
      for (std::size_t k = 0; k < product.size(); ++k) {
        next[k] += product[k];
        next[k + 1] += product[k] * x;
      }
      product = std::move(next);
    }
    REQUIRE(elementary_symmetric(xs) == product);
  }
}
