#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphpoly/bigint.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/poly.hpp"

namespace graphpoly {

// Variable identifiers for the multivariate engine: the counting variable z,
// one edge variable per edge, and four blocks of XOR-slack variables per
// edge. The declaration order of the fields fixes the canonical total order
// z < edge(0) < ... < edge(m-1) < xor(1,0) < ... < xor(4,m-1).
struct VarId {
  enum class Tag : std::uint8_t { Z = 0, Edge = 1, Xor = 2 };

  Tag tag = Tag::Z;
  std::uint8_t block = 0;   // XOR block 1..4; 0 otherwise
  std::uint32_t edge = 0;   // canonical edge index; 0 for z

  static constexpr VarId z() { return {}; }

  static constexpr VarId edge_var(std::uint32_t e) { return {Tag::Edge, 0, e}; }

  static constexpr VarId xor_var(int block, std::uint32_t e) {
    return {Tag::Xor, static_cast<std::uint8_t>(block), e};
  }

  friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

// Exponent vector with integer (possibly negative) exponents; zero exponents
// are never stored, so the default-constructed monomial is 1.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(VarId v, int exp = 1) {
    Monomial m;
    if (exp != 0) m.entries_.emplace_back(v, exp);
    return m;
  }

  int exponent(VarId v) const {
    for (const auto& [var, exp] : entries_) {
      if (var == v) return exp;
    }
    return 0;
  }

  Monomial times(const Monomial& o) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + o.entries_.size());
    std::size_t i = 0, j = 0;
    while (i < entries_.size() || j < o.entries_.size()) {
      if (j == o.entries_.size() || (i < entries_.size() && entries_[i].first < o.entries_[j].first)) {
        out.entries_.push_back(entries_[i++]);
      } else if (i == entries_.size() || o.entries_[j].first < entries_[i].first) {
        out.entries_.push_back(o.entries_[j++]);
      } else {
        const int exp = entries_[i].second + o.entries_[j].second;
        if (exp != 0) out.entries_.emplace_back(entries_[i].first, exp);
        ++i, ++j;
      }
    }
    return out;
  }

  Monomial without(VarId v) const {
    Monomial out;
    out.entries_.reserve(entries_.size());
    for (const auto& e : entries_) {
      if (e.first != v) out.entries_.push_back(e);
    }
    return out;
  }

  const std::vector<std::pair<VarId, int>>& entries() const { return entries_; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<VarId, int>> entries_;  // sorted by VarId
};

// Sparse multivariate Laurent polynomial with exact integer coefficients.
// Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, BigInt>;

  MultiPoly() = default;

  static MultiPoly constant(BigInt c) {
    MultiPoly p;
    p.add_term(Monomial(), std::move(c));
    return p;
  }

  static MultiPoly monomial(Monomial m, BigInt c = BigInt(1)) {
    MultiPoly p;
    p.add_term(std::move(m), std::move(c));
    return p;
  }

  void add_term(Monomial m, BigInt c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  MultiPoly scaled(const BigInt& c) const {
    MultiPoly out;
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        out.add_term(ma.times(mb), ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  TermMap terms_;
};

// The coefficient of v^e: terms whose exponent of v equals e, with v struck
// from their exponent vectors.
inline MultiPoly extract_coefficient(const MultiPoly& p, VarId v, int e) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(v) == e) out.add_term(m.without(v), c);
  }
  return out;
}

// Unexpanded product form of a partition function.
using FactorList = std::vector<MultiPoly>;

// The partition function whose coefficients count solutions of the
// independent-set system: one factor (1 + z * Z_E(v)) per vertex and one
// (1 + z_uv) per edge, in canonical order.
inline FactorList build_partition_function(const Graph& g) {
  FactorList factors;
  factors.reserve(g.vertex_count() + g.edge_count());
  for (int v = 1; v <= g.vertex_count(); ++v) {
    Monomial zv = Monomial::variable(VarId::z());
    for (std::size_t e : g.edges_at(v)) {
      zv = zv.times(Monomial::variable(VarId::edge_var(static_cast<std::uint32_t>(e))));
    }
    MultiPoly f = MultiPoly::constant(1);
    f.add_term(std::move(zv), 1);
    factors.push_back(std::move(f));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    MultiPoly f = MultiPoly::constant(1);
    f.add_term(Monomial::variable(VarId::edge_var(static_cast<std::uint32_t>(e))), 1);
    factors.push_back(std::move(f));
  }
  return factors;
}

struct ExtractionOptions {
  bool prune = true;
  std::size_t max_terms = kDefaultMaxWork;
};

namespace mp_detail {

inline Poly to_univariate(const MultiPoly& p) {
  std::vector<BigInt> coeffs;
  for (const auto& [m, c] : p.terms()) {
    int k = 0;
    for (const auto& [v, e] : m.entries()) {
      if (v != VarId::z()) throw std::logic_error("leftover variable after extraction");
      k = e;
    }
    if (k < 0) throw std::logic_error("negative power of the counting variable");
    if (static_cast<std::size_t>(k) >= coeffs.size()) coeffs.resize(k + 1, BigInt(0));
    coeffs[k] += c;
  }
  return Poly(std::move(coeffs));
}

}  // namespace mp_detail

// Multiplies the factors in one at a time and extracts the target exponent of
// every non-z variable, leaving a polynomial in z. Expansion is postponed by
// pruning as factors are folded in: a term dies as soon as some exponent
// exceeds its target, can no longer reach it with what the remaining factors
// could still contribute, or differs from it once no remaining factor
// mentions the variable. The pruning is sound only because factor exponents
// of non-z variables are required to be nonnegative (exponents can then only
// grow); Laurent factor lists must be shifted into that form first.
inline Poly nested_extraction(const FactorList& factors, const std::map<VarId, int>& targets,
                              const ExtractionOptions& opt = {}) {
  std::map<VarId, std::size_t> var_slot;
  std::vector<std::vector<int>> factor_max;  // per variable, max exponent in each factor
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& [m, c] : factors[i].terms()) {
      for (const auto& [v, e] : m.entries()) {
        if (v == VarId::z()) continue;
        if (e < 0) throw std::invalid_argument("factor carries a negative exponent; shift first");
        if (!targets.count(v)) throw std::invalid_argument("factor variable missing from targets");
        auto [it, fresh] = var_slot.emplace(v, factor_max.size());
        if (fresh) factor_max.emplace_back(factors.size(), 0);
        std::vector<int>& fm = factor_max[it->second];
        if (e > fm[i]) fm[i] = e;
      }
    }
  }
  for (const auto& [v, t] : targets) {
    if (t != 0 && !var_slot.count(v)) return Poly::zero();  // unreachable target
  }

  // For each position: variables that can no longer stay at zero (the
  // remaining factors cannot supply the whole target) with the minimum
  // exponent they must already carry, and variables seen for the last time,
  // whose exponent is now final and must equal the target exactly.
  std::vector<std::vector<std::pair<VarId, int>>> critical_at(factors.size());
  std::vector<std::vector<VarId>> exhausted_after(factors.size());
  for (const auto& [v, s] : var_slot) {
    const int target = targets.at(v);
    int remaining = 0;
    for (int f : factor_max[s]) remaining += f;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      remaining -= factor_max[s][i];
      if (remaining == 0) {
        exhausted_after[i].push_back(v);
        break;
      }
      if (remaining < target) critical_at[i].emplace_back(v, target - remaining);
    }
  }

  MultiPoly acc = MultiPoly::constant(1);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    MultiPoly next = acc * factors[i];
    if (opt.prune) {
      MultiPoly kept;
      for (const auto& [m, c] : next.terms()) {
        bool keep = true;
        for (const auto& [v, e] : m.entries()) {
          auto t = targets.find(v);
          if (t != targets.end() && e > t->second) {
            keep = false;
            break;
          }
        }
        for (std::size_t j = 0; keep && j < critical_at[i].size(); ++j) {
          if (m.exponent(critical_at[i][j].first) < critical_at[i][j].second) keep = false;
        }
        for (std::size_t j = 0; keep && j < exhausted_after[i].size(); ++j) {
          const VarId v = exhausted_after[i][j];
          if (m.exponent(v) != targets.at(v)) keep = false;
        }
        if (keep) kept.add_term(m, c);
      }
      next = std::move(kept);
    }
    if (next.term_count() > opt.max_terms) {
      throw WorkLimitError("nested extraction exceeded " + std::to_string(opt.max_terms) +
                           " live terms; raise --max-work");
    }
    acc = std::move(next);
  }

  // All targets are exhausted now; peel them off innermost-first, i.e. in
  // reverse canonical variable order. The result does not depend on this
  // order, it just mirrors how the nested brackets are written.
  for (auto it = targets.rbegin(); it != targets.rend(); ++it) {
    acc = extract_coefficient(acc, it->first, it->second);
  }
  return mp_detail::to_univariate(acc);
}

// Independence polynomial read straight off the partition function: the
// coefficient of the all-ones edge monomial. Desk-scale graphs only; the
// nilpotent ESP route has no such limit.
inline Poly indep_poly_by_extraction(const Graph& g, std::size_t max_terms = kDefaultMaxWork) {
  std::map<VarId, int> targets;
  for (int e = 0; e < g.edge_count(); ++e) {
    targets[VarId::edge_var(static_cast<std::uint32_t>(e))] = 1;
  }
  try {
    return nested_extraction(build_partition_function(g), targets, {true, max_terms});
  } catch (const WorkLimitError& err) {
    throw WorkLimitError(std::string(err.what()) + " (or use the ESP route: --method esp)");
  }
}

// Vertex-cover polynomial from the same partition function, reading the
// squared edge monomial instead.
inline Poly cover_poly_by_extraction(const Graph& g, std::size_t max_terms = kDefaultMaxWork) {
  std::map<VarId, int> targets;
  for (int e = 0; e < g.edge_count(); ++e) {
    targets[VarId::edge_var(static_cast<std::uint32_t>(e))] = 2;
  }
  try {
    return nested_extraction(build_partition_function(g), targets, {true, max_terms});
  } catch (const WorkLimitError& err) {
    throw WorkLimitError(std::string(err.what()) + " (or use the ESP route: --method esp)");
  }
}

}  // namespace graphpoly
