#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "graphpoly/bigint.hpp"

namespace graphpoly {

// Dense univariate polynomial in the counting variable z. Coefficient k is
// the number of objects of order k, so entries are nonnegative and arbitrary
// precision. Trailing zeros are trimmed; the zero polynomial has degree -1.
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  Poly(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly zero() { return Poly(); }

  bool is_zero() const { return coeffs_.empty(); }

  // Degree of the zero polynomial is -1 by convention here.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  BigInt at(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  BigInt operator[](std::size_t k) const { return at(k); }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  void set(std::size_t k, BigInt c) {
    if (k >= coeffs_.size()) coeffs_.resize(k + 1, BigInt(0));
    coeffs_[k] = std::move(c);
    trim();
  }

  void add(std::size_t k, const BigInt& c) {
    if (k >= coeffs_.size()) coeffs_.resize(k + 1, BigInt(0));
    coeffs_[k] += c;
    trim();
  }

  BigInt sum() const {
    BigInt s = 0;
    for (const BigInt& c : coeffs_) s += c;
    return s;
  }

  // Sum of k * coeff_k, the derivative evaluated at z = 1.
  BigInt weighted_sum() const {
    BigInt s = 0;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) s += BigInt(k) * coeffs_[k];
    return s;
  }

  // Coefficients reversed within a frame of length n+1: result[k] = at(n-k).
  Poly reversed(std::size_t n) const {
    std::vector<BigInt> out(n + 1, BigInt(0));
    for (std::size_t k = 0; k <= n; ++k) out[k] = at(n - k);
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) = default;

  // Lowest degree first, e.g. "1 + 6z + 8z^2 + 2z^3"; unit coefficients on
  // positive powers are omitted.
  std::string to_string(const std::string& var = "z") const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      if (!out.empty()) out += " + ";
      if (k == 0) {
        out += coeffs_[k].str();
      } else {
        if (coeffs_[k] != 1) out += coeffs_[k].str();
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace graphpoly
