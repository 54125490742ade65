#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphpoly {

// Counting coefficients overflow 64 bits long before the algorithms give out,
// so all multiplicities and polynomial coefficients are arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an intermediate result outgrows the configured term budget.
// Callers map this to a size-guard rejection rather than truncating silently.
class WorkLimitError : public std::runtime_error {
 public:
  explicit WorkLimitError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultMaxWork = 4'000'000;

}  // namespace graphpoly
