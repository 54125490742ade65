#pragma once

#include <cstddef>
#include <vector>

namespace graphpoly {

// Elementary symmetric polynomials e_0..e_k of the entries of xs, computed by
// the standard table recursion e[l][j] = e[l][j-1] + xs[j] * e[l-1][j-1].
// Only the current column is kept; updating l in descending order makes the
// in-place step read the previous column. Works over any commutative ring
// with 0, 1, +, *.
template <typename T>
std::vector<T> elementary_symmetric(const std::vector<T>& xs) {
  std::vector<T> e(xs.size() + 1, T(0));
  e[0] = T(1);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    for (std::size_t l = j + 1; l >= 1; --l) {
      e[l] = e[l] + xs[j] * e[l - 1];
    }
  }
  return e;
}

}  // namespace graphpoly
