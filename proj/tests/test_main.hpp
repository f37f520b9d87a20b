#pragma once
// Shared helpers for the unit test binaries.

#include <random>
#include <string>
#include <vector>

#include "cycrook/matrix.hpp"
#include "cycrook/multipoly.hpp"

namespace cycrook::testing {

inline Matrix<BigInt> int_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<BigInt>> r;
  for (const auto& row : rows) {
    std::vector<BigInt> out;
    for (long v : row) out.emplace_back(v);
    r.push_back(out);
  }
  return Matrix<BigInt>::from_rows(r);
}

inline Matrix<BigInt> random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, long lo = -3, long hi = 3) {
  Matrix<BigInt> a(m, n);
  std::uniform_int_distribution<long> dist(lo, hi);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) a(i, j) = dist(rng);
  return a;
}

}  // namespace cycrook::testing
