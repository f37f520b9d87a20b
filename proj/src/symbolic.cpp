#include "cycrook/symbolic.hpp"

namespace cycrook {

std::vector<std::string> generic_names(const std::string& prefix, std::size_t m, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(m * n);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) names.push_back(prefix + std::to_string(i) + "_" + std::to_string(j));
  return names;
}

Matrix<MultiPoly> generic_matrix(const MultiPoly::Vars& vars, const std::string& prefix, std::size_t m, std::size_t n) {
  Matrix<MultiPoly> a(m, n);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      a(i, j) = MultiPoly::variable(vars, prefix + std::to_string(i) + "_" + std::to_string(j));
  return a;
}

Matrix<MultiPoly> lift(const Matrix<BigInt>& a) {
  return a.map([](const BigInt& v) { return MultiPoly(v); });
}

}  // namespace cycrook
