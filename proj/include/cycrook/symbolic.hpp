#pragma once

#include <string>
#include <vector>

#include "cycrook/matrix.hpp"
#include "cycrook/multipoly.hpp"

namespace cycrook {

// "a1_2" style names, row-major: prefix + i + "_" + j.
std::vector<std::string> generic_names(const std::string& prefix, std::size_t m, std::size_t n);

// Matrix whose (i, j) entry is the indeterminate prefix + i + "_" + j.
Matrix<MultiPoly> generic_matrix(const MultiPoly::Vars& vars, const std::string& prefix, std::size_t m, std::size_t n);

Matrix<MultiPoly> lift(const Matrix<BigInt>& a);

}  // namespace cycrook
