#pragma once

#include <cstddef>
#include <vector>

#include "cycrook/matrix.hpp"
#include "cycrook/partial_maps.hpp"

namespace cycrook {

/// One summand of a row expansion, independent of matrix entries:
///   (prod over placement of a_{i,phi(i)}) * x^|placement| * z^cycles * R(A[rows | cols]).
struct ExpansionTerm {
  PartialInjection placement;
  std::size_t cycles = 0;
  IndexSeq rows;
  IndexSeq cols;

  friend bool operator==(const ExpansionTerm&, const ExpansionTerm&) = default;
};

enum class RowSetMode {
  // Every nonempty subset S of the chosen rows is placed; plus one term in
  // which none of them is used (columns left untouched).
  subsets_with_unused,
  // All chosen rows are placed (permanent expansion).
  all_placed,
};

// Terms for expanding an m x n board along `chosen` rows. The reduced board
// keeps the unchosen rows and the rewired column sequence.
std::vector<ExpansionTerm> row_set_terms(std::size_t m, std::size_t n, const IndexSeq& chosen, RowSetMode mode);

// Expansion along the last k rows, 1 <= k <= m - 1.
std::vector<ExpansionTerm> last_k_terms(std::size_t m, std::size_t n, std::size_t k);

// Expansion along a single row i, 1 <= i <= m.
std::vector<ExpansionTerm> row_terms(std::size_t m, std::size_t n, std::size_t i);

// Permanent expansion along strictly increasing rows, 1 <= |rows| <= m - 1.
std::vector<ExpansionTerm> per_rows_terms(std::size_t m, std::size_t n, const IndexSeq& rows);

}  // namespace cycrook
