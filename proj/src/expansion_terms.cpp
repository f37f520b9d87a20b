#include "cycrook/expansion_terms.hpp"

#include <string>

#include "cycrook/errors.hpp"

namespace cycrook {

namespace {

void require_shape(std::size_t m, std::size_t n) {
  if (m > n) throw ContractViolation("expansion needs m <= n (got " + std::to_string(m) + " x " + std::to_string(n) + ")");
}

}  // namespace

std::vector<ExpansionTerm> row_set_terms(std::size_t m, std::size_t n, const IndexSeq& chosen, RowSetMode mode) {
  require_shape(m, n);
  if (!chosen.strictly_increasing() || !chosen.within(m))
    throw ContractViolation("expansion rows must be strictly increasing and within 1.." + std::to_string(m));
  const IndexSeq kept = complement_of(chosen, m);
  const IndexSeq all_cols = IndexSeq::iota(n);
  std::vector<ExpansionTerm> terms;

  auto add_subset = [&](const IndexSeq& subset) {
    for_each_injection(subset, n, [&](const PartialInjection& phi) {
      terms.push_back(ExpansionTerm{phi, cycle_count(phi), kept, rewire(phi, all_cols)});
    });
  };

  if (mode == RowSetMode::all_placed) {
    add_subset(chosen);
    return terms;
  }
  const std::size_t k = chosen.size();
  for (std::size_t s = 1; s <= k; ++s) {
    enumerate_increasing(s, k, [&](const IndexSeq& pick) {
      std::vector<std::size_t> subset;
      for (std::size_t p : pick) subset.push_back(chosen[p - 1]);
      add_subset(IndexSeq(std::move(subset)));
    });
  }
  terms.push_back(ExpansionTerm{PartialInjection(), 0, kept, all_cols});
  return terms;
}

std::vector<ExpansionTerm> last_k_terms(std::size_t m, std::size_t n, std::size_t k) {
  if (k < 1 || k + 1 > m) throw ContractViolation("last-k expansion needs 1 <= k <= m - 1");
  return row_set_terms(m, n, IndexSeq::range(m - k + 1, m), RowSetMode::subsets_with_unused);
}

std::vector<ExpansionTerm> row_terms(std::size_t m, std::size_t n, std::size_t i) {
  require_shape(m, n);
  if (i < 1 || i > m) throw ContractViolation("row expansion needs 1 <= i <= m");
  const IndexSeq rows = complement_of(IndexSeq{i}, m);
  std::vector<ExpansionTerm> terms;

  // Rook on the diagonal: a fixed point, column i disappears.
  terms.push_back(ExpansionTerm{PartialInjection({{i, i}}), 1, rows, complement_of(IndexSeq{i}, n)});

  // Rook at (i, j): column i takes over the position of row j.
  for (std::size_t j = 1; j <= n; ++j) {
    if (j == i) continue;
    std::vector<std::size_t> cols;
    if (j > i) {
      for (std::size_t c = 1; c < i; ++c) cols.push_back(c);
      for (std::size_t c = i + 1; c < j; ++c) cols.push_back(c);
      cols.push_back(i);
      for (std::size_t c = j + 1; c <= n; ++c) cols.push_back(c);
    } else {
      for (std::size_t c = 1; c < j; ++c) cols.push_back(c);
      cols.push_back(i);
      for (std::size_t c = j + 1; c < i; ++c) cols.push_back(c);
      for (std::size_t c = i + 1; c <= n; ++c) cols.push_back(c);
    }
    terms.push_back(ExpansionTerm{PartialInjection({{i, j}}), 0, rows, IndexSeq(std::move(cols))});
  }

  // Row i unused: column i moves past the last remaining row.
  std::vector<std::size_t> cols;
  for (std::size_t c = 1; c <= m; ++c)
    if (c != i) cols.push_back(c);
  cols.push_back(i);
  for (std::size_t c = m + 1; c <= n; ++c) cols.push_back(c);
  terms.push_back(ExpansionTerm{PartialInjection(), 0, rows, IndexSeq(std::move(cols))});
  return terms;
}

std::vector<ExpansionTerm> per_rows_terms(std::size_t m, std::size_t n, const IndexSeq& rows) {
  if (rows.empty() || rows.size() + 1 > m) throw ContractViolation("permanent expansion needs 1 <= k <= m - 1 rows");
  return row_set_terms(m, n, rows, RowSetMode::all_placed);
}

}  // namespace cycrook
