#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cycrook/bigint.hpp"
#include "cycrook/errors.hpp"

namespace cycrook {

/// Ordered sequence of 1-based row or column indices. Order is significant:
/// a column sequence fixes which column sits at each position, and position p
/// is identified with row p when cycles are counted.
class IndexSeq {
 public:
  IndexSeq() = default;
  IndexSeq(std::initializer_list<std::size_t> items) : items_(items) {}
  explicit IndexSeq(std::vector<std::size_t> items) : items_(std::move(items)) {}

  // first..last inclusive; empty when first > last.
  static IndexSeq range(std::size_t first, std::size_t last);
  // N_n = 1..n.
  static IndexSeq iota(std::size_t n) { return range(1, n); }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::size_t operator[](std::size_t pos) const { return items_[pos]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<std::size_t>& items() const { return items_; }
  void push_back(std::size_t v) { items_.push_back(v); }

  bool contains(std::size_t v) const;
  bool strictly_increasing() const;
  bool has_repeats() const;
  // Every item in 1..bound.
  bool within(std::size_t bound) const;

  friend bool operator==(const IndexSeq&, const IndexSeq&) = default;
  friend auto operator<=>(const IndexSeq&, const IndexSeq&) = default;

 private:
  std::vector<std::size_t> items_;
};

std::string render(const IndexSeq& s);

// (a, b)^<k> = (a, ..., a, b, ..., b), each item repeated k times.
IndexSeq repeat_seq(const IndexSeq& items, std::size_t k);

// N_bound minus `removed`, increasing.
IndexSeq complement_of(const IndexSeq& removed, std::size_t bound);

// All strictly increasing s-sequences from 1..m in lexicographic order.
// Yields nothing when s > m.
void enumerate_increasing(std::size_t s, std::size_t m, const std::function<void(const IndexSeq&)>& visit);
std::vector<IndexSeq> increasing_sequences(std::size_t s, std::size_t m);

/// Dense m x n matrix over a commutative ring. Element access is 1-based.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> row_major)
      : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows * cols) throw StructuralError("matrix data does not match its shape");
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t m = rows.size();
    std::size_t n = m ? rows.front().size() : 0;
    std::vector<T> data;
    data.reserve(m * n);
    for (const auto& r : rows) {
      if (r.size() != n) throw StructuralError("matrix rows have different lengths");
      data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(m, n, std::move(data));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<T>& data() const { return data_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[(i - 1) * cols_ + (j - 1)]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[(i - 1) * cols_ + (j - 1)]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& v : data_) out.push_back(f(v));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  Matrix scaled(const T& s) const {
    Matrix r = *this;
    for (auto& v : r.data_) v = T(v * s);
    return r;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractViolation("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Entry (p, q) of the result is A[rows[p], cols[q]]; the column order is kept.
template <class T>
Matrix<T> submatrix(const Matrix<T>& a, const IndexSeq& rows, const IndexSeq& cols) {
  if (!rows.within(a.rows()) || !cols.within(a.cols())) throw StructuralError("submatrix index out of bounds");
  if (rows.has_repeats() || cols.has_repeats()) throw StructuralError("submatrix index repeated");
  std::vector<T> data;
  data.reserve(rows.size() * cols.size());
  for (std::size_t r : rows)
    for (std::size_t c : cols) data.push_back(a(r, c));
  return Matrix<T>(rows.size(), cols.size(), std::move(data));
}

/// A(rows_out | cols_out): delete the listed rows and columns.
template <class T>
Matrix<T> complement_submatrix(const Matrix<T>& a, const IndexSeq& rows_out, const IndexSeq& cols_out) {
  if (!rows_out.strictly_increasing() || !cols_out.strictly_increasing())
    throw StructuralError("complement indices must be strictly increasing");
  if (!rows_out.within(a.rows()) || !cols_out.within(a.cols()))
    throw StructuralError("complement index out of bounds");
  return submatrix(a, complement_of(rows_out, a.rows()), complement_of(cols_out, a.cols()));
}

// One result column: column `lead` plus the columns listed in `extras`.
struct ColumnGroup {
  std::size_t lead = 0;
  std::vector<std::size_t> extras;
};

template <class T>
Matrix<T> column_sum_select(const Matrix<T>& a, const std::vector<ColumnGroup>& groups) {
  auto check = [&](std::size_t j) {
    if (j < 1 || j > a.cols()) throw StructuralError("column index out of bounds");
  };
  Matrix<T> out(a.rows(), groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    check(groups[g].lead);
    for (std::size_t j : groups[g].extras) check(j);
    for (std::size_t i = 1; i <= a.rows(); ++i) {
      T v = a(i, groups[g].lead);
      for (std::size_t j : groups[g].extras) v += a(i, j);
      out(i, g + 1) = std::move(v);
    }
  }
  return out;
}

template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j)
      for (std::size_t p = 1; p <= b.rows(); ++p)
        for (std::size_t q = 1; q <= b.cols(); ++q)
          out((i - 1) * b.rows() + p, (j - 1) * b.cols() + q) = T(a(i, j) * b(p, q));
  return out;
}

template <class T = BigInt>
Matrix<T> identity_matrix(std::size_t n) {
  Matrix<T> out(n, n);
  for (std::size_t i = 1; i <= n; ++i) out(i, i) = T(1);
  return out;
}

template <class T = BigInt>
Matrix<T> ones_matrix(std::size_t m, std::size_t n) {
  return Matrix<T>(m, n, std::vector<T>(m * n, T(1)));
}

/// P_n^e: entry (i, ((i - 1 + e) mod n) + 1) is 1. P_n^1 maps i -> i mod n + 1.
template <class T = BigInt>
Matrix<T> cyclic_shift(std::size_t n, long power = 1) {
  if (n == 0) throw ContractViolation("cyclic shift needs n >= 1");
  long nn = static_cast<long>(n);
  long e = ((power % nn) + nn) % nn;
  Matrix<T> out(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t j = static_cast<std::size_t>((static_cast<long>(i - 1) + e) % nn) + 1;
    out(i, j) = T(1);
  }
  return out;
}

/// (sum_i coeffs[i] * P_n^(i - r)) (x) J_k.
template <class T>
struct CirculantSpec {
  std::size_t n = 1;
  std::size_t k = 1;
  std::size_t r = 0;
  std::vector<T> coeffs;

  std::size_t band() const { return coeffs.size(); }  // t + 1

  void validate() const {
    if (n < 1 || k < 1) throw ContractViolation("circulant spec needs n >= 1 and k >= 1");
    if (coeffs.empty()) throw ContractViolation("circulant spec needs at least one coefficient");
  }

  // Block-column offset of coefficient i, reduced mod n.
  std::size_t offset(std::size_t i) const {
    long nn = static_cast<long>(n);
    long e = static_cast<long>(i) - static_cast<long>(r);
    return static_cast<std::size_t>(((e % nn) + nn) % nn);
  }
};

template <class T>
Matrix<T> circulant_block(const CirculantSpec<T>& spec) {
  spec.validate();
  Matrix<T> base(spec.n, spec.n);
  for (std::size_t i = 0; i < spec.coeffs.size(); ++i) {
    std::size_t off = spec.offset(i);
    for (std::size_t b = 1; b <= spec.n; ++b) {
      std::size_t c = (b - 1 + off) % spec.n + 1;
      base(b, c) += spec.coeffs[i];
    }
  }
  return base;
}

template <class T>
Matrix<T> circulant_matrix(const CirculantSpec<T>& spec) {
  return kronecker(circulant_block(spec), ones_matrix<T>(spec.k, spec.k));
}

}  // namespace cycrook
