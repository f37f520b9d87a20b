#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "cycrook/errors.hpp"
#include "cycrook/expansion_terms.hpp"
#include "cycrook/matrix.hpp"
#include "cycrook/poly.hpp"

namespace cycrook {

// R(x;z;A) = sum over S subset of rows, phi in Inj(S, 1..n) of
//            z^cycles(phi) * prod_{i in S} a_{i,phi(i)} * x^|S|
// per(z;A)  = coefficient of x^m.

struct OracleLimits {
  std::size_t max_rows = 7;
  std::size_t max_cols = 9;
  bool force = false;
};

inline void check_oracle_limits(std::size_t m, std::size_t n, const OracleLimits& limits) {
  if (limits.force) return;
  if (m > limits.max_rows || n > limits.max_cols)
    throw ResourceLimit("brute-force oracle refuses a " + std::to_string(m) + " x " + std::to_string(n) +
                        " board (limit " + std::to_string(limits.max_rows) + " x " + std::to_string(limits.max_cols) +
                        "); pass --force to override");
}

enum class RookMethod { oracle, expand_last_k, expand_row, expand_per_rows };

inline std::string_view to_string(RookMethod m) {
  switch (m) {
    case RookMethod::oracle: return "oracle";
    case RookMethod::expand_last_k: return "expand_last_k";
    case RookMethod::expand_row: return "expand_row";
    case RookMethod::expand_per_rows: return "expand_per_rows";
  }
  return "?";
}

struct RookStats {
  std::uint64_t terms = 0;      // nonzero summands visited
  std::uint64_t nodes = 0;      // boards evaluated (recursive methods)
  std::uint64_t memo_hits = 0;
};

template <class T>
struct RookResult {
  XZPoly<T> poly;
  RookMethod method = RookMethod::oracle;
  RookStats stats;
};

namespace detail {

inline void require_rows_le_cols(std::size_t m, std::size_t n) {
  if (m > n) throw ContractViolation("board has more rows than columns (" + std::to_string(m) + " x " + std::to_string(n) + ")");
}

// Visits every partial injection with a nonzero entry product.
// sink(rooks, cycles, product). With all_rows only full injections are visited.
template <class T, class Sink>
void walk_placements(const Matrix<T>& a, bool all_rows, Sink&& sink, RookStats& stats) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<std::size_t> image(m + 1, 0);
  std::vector<bool> used(n + 1, false);
  std::vector<T> prefix(m + 1, T(1));
  std::vector<char> seen(m + 1, 0);

  auto cycles = [&]() {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t count = 0;
    for (std::size_t start = 1; start <= m; ++start) {
      if (!image[start] || seen[start]) continue;
      std::size_t cur = start;
      while (true) {
        seen[cur] = 1;
        std::size_t next = image[cur];
        if (next == start) {
          ++count;
          break;
        }
        if (next > m || !image[next] || seen[next]) break;
        cur = next;
      }
    }
    return count;
  };

  auto rec = [&](auto&& self, std::size_t row, std::size_t rooks) -> void {
    if (row > m) {
      ++stats.terms;
      sink(rooks, cycles(), prefix[m]);
      return;
    }
    if (!all_rows) {
      prefix[row] = prefix[row - 1];
      self(self, row + 1, rooks);
    }
    for (std::size_t j = 1; j <= n; ++j) {
      if (used[j] || is_zero(a(row, j))) continue;
      used[j] = true;
      image[row] = j;
      prefix[row] = T(prefix[row - 1] * a(row, j));
      self(self, row + 1, rooks + 1);
      image[row] = 0;
      used[j] = false;
    }
  };
  rec(rec, 1, 0);
}

template <class T>
std::string board_key(const Matrix<T>& a) {
  std::string key = std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ":";
  for (const auto& v : a.data()) {
    key += key_text(v);
    key += ',';
  }
  return key;
}

// 1 x n board: per = z a_11 + a_12 + ... + a_1n, R = 1 + per x.
template <class T>
Poly<T> single_row_per(const Matrix<T>& a) {
  T off(0);
  for (std::size_t j = 2; j <= a.cols(); ++j) off += a(1, j);
  return Poly<T>(std::vector<T>{off, a(1, 1)});
}

template <class T>
XZPoly<T> single_row_rook(const Matrix<T>& a) {
  return XZPoly<T>(std::vector<Poly<T>>{Poly<T>(T(1)), single_row_per(a)});
}

}  // namespace detail

template <class T>
RookResult<T> rook_poly_oracle(const Matrix<T>& a, const OracleLimits& limits = {}) {
  detail::require_rows_le_cols(a.rows(), a.cols());
  check_oracle_limits(a.rows(), a.cols(), limits);
  const std::size_t m = a.rows();
  std::vector<std::vector<T>> acc(m + 1, std::vector<T>(m + 1, T(0)));
  RookResult<T> result;
  detail::walk_placements(
      a, false, [&](std::size_t rooks, std::size_t cycles, const T& w) { acc[rooks][cycles] += w; }, result.stats);
  std::vector<Poly<T>> by_x;
  for (auto& row : acc) by_x.emplace_back(std::move(row));
  result.poly = XZPoly<T>(std::move(by_x));
  result.method = RookMethod::oracle;
  return result;
}

template <class T>
Poly<T> per_z_oracle(const Matrix<T>& a, const OracleLimits& limits = {}) {
  detail::require_rows_le_cols(a.rows(), a.cols());
  check_oracle_limits(a.rows(), a.cols(), limits);
  std::vector<T> acc(a.rows() + 1, T(0));
  RookStats stats;
  detail::walk_placements(
      a, true, [&](std::size_t, std::size_t cycles, const T& w) { acc[cycles] += w; }, stats);
  return Poly<T>(std::move(acc));
}

/// Sums the terms of an expansion, evaluating each reduced board with `sub`.
template <class T, class Sub>
XZPoly<T> sum_rook_terms(const Matrix<T>& a, const std::vector<ExpansionTerm>& terms, Sub&& sub, RookStats& stats) {
  XZPoly<T> total;
  for (const auto& term : terms) {
    T w(1);
    bool zero = false;
    for (const auto& [i, j] : term.placement.pairs()) {
      if (is_zero(a(i, j))) {
        zero = true;
        break;
      }
      w = T(w * a(i, j));
    }
    if (zero) continue;
    ++stats.terms;
    XZPoly<T> reduced = sub(submatrix(a, term.rows, term.cols));
    if (!term.placement.empty()) reduced = reduced.scaled(w);
    total += reduced.shifted(term.placement.size(), term.cycles);
  }
  return total;
}

template <class T, class Sub>
Poly<T> sum_per_terms(const Matrix<T>& a, const std::vector<ExpansionTerm>& terms, Sub&& sub, RookStats& stats) {
  Poly<T> total;
  for (const auto& term : terms) {
    T w(1);
    bool zero = false;
    for (const auto& [i, j] : term.placement.pairs()) {
      if (is_zero(a(i, j))) {
        zero = true;
        break;
      }
      w = T(w * a(i, j));
    }
    if (zero) continue;
    ++stats.terms;
    total += sub(submatrix(a, term.rows, term.cols)).scaled(w).shifted(term.cycles);
  }
  return total;
}

struct ExpansionOptions {
  // Reduced boards with at least this many rows are memoized by content.
  std::size_t memo_min_rows = 6;
};

/// Evaluates R(x;z;.) and per(z;.) purely by repeated expansion, never
/// touching the brute-force oracle. Boards shrink by at least one row per
/// level; 0- and 1-row boards are evaluated directly.
template <class T>
class ExpansionEvaluator {
 public:
  ExpansionEvaluator(RookMethod method, std::size_t param, ExpansionOptions options = {})
      : method_(method), param_(param), options_(options) {}

  XZPoly<T> rook(const Matrix<T>& a) {
    ++stats_.nodes;
    const std::size_t m = a.rows();
    detail::require_rows_le_cols(m, a.cols());
    if (m == 0) return XZPoly<T>::one();
    if (m == 1) return detail::single_row_rook(a);
    const bool memo = m >= options_.memo_min_rows;
    std::string key;
    if (memo) {
      key = detail::board_key(a);
      if (auto it = rook_memo_.find(key); it != rook_memo_.end()) {
        ++stats_.memo_hits;
        return it->second;
      }
    }
    const auto& terms = rook_terms_for(m, a.cols());
    XZPoly<T> r = sum_rook_terms(a, terms, [this](const Matrix<T>& sub) { return rook(sub); }, stats_);
    if (memo) rook_memo_.emplace(std::move(key), r);
    return r;
  }

  Poly<T> per(const Matrix<T>& a) {
    ++stats_.nodes;
    const std::size_t m = a.rows();
    detail::require_rows_le_cols(m, a.cols());
    if (m == 0) return Poly<T>(T(1));
    if (m == 1) return detail::single_row_per(a);
    const bool memo = m >= options_.memo_min_rows;
    std::string key;
    if (memo) {
      key = detail::board_key(a);
      if (auto it = per_memo_.find(key); it != per_memo_.end()) {
        ++stats_.memo_hits;
        return it->second;
      }
    }
    const auto& terms = per_terms_for(m, a.cols(), IndexSeq{1});
    Poly<T> r = sum_per_terms(a, terms, [this](const Matrix<T>& sub) { return per(sub); }, stats_);
    if (memo) per_memo_.emplace(std::move(key), r);
    return r;
  }

  // Expands the top board with the configured formula even when it has a
  // single row; reduced boards go through rook().
  XZPoly<T> rook_top(const Matrix<T>& a) {
    detail::require_rows_le_cols(a.rows(), a.cols());
    ++stats_.nodes;
    if (a.rows() == 0) return XZPoly<T>::one();
    const auto& terms = rook_terms_for(a.rows(), a.cols());
    return sum_rook_terms(a, terms, [this](const Matrix<T>& sub) { return rook(sub); }, stats_);
  }

  // Top-level permanent expansion along an explicit row set.
  Poly<T> per_along(const Matrix<T>& a, const IndexSeq& rows) {
    detail::require_rows_le_cols(a.rows(), a.cols());
    ++stats_.nodes;
    const auto& terms = per_terms_for(a.rows(), a.cols(), rows);
    return sum_per_terms(a, terms, [this](const Matrix<T>& sub) { return per(sub); }, stats_);
  }

  const RookStats& stats() const { return stats_; }

 private:
  using ShapeKey = std::tuple<std::size_t, std::size_t, std::size_t>;

  const std::vector<ExpansionTerm>& rook_terms_for(std::size_t m, std::size_t n) {
    std::size_t p = method_ == RookMethod::expand_last_k ? std::min(param_, m - 1) : std::min(param_, m);
    if (p == 0) p = 1;
    ShapeKey key{m, n, p};
    auto it = rook_terms_.find(key);
    if (it == rook_terms_.end()) {
      auto terms = method_ == RookMethod::expand_last_k ? last_k_terms(m, n, p) : row_terms(m, n, p);
      it = rook_terms_.emplace(key, std::move(terms)).first;
    }
    return it->second;
  }

  const std::vector<ExpansionTerm>& per_terms_for(std::size_t m, std::size_t n, const IndexSeq& rows) {
    auto key = std::make_tuple(m, n, rows.items());
    auto it = per_terms_.find(key);
    if (it == per_terms_.end()) it = per_terms_.emplace(key, per_rows_terms(m, n, rows)).first;
    return it->second;
  }

  RookMethod method_;
  std::size_t param_;
  ExpansionOptions options_;
  RookStats stats_;
  std::map<ShapeKey, std::vector<ExpansionTerm>> rook_terms_;
  std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>, std::vector<ExpansionTerm>> per_terms_;
  std::unordered_map<std::string, XZPoly<T>> rook_memo_;
  std::unordered_map<std::string, Poly<T>> per_memo_;
};

/// R(x;z;A) by expansion along the last k rows, reduced boards recursively.
template <class T>
RookResult<T> expand_last_k(const Matrix<T>& a, std::size_t k, ExpansionOptions options = {}) {
  detail::require_rows_le_cols(a.rows(), a.cols());
  if (k < 1 || k + 1 > a.rows()) throw ContractViolation("expand_last_k needs 1 <= k <= m - 1");
  ExpansionEvaluator<T> eval(RookMethod::expand_last_k, k, options);
  XZPoly<T> poly = eval.rook_top(a);
  return RookResult<T>{std::move(poly), RookMethod::expand_last_k, eval.stats()};
}

/// R(x;z;A) by expansion along row i, reduced boards recursively.
template <class T>
RookResult<T> expand_row(const Matrix<T>& a, std::size_t i, ExpansionOptions options = {}) {
  detail::require_rows_le_cols(a.rows(), a.cols());
  if (i < 1 || i > a.rows()) throw ContractViolation("expand_row needs 1 <= i <= m");
  ExpansionEvaluator<T> eval(RookMethod::expand_row, i, options);
  XZPoly<T> poly = eval.rook_top(a);
  return RookResult<T>{std::move(poly), RookMethod::expand_row, eval.stats()};
}

/// per(z;A) by expansion along the strictly increasing rows `rows`.
template <class T>
Poly<T> expand_per_rows(const Matrix<T>& a, const IndexSeq& rows, RookStats* stats = nullptr,
                        ExpansionOptions options = {}) {
  detail::require_rows_le_cols(a.rows(), a.cols());
  if (!rows.strictly_increasing() || !rows.within(a.rows()))
    throw ContractViolation("expand_per_rows needs strictly increasing rows within 1..m");
  if (rows.empty() || rows.size() + 1 > a.rows()) throw ContractViolation("expand_per_rows needs 1 <= k <= m - 1");
  ExpansionEvaluator<T> eval(RookMethod::expand_per_rows, 1, options);
  Poly<T> p = eval.per_along(a, rows);
  if (stats) *stats = eval.stats();
  return p;
}

/// R(x;z;A) by repeated last-row expansion; no size guard beyond m <= n.
template <class T>
XZPoly<T> rook_poly_recursive(const Matrix<T>& a, RookStats* stats = nullptr, ExpansionOptions options = {}) {
  ExpansionEvaluator<T> eval(RookMethod::expand_last_k, 1, options);
  XZPoly<T> p = eval.rook(a);
  if (stats) *stats = eval.stats();
  return p;
}

// ---------------------------------------------------------------------------
// Classical (z = 1) values.

/// R(x;A): the z = 1 specialisation, a polynomial in x.
template <class T>
Poly<T> classic_specialize(const XZPoly<T>& p) {
  return p.eval_z(T(1));
}

template <class T>
T classic_specialize(const Poly<T>& per_z) {
  return per_z.eval(T(1));
}

/// Classical rook polynomial by direct enumeration without cycle weights.
template <class T>
Poly<T> classic_rook_direct(const Matrix<T>& a, const OracleLimits& limits = {}) {
  detail::require_rows_le_cols(a.rows(), a.cols());
  check_oracle_limits(a.rows(), a.cols(), limits);
  std::vector<T> acc(a.rows() + 1, T(0));
  std::vector<bool> used(a.cols() + 1, false);
  auto rec = [&](auto&& self, std::size_t row, std::size_t rooks, const T& w) -> void {
    if (row > a.rows()) {
      acc[rooks] += w;
      return;
    }
    self(self, row + 1, rooks, w);
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      if (used[j] || is_zero(a(row, j))) continue;
      used[j] = true;
      self(self, row + 1, rooks + 1, T(w * a(row, j)));
      used[j] = false;
    }
  };
  rec(rec, 1, 0, T(1));
  return Poly<T>(std::move(acc));
}

/// Permanent of a square matrix by Ryser's inclusion-exclusion formula.
template <class T>
T ryser_permanent(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw ContractViolation("Ryser permanent needs a square matrix");
  if (n == 0) return T(1);
  if (n >= 31) throw ResourceLimit("Ryser permanent limited to n <= 30");
  T total(0);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < subsets; ++s) {
    T prod(1);
    for (std::size_t i = 1; i <= n; ++i) {
      T row(0);
      for (std::size_t j = 1; j <= n; ++j)
        if (s & (std::uint64_t{1} << (j - 1))) row += a(i, j);
      prod = T(prod * row);
    }
    const bool odd = (__builtin_popcountll(s) % 2) != (n % 2);
    if (odd) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return total;
}

}  // namespace cycrook
