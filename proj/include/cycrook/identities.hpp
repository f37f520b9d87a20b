#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "cycrook/errors.hpp"
#include "cycrook/expansion_terms.hpp"
#include "cycrook/matrix.hpp"
#include "cycrook/poly.hpp"
#include "cycrook/rook_engine.hpp"

namespace cycrook {

/// The six addition formulas for R, r_l and per of A + B, cycle-weighted
/// and classical.
enum class AdditionVariant { rook_z, r_l_z, per_z, rook_classic, r_l_classic, per_classic };

inline constexpr std::array<AdditionVariant, 6> kAdditionVariants = {
    AdditionVariant::rook_z,       AdditionVariant::r_l_z,       AdditionVariant::per_z,
    AdditionVariant::rook_classic, AdditionVariant::r_l_classic, AdditionVariant::per_classic};

inline std::string_view to_string(AdditionVariant v) {
  switch (v) {
    case AdditionVariant::rook_z: return "R_z";
    case AdditionVariant::r_l_z: return "r_l_z";
    case AdditionVariant::per_z: return "per_z";
    case AdditionVariant::rook_classic: return "R_classic";
    case AdditionVariant::r_l_classic: return "r_l_classic";
    case AdditionVariant::per_classic: return "per_classic";
  }
  return "?";
}

inline bool needs_index(AdditionVariant v) {
  return v == AdditionVariant::r_l_z || v == AdditionVariant::r_l_classic;
}

namespace detail {

// Every variant's value is carried as an XZPoly: univariate results in z sit
// in the x^0 slot, polynomials in x have constant coefficients, scalars are
// constants.
template <class T>
XZPoly<T> from_z(Poly<T> p) {
  return XZPoly<T>(std::vector<Poly<T>>{std::move(p)});
}

template <class T>
XZPoly<T> from_x(const Poly<T>& p) {
  std::vector<Poly<T>> out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return XZPoly<T>(std::move(out));
}

template <class T>
XZPoly<T> from_scalar(const T& v) {
  return from_z(Poly<T>(v));
}

template <class T>
T ring_pow(const T& base, std::size_t e) {
  T result(1);
  for (std::size_t i = 0; i < e; ++i) result = T(result * base);
  return result;
}

inline OracleLimits sub_board_limits() { return OracleLimits{0, 0, true}; }

}  // namespace detail

/// Left-hand side: the variant's quantity evaluated on `sum` by the oracle.
template <class T>
XZPoly<T> addition_lhs(const Matrix<T>& sum, AdditionVariant v, std::size_t l = 0) {
  const auto lim = detail::sub_board_limits();
  switch (v) {
    case AdditionVariant::rook_z: return rook_poly_oracle(sum, lim).poly;
    case AdditionVariant::r_l_z: return detail::from_z(rook_poly_oracle(sum, lim).poly.r(l));
    case AdditionVariant::per_z: return detail::from_z(per_z_oracle(sum, lim));
    case AdditionVariant::rook_classic: return detail::from_x(classic_rook_direct(sum, lim));
    case AdditionVariant::r_l_classic: return detail::from_scalar(classic_rook_direct(sum, lim).coeff(l));
    case AdditionVariant::per_classic: return detail::from_scalar(classic_rook_direct(sum, lim).coeff(sum.rows()));
  }
  return {};
}

/// Right-hand side of the addition formula for `v`, built from A-placements
/// on s rows and the rook engine on the matching reduced boards of B.
template <class T>
XZPoly<T> addition_rhs(const Matrix<T>& a, const Matrix<T>& b, AdditionVariant v, std::size_t l = 0) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ContractViolation("addition formula needs equal shapes");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m > n) throw ContractViolation("addition formula needs m <= n");
  if (needs_index(v) && l > m) throw ContractViolation("addition formula index l must be <= m");
  const auto lim = detail::sub_board_limits();
  const bool cyclic = v == AdditionVariant::rook_z || v == AdditionVariant::r_l_z || v == AdditionVariant::per_z;
  const std::size_t top = needs_index(v) ? l : m;
  const IndexSeq all_cols = IndexSeq::iota(n);

  XZPoly<T> total;
  for (std::size_t s = 0; s <= top; ++s) {
    for (const IndexSeq& alpha : increasing_sequences(s, m)) {
      if (cyclic) {
        const IndexSeq kept = complement_of(alpha, m);
        for_each_injection(alpha, n, [&](const PartialInjection& phi) {
          T w(1);
          for (const auto& [i, j] : phi.pairs()) w = T(w * a(i, j));
          if (is_zero(w)) return;
          Matrix<T> reduced = submatrix(b, kept, rewire(phi, all_cols));
          const std::size_t cyc = cycle_count(phi);
          XZPoly<T> part;
          if (v == AdditionVariant::rook_z) {
            part = rook_poly_oracle(reduced, lim).poly.shifted(s, cyc);
          } else if (v == AdditionVariant::r_l_z) {
            part = detail::from_z(rook_poly_oracle(reduced, lim).poly.r(l - s).shifted(cyc));
          } else {
            part = detail::from_z(per_z_oracle(reduced, lim).shifted(cyc));
          }
          total += part.scaled(w);
        });
      } else {
        for (const IndexSeq& beta : increasing_sequences(s, n)) {
          T w = ryser_permanent(submatrix(a, alpha, beta));
          if (is_zero(w)) continue;
          Poly<T> rest = classic_rook_direct(complement_submatrix(b, alpha, beta), lim);
          XZPoly<T> part;
          if (v == AdditionVariant::rook_classic) {
            part = detail::from_x(rest.shifted(s));
          } else if (v == AdditionVariant::r_l_classic) {
            part = detail::from_scalar(rest.coeff(l - s));
          } else {
            part = detail::from_scalar(rest.coeff(m - s));
          }
          total += part.scaled(w);
        }
      }
    }
  }
  return total;
}

enum class ComplementVariant { r_l, per_z };

/// r_l(z; yJ - A) assembled from the r_s(z; A):
///   sum_{s=0}^{l} (-1)^s C(m-s, l-s) r_s(z;A) (z + n - l)^(l-s) y^(l-s).
/// The per_z variant is the l = m case.
template <class T>
Poly<T> complement_rhs(const Matrix<T>& a, const T& y, std::size_t l, ComplementVariant v = ComplementVariant::r_l) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m > n) throw ContractViolation("complement formula needs m <= n");
  if (v == ComplementVariant::per_z) l = m;
  if (l > m) throw ContractViolation("complement formula needs 0 <= l <= m");
  const XZPoly<T> r = rook_poly_oracle(a, detail::sub_board_limits()).poly;
  Poly<T> total;
  for (std::size_t s = 0; s <= l; ++s) {
    const long ml = static_cast<long>(m) - static_cast<long>(s);
    const long ll = static_cast<long>(l) - static_cast<long>(s);
    T scalar = T(binomial(ml, ll)) * detail::ring_pow(y, l - s);
    if (s % 2) scalar = -scalar;
    total += (r.r(s) * rising_factorial<T>(static_cast<long>(n - l), l - s)).scaled(scalar);
  }
  return total;
}

/// r_l(z; yJ - A) (or per(z; yJ - A)) directly from the oracle.
template <class T>
Poly<T> complement_lhs(const Matrix<T>& a, const T& y, std::size_t l, ComplementVariant v = ComplementVariant::r_l) {
  Matrix<T> yj(a.rows(), a.cols(), std::vector<T>(a.rows() * a.cols(), y));
  Matrix<T> diff = yj - a;
  if (v == ComplementVariant::per_z) return per_z_oracle(diff, detail::sub_board_limits());
  return rook_poly_oracle(diff, detail::sub_board_limits()).poly.r(l);
}

/// The last-k expansion shape applied to an arbitrary row set: placements on
/// nonempty subsets of `rows` with rewired columns, plus the term in which
/// none of them is used and the columns are left as they are. For the last k
/// rows this is exactly the last-k expansion.
template <class T>
XZPoly<T> naive_row_set_expansion(const Matrix<T>& a, const IndexSeq& rows) {
  const auto terms = row_set_terms(a.rows(), a.cols(), rows, RowSetMode::subsets_with_unused);
  RookStats stats;
  return sum_rook_terms(
      a, terms, [](const Matrix<T>& sub) { return rook_poly_oracle(sub, detail::sub_board_limits()).poly; }, stats);
}

}  // namespace cycrook
