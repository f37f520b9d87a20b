#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cycrook/bigint.hpp"
#include "cycrook/matrix.hpp"
#include "cycrook/poly.hpp"
#include "cycrook/rook_engine.hpp"

namespace cycrook {

/// One summand of the closed form for per(z; (a0 I_n + a1 P_n) (x) J_k):
///   rising(s) * factorial_power * inner^n
/// with rising = z^(s), factorial_power = (s!)^(n-1) and
/// inner = C(k,s) a0^(k-s) a1^s (z+s)^(k-s).
template <class T>
struct ClosedFormTerm {
  std::size_t s = 0;
  Poly<T> rising;
  BigInt factorial_power;
  Poly<T> inner;
  Poly<T> value;
};

template <class T>
std::vector<ClosedFormTerm<T>> closed_form_terms(std::size_t n, std::size_t k, const T& a0, const T& a1) {
  if (n < 1 || k < 1) throw ContractViolation("closed form needs n >= 1 and k >= 1");
  std::vector<ClosedFormTerm<T>> out;
  for (std::size_t s = 0; s <= k; ++s) {
    ClosedFormTerm<T> t;
    t.s = s;
    t.rising = rising_factorial<T>(0, s);
    BigInt fp;
    mpz_pow_ui(fp.get_mpz_t(), factorial(static_cast<long>(s)).get_mpz_t(), n - 1);
    t.factorial_power = fp;
    T scalar(binomial(static_cast<long>(k), static_cast<long>(s)));
    for (std::size_t i = 0; i < k - s; ++i) scalar = T(scalar * a0);
    for (std::size_t i = 0; i < s; ++i) scalar = T(scalar * a1);
    t.inner = rising_factorial<T>(static_cast<long>(s), k - s).scaled(scalar);
    t.value = (t.rising * pow(t.inner, static_cast<unsigned>(n))).scaled(T(fp));
    out.push_back(std::move(t));
  }
  return out;
}

/// per(z; (a0 I_n + a1 P_n) (x) J_k) as a polynomial in z.
template <class T>
Poly<T> closed_form_per_z(std::size_t n, std::size_t k, const T& a0, const T& a1) {
  Poly<T> total;
  for (const auto& t : closed_form_terms(n, k, a0, a1)) total += t.value;
  return total;
}

/// The same quantity at an integer z, without building polynomials in z.
BigInt closed_form_per_z_at(std::size_t n, std::size_t k, const BigInt& a0, const BigInt& a1, const BigInt& z);

struct BandedStats {
  std::size_t max_states = 0;
  std::uint64_t transitions = 0;
  bool oracle_fallback = false;
  std::string warning;
};

template <class V>
struct BandedResult {
  V value;
  BandedStats stats;
};

/// per(z; A) for a block circulant spec by a transfer over the n blocks.
/// When the band wraps (t + 1 > n) the coefficients sharing an offset are
/// merged; boards within `fallback` are then evaluated by the oracle instead
/// and the result carries a warning either way.
BandedResult<Poly<BigInt>> banded_per_z(const CirculantSpec<BigInt>& spec, const OracleLimits& fallback = {});
BandedResult<BigInt> banded_per_z_at(const CirculantSpec<BigInt>& spec, const BigInt& z,
                                     const OracleLimits& fallback = {});

/// R(x; z; A) for the materialised circulant via the memoised expansion.
/// Refuses boards with nk > max_nk.
XZPoly<BigInt> structured_rook_z(const CirculantSpec<BigInt>& spec, std::size_t max_nk = 12,
                                 RookStats* stats = nullptr);

}  // namespace cycrook
