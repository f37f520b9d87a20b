#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cycrook/bigint.hpp"

namespace cycrook {

namespace detail {

template <class U>
bool ring_is_zero(const U& v) {
  return is_zero(v);
}

}  // namespace detail

/// Dense univariate polynomial with coefficients in a commutative ring T.
///
/// Coefficients are stored by ascending power with trailing zeros trimmed, so
/// the zero polynomial has no coefficients and degree() == -1.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(T constant) : c_{std::move(constant)} { normalize(); }
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly monomial(T coeff, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = std::move(coeff);
    return Poly(std::move(c));
  }
  static Poly variable() { return monomial(T(1), 1); }

  const std::vector<T>& coeffs() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(c_.begin(), c_.end(), [](const T& v) { return !cycrook_is_zero(v); }));
  }

  T coeff(std::size_t d) const { return d < c_.size() ? c_[d] : T(0); }

  void normalize() {
    while (!c_.empty() && cycrook_is_zero(c_.back())) c_.pop_back();
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (cycrook_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        T prod = a.c_[i] * b.c_[j];
        out[i + j] += prod;
      }
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly scaled(const T& s) const {
    Poly r = *this;
    for (auto& v : r.c_) v = T(v * s);
    r.normalize();
    return r;
  }

  // Multiplies by var^d.
  Poly shifted(std::size_t d) const {
    if (is_zero() || d == 0) return *this;
    Poly r;
    r.c_.assign(d, T(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  T eval(const T& at) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = T(acc * at);
      acc += *it;
    }
    return acc;
  }

  template <class F>
  auto map(F&& f) const -> Poly<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(f(v));
    return Poly<U>(std::move(out));
  }

 private:
  static bool cycrook_is_zero(const T& v) { return detail::ring_is_zero(v); }

  std::vector<T> c_;
};

template <class T>
Poly<T> pow(const Poly<T>& base, unsigned exponent) {
  Poly<T> result(T(1));
  Poly<T> b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

/// Rising factorial in z: (z + offset)(z + offset + 1)...(z + offset + length - 1).
/// The empty product (length 0) is 1.
template <class T = BigInt>
Poly<T> rising_factorial(long offset, std::size_t length) {
  Poly<T> r(T(1));
  for (std::size_t i = 0; i < length; ++i) {
    r *= Poly<T>(std::vector<T>{T(offset + static_cast<long>(i)), T(1)});
  }
  return r;
}

/// Bivariate polynomial in x and z: sum over l of r_l(z) x^l.
template <class T>
class XZPoly {
 public:
  XZPoly() = default;
  explicit XZPoly(std::vector<Poly<T>> by_x) : x_(std::move(by_x)) { normalize(); }

  static XZPoly one() { return XZPoly(std::vector<Poly<T>>{Poly<T>(T(1))}); }

  const std::vector<Poly<T>>& x_coeffs() const { return x_; }
  long x_degree() const { return static_cast<long>(x_.size()) - 1; }
  bool is_zero() const { return x_.empty(); }
  Poly<T> r(std::size_t l) const { return l < x_.size() ? x_[l] : Poly<T>(); }

  void normalize() {
    while (!x_.empty() && x_.back().is_zero()) x_.pop_back();
  }

  XZPoly& operator+=(const XZPoly& o) {
    if (o.x_.size() > x_.size()) x_.resize(o.x_.size());
    for (std::size_t i = 0; i < o.x_.size(); ++i) x_[i] += o.x_[i];
    normalize();
    return *this;
  }
  XZPoly& operator-=(const XZPoly& o) {
    if (o.x_.size() > x_.size()) x_.resize(o.x_.size());
    for (std::size_t i = 0; i < o.x_.size(); ++i) x_[i] -= o.x_[i];
    normalize();
    return *this;
  }
  friend XZPoly operator+(XZPoly a, const XZPoly& b) { return a += b; }
  friend XZPoly operator-(XZPoly a, const XZPoly& b) { return a -= b; }
  friend XZPoly operator*(const XZPoly& a, const XZPoly& b) {
    if (a.is_zero() || b.is_zero()) return XZPoly();
    std::vector<Poly<T>> out(a.x_.size() + b.x_.size() - 1);
    for (std::size_t i = 0; i < a.x_.size(); ++i)
      for (std::size_t j = 0; j < b.x_.size(); ++j) out[i + j] += a.x_[i] * b.x_[j];
    return XZPoly(std::move(out));
  }
  friend bool operator==(const XZPoly& a, const XZPoly& b) { return a.x_ == b.x_; }

  XZPoly scaled(const T& s) const {
    std::vector<Poly<T>> out;
    out.reserve(x_.size());
    for (const auto& p : x_) out.push_back(p.scaled(s));
    return XZPoly(std::move(out));
  }

  // Multiplies by x^x_power z^z_power.
  XZPoly shifted(std::size_t x_power, std::size_t z_power) const {
    if (is_zero()) return *this;
    std::vector<Poly<T>> out(x_power);
    for (const auto& p : x_) out.push_back(p.shifted(z_power));
    return XZPoly(std::move(out));
  }

  // Substitutes z; the result is a polynomial in x.
  Poly<T> eval_z(const T& z) const {
    std::vector<T> out;
    out.reserve(x_.size());
    for (const auto& p : x_) out.push_back(p.eval(z));
    return Poly<T>(std::move(out));
  }

  template <class F>
  auto map(F&& f) const -> XZPoly<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<Poly<U>> out;
    out.reserve(x_.size());
    for (const auto& p : x_) out.push_back(p.map(f));
    return XZPoly<U>(std::move(out));
  }

 private:
  std::vector<Poly<T>> x_;
};

// ---------------------------------------------------------------------------
// Text rendering. Powers descend within a univariate polynomial; x powers
// ascend in a bivariate one and always carry an explicit exponent:
//   z^2 + z        1 + (2*z + 3)*x^1 + z^2*x^2

namespace detail {

inline void append_term(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    out = (negative ? "-" : "") + body;
  } else {
    out += (negative ? " - " : " + ") + body;
  }
}

inline std::string power_text(std::string_view var, std::size_t d, bool explicit_one) {
  if (d == 0) return "";
  if (d == 1 && !explicit_one) return std::string(var);
  return std::string(var) + "^" + std::to_string(d);
}

}  // namespace detail

template <class T>
std::string render(const Poly<T>& p, std::string_view var = "z") {
  if (p.is_zero()) return "0";
  const auto& c = p.coeffs();
  bool multi = p.term_count() > 1;
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (is_zero(c[i])) continue;
    TermText t = term_text(c[i]);
    std::string mono = detail::power_text(var, i, false);
    std::string body;
    if (mono.empty()) {
      body = (t.compound && multi) ? "(" + t.body + ")" : t.body;
    } else if (!t.compound && t.body == "1") {
      body = mono;
    } else {
      body = (t.compound ? "(" + t.body + ")" : t.body) + "*" + mono;
    }
    detail::append_term(out, t.negative, body);
  }
  return out;
}

template <class T>
std::string render(const XZPoly<T>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& xs = p.x_coeffs();
  for (std::size_t l = 0; l < xs.size(); ++l) {
    const Poly<T>& c = xs[l];
    if (c.is_zero()) continue;
    if (l == 0) {
      std::string body = render(c, "z");
      if (xs.size() > 1 && c.term_count() > 1) body = "(" + body + ")";
      detail::append_term(out, false, body);
      continue;
    }
    std::string xm = detail::power_text("x", l, true);
    if (c.term_count() == 1) {
      std::size_t d = static_cast<std::size_t>(c.degree());
      TermText t = term_text(c.coeffs()[d]);
      std::string zm = detail::power_text("z", d, false);
      std::string coeff = t.compound ? "(" + t.body + ")" : t.body;
      std::string body;
      if (zm.empty()) {
        body = (!t.compound && t.body == "1") ? xm : coeff + "*" + xm;
      } else {
        body = (!t.compound && t.body == "1") ? zm + "*" + xm : coeff + "*" + zm + "*" + xm;
      }
      detail::append_term(out, t.negative, body);
    } else {
      detail::append_term(out, false, "(" + render(c, "z") + ")*" + xm);
    }
  }
  return out;
}

}  // namespace cycrook
