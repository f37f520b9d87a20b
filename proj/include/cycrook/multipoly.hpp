#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cycrook/bigint.hpp"

namespace cycrook {

/// Multivariate polynomial with integer coefficients over a fixed, named
/// set of indeterminates.
///
/// A polynomial built from a plain integer carries no indeterminate set and
/// combines with any ring. Two polynomials carrying different sets cannot be
/// combined; the attempt throws StructuralError.
class MultiPoly {
 public:
  using Vars = std::shared_ptr<const std::vector<std::string>>;
  // (indeterminate index, exponent) pairs sorted by index, exponents > 0.
  using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

  MultiPoly() = default;
  explicit MultiPoly(long c);
  explicit MultiPoly(const BigInt& c);

  static Vars make_vars(std::vector<std::string> names);
  static MultiPoly variable(const Vars& vars, std::string_view name);
  static MultiPoly constant(const Vars& vars, const BigInt& c);

  const Vars& vars() const { return vars_; }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::optional<BigInt> constant_value() const;

  // Substitutes the bound indeterminates. Names outside the ring are ignored.
  MultiPoly evaluate(const std::map<std::string, BigInt>& bindings) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    r *= b;
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  std::string render() const;

 private:
  static Vars unify(const Vars& a, const Vars& b);
  void add_term(const Monomial& mono, const BigInt& c);

  Vars vars_;
  std::map<Monomial, BigInt> terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
TermText term_text(const MultiPoly& p);
inline std::string key_text(const MultiPoly& p) { return p.render(); }

}  // namespace cycrook
