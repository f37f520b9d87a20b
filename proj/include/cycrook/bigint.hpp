#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cycrook {

using BigInt = mpz_class;

inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }

// C(top, bottom); zero when bottom < 0 or bottom > top.
BigInt binomial(long top, long bottom);
BigInt factorial(unsigned long k);

// Accepts an optional sign followed by decimal digits.
BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& v);

}  // namespace cycrook

namespace cycrook {

// Pieces needed to print a ring element as a polynomial coefficient.
struct TermText {
  std::string body;       // magnitude for simple terms, full text for compound ones
  bool negative = false;  // only meaningful when !compound
  bool compound = false;  // more than one term; needs parentheses in a product
};

inline TermText term_text(const BigInt& v) {
  BigInt mag = abs(v);
  return TermText{to_string(mag), sgn(v) < 0, false};
}

inline std::string key_text(const BigInt& v) { return to_string(v); }

}  // namespace cycrook
