#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cycrook/structured.hpp"
#include "cycrook/symbolic.hpp"
#include "test_main.hpp"

using namespace cycrook;

namespace {

using MP = MultiPoly;

CirculantSpec<BigInt> spec_of(std::size_t n, std::size_t k, std::size_t r, std::vector<long> coeffs) {
  CirculantSpec<BigInt> s{n, k, r, {}};
  for (long c : coeffs) s.coeffs.emplace_back(c);
  return s;
}

Poly<BigInt> oracle_per(const CirculantSpec<BigInt>& s) {
  return per_z_oracle(circulant_matrix(s), OracleLimits{0, 0, true});
}

}  // namespace

TEST_CASE("closed form examples") {
  auto vars = MP::make_vars({"a0", "a1"});
  MP a0 = MP::variable(vars, "a0"), a1 = MP::variable(vars, "a1");
  CHECK(closed_form_per_z(1, 1, a0, a1) == Poly<MP>(std::vector<MP>{MP(0L), a0 + a1}));
  CHECK(render(closed_form_per_z<BigInt>(2, 1, BigInt(1), BigInt(1))) == "z^2 + z");
  CHECK(render(closed_form_per_z<BigInt>(1, 2, BigInt(1), BigInt(1))) == "4*z^2 + 4*z");
  // k = 1: only the identity and the full n-cycle survive.
  for (std::size_t n = 2; n <= 6; ++n) {
    Poly<MP> expect = Poly<MP>::monomial(pow(a0, n), n) + Poly<MP>::monomial(pow(a1, n), 1);
    CHECK(closed_form_per_z(n, 1, a0, a1) == expect);
  }
}

TEST_CASE("closed form terms have integer pieces and sum to the total") {
  auto terms = closed_form_terms<BigInt>(3, 2, BigInt(2), BigInt(-1));
  REQUIRE(terms.size() == 3);
  Poly<BigInt> total;
  for (const auto& t : terms) {
    CHECK(t.factorial_power == factorial(t.s) * factorial(t.s));
    total += t.value;
  }
  CHECK(total == closed_form_per_z<BigInt>(3, 2, BigInt(2), BigInt(-1)));
}

TEST_CASE("closed form equals the oracle on symbolic coefficients") {
  auto vars = MP::make_vars({"a0", "a1"});
  MP a0 = MP::variable(vars, "a0"), a1 = MP::variable(vars, "a1");
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 1; n * k <= 6; ++k) {
      INFO("n=", n, " k=", k);
      CirculantSpec<MP> s{n, k, 0, {a0, a1}};
      CHECK(closed_form_per_z(n, k, a0, a1) == per_z_oracle(circulant_matrix(s), OracleLimits{0, 0, true}));
    }
}

TEST_CASE("closed form at an integer z matches the polynomial") {
  for (std::size_t n : {1, 2, 5, 9})
    for (std::size_t k : {1, 2, 3})
      for (long z : {-2, 0, 1, 3}) {
        BigInt a0(2), a1(-3);
        CHECK(closed_form_per_z_at(n, k, a0, a1, BigInt(z)) == closed_form_per_z(n, k, a0, a1).eval(BigInt(z)));
      }
}

TEST_CASE("banded evaluator examples") {
  CHECK(render(banded_per_z(spec_of(2, 1, 0, {1, 2})).value) == "z^2 + 4*z");
  auto wrapped = banded_per_z(spec_of(1, 2, 0, {1, 1}));
  CHECK(render(wrapped.value) == "4*z^2 + 4*z");
  CHECK_FALSE(wrapped.stats.warning.empty());
  auto s = spec_of(3, 1, 1, {1, 1, 1});
  CHECK(banded_per_z(s).value == oracle_per(s));
}

TEST_CASE("banded evaluator equals the oracle on small specs") {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 9; ++n)
    for (std::size_t k = 1; n * k <= 9; ++k)
      for (std::size_t t = 0; t <= 2; ++t)
        for (std::size_t r = 0; r <= t; ++r) {
          CirculantSpec<BigInt> s{n, k, r, {}};
          for (std::size_t i = 0; i <= t; ++i) s.coeffs.emplace_back(static_cast<long>(rng() % 7) - 3);
          INFO("n=", n, " k=", k, " t=", t, " r=", r);
          const auto expect = oracle_per(s);
          // Run the transfer even where the band wraps.
          CHECK(banded_per_z(s, OracleLimits{0, 0, false}).value == expect);
          CHECK(banded_per_z_at(s, BigInt(-2), OracleLimits{0, 0, false}).value == expect.eval(BigInt(-2)));
        }
}

TEST_CASE("banded evaluator equals the closed form on two-diagonal specs") {
  std::mt19937_64 rng(22);
  for (std::size_t n : {2, 7, 20, 50})
    for (std::size_t k = 1; k <= 3; ++k) {
      BigInt a0(static_cast<long>(rng() % 7) - 3), a1(static_cast<long>(rng() % 7) - 3);
      auto s = spec_of(n, k, 0, {0, 0});
      s.coeffs = {a0, a1};
      CHECK(banded_per_z(s).value == closed_form_per_z(n, k, a0, a1));
    }
}

TEST_CASE("all-ones spec at z = 1 is the Ryser permanent") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t k = 1; n * k <= 7; ++k) {
      auto s = spec_of(n, k, 0, {1, 1});
      CHECK(banded_per_z(s).value.eval(BigInt(1)) == ryser_permanent(circulant_matrix(s)));
    }
}

TEST_CASE("structured rook polynomial") {
  auto vars = MP::make_vars({"a0", "a1"});
  MP a0 = MP::variable(vars, "a0"), a1 = MP::variable(vars, "a1");
  auto s = spec_of(2, 1, 0, {3, -2});
  CHECK(structured_rook_z(s) == rook_poly_oracle(cycrook::testing::int_matrix({{3, -2}, {-2, 3}})).poly);
  CHECK(structured_rook_z(spec_of(3, 2, 0, {0, 0})) == XZPoly<BigInt>::one());
  CHECK(render(structured_rook_z(spec_of(1, 2, 0, {1}))) == "1 + (2*z + 2)*x^1 + (z^2 + z)*x^2");
  auto big = spec_of(3, 2, 1, {1, -1, 2});
  CHECK(structured_rook_z(big) == rook_poly_oracle(circulant_matrix(big)).poly);
  CHECK_THROWS_AS(structured_rook_z(spec_of(7, 2, 0, {1, 1})), ResourceLimit);
}
