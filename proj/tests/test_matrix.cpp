#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cycrook/matrix.hpp"
#include "cycrook/matrix_io.hpp"
#include "cycrook/multipoly.hpp"
#include "test_main.hpp"

using namespace cycrook;
using cycrook::testing::int_matrix;

TEST_CASE("submatrix keeps the requested order") {
  auto a = int_matrix({{1, 2}, {3, 4}});
  CHECK(submatrix(a, {2}, {2, 1}) == int_matrix({{4, 3}}));
  CHECK(submatrix(a, IndexSeq::iota(2), IndexSeq::iota(2)) == a);

  auto b = int_matrix({{1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}, {11, 12, 13, 14, 15}});
  CHECK(submatrix(b, {1, 2}, {1, 3, 4, 5}) == int_matrix({{1, 3, 4, 5}, {6, 8, 9, 10}}));

  CHECK_THROWS_AS(submatrix(a, {3}, {1}), StructuralError);
  CHECK_THROWS_AS(submatrix(a, {1}, {1, 1}), StructuralError);
  CHECK_THROWS_AS(submatrix(a, {0}, {1}), StructuralError);
}

TEST_CASE("submatrix composes") {
  std::mt19937_64 rng(1);
  auto a = cycrook::testing::random_matrix(rng, 5, 6);
  IndexSeq r1{5, 2, 3, 1}, c1{6, 1, 4, 2, 5};
  IndexSeq r2{3, 1}, c2{2, 5, 1};
  std::vector<std::size_t> rc, cc;
  for (std::size_t p : r2) rc.push_back(r1[p - 1]);
  for (std::size_t p : c2) cc.push_back(c1[p - 1]);
  CHECK(submatrix(submatrix(a, r1, c1), r2, c2) == submatrix(a, IndexSeq(rc), IndexSeq(cc)));
}

TEST_CASE("complementary submatrix") {
  auto a = int_matrix({{1, 2}, {3, 4}});
  CHECK(complement_submatrix(a, {1}, {1}) == int_matrix({{4}}));
  CHECK(complement_submatrix(a, {}, {}) == a);
  auto b = int_matrix({{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}});
  CHECK(complement_submatrix(b, {2}, {1, 4}) == int_matrix({{2, 3}, {10, 11}}));
  CHECK_THROWS_AS(complement_submatrix(b, {2, 1}, {}), StructuralError);

  // A[rows|cols], A(rows|cols) and the two mixed blocks partition the entries.
  std::vector<BigInt> all(b.data()), parts;
  IndexSeq rows{2}, cols{1, 4};
  IndexSeq rc = complement_of(rows, 3), cc = complement_of(cols, 4);
  for (const auto* blk : {&rows, &rc})
    for (const auto* cl : {&cols, &cc}) {
      auto s = submatrix(b, *blk, *cl);
      parts.insert(parts.end(), s.data().begin(), s.data().end());
    }
  std::sort(all.begin(), all.end());
  std::sort(parts.begin(), parts.end());
  CHECK(all == parts);
}

TEST_CASE("column sum selection") {
  auto a = int_matrix({{1, 2}, {3, 4}});
  CHECK(column_sum_select(a, {{1, {2}}}) == int_matrix({{3}, {7}}));
  CHECK(column_sum_select(a, {{1, {}}, {2, {}}}) == a);
  CHECK(column_sum_select(int_matrix({{1, 2, 3}}), {{1, {2, 3}}, {2, {}}}) == int_matrix({{6, 2}}));
  CHECK_THROWS_AS(column_sum_select(a, {{3, {}}}), StructuralError);
}

TEST_CASE("kronecker product") {
  CHECK(kronecker(identity_matrix(2), ones_matrix(2, 2)) ==
        int_matrix({{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}}));
  auto a = int_matrix({{1, -2, 3}, {4, 5, 6}});
  CHECK(kronecker(a, identity_matrix(1)) == a);
  CHECK(kronecker(cyclic_shift(2), ones_matrix(1, 1)) == int_matrix({{0, 1}, {1, 0}}));
  auto k = kronecker(a, int_matrix({{1, 2}, {3, 4}, {5, 6}}));
  CHECK(k.rows() == 6);
  CHECK(k.cols() == 6);
}

TEST_CASE("basic matrices") {
  CHECK(cyclic_shift(3) == int_matrix({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  CHECK(ones_matrix(2, 3) == int_matrix({{1, 1, 1}, {1, 1, 1}}));
  CHECK(identity_matrix(1) == cyclic_shift(1));
  for (std::size_t n = 1; n <= 8; ++n) {
    Matrix<BigInt> p = identity_matrix(n);
    auto shift = cyclic_shift(n);
    for (std::size_t e = 0; e < n; ++e) {
      Matrix<BigInt> next(n, n);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
          for (std::size_t l = 1; l <= n; ++l) next(i, j) += p(i, l) * shift(l, j);
      p = next;
    }
    CHECK(p == identity_matrix(n));
  }
}

TEST_CASE("circulant matrices") {
  auto vars = MultiPoly::make_vars({"a0", "a1"});
  MultiPoly a0 = MultiPoly::variable(vars, "a0"), a1 = MultiPoly::variable(vars, "a1");
  CirculantSpec<MultiPoly> s{2, 1, 0, {a0, a1}};
  auto c = circulant_matrix(s);
  CHECK(c(1, 1) == a0);
  CHECK(c(1, 2) == a1);
  CHECK(c(2, 1) == a1);
  CHECK(c(2, 2) == a0);

  CHECK(circulant_matrix(CirculantSpec<BigInt>{1, 2, 0, {BigInt(1), BigInt(1)}}) == int_matrix({{2, 2}, {2, 2}}));
  CHECK(circulant_matrix(CirculantSpec<BigInt>{3, 1, 1, {BigInt(1)}}) == cyclic_shift(3, 2));

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t k = 1; k <= 3; ++k)
      for (std::size_t r = 0; r <= 3; ++r) {
        CirculantSpec<BigInt> spec{n, k, r, {BigInt(coef(rng)), BigInt(coef(rng)), BigInt(coef(rng))}};
        auto m = circulant_matrix(spec);
        BigInt expect = BigInt(static_cast<long>(k)) * (spec.coeffs[0] + spec.coeffs[1] + spec.coeffs[2]);
        for (std::size_t i = 1; i <= n * k; ++i) {
          BigInt row(0);
          for (std::size_t j = 1; j <= n * k; ++j) row += m(i, j);
          CHECK(row == expect);
        }
      }
}

TEST_CASE("increasing sequences and repeats") {
  CHECK(increasing_sequences(0, 3) == std::vector<IndexSeq>{IndexSeq{}});
  CHECK(increasing_sequences(2, 3) == std::vector<IndexSeq>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(increasing_sequences(4, 4) == std::vector<IndexSeq>{IndexSeq::iota(4)});
  CHECK(increasing_sequences(4, 3).empty());
  CHECK(increasing_sequences(3, 6).size() == 20);

  CHECK(repeat_seq({5}, 3) == IndexSeq{5, 5, 5});
  CHECK(repeat_seq({1, 2}, 0) == IndexSeq{});
  CHECK(repeat_seq({1, 2}, 2) == IndexSeq{1, 1, 2, 2});
  CHECK(render(IndexSeq{1, 4, 2}) == "(1,4,2)");
}

TEST_CASE("matrix and spec file formats") {
  auto doc = nlohmann::json::parse(R"({"rows":2,"cols":3,"entries":[[1,-2,"123456789012345678901234567890"],[0,0,1]]})");
  auto a = matrix_from_json(doc);
  CHECK(a.rows() == 2);
  CHECK(a(1, 3) == BigInt("123456789012345678901234567890"));
  CHECK(matrix_from_json(to_json(a)) == a);
  CHECK(to_json(a).dump() == doc.dump());

  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"rows":2,"cols":2,"entries":[[1,2]]})")), StructuralError);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"rows":1,"cols":2,"entries":[[1,2.5]]})")), StructuralError);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"cols":2,"entries":[]})")), StructuralError);

  auto spec = circulant_spec_from_json(nlohmann::json::parse(R"({"n":4,"k":2,"r":1,"coeffs":[2,"3"]})"));
  CHECK(spec.n == 4);
  CHECK(spec.k == 2);
  CHECK(spec.r == 1);
  CHECK(spec.coeffs == std::vector<BigInt>{BigInt(2), BigInt(3)});
  CHECK(circulant_spec_from_json(to_json(spec)).coeffs == spec.coeffs);
  CHECK_THROWS_AS(circulant_spec_from_json(nlohmann::json::parse(R"({"n":0,"k":2,"coeffs":[1]})")), StructuralError);
}
