#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycrook/verify.hpp"

using namespace cycrook;

namespace {

VerifyConfig random_config(int theorem, std::size_t trials, std::uint64_t seed) {
  VerifyConfig c;
  c.theorem = theorem;
  c.trials = trials;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("each identity passes on a small random population") {
  for (int id = 2; id <= 6; ++id) {
    INFO("theorem ", id);
    auto r = verify_theorem(random_config(id, 20, 7));
    CHECK(r.pass);
    CHECK(r.failures.empty());
    CHECK(r.checks > 0);
    CHECK(r.trials == 20);
  }
  auto c = random_config(7, 10, 7);
  c.bounds.max_blocks = 12;
  CHECK(verify_theorem(c).pass);
}

TEST_CASE("symbolic populations") {
  VerifyConfig c;
  c.symbolic = true;
  c.bounds.max_m = 3;
  c.bounds.max_n = 3;
  for (int id : {2, 3, 4, 6}) {
    c.theorem = id;
    INFO("theorem ", id);
    auto r = verify_theorem(c);
    CHECK(r.pass);
    CHECK_FALSE(r.seed.has_value());
  }
  c.theorem = 7;
  c.bounds.max_nk = 6;
  auto r = verify_theorem(c);
  CHECK(r.pass);
  CHECK(r.trials == 14);  // pairs (n, k) with nk <= 6
}

TEST_CASE("reports are reproducible from seed and bounds") {
  auto a = to_json(verify_theorem(random_config(3, 15, 99))).dump();
  auto b = to_json(verify_theorem(random_config(3, 15, 99))).dump();
  CHECK(a == b);
  CHECK(a.find("elapsed_ms") == std::string::npos);
  auto timed = to_json(verify_theorem(random_config(3, 2, 99)), true);
  CHECK(timed.contains("elapsed_ms"));
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 5) == trial_seed(1, 5));
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(verify_theorem(random_config(8, 1, 1)), StructuralError);
  VerifyConfig no_seed;
  no_seed.theorem = 2;
  CHECK_THROWS_AS(verify_theorem(no_seed), StructuralError);
  auto big = random_config(2, 1, 1);
  big.bounds.max_m = 8;
  CHECK_THROWS_AS(verify_theorem(big), ContractViolation);
  auto tiny = random_config(2, 1, 1);
  tiny.bounds.max_m = 1;
  CHECK_THROWS_AS(verify_theorem(tiny), ContractViolation);
}

TEST_CASE("counterexample search") {
  CounterexampleConfig c;
  auto r = find_arbitrary_k_counterexample(c);
  REQUIRE(r.witness.has_value());
  CHECK(r.terminal_mismatches == 0);
  CHECK(r.witness->rows == IndexSeq{1, 2});
  CHECK(r.witness->expansion != r.witness->oracle);
  REQUIRE(r.witness->integer_board.has_value());
  CHECK(r.witness->integer_expansion != r.witness->integer_oracle);
  auto j = to_json(r);
  CHECK(j["found"] == true);
  CHECK(j["witness"]["rows"] == nlohmann::json::array({1, 2}));

  // With no room for a non-terminal row set nothing is found.
  c.max_m = 2;
  auto none = find_arbitrary_k_counterexample(c);
  CHECK_FALSE(none.witness.has_value());
  CHECK(none.row_sets_checked == 0);

  c.k = 1;
  CHECK_THROWS_AS(find_arbitrary_k_counterexample(c), ContractViolation);
}
