#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cycrook/matrix.hpp"
#include "cycrook/multipoly.hpp"
#include "cycrook/poly.hpp"

namespace cycrook {

/// Size limits for a verification run. Matrix identities use max_m/max_n;
/// the circulant identity uses max_nk (oracle and symbolic checks) and
/// max_blocks/max_k (closed form against the banded evaluator).
struct VerifyBounds {
  std::size_t max_m = 4;
  std::size_t max_n = 5;
  std::size_t max_nk = 8;
  std::size_t max_blocks = 50;
  std::size_t max_k = 3;
};

// Identity ids: 2 last-k expansion, 3 single-row expansion, 4 permanent
// expansion, 5 addition formulas, 6 complement formulas, 7 circulant
// closed form.
struct VerifyConfig {
  int theorem = 2;
  std::size_t trials = 50;
  std::optional<std::uint64_t> seed;  // required unless symbolic
  VerifyBounds bounds;
  bool symbolic = false;
};

struct VerifyReport {
  int theorem = 0;
  std::optional<std::uint64_t> seed;
  bool symbolic = false;
  VerifyBounds bounds;
  std::size_t trials = 0;  // random trials, or symbolic cases
  std::size_t checks = 0;  // exact equalities evaluated
  std::vector<nlohmann::json> failures;
  bool pass = false;
  double elapsed_ms = 0;
};

// Timing is left out unless asked for, so equal runs serialise identically.
nlohmann::json to_json(const VerifyReport& r, bool include_timing = false);

/// Checks one identity against the oracles. Failures are reported, never thrown.
VerifyReport verify_theorem(const VerifyConfig& config);

/// Worker threads for trial loops: CYCROOK_THREADS if set and positive,
/// otherwise the hardware concurrency.
std::size_t worker_count();

/// Per-trial generator seed; trial results do not depend on scheduling.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

struct CounterexampleConfig {
  std::size_t k = 2;
  std::size_t max_m = 3;
  std::size_t max_n = 4;
};

struct CounterexampleWitness {
  Matrix<MultiPoly> board;
  IndexSeq rows;
  XZPoly<MultiPoly> expansion;
  XZPoly<MultiPoly> oracle;
  // The same mismatch on an integer board, when a small one was found.
  std::optional<Matrix<BigInt>> integer_board;
  XZPoly<BigInt> integer_expansion;
  XZPoly<BigInt> integer_oracle;
};

struct CounterexampleReport {
  CounterexampleConfig config;
  std::size_t boards_checked = 0;
  std::size_t row_sets_checked = 0;
  std::size_t terminal_checked = 0;
  std::size_t terminal_mismatches = 0;
  std::optional<CounterexampleWitness> witness;
  double elapsed_ms = 0;
};

/// Applies the last-k expansion shape to non-terminal row sets of generic
/// symbolic boards, shape by shape, and stops at the first exact mismatch
/// with the oracle. Terminal row sets of each visited shape are checked too
/// and must agree.
CounterexampleReport find_arbitrary_k_counterexample(const CounterexampleConfig& config);

nlohmann::json to_json(const CounterexampleReport& r, bool include_timing = false);

}  // namespace cycrook
