// Acceptance suite: one pass/fail line per criterion. All comparisons are
// exact equalities; each criterion also carries a wall-clock bound.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cycrook/identities.hpp"
#include "cycrook/matrix_io.hpp"
#include "cycrook/structured.hpp"
#include "cycrook/verify.hpp"

using namespace cycrook;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(CYCROOK_BIN) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs one population through verify_theorem and folds it into `acc`.
void fold(Outcome& acc, const VerifyConfig& cfg, const std::string& label) {
  VerifyReport r = verify_theorem(cfg);
  std::ostringstream os;
  os << label << " " << r.trials << (cfg.symbolic ? " cases/" : " trials/") << r.checks << " checks";
  if (!r.pass) {
    os << " with " << r.failures.size() << " failures, first " << r.failures.front().dump();
    acc.pass = false;
  }
  acc.detail += (acc.detail.empty() ? "" : "; ") + os.str();
}

VerifyConfig symbolic(int theorem, std::size_t max_m, std::size_t max_n) {
  VerifyConfig c;
  c.theorem = theorem;
  c.symbolic = true;
  c.bounds.max_m = max_m;
  c.bounds.max_n = max_n;
  return c;
}

VerifyConfig random(int theorem, std::size_t trials, std::uint64_t seed, std::size_t max_m, std::size_t max_n) {
  VerifyConfig c;
  c.theorem = theorem;
  c.trials = trials;
  c.seed = seed;
  c.bounds.max_m = max_m;
  c.bounds.max_n = max_n;
  return c;
}

Outcome matrix_theorem(int theorem) {
  Outcome o;
  fold(o, symbolic(theorem, 4, 5), "symbolic m<=4,n<=5:");
  fold(o, random(theorem, 200, 20260 + theorem, 6, 6), "random m<=n<=6:");
  return o;
}

Outcome addition() {
  Outcome o;
  fold(o, symbolic(5, 3, 4), "symbolic up to 3x4 (with A=0, B=0):");
  fold(o, random(5, 100, 5005, 5, 5), "random up to 5x5:");
  // Degenerate summands on every shape of the random range.
  std::mt19937_64 rng(55);
  std::size_t checks = 0;
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = m; n <= 5; ++n) {
      Matrix<BigInt> a(m, n), zero(m, n);
      for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j) a(i, j) = static_cast<long>(rng() % 7) - 3;
      for (AdditionVariant v : kAdditionVariants) {
        const std::size_t top = needs_index(v) ? m : 0;
        for (std::size_t l = 0; l <= top; ++l) {
          checks += 2;
          if (addition_rhs(a, zero, v, l) != addition_lhs(a, v, l) || addition_rhs(zero, a, v, l) != addition_lhs(a, v, l))
            o.pass = false;
        }
      }
    }
  }
  o.detail += "; degenerate A=0/B=0: " + std::to_string(checks) + " checks";
  return o;
}

Outcome complement() {
  Outcome o;
  fold(o, symbolic(6, 3, 4), "symbolic A and y up to 3x4:");
  fold(o, random(6, 100, 6006, 5, 6), "random up to 5x6:");
  std::size_t checks = 0;
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = m; n <= 6; ++n) {
      Matrix<BigInt> zero(m, n);
      ++checks;
      if (complement_rhs(zero, BigInt(1), m, ComplementVariant::per_z) != rising_factorial(static_cast<long>(n - m), m))
        o.pass = false;
    }
  o.detail += "; per(z;J_{m,n}) = rising factorial: " + std::to_string(checks) + " shapes";
  return o;
}

Outcome circulant() {
  Outcome o;
  VerifyConfig c;
  c.theorem = 7;
  c.symbolic = true;
  c.bounds.max_nk = 8;
  fold(o, c, "symbolic a0,a1,z with nk<=8 vs oracle:");
  std::mt19937_64 rng(7007);
  std::size_t checks = 0;
  for (std::size_t n = 1; n <= 50; ++n)
    for (std::size_t k = 1; k <= 3; ++k) {
      const BigInt a0(static_cast<long>(rng() % 7) - 3), a1(static_cast<long>(rng() % 7) - 3);
      const BigInt z(static_cast<long>(rng() % 7) - 3);
      CirculantSpec<BigInt> spec{n, k, 0, {a0, a1}};
      checks += 2;
      if (closed_form_per_z_at(n, k, a0, a1, z) != banded_per_z_at(spec, z).value) o.pass = false;
      if (closed_form_per_z(n, k, a0, a1) != banded_per_z(spec).value) o.pass = false;
    }
  o.detail += "; closed form vs banded for all n<=50, k<=3: " + std::to_string(checks) + " checks";
  return o;
}

Outcome speed() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  Run r = run_cli("circulant --n 1000 --k 10 --coeffs 3,5 --method closed-form --z 7");
  const double cli_s = seconds_since(t0);
  std::string digits = r.out;
  while (!digits.empty() && digits.back() == '\n') digits.pop_back();
  const bool integer = !digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos;
  const bool same = integer && parse_bigint(digits) == closed_form_per_z_at(1000, 10, BigInt(3), BigInt(5), BigInt(7));
  if (r.code != 0 || !same || cli_s >= 5.0) o.pass = false;

  t0 = std::chrono::steady_clock::now();
  CirculantSpec<BigInt> spec{50, 2, 0, {BigInt(2), BigInt(-3)}};
  auto dp = banded_per_z(spec);
  const double dp_s = seconds_since(t0);
  if (dp.value != closed_form_per_z<BigInt>(50, 2, BigInt(2), BigInt(-3)) || dp_s >= 10.0) o.pass = false;

  std::ostringstream os;
  os.precision(3);
  os << "closed form n=1000,k=10 via CLI: " << digits.size() << " digits in " << cli_s
     << " s (limit 5); banded n=50,k=2,t=1: " << dp_s << " s (limit 10)";
  o.detail = os.str();
  return o;
}

Outcome negative_claim() {
  Outcome o;
  CounterexampleReport r = find_arbitrary_k_counterexample(CounterexampleConfig{2, 3, 4});
  std::ostringstream os;
  os << r.boards_checked << " boards, " << r.row_sets_checked << " non-terminal row sets, "
     << r.terminal_mismatches << " terminal mismatches; ";
  if (r.terminal_mismatches != 0) o.pass = false;
  if (r.witness) {
    const auto& w = *r.witness;
    const bool verified = w.expansion != w.oracle && !(w.expansion - w.oracle).is_zero();
    if (!verified) o.pass = false;
    os << "witness found: rows " << render(w.rows) << " of a generic " << w.board.rows() << "x" << w.board.cols()
       << " board, expansion != oracle";
    if (w.integer_board) os << ", integer witness " << to_json(*w.integer_board)["entries"].dump();
  } else {
    os << "no witness within bounds";
  }
  o.detail = os.str();
  return o;
}

Outcome anchors() {
  Outcome o;
  std::mt19937_64 rng(9009);
  std::size_t checks = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for (int trial = 0; trial < 30; ++trial) {
      Matrix<BigInt> a(n, n);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) a(i, j) = static_cast<long>(rng() % 7) - 3;
      ++checks;
      if (per_z_oracle(a).eval(BigInt(1)) != ryser_permanent(a)) o.pass = false;
    }
  for (std::size_t n = 1; n <= 6; ++n) {
    ++checks;
    if (per_z_oracle(ones_matrix(n, n)) != rising_factorial(0, n)) o.pass = false;
  }
  o.detail = "per(z;A) at z=1 vs Ryser on 210 random square boards up to 7x7, per(z;J_n) for n<=6: " +
             std::to_string(checks) + " checks";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> runs = {
      "verify --theorem 5 --trials 40 --seed 42 --format json",
      "verify --theorem 2 --trials 60 --seed 7 --max-m 5 --max-n 6 --format json",
      "verify --theorem 7 --trials 30 --seed 3 --format json",
  };
  std::size_t compared = 0;
  for (const auto& args : runs) {
    Run a = run_cli(args, "CYCROOK_THREADS=1");
    Run b = run_cli(args, "CYCROOK_THREADS=4");
    Run c = run_cli(args);
    ++compared;
    if (a.code != 0 || a.out.empty() || a.out != b.out || a.out != c.out) {
      o.pass = false;
      o.detail = "reports differ for: " + args;
      return o;
    }
  }
  o.detail = std::to_string(compared) + " verify reports byte-identical across 3 runs each (1, 4 and default threads)";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "last-k expansion equals the oracle", 120, [] { return matrix_theorem(2); }},
      {2, "single-row expansion equals the oracle", 60, [] { return matrix_theorem(3); }},
      {3, "permanent expansion equals the oracle", 60, [] { return matrix_theorem(4); }},
      {4, "six addition formulas", 120, addition},
      {5, "complement formulas", 60, complement},
      {6, "circulant closed form", 120, circulant},
      {7, "structured speed", 15, speed},
      {8, "arbitrary-k counterexample search", 60, negative_claim},
      {9, "Ryser and rising-factorial anchors", 30, anchors},
      {10, "deterministic verify reports", 120, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = seconds_since(t0);
    if (s >= c.limit_s) {
      o.pass = false;
      o.detail += "; exceeded " + std::to_string(static_cast<int>(c.limit_s)) + " s";
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d %s: %s [%.2f s] %s\n", c.id, c.name.c_str(), o.pass ? "PASS" : "FAIL", s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
