#include "cycrook/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <string_view>
#include <thread>
#include <tuple>

#include "cycrook/expansion_terms.hpp"
#include "cycrook/identities.hpp"
#include "cycrook/matrix_io.hpp"
#include "cycrook/rook_engine.hpp"
#include "cycrook/structured.hpp"
#include "cycrook/symbolic.hpp"

namespace cycrook {

using nlohmann::json;

std::size_t worker_count() {
  if (const char* env = std::getenv("CYCROOK_THREADS")) {
    std::string_view text(env);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec == std::errc() && ptr == text.data() + text.size() && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 step
  std::uint64_t z = seed + (trial + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

struct CaseOutcome {
  std::size_t checks = 0;
  std::vector<json> failures;
};

using Case = std::function<CaseOutcome()>;

std::vector<CaseOutcome> run_cases(const std::vector<Case>& cases) {
  std::vector<CaseOutcome> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < cases.size();) {
      try {
        out[i] = cases[i]();
      } catch (const std::exception& e) {
        out[i].failures.push_back(json{{"case", i}, {"error", e.what()}});
      }
    }
  };
  const std::size_t workers = std::min(worker_count(), cases.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return out;
}

json board_json(const Matrix<BigInt>& a) { return to_json(a); }

json board_json(const Matrix<MultiPoly>& a) {
  json rows = json::array();
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 1; j <= a.cols(); ++j) row.push_back(a(i, j).render());
    rows.push_back(row);
  }
  return json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", rows}};
}

template <class P>
void expect_equal(CaseOutcome& out, const P& lhs, const P& rhs, json context) {
  ++out.checks;
  if (lhs == rhs) return;
  context["lhs"] = render(lhs);
  context["rhs"] = render(rhs);
  out.failures.push_back(std::move(context));
}

long small_entry(std::mt19937_64& rng) { return static_cast<long>(rng() % 7) - 3; }

Matrix<BigInt> random_board(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  Matrix<BigInt> a(m, n);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) a(i, j) = small_entry(rng);
  return a;
}

// ---------------------------------------------------------------------------
// Per-board checks, shared by the random and symbolic populations.

template <class T>
void check_last_k(CaseOutcome& out, const Matrix<T>& a, const json& ctx) {
  const auto oracle = rook_poly_oracle(a).poly;
  for (std::size_t k = 1; k + 1 <= a.rows(); ++k) {
    json c = ctx;
    c["k"] = k;
    expect_equal(out, expand_last_k(a, k).poly, oracle, c);
  }
}

template <class T>
void check_rows(CaseOutcome& out, const Matrix<T>& a, const json& ctx) {
  const auto oracle = rook_poly_oracle(a).poly;
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    json c = ctx;
    c["row"] = i;
    expect_equal(out, expand_row(a, i).poly, oracle, c);
  }
}

// The single-row expansion at the last row has the same branches as the
// last-k expansion with k = 1.
void check_last_row_structure(CaseOutcome& out, std::size_t m, std::size_t n) {
  if (m < 2) return;
  auto a = row_terms(m, n, m);
  auto b = last_k_terms(m, n, 1);
  auto key = [](const ExpansionTerm& t) {
    return std::make_tuple(t.placement.pairs(), t.cycles, t.rows.items(), t.cols.items());
  };
  auto less = [&](const ExpansionTerm& x, const ExpansionTerm& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  ++out.checks;
  if (a != b) out.failures.push_back(json{{"m", m}, {"n", n}, {"check", "last-row branches differ from last-1"}});
}

template <class T>
void check_per_rows(CaseOutcome& out, const Matrix<T>& a, const json& ctx) {
  const auto oracle = per_z_oracle(a);
  for (std::size_t s = 1; s + 1 <= a.rows(); ++s) {
    for (const IndexSeq& rows : increasing_sequences(s, a.rows())) {
      json c = ctx;
      c["rows"] = rows.items();
      expect_equal(out, expand_per_rows(a, rows), oracle, c);
    }
  }
}

template <class T>
void check_addition(CaseOutcome& out, const Matrix<T>& a, const Matrix<T>& b, const json& ctx) {
  const Matrix<T> sum = a + b;
  for (AdditionVariant v : kAdditionVariants) {
    const std::size_t top = needs_index(v) ? a.rows() : 0;
    for (std::size_t l = 0; l <= top; ++l) {
      json c = ctx;
      c["variant"] = std::string(to_string(v));
      if (needs_index(v)) c["l"] = l;
      expect_equal(out, addition_rhs(a, b, v, l), addition_lhs(sum, v, l), c);
    }
  }
}

template <class T>
void check_complement(CaseOutcome& out, const Matrix<T>& a, const T& y, const json& ctx) {
  for (std::size_t l = 0; l <= a.rows(); ++l) {
    json c = ctx;
    c["l"] = l;
    c["variant"] = "r_l";
    expect_equal(out, complement_rhs(a, y, l), complement_lhs(a, y, l), c);
  }
  json c = ctx;
  c["variant"] = "per_z";
  expect_equal(out, complement_rhs(a, y, 0, ComplementVariant::per_z),
               complement_lhs(a, y, 0, ComplementVariant::per_z), c);
}

// per(z; J_{m,n}) from the complement formula at A = 0, y = 1.
void check_all_ones(CaseOutcome& out, std::size_t m, std::size_t n) {
  Matrix<BigInt> zero(m, n);
  json c{{"m", m}, {"n", n}, {"check", "per(z;J) rising factorial"}};
  const auto rhs = complement_rhs(zero, BigInt(1), m, ComplementVariant::per_z);
  expect_equal(out, rhs, rising_factorial(static_cast<long>(n - m), m), c);
  expect_equal(out, rhs, per_z_oracle(ones_matrix(m, n)), c);
}

// ---------------------------------------------------------------------------

struct Shape {
  std::size_t m, n;
};

std::size_t min_rows(int theorem) { return (theorem == 2 || theorem == 4) ? 2 : 1; }

std::vector<Shape> all_shapes(int theorem, const VerifyBounds& b) {
  std::vector<Shape> out;
  const std::size_t top = std::min(b.max_m, b.max_n);
  for (std::size_t m = min_rows(theorem); m <= top; ++m)
    for (std::size_t n = m; n <= b.max_n; ++n) out.push_back({m, n});
  return out;
}

Shape random_shape(std::mt19937_64& rng, int theorem, const VerifyBounds& b) {
  const std::size_t lo = min_rows(theorem);
  const std::size_t top = std::min(b.max_m, b.max_n);
  const std::size_t m = lo + rng() % (top - lo + 1);
  const std::size_t n = m + rng() % (b.max_n - m + 1);
  return {m, n};
}

Case symbolic_matrix_case(int theorem, Shape s) {
  return [theorem, s] {
    CaseOutcome out;
    std::vector<std::string> names = generic_names("a", s.m, s.n);
    if (theorem == 5) {
      auto more = generic_names("b", s.m, s.n);
      names.insert(names.end(), more.begin(), more.end());
    }
    if (theorem == 6) names.push_back("y");
    auto vars = MultiPoly::make_vars(names);
    const Matrix<MultiPoly> a = generic_matrix(vars, "a", s.m, s.n);
    const json ctx{{"m", s.m}, {"n", s.n}, {"board", "generic"}};
    switch (theorem) {
      case 2: check_last_k(out, a, ctx); break;
      case 3:
        check_rows(out, a, ctx);
        check_last_row_structure(out, s.m, s.n);
        break;
      case 4: check_per_rows(out, a, ctx); break;
      case 5: {
        const Matrix<MultiPoly> b = generic_matrix(vars, "b", s.m, s.n);
        const Matrix<MultiPoly> zero(s.m, s.n);
        check_addition(out, a, b, ctx);
        check_addition(out, zero, b, json{{"m", s.m}, {"n", s.n}, {"board", "A = 0"}});
        check_addition(out, a, zero, json{{"m", s.m}, {"n", s.n}, {"board", "B = 0"}});
        break;
      }
      case 6:
        check_complement(out, a, MultiPoly::variable(vars, "y"), ctx);
        check_all_ones(out, s.m, s.n);
        break;
      default: break;
    }
    return out;
  };
}

Case random_matrix_case(int theorem, const VerifyBounds& bounds, std::uint64_t seed, std::size_t trial) {
  return [=] {
    CaseOutcome out;
    std::mt19937_64 rng(trial_seed(seed, trial));
    const Shape s = random_shape(rng, theorem, bounds);
    const Matrix<BigInt> a = random_board(rng, s.m, s.n);
    json ctx{{"trial", trial}, {"A", board_json(a)}};
    switch (theorem) {
      case 2: check_last_k(out, a, ctx); break;
      case 3: check_rows(out, a, ctx); break;
      case 4: check_per_rows(out, a, ctx); break;
      case 5: {
        const Matrix<BigInt> b = random_board(rng, s.m, s.n);
        ctx["B"] = board_json(b);
        check_addition(out, a, b, ctx);
        if (trial == 0) {
          Matrix<BigInt> zero(s.m, s.n);
          check_addition(out, zero, b, ctx);
          check_addition(out, a, zero, ctx);
        }
        break;
      }
      case 6: {
        const BigInt y(small_entry(rng));
        ctx["y"] = to_string(y);
        check_complement(out, a, y, ctx);
        if (trial == 0) check_all_ones(out, s.m, s.n);
        break;
      }
      default: break;
    }
    return out;
  };
}

Case symbolic_circulant_case(std::size_t n, std::size_t k) {
  return [n, k] {
    CaseOutcome out;
    auto vars = MultiPoly::make_vars({"a0", "a1"});
    const MultiPoly a0 = MultiPoly::variable(vars, "a0");
    const MultiPoly a1 = MultiPoly::variable(vars, "a1");
    CirculantSpec<MultiPoly> spec{n, k, 0, {a0, a1}};
    json ctx{{"n", n}, {"k", k}, {"coeffs", {"a0", "a1"}}};
    expect_equal(out, closed_form_per_z(n, k, a0, a1),
                 per_z_oracle(circulant_matrix(spec), OracleLimits{0, 0, true}), ctx);
    return out;
  };
}

Case random_circulant_case(const VerifyBounds& bounds, std::uint64_t seed, std::size_t trial) {
  return [=] {
    CaseOutcome out;
    std::mt19937_64 rng(trial_seed(seed, trial));
    const std::size_t n = 1 + rng() % bounds.max_blocks;
    const std::size_t k = 1 + rng() % bounds.max_k;
    const BigInt a0(small_entry(rng)), a1(small_entry(rng)), z(small_entry(rng));
    CirculantSpec<BigInt> spec{n, k, 0, {a0, a1}};
    json ctx{{"trial", trial}, {"spec", to_json(spec)}, {"z", to_string(z)}};
    const BigInt closed = closed_form_per_z_at(n, k, a0, a1, z);
    auto as_poly = [](const BigInt& v) { return Poly<BigInt>(v); };
    json c = ctx;
    c["check"] = "closed form vs banded at z";
    expect_equal(out, as_poly(closed), as_poly(banded_per_z_at(spec, z).value), c);
    c["check"] = "closed form vs banded in z";
    expect_equal(out, closed_form_per_z(n, k, a0, a1), banded_per_z(spec).value, c);
    if (n * k <= bounds.max_nk) {
      c["check"] = "closed form vs oracle";
      expect_equal(out, closed_form_per_z(n, k, a0, a1),
                   per_z_oracle(circulant_matrix(spec), OracleLimits{0, 0, true}), c);
    }
    return out;
  };
}

void validate(const VerifyConfig& cfg) {
  if (cfg.theorem < 2 || cfg.theorem > 7) throw StructuralError("identity id must be one of 2..7");
  const auto& b = cfg.bounds;
  if (cfg.theorem == 7) {
    if (b.max_nk < 1 || b.max_nk > 9) throw ContractViolation("max-nk must lie in 1..9 (oracle limit)");
    if (!cfg.symbolic && (b.max_blocks < 1 || b.max_k < 1)) throw ContractViolation("max-blocks and max-k must be >= 1");
  } else {
    if (b.max_m > 7 || b.max_n > 9) throw ContractViolation("bounds exceed the oracle limit (m <= 7, n <= 9)");
    if (std::min(b.max_m, b.max_n) < min_rows(cfg.theorem))
      throw ContractViolation("bounds admit no boards for this identity");
  }
  if (!cfg.symbolic && !cfg.seed) throw StructuralError("random verification runs need --seed");
}

}  // namespace

VerifyReport verify_theorem(const VerifyConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  std::vector<Case> cases;
  if (cfg.theorem == 7) {
    if (cfg.symbolic) {
      for (std::size_t n = 1; n <= cfg.bounds.max_nk; ++n)
        for (std::size_t k = 1; n * k <= cfg.bounds.max_nk; ++k) cases.push_back(symbolic_circulant_case(n, k));
    } else {
      for (std::size_t t = 0; t < cfg.trials; ++t) cases.push_back(random_circulant_case(cfg.bounds, *cfg.seed, t));
    }
  } else if (cfg.symbolic) {
    for (const Shape& s : all_shapes(cfg.theorem, cfg.bounds)) cases.push_back(symbolic_matrix_case(cfg.theorem, s));
  } else {
    for (std::size_t t = 0; t < cfg.trials; ++t)
      cases.push_back(random_matrix_case(cfg.theorem, cfg.bounds, *cfg.seed, t));
  }

  VerifyReport report;
  report.theorem = cfg.theorem;
  report.seed = cfg.seed;
  report.symbolic = cfg.symbolic;
  report.bounds = cfg.bounds;
  report.trials = cases.size();
  for (auto& outcome : run_cases(cases)) {
    report.checks += outcome.checks;
    for (auto& f : outcome.failures) report.failures.push_back(std::move(f));
  }
  report.pass = report.failures.empty();
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json to_json(const VerifyReport& r, bool include_timing) {
  json bounds{{"max_m", r.bounds.max_m}, {"max_n", r.bounds.max_n}};
  if (r.theorem == 7) {
    bounds = json{{"max_nk", r.bounds.max_nk}};
    if (!r.symbolic) {
      bounds["max_blocks"] = r.bounds.max_blocks;
      bounds["max_k"] = r.bounds.max_k;
    }
  }
  json j{{"theorem", r.theorem},
         {"seed", r.seed ? json(*r.seed) : json(nullptr)},
         {"symbolic", r.symbolic},
         {"bounds", bounds},
         {"trials", r.trials},
         {"checks", r.checks},
         {"pass", r.pass},
         {"failures", r.failures}};
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

// ---------------------------------------------------------------------------

CounterexampleReport find_arbitrary_k_counterexample(const CounterexampleConfig& cfg) {
  if (cfg.k < 2) throw ContractViolation("counterexample search needs k >= 2");
  if (cfg.max_m > 7 || cfg.max_n > 9) throw ContractViolation("bounds exceed the oracle limit (m <= 7, n <= 9)");
  const auto start = std::chrono::steady_clock::now();
  CounterexampleReport report;
  report.config = cfg;
  const std::size_t k = cfg.k;

  for (std::size_t m = k + 1; m <= std::min(cfg.max_m, cfg.max_n) && !report.witness; ++m) {
    for (std::size_t n = m; n <= cfg.max_n && !report.witness; ++n) {
      auto vars = MultiPoly::make_vars(generic_names("a", m, n));
      const Matrix<MultiPoly> a = generic_matrix(vars, "a", m, n);
      const XZPoly<MultiPoly> oracle = rook_poly_oracle(a).poly;
      ++report.boards_checked;

      const IndexSeq terminal = IndexSeq::range(m - k + 1, m);
      ++report.terminal_checked;
      if (naive_row_set_expansion(a, terminal) != oracle) ++report.terminal_mismatches;

      for (const IndexSeq& rows : increasing_sequences(k, m)) {
        if (rows == terminal) continue;
        ++report.row_sets_checked;
        XZPoly<MultiPoly> expansion = naive_row_set_expansion(a, rows);
        if (expansion == oracle) continue;

        CounterexampleWitness w{a, rows, std::move(expansion), oracle, std::nullopt, {}, {}};
        std::mt19937_64 rng(trial_seed(0, m * 100 + n));
        for (int attempt = 0; attempt < 200; ++attempt) {
          Matrix<BigInt> b = random_board(rng, m, n);
          auto lhs = naive_row_set_expansion(b, rows);
          auto rhs = rook_poly_oracle(b).poly;
          if (lhs != rhs) {
            w.integer_board = std::move(b);
            w.integer_expansion = std::move(lhs);
            w.integer_oracle = std::move(rhs);
            break;
          }
        }
        report.witness = std::move(w);
        break;
      }
    }
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json to_json(const CounterexampleReport& r, bool include_timing) {
  json j{{"k", r.config.k},
         {"max_m", r.config.max_m},
         {"max_n", r.config.max_n},
         {"boards_checked", r.boards_checked},
         {"row_sets_checked", r.row_sets_checked},
         {"terminal_checked", r.terminal_checked},
         {"terminal_mismatches", r.terminal_mismatches},
         {"found", r.witness.has_value()}};
  if (r.witness) {
    const auto& w = *r.witness;
    json wj{{"m", w.board.rows()},
            {"n", w.board.cols()},
            {"rows", w.rows.items()},
            {"board", board_json(w.board)},
            {"expansion", render(w.expansion)},
            {"oracle", render(w.oracle)},
            {"difference", render(w.expansion - w.oracle)}};
    if (w.integer_board) {
      wj["integer_board"] = board_json(*w.integer_board);
      wj["integer_expansion"] = render(w.integer_expansion);
      wj["integer_oracle"] = render(w.integer_oracle);
    }
    j["witness"] = wj;
  }
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace cycrook
