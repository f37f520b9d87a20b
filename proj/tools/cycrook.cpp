// cycrook: command-line front end for the cyclic rook polynomial library.
//
// Exit codes: 0 success or pass, 1 verification failure or method
// disagreement, 2 usage or input error, 3 contract or resource refusal.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cycrook/errors.hpp"
#include "cycrook/matrix_io.hpp"
#include "cycrook/poly_io.hpp"
#include "cycrook/rook_engine.hpp"
#include "cycrook/structured.hpp"
#include "cycrook/verify.hpp"

using namespace cycrook;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kRefused = 3;

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw StructuralError("expected a comma-separated list of positive integers, got '" + text + "'");
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw StructuralError("empty index list");
  return out;
}

std::vector<BigInt> parse_int_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_bigint(item));
  if (out.empty()) throw StructuralError("empty coefficient list");
  return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// compute

struct ComputeArgs {
  std::string input;
  std::string what = "rook-z";
  std::string method = "oracle";
  std::size_t k = 1;
  std::optional<std::size_t> row;
  std::string rows = "1";
  bool check = false;
  bool force = false;
  std::string format = "text";
};

// A computed value in either shape; classical results are stored with z = 1
// substituted.
struct ComputeValue {
  std::optional<XZPoly<BigInt>> rook;
  std::optional<Poly<BigInt>> per;
  friend bool operator==(const ComputeValue&, const ComputeValue&) = default;
};

ComputeValue compute_with(const Matrix<BigInt>& a, const ComputeArgs& args, const std::string& method) {
  const std::size_t m = a.rows();
  OracleLimits limits;
  limits.force = args.force;
  check_oracle_limits(m, a.cols(), limits);
  const bool per = args.what == "per-z" || args.what == "classic-per";
  ComputeValue v;
  if (method == "oracle") {
    if (per) {
      v.per = per_z_oracle(a, limits);
    } else {
      v.rook = rook_poly_oracle(a, limits).poly;
    }
  } else if (method == "expand-last-k") {
    auto r = expand_last_k(a, args.k).poly;
    if (per) {
      v.per = r.r(m);
    } else {
      v.rook = r;
    }
  } else if (method == "expand-row") {
    auto r = expand_row(a, args.row.value_or(m)).poly;
    if (per) {
      v.per = r.r(m);
    } else {
      v.rook = r;
    }
  } else if (method == "expand-per-rows") {
    if (!per) throw StructuralError("--method expand-per-rows only computes per-z or classic-per");
    v.per = expand_per_rows(a, IndexSeq(parse_index_list(args.rows)));
  } else if (method == "recursive") {
    auto r = rook_poly_recursive(a);
    if (per) {
      v.per = r.r(m);
    } else {
      v.rook = r;
    }
  }
  return v;
}

void print_compute(const ComputeValue& v, const ComputeArgs& args) {
  json j{{"what", args.what}, {"method", args.method}};
  std::string text;
  if (args.what == "rook-z") {
    text = render(*v.rook);
    j["result"] = to_json(*v.rook);
  } else if (args.what == "per-z") {
    text = render(*v.per);
    j["result"] = to_json(*v.per);
  } else if (args.what == "classic-rook") {
    Poly<BigInt> p = classic_specialize(*v.rook);
    text = render(p, "x");
    j["result"] = to_json(p);
  } else {
    BigInt p = classic_specialize(*v.per);
    text = to_string(p);
    j["result"] = text;
  }
  if (args.format == "json") {
    j["text"] = text;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

int run_compute(const ComputeArgs& args) {
  const Matrix<BigInt> a = matrix_from_json(read_json_file(args.input));
  ComputeValue v = compute_with(a, args, args.method);
  if (args.check) {
    // The second opinion is the oracle, or the recursive expansion when the
    // oracle was the selected method.
    const std::string other = args.method == "oracle" ? "recursive" : "oracle";
    ComputeValue w = compute_with(a, args, other);
    bool agree = v == w;
    if (agree && args.what == "classic-per" && a.rows() == a.cols())
      agree = classic_specialize(*v.per) == ryser_permanent(a);
    if (!agree) {
      std::cerr << "check failed: method " << args.method << " disagrees with " << other << "\n";
      return kFail;
    }
  }
  print_compute(v, args);
  return kPass;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::optional<int> theorem;
  bool counterexample = false;
  std::size_t trials = 50;
  std::optional<std::uint64_t> seed;
  VerifyBounds bounds;
  std::optional<std::size_t> max_m, max_n;
  std::size_t k = 2;
  bool symbolic = false;
  std::string format = "text";
  bool timing = false;
};

int run_verify(const VerifyArgs& args) {
  if (args.counterexample) {
    CounterexampleConfig cfg;
    cfg.k = args.k;
    cfg.max_m = args.max_m.value_or(cfg.max_m);
    cfg.max_n = args.max_n.value_or(cfg.max_n);
    CounterexampleReport r = find_arbitrary_k_counterexample(cfg);
    const bool ok = r.witness.has_value() && r.terminal_mismatches == 0;
    if (args.format == "json") {
      std::cout << to_json(r, args.timing).dump(2) << "\n";
    } else {
      std::cout << "counterexample search k=" << cfg.k << " up to " << cfg.max_m << "x" << cfg.max_n << ": "
                << r.boards_checked << " boards, " << r.row_sets_checked << " non-terminal row sets, "
                << r.terminal_mismatches << " terminal mismatches\n";
      if (r.witness) {
        const auto& w = *r.witness;
        std::cout << "witness: rows " << render(w.rows) << " of a generic " << w.board.rows() << "x" << w.board.cols()
                  << " board\n";
        std::cout << "  expansion - oracle = " << render(w.expansion - w.oracle) << "\n";
        if (w.integer_board) {
          std::cout << "integer witness matrix: " << to_json(*w.integer_board)["entries"].dump() << "\n";
          std::cout << "  expansion: " << render(w.integer_expansion) << "\n";
          std::cout << "  oracle:    " << render(w.integer_oracle) << "\n";
        }
      } else {
        std::cout << "no witness within bounds\n";
      }
      if (args.timing) std::cout << "elapsed_ms: " << r.elapsed_ms << "\n";
    }
    return ok ? kPass : kFail;
  }

  VerifyConfig cfg;
  cfg.theorem = *args.theorem;
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  cfg.bounds = args.bounds;
  if (args.max_m) cfg.bounds.max_m = *args.max_m;
  if (args.max_n) cfg.bounds.max_n = *args.max_n;
  cfg.symbolic = args.symbolic;
  VerifyReport r = verify_theorem(cfg);
  if (args.format == "json") {
    std::cout << to_json(r, args.timing).dump(2) << "\n";
  } else {
    std::cout << "theorem " << r.theorem << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.trials
              << (r.symbolic ? " symbolic cases, " : " trials, ") << r.checks << " checks, " << r.failures.size()
              << " failures)\n";
    for (const auto& f : r.failures) std::cout << f.dump() << "\n";
    if (args.timing) std::cout << "elapsed_ms: " << r.elapsed_ms << "\n";
  }
  return r.pass ? kPass : kFail;
}

// ---------------------------------------------------------------------------
// circulant

struct CirculantArgs {
  std::optional<std::size_t> n, k;
  std::size_t r = 0;
  std::optional<std::string> coeffs;
  std::optional<std::string> spec_file;
  std::string method = "closed-form";
  std::string what = "per-z";
  std::optional<std::string> z;
  std::optional<std::string> cross_check;
  bool force = false;
  std::string format = "text";
};

// Result of one circulant evaluation: a polynomial, or an integer when z is
// bound.
struct CirculantValue {
  std::optional<Poly<BigInt>> per;
  std::optional<XZPoly<BigInt>> rook;
  std::optional<Poly<BigInt>> in_x;  // R(x; z; A) with z bound
  std::optional<BigInt> at;
  std::string warning;
  friend bool operator==(const CirculantValue& a, const CirculantValue& b) {
    return a.per == b.per && a.rook == b.rook && a.in_x == b.in_x && a.at == b.at;
  }
};

CirculantValue evaluate_circulant(const CirculantSpec<BigInt>& spec, const CirculantArgs& args,
                                  const std::string& method) {
  const std::optional<BigInt> z = args.z ? std::optional<BigInt>(parse_bigint(*args.z)) : std::nullopt;
  OracleLimits limits;
  limits.force = args.force;
  CirculantValue v;

  if (args.what == "rook-z") {
    if (method == "oracle") {
      check_oracle_limits(spec.n * spec.k, spec.n * spec.k, limits);
      v.rook = rook_poly_oracle(circulant_matrix(spec), limits).poly;
    } else if (method == "expand") {
      v.rook = structured_rook_z(spec, args.force ? SIZE_MAX : 12);
    } else {
      throw StructuralError("--what rook-z needs --method oracle or expand");
    }
    if (z) {
      v.in_x = v.rook->eval_z(*z);
      v.rook.reset();
    }
    return v;
  }

  if (method == "closed-form") {
    const bool fits = spec.r == 0 && (spec.coeffs.size() == 1 || spec.coeffs.size() == 2);
    if (!fits) throw ContractViolation("closed form needs r = 0 and coefficients a0[,a1] (a0 I_n + a1 P_n)");
    const BigInt a0 = spec.coeffs[0];
    const BigInt a1 = spec.coeffs.size() == 2 ? spec.coeffs[1] : BigInt(0);
    if (z) {
      v.at = closed_form_per_z_at(spec.n, spec.k, a0, a1, *z);
    } else {
      v.per = closed_form_per_z(spec.n, spec.k, a0, a1);
    }
  } else if (method == "dp") {
    if (z) {
      auto r = banded_per_z_at(spec, *z, limits);
      v.at = r.value;
      v.warning = r.stats.warning;
    } else {
      auto r = banded_per_z(spec, limits);
      v.per = r.value;
      v.warning = r.stats.warning;
    }
  } else if (method == "oracle") {
    check_oracle_limits(spec.n * spec.k, spec.n * spec.k, limits);
    Poly<BigInt> p = per_z_oracle(circulant_matrix(spec), limits);
    if (z) {
      v.at = p.eval(*z);
    } else {
      v.per = p;
    }
  } else {
    Poly<BigInt> p = structured_rook_z(spec, args.force ? SIZE_MAX : 12).r(spec.n * spec.k);
    if (z) {
      v.at = p.eval(*z);
    } else {
      v.per = p;
    }
  }
  return v;
}

int run_circulant(const CirculantArgs& args) {
  CirculantSpec<BigInt> spec;
  if (args.spec_file) {
    spec = circulant_spec_from_json(read_json_file(*args.spec_file));
  } else {
    if (!args.n || !args.k || !args.coeffs) throw StructuralError("give --spec, or all of --n, --k and --coeffs");
    spec.n = *args.n;
    spec.k = *args.k;
    spec.r = args.r;
    spec.coeffs = parse_int_list(*args.coeffs);
    if (spec.n < 1 || spec.k < 1) throw StructuralError("--n and --k must be >= 1");
  }

  CirculantValue v = evaluate_circulant(spec, args, args.method);
  if (!v.warning.empty()) std::cerr << "warning: " << v.warning << "\n";
  if (args.cross_check) {
    CirculantValue w = evaluate_circulant(spec, args, *args.cross_check);
    if (!(v == w)) {
      std::cerr << "cross-check failed: " << args.method << " disagrees with " << *args.cross_check << "\n";
      return kFail;
    }
  }

  std::string text;
  json result;
  if (v.at) {
    text = to_string(*v.at);
    result = text;
  } else if (v.per) {
    text = render(*v.per);
    result = to_json(*v.per);
  } else if (v.in_x) {
    text = render(*v.in_x, "x");
    result = to_json(*v.in_x);
  } else {
    text = render(*v.rook);
    result = to_json(*v.rook);
  }
  if (args.format == "json") {
    json j{{"spec", to_json(spec)}, {"what", args.what}, {"method", args.method}, {"result", result}, {"text", text}};
    if (args.z) j["z"] = *args.z;
    if (args.cross_check) j["cross_check"] = *args.cross_check;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
  return kPass;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::string nk = "4,6,8";
  std::size_t k = 2;
  std::size_t trials = 3;
  std::uint64_t seed = 1;
  bool force = false;
  std::string format = "text";
};

int run_bench(const BenchArgs& args) {
  if (args.k < 1 || args.trials < 1) throw StructuralError("--k and --trials must be >= 1");
  const auto sizes = parse_index_list(args.nk);
  for (std::size_t nk : sizes)
    if (nk % args.k != 0) throw StructuralError("every --nk value must be a multiple of --k");

  std::mt19937_64 rng(args.seed);
  json rows = json::array();
  for (std::size_t nk : sizes) {
    const std::size_t n = nk / args.k;
    const bool oracle_ok = args.force || nk <= 9;
    const bool expand_ok = args.force || nk <= 12;
    double best[4] = {-1, -1, -1, -1};  // oracle, expand, closed form, dp
    bool agree = true;
    for (std::size_t t = 0; t < args.trials; ++t) {
      CirculantSpec<BigInt> spec{n, args.k, 0,
                                 {BigInt(1 + static_cast<long>(rng() % 3)), BigInt(1 + static_cast<long>(rng() % 3))}};
      auto time = [&](int slot, auto&& f) {
        auto t0 = std::chrono::steady_clock::now();
        Poly<BigInt> p = f();
        double ms = ms_since(t0);
        if (best[slot] < 0 || ms < best[slot]) best[slot] = ms;
        return p;
      };
      Poly<BigInt> cf = time(2, [&] { return closed_form_per_z(n, args.k, spec.coeffs[0], spec.coeffs[1]); });
      Poly<BigInt> dp = time(3, [&] { return banded_per_z(spec).value; });
      agree = agree && cf == dp;
      if (oracle_ok) {
        Poly<BigInt> o = time(0, [&] { return per_z_oracle(circulant_matrix(spec), OracleLimits{0, 0, true}); });
        agree = agree && o == cf;
      }
      if (expand_ok) {
        Poly<BigInt> e = time(1, [&] { return structured_rook_z(spec, SIZE_MAX).r(nk); });
        agree = agree && e == cf;
      }
    }
    auto cell = [](double ms) { return ms < 0 ? json(nullptr) : json(ms); };
    rows.push_back(json{{"nk", nk},
                        {"n", n},
                        {"k", args.k},
                        {"trials", args.trials},
                        {"oracle_ms", cell(best[0])},
                        {"expand_ms", cell(best[1])},
                        {"closed_form_ms", cell(best[2])},
                        {"dp_ms", cell(best[3])},
                        {"agree", agree}});
  }

  bool all_agree = true;
  for (const auto& r : rows) all_agree = all_agree && r["agree"].get<bool>();
  if (args.format == "json") {
    std::cout << json{{"rows", rows}}.dump(2) << "\n";
  } else {
    auto cell = [](const json& v) {
      if (v.is_null()) return std::string("-");
      std::ostringstream os;
      os.setf(std::ios::fixed);
      os.precision(3);
      os << v.get<double>();
      return os.str();
    };
    std::cout << "nk\tn\tk\toracle_ms\texpand_ms\tclosed_ms\tdp_ms\tagree\n";
    for (const auto& r : rows)
      std::cout << r["nk"] << "\t" << r["n"] << "\t" << r["k"] << "\t" << cell(r["oracle_ms"]) << "\t"
                << cell(r["expand_ms"]) << "\t" << cell(r["closed_form_ms"]) << "\t" << cell(r["dp_ms"]) << "\t"
                << (r["agree"].get<bool>() ? "yes" : "NO") << "\n";
  }
  return all_agree ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cyclic rook polynomials and z-permanents"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "R(x;z;A), per(z;A) or their classical values for a matrix file");
  compute->add_option("--input", ca.input, "matrix JSON file")->required();
  compute->add_option("--what", ca.what)->check(CLI::IsMember({"rook-z", "per-z", "classic-rook", "classic-per"}));
  compute->add_option("--method", ca.method)
      ->check(CLI::IsMember({"oracle", "expand-last-k", "expand-row", "expand-per-rows"}));
  compute->add_option("--k", ca.k, "rows for expand-last-k");
  compute->add_option("--row", ca.row, "row for expand-row (default m)");
  compute->add_option("--rows", ca.rows, "comma-separated rows for expand-per-rows");
  compute->add_flag("--check", ca.check, "recompute with a second method and require agreement");
  compute->add_flag("--force", ca.force, "lift the oracle size guard");
  compute->add_option("--format", ca.format)->check(CLI::IsMember({"text", "json"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check an identity against the oracles, or search for a counterexample");
  auto* theorem = verify->add_option("--theorem", va.theorem, "identity to check (2..7)")->check(CLI::Range(2, 7));
  auto* cex = verify->add_flag("--counterexample", va.counterexample,
                               "search for a row set where the last-k expansion shape fails");
  theorem->excludes(cex);
  verify->add_option("--trials", va.trials, "random trials");
  verify->add_option("--seed", va.seed, "seed (required for random trials)");
  verify->add_option("--max-m", va.max_m);
  verify->add_option("--max-n", va.max_n);
  verify->add_option("--max-nk", va.bounds.max_nk);
  verify->add_option("--max-blocks", va.bounds.max_blocks, "largest n for random circulant trials");
  verify->add_option("--max-k", va.bounds.max_k, "largest k for random circulant trials");
  verify->add_option("--k", va.k, "row-set size for --counterexample");
  verify->add_flag("--symbolic", va.symbolic, "generic symbolic boards instead of random ones");
  verify->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timing", va.timing, "include elapsed time in the report");

  CirculantArgs cia;
  auto* circ = app.add_subcommand("circulant", "per(z) or R(x;z) of (sum c_i P_n^(i-r)) (x) J_k");
  circ->add_option("--n", cia.n);
  circ->add_option("--k", cia.k);
  circ->add_option("--r", cia.r);
  circ->add_option("--coeffs", cia.coeffs, "comma-separated integers");
  circ->add_option("--spec", cia.spec_file, "circulant spec JSON file");
  circ->add_option("--method", cia.method)->check(CLI::IsMember({"closed-form", "dp", "oracle", "expand"}));
  circ->add_option("--what", cia.what)->check(CLI::IsMember({"per-z", "rook-z"}));
  circ->add_option("--z", cia.z, "integer value for z");
  circ->add_option("--cross-check", cia.cross_check, "second method that must agree")
      ->check(CLI::IsMember({"closed-form", "dp", "oracle", "expand"}));
  circ->add_flag("--force", cia.force, "lift size guards");
  circ->add_option("--format", cia.format)->check(CLI::IsMember({"text", "json"}));

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "time oracle, expansion, closed form and banded evaluator");
  bench->add_option("--nk", ba.nk, "comma-separated board sizes nk");
  bench->add_option("--k", ba.k);
  bench->add_option("--trials", ba.trials);
  bench->add_option("--seed", ba.seed);
  bench->add_flag("--force", ba.force, "run the oracle and expansion beyond their usual sizes");
  bench->add_option("--format", ba.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*compute) return run_compute(ca);
    if (*verify) {
      if (!va.theorem && !va.counterexample) throw StructuralError("verify needs --theorem or --counterexample");
      return run_verify(va);
    }
    if (*circ) return run_circulant(cia);
    if (*bench) return run_bench(ba);
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const ContractViolation& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const ResourceLimit& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  }
  return kUsage;
}
