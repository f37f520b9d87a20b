#include "cycrook/structured.hpp"

#include <algorithm>
#include <map>
#include <type_traits>
#include <utility>

namespace cycrook {

BigInt closed_form_per_z_at(std::size_t n, std::size_t k, const BigInt& a0, const BigInt& a1, const BigInt& z) {
  if (n < 1 || k < 1) throw ContractViolation("closed form needs n >= 1 and k >= 1");
  auto rising_at = [&](long offset, std::size_t length) {
    BigInt r(1);
    for (std::size_t i = 0; i < length; ++i) r *= z + offset + static_cast<long>(i);
    return r;
  };
  const unsigned long nn = static_cast<unsigned long>(n);
  BigInt total(0);
  for (std::size_t s = 0; s <= k; ++s) {
    BigInt inner;
    BigInt a0_part;
    BigInt a1_part;
    mpz_pow_ui(a0_part.get_mpz_t(), a0.get_mpz_t(), k - s);
    mpz_pow_ui(a1_part.get_mpz_t(), a1.get_mpz_t(), s);
    inner = binomial(static_cast<long>(k), static_cast<long>(s)) * a0_part * a1_part *
            rising_at(static_cast<long>(s), k - s);
    if (is_zero(inner)) continue;
    BigInt inner_pow;
    mpz_pow_ui(inner_pow.get_mpz_t(), inner.get_mpz_t(), nn);
    BigInt fp;
    mpz_pow_ui(fp.get_mpz_t(), factorial(s).get_mpz_t(), nn - 1);
    total += rising_at(0, s) * fp * inner_pow;
  }
  return total;
}

namespace {

// A bundle of `count` identical open paths. A path starts at a processed
// node whose column is still free and ends at an unprocessed node whose
// column is already taken; only the blocks of the two ends matter.
struct PathGroup {
  std::uint32_t start = 0;
  std::uint32_t end = 0;
  std::uint32_t count = 0;
  friend auto operator<=>(const PathGroup&, const PathGroup&) = default;
};

struct DpState {
  std::uint32_t done = 0;  // nodes of the current block already processed
  std::vector<PathGroup> paths;
  friend auto operator<=>(const DpState&, const DpState&) = default;

  void adjust(std::uint32_t s, std::uint32_t e, int delta) {
    auto it = std::lower_bound(paths.begin(), paths.end(), PathGroup{s, e, 0},
                               [](const PathGroup& a, const PathGroup& b) {
                                 return std::pair(a.start, a.end) < std::pair(b.start, b.end);
                               });
    if (it != paths.end() && it->start == s && it->end == e) {
      it->count = static_cast<std::uint32_t>(static_cast<int>(it->count) + delta);
      if (it->count == 0) paths.erase(it);
    } else {
      paths.insert(it, PathGroup{s, e, static_cast<std::uint32_t>(delta)});
    }
  }

  std::uint32_t ends_in(std::uint32_t b) const {
    std::uint32_t total = 0;
    for (const auto& p : paths)
      if (p.end == b) total += p.count;
    return total;
  }
};

struct Arc {
  std::uint32_t offset;
  BigInt weight;
};

template <class V, class MulZ>
V run_banded(const CirculantSpec<BigInt>& spec, const std::vector<Arc>& arcs, const MulZ& mul_z, BandedStats& stats) {
  const auto n = static_cast<std::uint32_t>(spec.n);
  const auto k = static_cast<std::uint32_t>(spec.k);
  auto scale = [](const V& v, const BigInt& b) -> V {
    if constexpr (std::is_same_v<V, BigInt>) {
      return BigInt(v * b);
    } else {
      return v.scaled(b);
    }
  };
  std::map<DpState, V> cur;
  cur.emplace(DpState{}, V(BigInt(1)));

  for (std::uint32_t c = 0; c < n; ++c) {
    for (std::uint32_t step = 0; step < k; ++step) {
      std::map<DpState, V> next;
      for (const auto& [st, w] : cur) {
        auto emit = [&](DpState ns, const V& val) {
          ns.done = st.done + 1;
          ++stats.transitions;
          auto [it, fresh] = next.try_emplace(std::move(ns), val);
          if (!fresh) it->second += val;
        };
        // The node processed now: an end in this block if one exists (the
        // one with the smallest start block), otherwise a fresh node.
        bool is_end = false;
        std::uint32_t sv = 0;
        for (const auto& p : st.paths) {
          if (p.end == c) {
            is_end = true;
            sv = p.start;
            break;
          }
        }
        for (const auto& arc : arcs) {
          const std::uint32_t c2 = (c + arc.offset) % n;
          if (c2 <= c) {
            for (const auto& p : st.paths) {
              if (p.start != c2) continue;
              DpState ns = st;
              if (is_end && c2 == sv && p.end == c) {
                ns.adjust(sv, c, -1);
                emit(ns, mul_z(scale(w, arc.weight)));
                if (p.count > 1) {
                  DpState merged = st;
                  merged.adjust(c2, c, -1);
                  emit(merged, scale(w, BigInt(arc.weight * (p.count - 1))));
                }
              } else if (is_end) {
                ns.adjust(sv, c, -1);
                ns.adjust(c2, p.end, -1);
                ns.adjust(sv, p.end, 1);
                emit(ns, scale(w, BigInt(arc.weight * p.count)));
              } else {
                ns.adjust(c2, p.end, -1);
                ns.adjust(c, p.end, 1);
                emit(ns, scale(w, BigInt(arc.weight * p.count)));
              }
            }
          }
          std::uint32_t fresh = 0;
          if (c2 > c) {
            fresh = k - st.ends_in(c2);
          } else if (c2 == c) {
            fresh = k - st.done - st.ends_in(c);
          }
          if (is_end) {
            if (fresh > 0) {
              DpState ns = st;
              ns.adjust(sv, c, -1);
              ns.adjust(sv, c2, 1);
              emit(ns, scale(w, BigInt(arc.weight * fresh)));
            }
          } else if (c2 == c) {
            emit(st, mul_z(scale(w, arc.weight)));
            if (fresh > 1) {
              DpState ns = st;
              ns.adjust(c, c, 1);
              emit(ns, scale(w, BigInt(arc.weight * (fresh - 1))));
            }
          } else if (fresh > 0) {
            DpState ns = st;
            ns.adjust(c, c2, 1);
            emit(ns, scale(w, BigInt(arc.weight * fresh)));
          }
        }
      }
      cur = std::move(next);
      stats.max_states = std::max(stats.max_states, cur.size());
    }

    // Block c is complete. Drop states holding a start that no later row
    // block can reach any more.
    std::map<DpState, V> kept;
    for (auto& [st, w] : cur) {
      DpState ns = st;
      ns.done = 0;
      bool alive = true;
      for (const auto& p : ns.paths) {
        bool reachable = false;
        for (const auto& arc : arcs) {
          const std::uint32_t row_block = (p.start + n - arc.offset) % n;
          if (row_block > c) reachable = true;
        }
        if (!reachable) alive = false;
      }
      if (alive) kept.emplace(std::move(ns), std::move(w));
    }
    cur = std::move(kept);
  }
  auto it = cur.find(DpState{});
  return it == cur.end() ? V(BigInt(0)) : it->second;
}

std::vector<Arc> merged_arcs(const CirculantSpec<BigInt>& spec, bool& wrapped) {
  std::map<std::uint32_t, BigInt> by_offset;
  for (std::size_t i = 0; i < spec.coeffs.size(); ++i) {
    auto [it, fresh] = by_offset.try_emplace(static_cast<std::uint32_t>(spec.offset(i)), spec.coeffs[i]);
    if (!fresh) {
      it->second += spec.coeffs[i];
      wrapped = true;
    }
  }
  std::vector<Arc> arcs;
  for (auto& [off, wt] : by_offset)
    if (!is_zero(wt)) arcs.push_back(Arc{off, wt});
  return arcs;
}

bool oracle_fits(const CirculantSpec<BigInt>& spec, const OracleLimits& limits) {
  const std::size_t nk = spec.n * spec.k;
  return limits.force || (nk <= limits.max_rows && nk <= limits.max_cols);
}

const char* const kWrapWarning = "band wraps around (t + 1 > n); coefficients sharing an offset were merged";

}  // namespace

BandedResult<Poly<BigInt>> banded_per_z(const CirculantSpec<BigInt>& spec, const OracleLimits& fallback) {
  spec.validate();
  BandedResult<Poly<BigInt>> out;
  bool wrapped = spec.band() > spec.n;
  const auto arcs = merged_arcs(spec, wrapped);
  if (wrapped) {
    out.stats.warning = kWrapWarning;
    if (oracle_fits(spec, fallback)) {
      out.stats.oracle_fallback = true;
      out.stats.warning = "band wraps around (t + 1 > n); evaluated by the brute-force oracle";
      out.value = per_z_oracle(circulant_matrix(spec), fallback);
      return out;
    }
  }
  out.value = run_banded<Poly<BigInt>>(
      spec, arcs, [](const Poly<BigInt>& p) { return p.shifted(1); }, out.stats);
  return out;
}

BandedResult<BigInt> banded_per_z_at(const CirculantSpec<BigInt>& spec, const BigInt& z,
                                     const OracleLimits& fallback) {
  spec.validate();
  BandedResult<BigInt> out;
  bool wrapped = spec.band() > spec.n;
  const auto arcs = merged_arcs(spec, wrapped);
  if (wrapped) {
    out.stats.warning = kWrapWarning;
    if (oracle_fits(spec, fallback)) {
      out.stats.oracle_fallback = true;
      out.stats.warning = "band wraps around (t + 1 > n); evaluated by the brute-force oracle";
      out.value = per_z_oracle(circulant_matrix(spec), fallback).eval(z);
      return out;
    }
  }
  out.value = run_banded<BigInt>(
      spec, arcs, [&z](const BigInt& v) { return BigInt(v * z); }, out.stats);
  return out;
}

XZPoly<BigInt> structured_rook_z(const CirculantSpec<BigInt>& spec, std::size_t max_nk, RookStats* stats) {
  spec.validate();
  if (spec.n * spec.k > max_nk)
    throw ResourceLimit("structured rook polynomial limited to nk <= " + std::to_string(max_nk) + " (got " +
                        std::to_string(spec.n * spec.k) + ")");
  ExpansionOptions opts;
  opts.memo_min_rows = 2;
  return rook_poly_recursive(circulant_matrix(spec), stats, opts);
}

}  // namespace cycrook
