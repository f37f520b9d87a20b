#include "cycrook/partial_maps.hpp"

#include <algorithm>
#include <set>

#include "cycrook/errors.hpp"

namespace cycrook {

PartialInjection::PartialInjection(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  std::set<std::size_t> images;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i && pairs_[i].first == pairs_[i - 1].first)
      throw StructuralError("partial injection repeats domain element " + std::to_string(pairs_[i].first));
    if (!images.insert(pairs_[i].second).second)
      throw StructuralError("partial injection is not injective at image " + std::to_string(pairs_[i].second));
  }
}

IndexSeq PartialInjection::domain() const {
  std::vector<std::size_t> d;
  d.reserve(pairs_.size());
  for (const auto& [i, j] : pairs_) d.push_back(i);
  return IndexSeq(std::move(d));
}

std::optional<std::size_t> PartialInjection::image_of(std::size_t i) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{i, 0});
  if (it != pairs_.end() && it->first == i) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> PartialInjection::preimage_of(std::size_t j) const {
  for (const auto& [i, img] : pairs_)
    if (img == j) return i;
  return std::nullopt;
}

std::string render(const PartialInjection& phi) {
  std::string out = "{";
  for (std::size_t p = 0; p < phi.pairs().size(); ++p) {
    if (p) out += ", ";
    out += std::to_string(phi.pairs()[p].first) + "->" + std::to_string(phi.pairs()[p].second);
  }
  return out + "}";
}

void for_each_injection(const IndexSeq& domain, std::size_t n,
                        const std::function<void(const PartialInjection&)>& visit) {
  std::size_t s = domain.size();
  if (s > n) return;
  std::vector<bool> used(n + 1, false);
  std::vector<PartialInjection::Pair> pairs(s);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == s) {
      visit(PartialInjection(pairs));
      return;
    }
    for (std::size_t j = 1; j <= n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs[pos] = {domain[pos], j};
      rec(pos + 1);
      used[j] = false;
    }
  };
  rec(0);
}

std::vector<PartialInjection> injections(const IndexSeq& domain, std::size_t n) {
  std::vector<PartialInjection> out;
  for_each_injection(domain, n, [&](const PartialInjection& phi) { out.push_back(phi); });
  return out;
}

std::size_t cycle_count(const PartialInjection& phi) {
  std::set<std::size_t> visited;
  std::size_t cycles = 0;
  for (const auto& [start, first_image] : phi.pairs()) {
    if (visited.count(start)) continue;
    std::size_t cur = start;
    while (true) {
      visited.insert(cur);
      auto next = phi.image_of(cur);
      if (!next) break;
      if (*next == start) {
        ++cycles;
        break;
      }
      if (visited.count(*next)) break;
      cur = *next;
    }
  }
  return cycles;
}

std::size_t chain_resolve(const PartialInjection& phi, std::size_t j) {
  if (!phi.in_image(j) || phi.in_domain(j))
    throw ContractViolation("chain_resolve: " + std::to_string(j) + " is not in phi(S) \\ S");
  std::size_t cur = j;
  // Each step moves to a distinct domain element, so this terminates.
  while (phi.in_image(cur)) cur = *phi.preimage_of(cur);
  return cur;
}

IndexSeq rewire(const PartialInjection& phi, const IndexSeq& cols) {
  const std::size_t n = cols.size();
  for (const auto& [i, j] : phi.pairs()) {
    if (i < 1 || i > n || j < 1 || j > n) throw StructuralError("rewire: map refers to a position outside the sequence");
  }
  std::vector<std::size_t> out;
  out.reserve(n - phi.size());
  for (std::size_t pos = 1; pos <= n; ++pos) {
    bool hit = phi.in_image(pos);
    bool placed = phi.in_domain(pos);
    if (hit && !placed) {
      out.push_back(cols[chain_resolve(phi, pos) - 1]);
    } else if (!hit && !placed) {
      out.push_back(cols[pos - 1]);
    }
    // hit && placed: consumed.  placed && !hit: moved away by chain_resolve.
  }
  return IndexSeq(std::move(out));
}

}  // namespace cycrook
