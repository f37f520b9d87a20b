#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cycrook/matrix.hpp"

namespace cycrook {

/// Injective map from a set of row indices into column indices.
/// Row p and column p denote the same point when cycles are counted.
class PartialInjection {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  PartialInjection() = default;
  // Throws StructuralError on a repeated domain element or a repeated image.
  explicit PartialInjection(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const { return pairs_; }  // sorted by domain element
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  IndexSeq domain() const;
  bool in_domain(std::size_t i) const { return image_of(i).has_value(); }
  bool in_image(std::size_t j) const { return preimage_of(j).has_value(); }
  std::optional<std::size_t> image_of(std::size_t i) const;
  std::optional<std::size_t> preimage_of(std::size_t j) const;

  friend bool operator==(const PartialInjection&, const PartialInjection&) = default;

 private:
  std::vector<Pair> pairs_;
};

// "{1->2, 2->1}"
std::string render(const PartialInjection& phi);

// All injections domain -> 1..n, lexicographic in the image tuple.
void for_each_injection(const IndexSeq& domain, std::size_t n,
                        const std::function<void(const PartialInjection&)>& visit);
std::vector<PartialInjection> injections(const IndexSeq& domain, std::size_t n);

// Number of orbits i -> phi(i) -> ... -> i that stay inside the domain.
std::size_t cycle_count(const PartialInjection& phi);

// Walks phi^-1 back from j in phi(S) \ S until it leaves phi(S); the stop
// point lies in S \ phi(S). Throws ContractViolation when j is not in phi(S) \ S.
std::size_t chain_resolve(const PartialInjection& phi, std::size_t j);

// Column rewiring: positions in phi(S) are dropped, except that a position
// j in phi(S) \ S instead receives the item from position chain_resolve(phi, j),
// which is vacated. The result has cols.size() - |S| items.
IndexSeq rewire(const PartialInjection& phi, const IndexSeq& cols);

}  // namespace cycrook
