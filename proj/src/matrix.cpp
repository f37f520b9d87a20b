#include "cycrook/matrix.hpp"

#include <algorithm>
#include <set>

namespace cycrook {

IndexSeq IndexSeq::range(std::size_t first, std::size_t last) {
  std::vector<std::size_t> items;
  for (std::size_t i = first; i <= last && last != 0; ++i) items.push_back(i);
  return IndexSeq(std::move(items));
}

bool IndexSeq::contains(std::size_t v) const {
  return std::find(items_.begin(), items_.end(), v) != items_.end();
}

bool IndexSeq::strictly_increasing() const {
  return std::adjacent_find(items_.begin(), items_.end(), std::greater_equal<>()) == items_.end();
}

bool IndexSeq::has_repeats() const {
  std::set<std::size_t> seen(items_.begin(), items_.end());
  return seen.size() != items_.size();
}

bool IndexSeq::within(std::size_t bound) const {
  return std::all_of(items_.begin(), items_.end(), [&](std::size_t v) { return v >= 1 && v <= bound; });
}

std::string render(const IndexSeq& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

IndexSeq repeat_seq(const IndexSeq& items, std::size_t k) {
  std::vector<std::size_t> out;
  out.reserve(items.size() * k);
  for (std::size_t v : items) out.insert(out.end(), k, v);
  return IndexSeq(std::move(out));
}

IndexSeq complement_of(const IndexSeq& removed, std::size_t bound) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= bound; ++i)
    if (!removed.contains(i)) out.push_back(i);
  return IndexSeq(std::move(out));
}

void enumerate_increasing(std::size_t s, std::size_t m, const std::function<void(const IndexSeq&)>& visit) {
  if (s > m) return;
  std::vector<std::size_t> cur(s);
  for (std::size_t i = 0; i < s; ++i) cur[i] = i + 1;
  while (true) {
    visit(IndexSeq(cur));
    // Advance the rightmost position that still has room.
    std::size_t i = s;
    while (i > 0 && cur[i - 1] == m - s + i) --i;
    if (i == 0) return;
    ++cur[i - 1];
    for (std::size_t j = i; j < s; ++j) cur[j] = cur[j - 1] + 1;
  }
}

std::vector<IndexSeq> increasing_sequences(std::size_t s, std::size_t m) {
  std::vector<IndexSeq> out;
  enumerate_increasing(s, m, [&](const IndexSeq& seq) { out.push_back(seq); });
  return out;
}

}  // namespace cycrook
