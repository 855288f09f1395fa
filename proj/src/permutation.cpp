#include "redinv/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "redinv/text.hpp"

namespace redinv {

Permutation::Permutation(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be at least 1");
  entries_.resize(static_cast<std::size_t>(n));
  std::iota(entries_.begin(), entries_.end(), 1);
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("permutation size must be at least 1");
  const int n = size();
  std::vector<bool> seen(entries_.size() + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of {1.." + std::to_string(n) + "}: " +
                                  join_ints(entries_, ","));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  auto values = parse_int_list(text, ',');
  if (values.empty()) throw std::invalid_argument("empty permutation");
  return Permutation(std::move(values));
}

int Permutation::at(int i) const {
  if (i < 1 || i > size())
    throw std::out_of_range("permutation index " + std::to_string(i) + " out of range");
  return entries_[static_cast<std::size_t>(i - 1)];
}

int Permutation::position_of(int v) const {
  auto it = std::find(entries_.begin(), entries_.end(), v);
  if (it == entries_.end())
    throw std::out_of_range("value " + std::to_string(v) + " not in permutation");
  return static_cast<int>(it - entries_.begin()) + 1;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (entries_[k] != static_cast<int>(k) + 1) return false;
  return true;
}

std::string Permutation::to_string() const { return join_ints(entries_, ","); }

long long length(const Permutation& p) {
  const auto e = p.entries();
  long long count = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (e[i] > e[j]) ++count;
  return count;
}

Permutation apply_position_swap(const Permutation& p, int i) {
  if (i < 1 || i >= p.size())
    throw std::out_of_range("swap index " + std::to_string(i) + " out of range for n=" +
                            std::to_string(p.size()));
  std::vector<int> e(p.entries().begin(), p.entries().end());
  std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(i)]);
  return Permutation(std::move(e));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> e(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) e[static_cast<std::size_t>(i - 1)] = p.at(q.at(i));
  return Permutation(std::move(e));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> e(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) e[static_cast<std::size_t>(p.at(i) - 1)] = i;
  return Permutation(std::move(e));
}

Permutation longest_permutation(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(e));
}

Permutation simple_transposition(int n, int i) { return apply_position_swap(Permutation(n), i); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

}  // namespace redinv
