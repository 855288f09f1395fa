#include "redinv/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "redinv/text.hpp"

namespace redinv {

ReducedWord::ReducedWord(std::vector<int> display_letters) : letters_(std::move(display_letters)) {
  for (int a : letters_)
    if (a < 1) throw std::invalid_argument("word letters must be positive: " + to_string());
}

ReducedWord ReducedWord::parse(std::string_view text) { return ReducedWord(parse_int_list(text, ',')); }

int ReducedWord::letter(int i) const {
  if (i < 1 || i > size())
    throw std::out_of_range("word index " + std::to_string(i) + " out of range for length " +
                            std::to_string(size()));
  return letters_[static_cast<std::size_t>(size() - i)];
}

int ReducedWord::min_rank() const {
  return letters_.empty() ? 1 : *std::max_element(letters_.begin(), letters_.end()) + 1;
}

ReducedWord ReducedWord::reversed() const { return ReducedWord(std::vector<int>(letters_.rbegin(), letters_.rend())); }

std::string ReducedWord::to_string() const { return join_ints(letters_, ","); }

std::string RunDecomposition::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    if (r) out += " | ";
    out += join_ints(runs[r], ",");
  }
  return out;
}

namespace {

// Applies the letters right-to-left to the identity of S_n. Returns false as
// soon as a step fails to add an inversion; `entries` then holds a partial state.
bool apply_letters(const ReducedWord& rho, int n, std::vector<int>& entries) {
  entries.resize(static_cast<std::size_t>(n));
  std::iota(entries.begin(), entries.end(), 1);
  bool reduced = true;
  for (int i = 1; i <= rho.size(); ++i) {
    const int a = rho.letter(i);
    if (a >= n)
      throw std::out_of_range("letter " + std::to_string(a) + " out of range for n=" + std::to_string(n));
    auto& lo = entries[static_cast<std::size_t>(a - 1)];
    auto& hi = entries[static_cast<std::size_t>(a)];
    if (lo > hi) reduced = false;
    std::swap(lo, hi);
  }
  return reduced;
}

void peel(std::vector<int>& v, std::vector<int>& prefix, std::vector<ReducedWord>& out) {
  bool any = false;
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    if (v[k] <= v[k + 1]) continue;
    any = true;
    std::swap(v[k], v[k + 1]);
    prefix.push_back(static_cast<int>(k) + 1);
    peel(v, prefix, out);
    prefix.pop_back();
    std::swap(v[k], v[k + 1]);
  }
  if (!any) out.emplace_back(prefix);
}

}  // namespace

Permutation word_to_permutation(const ReducedWord& rho, int n) {
  std::vector<int> entries;
  apply_letters(rho, n, entries);
  return Permutation(std::move(entries));
}

Permutation word_to_permutation(const ReducedWord& rho) { return word_to_permutation(rho, rho.min_rank()); }

bool is_reduced(const ReducedWord& rho, int n) {
  std::vector<int> entries;
  return apply_letters(rho, n, entries);
}

bool is_reduced(const ReducedWord& rho) { return is_reduced(rho, rho.min_rank()); }

std::vector<ReducedWord> enumerate_reduced_words(const Permutation& w) {
  // w = s_a w' with l(w') = l(w) - 1 exactly when a is a descent of w, so the
  // leftmost letter ranges over descents. Ascending descents in a depth-first
  // walk emit the words already in lexicographic order.
  std::vector<int> v(w.entries().begin(), w.entries().end());
  std::vector<int> prefix;
  std::vector<ReducedWord> out;
  peel(v, prefix, out);
  return out;
}

RunDecomposition run_decomposition(const ReducedWord& rho) {
  RunDecomposition d;
  const auto letters = rho.display();
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k == 0 || letters[k] <= letters[k - 1]) d.runs.emplace_back();
    d.runs.back().push_back(letters[k]);
  }
  return d;
}

bool is_super_yamanouchi(const ReducedWord& rho) {
  const auto d = run_decomposition(rho);
  for (std::size_t r = 0; r < d.runs.size(); ++r) {
    const auto& run = d.runs[r];
    for (std::size_t k = 1; k < run.size(); ++k)
      if (run[k] != run[k - 1] + 1) return false;
    if (r > 0 && !(d.runs[r - 1].front() > run.front())) return false;
  }
  return true;
}

ReducedWord super_word(const Permutation& w) {
  const int n = w.size();
  std::vector<int> v(w.entries().begin(), w.entries().end());
  // 1-based views into v
  auto at = [&](int k) -> int& { return v[static_cast<std::size_t>(k - 1)]; };
  std::vector<int> letters;
  while (true) {
    int i = 0;
    for (int k = n - 1; k >= 1; --k)
      if (at(k) > at(k + 1)) {
        i = k;
        break;
      }
    if (i == 0) break;
    int j = n + 1;
    for (int k = i + 1; k <= n; ++k)
      if (at(i) < at(k)) {
        j = k;
        break;
      }
    for (int a = i; a <= j - 2; ++a) {
      letters.push_back(a);
      std::swap(at(a), at(a + 1));
    }
  }
  return ReducedWord(std::move(letters));
}

ReducedWord commutation_move(const ReducedWord& rho, int i) {
  if (i < 1 || i >= rho.size())
    throw std::out_of_range("commutation index " + std::to_string(i) + " out of range for length " +
                            std::to_string(rho.size()));
  if (std::abs(rho.letter(i) - rho.letter(i + 1)) <= 1) return rho;
  std::vector<int> letters(rho.display().begin(), rho.display().end());
  std::swap(letters[static_cast<std::size_t>(rho.display_position(i))],
            letters[static_cast<std::size_t>(rho.display_position(i + 1))]);
  return ReducedWord(std::move(letters));
}

ReducedWord braid_move(const ReducedWord& rho, int i) {
  if (i <= 1 || i >= rho.size())
    throw std::out_of_range("braid index " + std::to_string(i) + " out of range for length " +
                            std::to_string(rho.size()));
  const int outer = rho.letter(i - 1);
  const int middle = rho.letter(i);
  if (outer != rho.letter(i + 1) || std::abs(outer - middle) != 1) return rho;
  std::vector<int> letters(rho.display().begin(), rho.display().end());
  letters[static_cast<std::size_t>(rho.display_position(i - 1))] = middle;
  letters[static_cast<std::size_t>(rho.display_position(i))] = outer;
  letters[static_cast<std::size_t>(rho.display_position(i + 1))] = middle;
  return ReducedWord(std::move(letters));
}

Permutation pairing_permutation(const ReducedWord& rho, const ReducedWord& super) {
  const int len = rho.size();
  if (super.size() != len) throw std::invalid_argument("pairing: super word has a different length");
  if (len == 0) return Permutation(1);
  std::vector<bool> paired(static_cast<std::size_t>(len) + 1, false);
  std::vector<int> perm(static_cast<std::size_t>(len), 0);
  for (int i = len; i >= 1; --i) {
    int k = super.letter(i);
    for (int j = len; j >= 1; --j) {
      if (paired[static_cast<std::size_t>(j)]) continue;
      const int a = rho.letter(j);
      if (a == k) {
        paired[static_cast<std::size_t>(j)] = true;
        perm[static_cast<std::size_t>(i - 1)] = j;
        break;
      }
      if (a == k - 1) --k;
    }
    if (perm[static_cast<std::size_t>(i - 1)] == 0)
      throw std::logic_error("pairing failed for " + rho.to_string() + " against " + super.to_string());
  }
  return Permutation(std::move(perm));
}

Permutation pairing_permutation(const ReducedWord& rho) {
  if (!is_reduced(rho)) throw std::invalid_argument("not a reduced word: " + rho.to_string());
  return pairing_permutation(rho, super_word(word_to_permutation(rho)));
}

namespace {

long long letter_sum(const ReducedWord& rho) {
  return std::accumulate(rho.display().begin(), rho.display().end(), 0LL);
}

struct PairContext {
  Permutation relative;  // perm(sigma) perm(rho)^{-1}
  long long offset = 0;  // sum_i |rho_i - sigma_{relative_i}|
};

PairContext pair_context(const ReducedWord& rho, const ReducedWord& sigma) {
  if (!is_reduced(rho)) throw std::invalid_argument("not a reduced word: " + rho.to_string());
  if (!is_reduced(sigma)) throw std::invalid_argument("not a reduced word: " + sigma.to_string());
  const int n = std::max(rho.min_rank(), sigma.min_rank());
  const auto w = word_to_permutation(rho, n);
  if (rho.size() != sigma.size() || w != word_to_permutation(sigma, n))
    throw std::invalid_argument("words " + rho.to_string() + " and " + sigma.to_string() +
                                " are not reduced words for the same permutation");
  if (rho.empty()) return {Permutation(1), 0};
  const auto super = super_word(w);
  PairContext ctx{compose(pairing_permutation(sigma, super), inverse(pairing_permutation(rho, super))), 0};
  for (int i = 1; i <= rho.size(); ++i) ctx.offset += std::abs(rho.letter(i) - sigma.letter(ctx.relative(i)));
  return ctx;
}

}  // namespace

long long word_inversions(const ReducedWord& rho) {
  if (!is_reduced(rho)) throw std::invalid_argument("not a reduced word: " + rho.to_string());
  return word_inversions(rho, super_word(word_to_permutation(rho)));
}

long long word_inversions(const ReducedWord& rho, const ReducedWord& super) {
  if (rho.empty()) return 0;
  return length(pairing_permutation(rho, super)) - (letter_sum(super) - letter_sum(rho));
}

long long yang_baxter_count(const ReducedWord& rho, const ReducedWord& sigma) {
  return pair_context(rho, sigma).offset;
}

long long naive_pair_inversions(const ReducedWord& rho, const ReducedWord& sigma) {
  const auto ctx = pair_context(rho, sigma);
  return length(ctx.relative) - ctx.offset;
}

}  // namespace redinv
