#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "redinv/permutation.hpp"

namespace redinv {

/// A word in the simple transpositions s_1, s_2, ...
///
/// Letters are stored in display order (leftmost printed letter first). The
/// combinatorial index i runs from right to left: letter(1) is the rightmost
/// letter, which acts first on the identity, and letter(size()) the leftmost.
/// Every positional operation in this header takes that right-to-left index.
class ReducedWord {
 public:
  ReducedWord() = default;
  explicit ReducedWord(std::vector<int> display_letters);

  /// Comma-separated letters in display order; "" is the empty word.
  static ReducedWord parse(std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  /// Letter at right-to-left index i, 1 <= i <= size().
  int letter(int i) const;

  /// Display-order storage position (0-based) of right-to-left index i.
  int display_position(int i) const { return size() - i; }

  std::span<const int> display() const { return letters_; }

  /// Smallest rank n whose generators contain every letter (max letter + 1).
  int min_rank() const;

  ReducedWord reversed() const;
  std::string to_string() const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;

 private:
  std::vector<int> letters_;
};

/// Maximal strictly increasing display-order segments, leftmost first.
struct RunDecomposition {
  std::vector<std::vector<int>> runs;
  std::string to_string() const;
  friend bool operator==(const RunDecomposition&, const RunDecomposition&) = default;
};

/// Applies the letters right-to-left as position swaps to the identity of S_n.
/// Throws std::out_of_range when a letter is outside {1..n-1}.
Permutation word_to_permutation(const ReducedWord& rho, int n);

/// Same as above with n = rho.min_rank().
Permutation word_to_permutation(const ReducedWord& rho);

bool is_reduced(const ReducedWord& rho, int n);
bool is_reduced(const ReducedWord& rho);

/// R(w), sorted lexicographically by display-order letters.
std::vector<ReducedWord> enumerate_reduced_words(const Permutation& w);

RunDecomposition run_decomposition(const ReducedWord& rho);

bool is_super_yamanouchi(const ReducedWord& rho);

/// The unique super-Yamanouchi reduced word for w.
ReducedWord super_word(const Permutation& w);

/// c_i: swaps letters i and i+1 when they differ by more than one.
ReducedWord commutation_move(const ReducedWord& rho, int i);

/// b_i: rewrites a letter triple (a,b,a) at i-1,i,i+1 with |a-b| = 1 as (b,a,b).
ReducedWord braid_move(const ReducedWord& rho, int i);

/// The permutation in S_l matching the letters of the super-Yamanouchi word
/// with those of rho: entry i is the index of the letter of rho paired with
/// the i-th letter of the super word. Throws std::invalid_argument when rho is
/// not reduced.
Permutation pairing_permutation(const ReducedWord& rho);

/// Same as above, reusing a precomputed super word for the same permutation.
Permutation pairing_permutation(const ReducedWord& rho, const ReducedWord& super);

/// Minimum number of Coxeter moves from rho to the super-Yamanouchi word.
long long word_inversions(const ReducedWord& rho);
/// Same, with the super word of rho's permutation supplied by the caller.
long long word_inversions(const ReducedWord& rho, const ReducedWord& super);

/// sum_i |rho_i - sigma_{(perm(sigma) perm(rho)^{-1})_i}|. Throws
/// std::invalid_argument when rho and sigma are words for different permutations.
long long yang_baxter_count(const ReducedWord& rho, const ReducedWord& sigma);

/// Kendall-style pairwise quantity l(perm(rho,sigma)) - yang_baxter_count.
/// Not a distance: it undercounts for some pairs. May be negative.
long long naive_pair_inversions(const ReducedWord& rho, const ReducedWord& sigma);

}  // namespace redinv
