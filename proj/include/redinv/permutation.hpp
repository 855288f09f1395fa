#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace redinv {

/// A permutation of {1..n} in one-line notation.
///
/// All public indexing is 1-based: `at(i)` is w_i for 1 <= i <= n. Values are
/// immutable once constructed; every operation returns a new permutation.
class Permutation {
 public:
  /// The identity of S_n.
  explicit Permutation(int n = 1);

  /// Throws std::invalid_argument unless `entries` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n) { return Permutation(n); }

  /// Parses comma-separated one-line notation, e.g. "4,2,1,5,3".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  int at(int i) const;
  int operator()(int i) const { return at(i); }

  /// Position of value v, i.e. w^{-1}(v).
  int position_of(int v) const;

  std::span<const int> entries() const { return entries_; }

  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// Number of pairs i < j with w_i > w_j.
long long length(const Permutation& p);

/// Exchanges the entries at positions i and i+1 (the left action of s_i).
/// Throws std::out_of_range unless 1 <= i <= n-1.
Permutation apply_position_swap(const Permutation& p, int i);

/// (p o q)_i = p_{q_i}. Throws std::invalid_argument on size mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// n (n-1) ... 2 1.
Permutation longest_permutation(int n);

/// The simple transposition s_i as an element of S_n.
Permutation simple_transposition(int n, int i);

/// Every permutation of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

}  // namespace redinv
