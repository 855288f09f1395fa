#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "redinv/diagrams.hpp"
#include "redinv/permutation.hpp"

namespace redinv {

/// A standard balanced tableau: a bijective filling of D(w) with 1..l such that
/// every cell has as many greater entries to its right as smaller entries above.
class BalancedTableau {
 public:
  /// Validates shape, bijectivity and balance against w.
  BalancedTableau(Permutation w, Filling filling);

  /// Recovers w from the cell set; throws std::invalid_argument when the
  /// cells are not a Rothe diagram or the filling is not balanced.
  static BalancedTableau from_filling(Filling filling);
  static BalancedTableau parse(std::string_view text) { return from_filling(Filling::parse(text)); }

  const Permutation& permutation() const { return w_; }
  const Filling& filling() const { return filling_; }
  int size() const { return filling_.size(); }
  Cell cell_of(int value) const { return filling_.cell_of(value); }

  std::string to_string() const { return filling_.to_string(); }

  /// Tableaux are equal when their fillings are: the cell set fixes w up to
  /// trailing fixed points.
  friend bool operator==(const BalancedTableau& a, const BalancedTableau& b) { return a.filling_ == b.filling_; }
  friend bool operator<(const BalancedTableau& a, const BalancedTableau& b) { return a.filling_ < b.filling_; }

 private:
  struct Trusted {};
  BalancedTableau(Trusted, Permutation w, Filling filling) : w_(std::move(w)), filling_(std::move(filling)) {}
  friend BalancedTableau make_trusted_tableau(Permutation, Filling);

  Permutation w_;
  Filling filling_;
};

/// True when the balance condition holds at every cell. Throws
/// std::invalid_argument unless the entries are exactly 1..l.
bool is_balanced(const Filling& f);

/// SBT(w) ordered by entry sequence in row-major cell order.
std::vector<BalancedTableau> enumerate_sbt(const Permutation& w);

/// The tableau whose reverse row reading word is the identity.
BalancedTableau super_tableau(const Permutation& w);

/// c_i: exchanges entries i and i+1 when they share neither row nor column.
BalancedTableau tab_commutation(const BalancedTableau& t, int i);

/// b_i: exchanges i-1 and i+1 when one sits above i in its column and the
/// other right of i in its row.
BalancedTableau tab_braid(const BalancedTableau& t, int i);

/// Pairs i < j with i in a strictly higher row and a different column than j.
long long tab_inversions(const BalancedTableau& t);

/// Pairs i < j with i strictly above j in the same column.
long long column_inversions(const BalancedTableau& t);

/// Sum over rows of the pairs i < j with i left of j.
long long row_coinversions(const BalancedTableau& t);

/// Sort rows decreasing, then read right to left, bottom row first.
Permutation tab_permutation(const BalancedTableau& t);

/// Row contents, one list per occupied row of the diagram, bottom row first.
std::vector<std::vector<int>> row_contents(const BalancedTableau& t);

/// The unique balanced arrangement of the given row contents on d, if any.
/// `rows` lists contents bottom row first, aligned with d.rows(). Throws
/// std::invalid_argument when the sizes do not match the rows or the
/// contents are not a partition of {1..l}, or when d is not a Rothe diagram.
std::optional<BalancedTableau> reconstruct_from_row_multisets(const Diagram& d,
                                                              const std::vector<std::vector<int>>& rows);

/// Transpose and replace i with l-i+1; maps SBT(w) to SBT(w^{-1}).
BalancedTableau flip(const BalancedTableau& t);

/// Entrywise complement i -> l-i+1 on SBT(w_0). Throws std::invalid_argument
/// for any other permutation.
BalancedTableau psi(const BalancedTableau& t);

/// (n-2)(n-1)n(3n-5)/24, the inversion number of psi(super) for w_0 in S_n.
long long min_inv_w0(int n);

}  // namespace redinv
