#pragma once

#include <string>
#include <vector>

#include "redinv/report.hpp"
#include "redinv/tableaux.hpp"
#include "redinv/words.hpp"

namespace redinv {

enum class MoveKind { Commutation, YangBaxter };

/// c_i or b_i. For words `index` is the right-to-left letter index; for
/// tableaux it is the entry value. Both models use the same label for
/// corresponding moves.
struct Move {
  MoveKind kind = MoveKind::Commutation;
  int index = 1;

  std::string label() const { return (kind == MoveKind::Commutation ? "c" : "b") + std::to_string(index); }
  friend bool operator==(const Move&, const Move&) = default;
};

/// Moves in application order: moves.front() is applied first.
struct MoveSequence {
  std::vector<Move> moves;

  int size() const { return static_cast<int>(moves.size()); }
  int braid_count() const;
  std::string to_string() const;
};

ReducedWord apply_move(const ReducedWord& rho, const Move& m);
BalancedTableau apply_move(const BalancedTableau& t, const Move& m);

ReducedWord apply_moves(ReducedWord rho, const MoveSequence& s);
BalancedTableau apply_moves(BalancedTableau t, const MoveSequence& s);

/// A shortest move sequence from t to the super tableau. At each step: if
/// some i sits strictly above i+1 in another column, apply c_i for the
/// smallest such i; otherwise take the largest i above i+1 in its column and
/// apply b_{i+1}.
MoveSequence descent_to_super(const BalancedTableau& t);

/// The tableau whose permutation equals the pairing permutation of rho.
/// Throws std::logic_error if the construction is inconsistent.
BalancedTableau word_to_tableau(const ReducedWord& rho);
/// Same, with the tableau's permutation taken in S_n.
BalancedTableau word_to_tableau(const ReducedWord& rho, int n);

/// Inverse of word_to_tableau, by replaying the tableau's descent to the
/// super tableau backwards on the super word.
ReducedWord tableau_to_word(const BalancedTableau& t);

/// Exhaustive checks of the perm-matching bijection on R(w) and SBT(w):
/// bijectivity, rank preservation, edge correspondence and the flip/reversal
/// square.
Report verify_poset_isomorphism(const Permutation& w);

}  // namespace redinv
