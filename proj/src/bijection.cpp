#include "redinv/bijection.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace redinv {

int MoveSequence::braid_count() const {
  return static_cast<int>(std::count_if(moves.begin(), moves.end(), [](const Move& m) { return m.kind == MoveKind::YangBaxter; }));
}

std::string MoveSequence::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < moves.size(); ++k) {
    if (k) out += ' ';
    out += moves[k].label();
  }
  return out;
}

ReducedWord apply_move(const ReducedWord& rho, const Move& m) {
  return m.kind == MoveKind::Commutation ? commutation_move(rho, m.index) : braid_move(rho, m.index);
}

BalancedTableau apply_move(const BalancedTableau& t, const Move& m) {
  return m.kind == MoveKind::Commutation ? tab_commutation(t, m.index) : tab_braid(t, m.index);
}

ReducedWord apply_moves(ReducedWord rho, const MoveSequence& s) {
  for (const auto& m : s.moves) rho = apply_move(rho, m);
  return rho;
}

BalancedTableau apply_moves(BalancedTableau t, const MoveSequence& s) {
  for (const auto& m : s.moves) t = apply_move(t, m);
  return t;
}

MoveSequence descent_to_super(const BalancedTableau& t) {
  MoveSequence seq;
  BalancedTableau cur = t;
  const int len = t.size();
  while (true) {
    std::vector<Cell> pos(static_cast<std::size_t>(len) + 1);
    for (std::size_t k = 0; k < cur.filling().entries().size(); ++k)
      pos[static_cast<std::size_t>(cur.filling().entries()[k])] = cur.filling().cells()[k];
    auto at = [&](int v) { return pos[static_cast<std::size_t>(v)]; };

    std::optional<Move> next;
    for (int i = 1; i < len && !next; ++i)
      if (at(i).row > at(i + 1).row && at(i).col != at(i + 1).col) next = Move{MoveKind::Commutation, i};
    if (!next)
      for (int i = len - 1; i >= 1 && !next; --i)
        if (at(i).row > at(i + 1).row) next = Move{MoveKind::YangBaxter, i + 1};
    if (!next) break;

    auto moved = apply_move(cur, *next);
    if (moved == cur)
      throw std::logic_error("descent stalled at " + cur.to_string() + " with move " + next->label());
    cur = std::move(moved);
    seq.moves.push_back(*next);
  }
  return seq;
}

BalancedTableau word_to_tableau(const ReducedWord& rho, int n) {
  const auto w = word_to_permutation(rho, n);
  if (!is_reduced(rho, n)) throw std::invalid_argument("not a reduced word: " + rho.to_string());
  if (rho.empty()) return super_tableau(w);
  const auto v = pairing_permutation(rho, super_word(w));
  const auto d = rothe_diagram(w);

  // perm(R) reads each sorted row right to left starting from the bottom row,
  // so consecutive blocks of v are the row contents, bottom row first.
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int r : d.rows()) {
    const auto width = static_cast<int>(d.row_cells(r).size());
    std::vector<int> block;
    for (int k = 0; k < width; ++k) block.push_back(v(next++));
    rows.push_back(std::move(block));
  }
  auto t = reconstruct_from_row_multisets(d, rows);
  if (!t) throw std::logic_error("no balanced tableau with the row contents of " + rho.to_string());
  if (tab_permutation(*t) != v) throw std::logic_error("tableau permutation mismatch for " + rho.to_string());
  return BalancedTableau(w, t->filling());
}

BalancedTableau word_to_tableau(const ReducedWord& rho) { return word_to_tableau(rho, rho.min_rank()); }

ReducedWord tableau_to_word(const BalancedTableau& t) {
  const auto down = descent_to_super(t);
  ReducedWord rho = super_word(t.permutation());
  for (auto it = down.moves.rbegin(); it != down.moves.rend(); ++it) rho = apply_move(rho, *it);
  if (t.size() > 0 && pairing_permutation(rho, super_word(t.permutation())) != tab_permutation(t))
    throw std::logic_error("word/tableau permutation mismatch for " + t.to_string());
  return rho;
}

namespace {

std::vector<Move> all_moves(int len) {
  std::vector<Move> moves;
  for (int i = 1; i < len; ++i) moves.push_back({MoveKind::Commutation, i});
  for (int i = 2; i < len; ++i) moves.push_back({MoveKind::YangBaxter, i});
  return moves;
}

}  // namespace

Report verify_poset_isomorphism(const Permutation& w) {
  Report report;
  const std::string bij = "bijection.perm_matching", rank = "bijection.rank", edges = "bijection.edges",
                    square = "bijection.flip_reversal", round = "bijection.round_trip";
  for (const auto& name : {bij, rank, edges, square, round}) report.touch(name);
  const std::string tag = "w=" + w.to_string();
  const int n = w.size();

  const auto words = enumerate_reduced_words(w);
  const auto tabs = enumerate_sbt(w);
  if (words.size() != tabs.size())
    report.fail(bij, tag + " |R(w)|=" + std::to_string(words.size()) + " |SBT(w)|=" + std::to_string(tabs.size()));

  // Match by permutation alone, independently of word_to_tableau.
  std::map<std::vector<int>, const BalancedTableau*> by_perm;
  for (const auto& t : tabs) {
    const auto p = tab_permutation(t);
    std::vector<int> key(p.entries().begin(), p.entries().end());
    if (!by_perm.emplace(key, &t).second) report.fail(bij, tag + " two tableaux share perm " + p.to_string());
  }
  std::map<std::vector<int>, int> word_perms;
  const auto super = super_word(w);

  for (const auto& rho : words) {
    const auto p = rho.empty() ? Permutation(1) : pairing_permutation(rho, super);
    std::vector<int> key(p.entries().begin(), p.entries().end());
    if (++word_perms[key] > 1) report.fail(bij, tag + " two words share perm " + p.to_string());
    auto match = by_perm.find(key);
    if (match == by_perm.end()) {
      report.fail(bij, tag + " no tableau with perm of " + rho.to_string());
      continue;
    }
    const BalancedTableau& t = *match->second;

    BalancedTableau image = t;
    try {
      image = word_to_tableau(rho, n);
    } catch (const std::exception& e) {
      report.fail(bij, tag + " word_to_tableau(" + rho.to_string() + ") threw: " + e.what());
      continue;
    }
    if (!(image == t)) report.fail(bij, tag + " word_to_tableau(" + rho.to_string() + ") != perm match");

    if (word_inversions(rho) != tab_inversions(t))
      report.fail(rank, tag + " " + rho.to_string() + " inv " + std::to_string(word_inversions(rho)) + " vs " +
                            std::to_string(tab_inversions(t)));

    for (const auto& m : all_moves(rho.size())) {
      const auto moved_word = apply_move(rho, m);
      const auto moved_tab = apply_move(t, m);
      const bool word_acts = !(moved_word == rho);
      const bool tab_acts = !(moved_tab == t);
      if (word_acts != tab_acts) {
        report.fail(edges, tag + " " + m.label() + " acts on " + (word_acts ? "word" : "tableau") + " only at " +
                               rho.to_string());
      } else if (word_acts && !(word_to_tableau(moved_word, n) == moved_tab)) {
        report.fail(edges, tag + " " + m.label() + " does not commute with the bijection at " + rho.to_string());
      }
    }

    const auto rev_image = word_to_tableau(rho.reversed(), n);
    if (!(rev_image == flip(t)))
      report.fail(square, tag + " flip(phi(" + rho.to_string() + ")) != phi(rev)");

    try {
      if (!(tableau_to_word(t) == rho)) report.fail(round, tag + " " + rho.to_string());
    } catch (const std::exception& e) {
      report.fail(round, tag + " tableau_to_word threw: " + e.what());
    }
  }
  return report;
}

}  // namespace redinv
