// One line per acceptance criterion: "ACk PASS|FAIL <seconds>s <detail>".
// Pass --stress to add the n = 6 diameter run.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "redinv/bijection.hpp"
#include "redinv/graphs.hpp"

using namespace redinv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first few are kept for the report line.
struct Tally {
  bool pass = true;
  std::ostringstream notes;
  int shown = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (shown++ < 3) notes << " [" << what << "]";
  }
  Outcome done(const std::string& summary) { return {pass, summary + notes.str()}; }
};

Permutation P(const char* s) { return Permutation::parse(s); }
ReducedWord W(const char* s) { return ReducedWord::parse(s); }

oracle::Word raw(const ReducedWord& w) { return {w.display().begin(), w.display().end()}; }

oracle::Tab raw(const BalancedTableau& t) {
  oracle::Tab out;
  for (const auto& c : t.filling().diagram().cells()) out[{c.row, c.col}] = t.filling().entry(c);
  return out;
}

Outcome ac1() {
  Tally t;
  const std::set<std::string> words{"4,2,1,2,3", "4,1,2,1,3", "4,1,2,3,1", "2,4,1,2,3", "2,1,4,2,3", "2,1,2,4,3",
                                    "1,4,2,3,1", "1,2,4,3,1", "1,4,2,1,3", "1,2,4,1,3", "1,2,1,4,3"};
  const std::set<std::string> tableaux{
      "1,1,3;1,2,2;1,3,1;2,1,4;4,3,5", "1,1,3;1,2,4;1,3,1;2,1,2;4,3,5", "1,1,3;1,2,4;1,3,2;2,1,1;4,3,5",
      "1,1,3;1,2,2;1,3,1;2,1,5;4,3,4", "1,1,4;1,2,2;1,3,1;2,1,5;4,3,3", "1,1,4;1,2,3;1,3,1;2,1,5;4,3,2",
      "1,1,3;1,2,5;1,3,2;2,1,1;4,3,4", "1,1,4;1,2,5;1,3,2;2,1,1;4,3,3", "1,1,3;1,2,5;1,3,1;2,1,2;4,3,4",
      "1,1,4;1,2,5;1,3,1;2,1,2;4,3,3", "1,1,4;1,2,5;1,3,1;2,1,3;4,3,2"};
  const auto w = P("4,2,1,5,3");
  const auto r = enumerate_reduced_words(w);
  const auto s = enumerate_sbt(w);
  std::set<std::string> got_r, got_s;
  for (const auto& x : r) got_r.insert(x.to_string());
  for (const auto& x : s) got_s.insert(x.to_string());
  t.expect(r.size() == 11 && got_r == words, "R(42153) differs from the expected list");
  t.expect(s.size() == 11 && got_s == tableaux, "SBT(42153) differs from the expected list");
  return t.done("|R|=" + std::to_string(r.size()) + " |SBT|=" + std::to_string(s.size()));
}

Outcome ac2() {
  Tally t;
  const auto rho = W("5,6,3,4,5,7,3,1,4,2,3,6");
  const auto super = super_word(P("4,1,7,5,8,2,3,6"));
  const auto perm = pairing_permutation(rho);
  const auto inv = word_inversions(rho);
  const auto yb = yang_baxter_count(rho, super);
  t.expect(super == W("5,6,7,4,5,3,4,5,6,1,2,3"), "super " + super.to_string());
  t.expect(perm == P("2,3,5,1,8,9,10,4,6,7,11,12"), "perm " + perm.to_string());
  t.expect(inv == 11, "inv " + std::to_string(inv));
  t.expect(yb == 2, "yang-baxter " + std::to_string(yb));
  return t.done("super=" + super.to_string() + " perm=" + perm.to_string() + " inv=" + std::to_string(inv) +
                " yb=" + std::to_string(yb));
}

Outcome ac3() {
  Tally t;
  long long checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto super = super_word(w);
      const auto reach = oracle::word_bfs(raw(super));
      const auto words = enumerate_reduced_words(w);
      t.expect(reach.size() == words.size(), "graph size for w=" + w.to_string());
      int rank0 = 0;
      for (const auto& rho : words) {
        const auto inv = word_inversions(rho, super);
        t.expect(inv == reach.at(raw(rho)).distance, "w=" + w.to_string() + " rho=" + rho.to_string());
        if (inv == 0) {
          ++rank0;
          t.expect(rho == super, "rank 0 at " + rho.to_string());
        }
        ++checked;
      }
      t.expect(rank0 == 1, "rank-0 count for w=" + w.to_string());
    }
  return t.done(std::to_string(checked) + " words over S_1..S_5");
}

Outcome ac4() {
  Tally t;
  long long checked = 0;
  for (const auto& w : all_permutations(4)) {
    const auto reach = oracle::tab_bfs(raw(super_tableau(w)));
    for (const auto& r : enumerate_sbt(w)) {
      const auto& here = reach.at(raw(r));
      t.expect(tab_inversions(r) == length(tab_permutation(r)) - row_coinversions(r), "identity at " + r.to_string());
      t.expect(tab_inversions(r) == here.distance, "distance at " + r.to_string());
      t.expect(column_inversions(r) == here.braids, "braids at " + r.to_string());
      ++checked;
    }
  }
  return t.done(std::to_string(checked) + " tableaux over S_4");
}

Outcome ac5() {
  Tally t;
  long long perms = 0, elements = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto r = enumerate_reduced_words(w);
      const auto s = enumerate_sbt(w);
      t.expect(r.size() == s.size(), "count for w=" + w.to_string());
      ++perms;
      if (n > 4) continue;

      // match by permutation, independently of word_to_tableau
      std::map<Permutation, BalancedTableau> by_perm;
      for (const auto& x : s) by_perm.emplace(tab_permutation(x), x);
      t.expect(by_perm.size() == s.size(), "tableau perms collide for w=" + w.to_string());
      const auto super = super_word(w);
      auto match = [&](const ReducedWord& rho) { return by_perm.at(pairing_permutation(rho, super)); };
      std::set<std::string> image;
      for (const auto& rho : r) {
        const auto x = match(rho);
        image.insert(x.to_string());
        t.expect(word_inversions(rho, super) == tab_inversions(x), "rank at " + rho.to_string());
        t.expect(word_to_tableau(rho, n) == x, "word_to_tableau at " + rho.to_string());
        std::vector<Move> moves;
        for (int i = 1; i < rho.size(); ++i) moves.push_back({MoveKind::Commutation, i});
        for (int i = 2; i < rho.size(); ++i) moves.push_back({MoveKind::YangBaxter, i});
        for (const auto& m : moves) {
          const auto rho2 = apply_move(rho, m);
          const auto x2 = apply_move(x, m);
          t.expect((rho2 == rho) == (x2 == x), m.label() + " acts on one side only at " + rho.to_string());
          t.expect(match(rho2) == x2, m.label() + " does not commute at " + rho.to_string());
        }
        ++elements;
      }
      t.expect(image.size() == s.size(), "not a bijection for w=" + w.to_string());
    }
  return t.done("counts over " + std::to_string(perms) + " permutations, bijection over " +
                std::to_string(elements) + " words");
}

Outcome ac6() {
  Tally t;
  const auto rho = W("1,2,1,3,2,1"), sigma = W("1,3,2,1,3,2");
  const auto naive = naive_pair_inversions(rho, sigma);
  const auto reach = oracle::word_bfs(raw(rho)).at(raw(sigma));
  const auto g = build_graph(P("4,3,2,1"), Model::Words);
  const int dist = bfs_distance(g, rho.to_string(), sigma.to_string());
  const int braids = min_braid_count(g, rho.to_string(), sigma.to_string());
  t.expect(naive == 2, "naive " + std::to_string(naive));
  t.expect(reach.distance == 4 && dist == 4, "distance");
  t.expect(reach.braids == 2 && braids == 2, "braids");
  return t.done("naive=" + std::to_string(naive) + " bfs=" + std::to_string(dist) + " braids=" + std::to_string(braids));
}

Outcome ac7() {
  Tally t;
  const long long expected[] = {1, 7, 25};
  std::string summary;
  for (int n = 3; n <= 5; ++n) {
    const auto w0 = longest_permutation(n);
    const int d = diameter(build_graph(w0, Model::Words));
    const auto tg = build_graph(w0, Model::Tableaux);
    const auto p = super_tableau(w0);
    const int pb = bfs_distance(tg, p.to_string(), psi(p).to_string());
    const auto want = expected[n - 3];
    t.expect(min_inv_w0(n) == want, "formula n=" + std::to_string(n));
    t.expect(d == want, "diameter n=" + std::to_string(n) + " is " + std::to_string(d));
    t.expect(pb == want, "dist(super, psi(super)) n=" + std::to_string(n) + " is " + std::to_string(pb));
    summary += (summary.empty() ? "" : " ") + ("n=" + std::to_string(n) + ":" + std::to_string(d));
  }
  return t.done(summary);
}

Outcome ac7_stress() {
  Tally t;
  const auto w0 = longest_permutation(6);
  const auto wg = build_graph(w0, Model::Words);
  const int d = diameter_via_antipodes(wg);
  t.expect(wg.vertex_count() == 292864, "vertex count " + std::to_string(wg.vertex_count()));
  t.expect(d == min_inv_w0(6), "diameter " + std::to_string(d));
  return t.done("n=6 words=" + std::to_string(wg.vertex_count()) + " diameter=" + std::to_string(d) +
                " formula=" + std::to_string(min_inv_w0(6)));
}

Outcome ac8() {
  Tally t;
  const auto sample =
      BalancedTableau::parse("1,1,5;1,2,3;1,3,2;3,2,9;3,3,8;3,5,10;3,6,1;4,2,6;4,3,4;5,2,12;5,3,11;5,6,7");
  const auto perm = tab_permutation(flip(sample));
  t.expect(perm == P("8,1,4,7,10,2,5,9,11,3,6,12"), "perm " + perm.to_string());
  t.expect(tableau_to_word(flip(sample)) == W("6,3,2,4,1,3,7,5,4,3,6,5"), "flip of the sample tableau is not rev(rho)");
  long long checked = 0;
  for (const auto& w : all_permutations(4))
    for (const auto& rho : enumerate_reduced_words(w)) {
      t.expect(word_to_tableau(rho.reversed(), 4) == flip(word_to_tableau(rho, 4)), "w=" + w.to_string() +
                                                                                        " rho=" + rho.to_string());
      ++checked;
    }
  return t.done("perm=" + perm.to_string() + ", " + std::to_string(checked) + " words over S_4");
}

Outcome ac9() {
  Tally t;
  const unsigned long long expected[] = {2, 16, 768};
  std::string summary;
  for (int n = 3; n <= 5; ++n) {
    const auto count = enumerate_reduced_words(longest_permutation(n)).size();
    const auto hooks = oracle::staircase_syt(n);
    t.expect(count == hooks && hooks == expected[n - 3], "n=" + std::to_string(n));
    summary += (summary.empty() ? "" : " ") + ("n=" + std::to_string(n) + ":" + std::to_string(count) + "/" +
                                               std::to_string(hooks));
  }
  return t.done(summary);
}

}  // namespace

int main(int argc, char** argv) {
  bool stress = false;
  for (int k = 1; k < argc; ++k) stress |= std::strcmp(argv[k], "--stress") == 0;

  struct Criterion {
    const char* name;
    double limit;  // seconds
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{{"AC1", 1, ac1},  {"AC2", 1, ac2},   {"AC3", 120, ac3}, {"AC4", 60, ac4}, {"AC5", 120, ac5},
                             {"AC6", 1, ac6},  {"AC7", 30, ac7},  {"AC8", 60, ac8},  {"AC9", 30, ac9}};
  if (stress) all.push_back({"AC7-stress", 3600, ac7_stress});

  bool ok = true;
  for (const auto& c : all) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit;
    const bool pass = o.pass && in_time;
    ok &= pass;
    std::cout << c.name << ' ' << (pass ? "PASS" : "FAIL") << ' ' << std::fixed;
    std::cout.precision(3);
    std::cout << secs << "s " << o.detail << (in_time ? "" : " [over time limit]") << '\n';
  }
  return ok ? 0 : 1;
}
