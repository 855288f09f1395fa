#include "redinv/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include "redinv/bijection.hpp"
#include "redinv/diagrams.hpp"
#include "redinv/graphs.hpp"
#include "redinv/tableaux.hpp"
#include "redinv/words.hpp"

namespace redinv {

namespace {

std::vector<Move> moves_for_length(int len) {
  std::vector<Move> moves;
  for (int i = 1; i < len; ++i) moves.push_back({MoveKind::Commutation, i});
  for (int i = 2; i < len; ++i) moves.push_back({MoveKind::YangBaxter, i});
  return moves;
}

void check_permutations(int n, Report& r) {
  const std::string step = "perm.swap_changes_length_by_one", inv_len = "perm.inverse_preserves_length",
                    involution = "perm.inverse_is_involution", longest = "perm.longest_is_maximal";
  for (const auto& name : {step, inv_len, involution, longest}) r.touch(name);
  const auto w0 = longest_permutation(n);
  const auto top = length(w0);
  if (top != static_cast<long long>(n) * (n - 1) / 2) r.fail(longest, "length(w0) = " + std::to_string(top));
  for (const auto& p : all_permutations(n)) {
    const auto lp = length(p);
    for (int i = 1; i < n; ++i) {
      const auto a = length(compose(p, simple_transposition(n, i)));
      const auto b = length(apply_position_swap(p, i));
      if (std::abs(a - lp) != 1 || std::abs(b - lp) != 1) r.fail(step, p.to_string() + " i=" + std::to_string(i));
    }
    if (length(inverse(p)) != lp) r.fail(inv_len, p.to_string());
    if (inverse(inverse(p)) != p || !compose(p, inverse(p)).is_identity()) r.fail(involution, p.to_string());
    if (lp > top || (lp == top && p != w0)) r.fail(longest, p.to_string());
  }
}

// Word-side checks for one permutation, using its word graph as the oracle.
void check_words(const Permutation& w, const CoxeterGraph& g, Report& r) {
  const std::string super_name = "words.super_word_unique", moves = "words.moves_are_involutions_on_R(w)",
                    step = "words.moves_change_inv_by_one", dist = "words.inv_equals_distance_to_super",
                    ident = "words.pairing_identity_iff_super", rev = "words.reversal_gives_R(w^-1)",
                    yb = "words.yang_baxter_count_to_super", naive = "words.naive_equals_inv_against_super",
                    pairs = "words.yang_baxter_count_all_pairs";
  for (const auto& name : {super_name, moves, step, dist, ident, rev, yb, naive}) r.touch(name);
  r.touch(pairs, true);
  const std::string tag = "w=" + w.to_string();
  const int n = w.size();

  const auto words = enumerate_reduced_words(w);
  const auto super = super_word(w);
  if (!is_reduced(super, n) || word_to_permutation(super, n) != w || !is_super_yamanouchi(super))
    r.fail(super_name, tag + " super=" + super.to_string());
  const auto sy = std::count_if(words.begin(), words.end(), [](const ReducedWord& x) { return is_super_yamanouchi(x); });
  if (sy != 1) r.fail(super_name, tag + " has " + std::to_string(sy) + " super-Yamanouchi words");

  const int s = g.vertex(super.to_string());
  const auto from_super = bfs_distances(g, s);
  const auto braids_from_super = min_braid_counts(g, s);

  std::vector<Permutation> perms;
  perms.reserve(words.size());
  for (const auto& rho : words) {
    const auto inv = word_inversions(rho, super);
    for (const auto& m : moves_for_length(rho.size())) {
      const auto moved = apply_move(rho, m);
      if (!is_reduced(moved, n) || word_to_permutation(moved, n) != w || !(apply_move(moved, m) == rho))
        r.fail(moves, tag + " " + m.label() + " at " + rho.to_string());
      if (!(moved == rho) && std::abs(word_inversions(moved, super) - inv) != 1)
        r.fail(step, tag + " " + m.label() + " at " + rho.to_string());
    }
    const int v = g.vertex(rho.to_string());
    if (from_super[static_cast<std::size_t>(v)] != inv)
      r.fail(dist, tag + " " + rho.to_string() + " inv=" + std::to_string(inv) +
                       " dist=" + std::to_string(from_super[static_cast<std::size_t>(v)]));
    perms.push_back(pairing_permutation(rho, super));
    if (perms.back().is_identity() != (rho == super)) r.fail(ident, tag + " " + rho.to_string());
    if (yang_baxter_count(rho, super) != braids_from_super[static_cast<std::size_t>(v)])
      r.fail(yb, tag + " " + rho.to_string());
    if (naive_pair_inversions(rho, super) != inv) r.fail(naive, tag + " " + rho.to_string());
  }

  const auto winv = inverse(w);
  const auto inverse_words = enumerate_reduced_words(winv);
  std::set<ReducedWord> reversed;
  for (const auto& rho : words) reversed.insert(rho.reversed());
  if (reversed != std::set<ReducedWord>(inverse_words.begin(), inverse_words.end())) r.fail(rev, tag);

  // Pairwise Yang-Baxter formula against the layered BFS, reported only.
  for (std::size_t a = 0; a < words.size(); ++a) {
    const auto braids = min_braid_counts(g, g.vertex(words[a].to_string()));
    const auto inv_a = inverse(perms[a]);
    for (std::size_t b = 0; b < words.size(); ++b) {
      const auto rel = compose(perms[b], inv_a);
      long long formula = 0;
      for (int i = 1; i <= words[a].size(); ++i) formula += std::abs(words[a].letter(i) - words[b].letter(rel(i)));
      const int oracle = braids[static_cast<std::size_t>(g.vertex(words[b].to_string()))];
      if (formula != oracle)
        r.fail(pairs, tag + " rho=" + words[a].to_string() + " sigma=" + words[b].to_string() +
                          " formula=" + std::to_string(formula) + " bfs=" + std::to_string(oracle));
    }
  }
}

void check_diagrams(const Permutation& w, Report& r) {
  const std::string transpose = "diagrams.inverse_is_transpose", reading = "diagrams.reading_word_is_super",
                    rothe = "diagrams.is_rothe_diagram", balanced = "diagrams.super_tableau_is_balanced",
                    recover = "diagrams.recover_permutation";
  for (const auto& name : {transpose, reading, rothe, balanced, recover}) r.touch(name);
  const std::string tag = "w=" + w.to_string();
  const auto d = rothe_diagram(w);
  if (d.size() != length(w)) r.fail(transpose, tag + " cell count");
  if (rothe_diagram(inverse(w)) != d.transposed()) r.fail(transpose, tag);
  if (reading_word(row_interval_filling(d)) != super_word(w)) r.fail(reading, tag);
  if (!is_rothe_diagram(d)) r.fail(rothe, tag);
  if (!is_balanced(super_filling(w))) r.fail(balanced, tag);
  const auto back = permutation_of_diagram(d);
  if (!back || rothe_diagram(*back) != d) r.fail(recover, tag);
}

void check_tableaux(const Permutation& w, const CoxeterGraph& tg, std::size_t word_count, Report& r) {
  const std::string moves = "tableaux.moves_preserve_balance", step = "tableaux.moves_change_inv_by_one",
                    formula = "tableaux.inv_equals_perm_length_minus_row_coinv",
                    recon = "tableaux.row_sort_reconstruction_unique", flips = "tableaux.flip_involution_intertwines_moves",
                    count = "tableaux.count_equals_reduced_words", dist = "tableaux.inv_equals_distance_to_super",
                    braid = "tableaux.column_inversions_equal_min_braids",
                    descent = "tableaux.descent_length_and_braids";
  for (const auto& name : {moves, step, formula, recon, flips, count, dist, braid, descent}) r.touch(name);
  const std::string tag = "w=" + w.to_string();

  const auto tabs = enumerate_sbt(w);
  if (tabs.size() != word_count)
    r.fail(count, tag + " " + std::to_string(tabs.size()) + " vs " + std::to_string(word_count));
  const auto super = super_tableau(w);
  const int s = tg.vertex(super.to_string());
  const auto from_super = bfs_distances(tg, s);
  const auto braids = min_braid_counts(tg, s);
  const auto d = rothe_diagram(w);

  for (const auto& t : tabs) {
    const auto inv = tab_inversions(t);
    const int len = t.size();
    for (const auto& m : moves_for_length(len)) {
      const auto moved = apply_move(t, m);
      if (!is_balanced(moved.filling()) || !(apply_move(moved, m) == t))
        r.fail(moves, tag + " " + m.label() + " at " + t.to_string());
      if (!(moved == t) && std::abs(tab_inversions(moved) - inv) != 1)
        r.fail(step, tag + " " + m.label() + " at " + t.to_string());
      const auto f = flip(t);
      const Move mirrored{m.kind, m.kind == MoveKind::Commutation ? len - m.index : len - m.index + 1};
      if (!(flip(moved) == apply_move(f, mirrored))) r.fail(flips, tag + " " + m.label() + " at " + t.to_string());
    }
    if (inv != length(tab_permutation(t)) - row_coinversions(t)) r.fail(formula, tag + " " + t.to_string());
    const auto back = reconstruct_from_row_multisets(d, row_contents(t));
    if (!back || !(*back == t)) r.fail(recon, tag + " " + t.to_string());
    const auto f = flip(t);
    if (!(flip(f) == t) || f.permutation() != inverse(w)) r.fail(flips, tag + " involution at " + t.to_string());

    const auto v = static_cast<std::size_t>(tg.vertex(t.to_string()));
    if (from_super[v] != inv) r.fail(dist, tag + " " + t.to_string());
    if (braids[v] != column_inversions(t)) r.fail(braid, tag + " " + t.to_string());
    const auto down = descent_to_super(t);
    if (down.size() != inv || down.braid_count() != column_inversions(t) || !(apply_moves(t, down) == super))
      r.fail(descent, tag + " " + t.to_string());
  }
}

void check_graph_pair(const Permutation& w, const CoxeterGraph& wg, const CoxeterGraph& tg, Report& r) {
  const std::string connected = "graphs.connected", iso = "graphs.word_and_tableau_graphs_isomorphic";
  for (const auto& name : {connected, iso}) r.touch(name);
  const std::string tag = "w=" + w.to_string();
  if (!is_connected(wg) || !is_connected(tg)) r.fail(connected, tag);

  for (const auto* g : {&wg, &tg}) {
    auto report = validate_ranked_poset(*g);
    Report tagged;
    for (const auto& c : report.checks()) {
      tagged.touch(c.name);
      for (const auto& ce : c.counterexamples) tagged.fail(c.name, tag + " " + std::string(to_string(g->model())) + " " + ce);
    }
    r.append(tagged);
  }

  if (wg.vertex_count() != tg.vertex_count() || wg.edge_count() != tg.edge_count()) {
    r.fail(iso, tag + " size mismatch");
    return;
  }
  std::vector<int> image(static_cast<std::size_t>(wg.vertex_count()));
  for (int v = 0; v < wg.vertex_count(); ++v) {
    const auto t = word_to_tableau(ReducedWord::parse(wg.elements()[static_cast<std::size_t>(v)]), w.size());
    image[static_cast<std::size_t>(v)] = tg.vertex(t.to_string());
    if (wg.ranks()[static_cast<std::size_t>(v)] != tg.ranks()[static_cast<std::size_t>(image[static_cast<std::size_t>(v)])])
      r.fail(iso, tag + " rank differs at " + wg.elements()[static_cast<std::size_t>(v)]);
  }
  std::set<std::tuple<int, int, std::string>> tedges;
  for (const auto& e : tg.edges()) tedges.insert({std::min(e.u, e.v), std::max(e.u, e.v), e.move.label()});
  for (const auto& e : wg.edges()) {
    const int a = image[static_cast<std::size_t>(e.u)], b = image[static_cast<std::size_t>(e.v)];
    if (!tedges.count({std::min(a, b), std::max(a, b), e.move.label()}))
      r.fail(iso, tag + " edge " + e.move.label() + " at " + wg.elements()[static_cast<std::size_t>(e.u)]);
  }
}

void check_longest(int n, Report& r) {
  const std::string diam = "graphs.w0_diameter_formula", geodesic = "graphs.w0_every_vertex_on_P_B_geodesic",
                    reverse = "tableaux.psi_reverses_rank";
  for (const auto& name : {diam, geodesic, reverse}) r.touch(name);
  const auto w0 = longest_permutation(n);
  const auto tg = build_graph(w0, Model::Tableaux);
  const auto top = min_inv_w0(n);
  const auto p = super_tableau(w0);
  const auto b = psi(p);
  if (tab_inversions(b) != top) r.fail(reverse, "inv(psi(P)) = " + std::to_string(tab_inversions(b)));
  for (const auto& t : enumerate_sbt(w0)) {
    const auto c = psi(t);
    if (!(psi(c) == t) || tab_inversions(t) + tab_inversions(c) != top) r.fail(reverse, t.to_string());
  }
  const auto d = diameter(tg);
  const int pb = bfs_distance(tg, p.to_string(), b.to_string());
  if (d != top || pb != top)
    r.fail(diam, "n=" + std::to_string(n) + " diameter=" + std::to_string(d) + " dist(P,B)=" + std::to_string(pb) +
                     " formula=" + std::to_string(top));
  const auto wg = build_graph(w0, Model::Words);
  if (diameter(wg) != top) r.fail(diam, "word graph n=" + std::to_string(n));
  const auto from_p = bfs_distances(tg, tg.vertex(p.to_string()));
  const auto from_b = bfs_distances(tg, tg.vertex(b.to_string()));
  for (std::size_t v = 0; v < from_p.size(); ++v)
    if (from_p[v] + from_b[v] != pb) r.fail(geodesic, tg.elements()[v]);
}

}  // namespace

Report verify_all(int n) {
  if (n < 1) throw std::invalid_argument("verify: n must be at least 1");
  Report r;
  check_permutations(n, r);
  for (const auto& w : all_permutations(n)) {
    const auto wg = build_graph(w, Model::Words);
    const auto tg = build_graph(w, Model::Tableaux);
    check_words(w, wg, r);
    check_diagrams(w, r);
    check_tableaux(w, tg, static_cast<std::size_t>(wg.vertex_count()), r);
    r.append(verify_poset_isomorphism(w));
    check_graph_pair(w, wg, tg, r);
  }
  check_longest(n, r);
  return r;
}

}  // namespace redinv
