#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "redinv/tableaux.hpp"

using namespace redinv;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
BalancedTableau T(const char* s) { return BalancedTableau::parse(s); }

// A balanced tableau over D(41758236) whose word is 5,6,3,4,5,7,3,1,4,2,3,6
const char* const kSample = "1,1,5;1,2,3;1,3,2;3,2,9;3,3,8;3,5,10;3,6,1;4,2,6;4,3,4;5,2,12;5,3,11;5,6,7";

oracle::Tab raw(const BalancedTableau& t) {
  oracle::Tab out;
  for (const auto& c : t.filling().diagram().cells()) out[{c.row, c.col}] = t.filling().entry(c);
  return out;
}

// Pairs (i<j) with i strictly higher than j, split by whether they share a column.
std::set<std::pair<int, int>> higher_pairs(const BalancedTableau& t, bool same_column) {
  std::set<std::pair<int, int>> out;
  const auto r = raw(t);
  for (const auto& [a, i] : r)
    for (const auto& [b, j] : r)
      if (i < j && a.first > b.first && (a.second == b.second) == same_column) out.insert({i, j});
  return out;
}
}  // namespace

TEST_CASE("balance predicate") {
  CHECK(is_balanced(Filling::parse("1,1,3;1,2,5;1,3,2;2,1,1;4,3,4")));
  CHECK_FALSE(is_balanced(Filling::parse("1,1,5;1,2,3;1,3,2;2,1,1;4,3,4")));
  CHECK_THROWS_AS(is_balanced(Filling::parse("1,1,1;1,2,1")), std::invalid_argument);
  CHECK_THROWS_AS(is_balanced(Filling::parse("1,1,1;1,2,3")), std::invalid_argument);
  CHECK_THROWS_AS(T("1,1,5;1,2,3;1,3,2;2,1,1;4,3,4"), std::invalid_argument);
  CHECK_THROWS_AS(T("1,2,1"), std::invalid_argument);
  CHECK_THROWS_AS(BalancedTableau(P("2,1,3"), Filling::parse("1,1,1;1,2,2")), std::invalid_argument);
  CHECK(T(kSample).permutation() == P("4,1,7,5,8,2,3,6"));
}

TEST_CASE("enumeration") {
  const std::set<std::string> sample{
      "1,1,3;1,2,2;1,3,1;2,1,4;4,3,5", "1,1,3;1,2,4;1,3,1;2,1,2;4,3,5", "1,1,3;1,2,4;1,3,2;2,1,1;4,3,5",
      "1,1,3;1,2,2;1,3,1;2,1,5;4,3,4", "1,1,4;1,2,2;1,3,1;2,1,5;4,3,3", "1,1,4;1,2,3;1,3,1;2,1,5;4,3,2",
      "1,1,3;1,2,5;1,3,2;2,1,1;4,3,4", "1,1,4;1,2,5;1,3,2;2,1,1;4,3,3", "1,1,3;1,2,5;1,3,1;2,1,2;4,3,4",
      "1,1,4;1,2,5;1,3,1;2,1,2;4,3,3", "1,1,4;1,2,5;1,3,1;2,1,3;4,3,2"};
  std::set<std::string> got;
  for (const auto& t : enumerate_sbt(P("4,2,1,5,3"))) got.insert(t.to_string());
  CHECK(got.size() == 11);
  CHECK(got == sample);
  CHECK(enumerate_sbt(P("2,1")).size() == 1);
  CHECK(enumerate_sbt(P("4,3,2,1")).size() == 16);
  CHECK(enumerate_sbt(Permutation(3)).size() == 1);

  for (int n = 1; n <= 4; ++n)
    for (const auto& p : oracle::all_perms(n)) {
      const auto mine = enumerate_sbt(Permutation(p));
      CHECK(std::is_sorted(mine.begin(), mine.end()));
      std::set<std::string> a, b;
      for (const auto& t : mine) a.insert(t.to_string());
      for (const auto& t : oracle::balanced_tableaux(p)) b.insert(oracle::text(t));
      CHECK(a == b);
    }
}

TEST_CASE("moves") {
  const auto top = super_tableau(P("4,2,1,5,3"));
  CHECK(top.to_string() == "1,1,3;1,2,2;1,3,1;2,1,4;4,3,5");
  CHECK(tab_commutation(top, 4).to_string() == "1,1,3;1,2,2;1,3,1;2,1,5;4,3,4");
  CHECK(tab_braid(top, 3).to_string() == "1,1,3;1,2,4;1,3,1;2,1,2;4,3,5");
  CHECK(tab_commutation(top, 1) == top);
  CHECK(tab_braid(top, 2) == top);
  CHECK_THROWS_AS(tab_commutation(top, 5), std::out_of_range);
  CHECK_THROWS_AS(tab_braid(top, 1), std::out_of_range);
  CHECK_THROWS_AS(tab_braid(top, 5), std::out_of_range);

  for (const auto* w : {"4,2,1,5,3", "4,3,2,1"})
    for (const auto& t : enumerate_sbt(P(w))) {
      for (int i = 1; i < t.size(); ++i) CHECK(tab_commutation(tab_commutation(t, i), i) == t);
      for (int i = 2; i < t.size(); ++i) CHECK(tab_braid(tab_braid(t, i), i) == t);
    }

  // the move set agrees with the oracle's neighbour lists
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n))
      for (const auto& t : enumerate_sbt(w)) {
        std::set<std::string> mine, theirs;
        for (int i = 1; i < t.size(); ++i)
          if (auto x = tab_commutation(t, i); !(x == t)) mine.insert(x.to_string());
        for (int i = 2; i < t.size(); ++i)
          if (auto x = tab_braid(t, i); !(x == t)) mine.insert(x.to_string());
        for (const auto& [x, braid] : oracle::tab_neighbours(raw(t))) theirs.insert(oracle::text(x));
        CHECK(mine == theirs);
      }
}

TEST_CASE("inversion statistics") {
  const auto sample = T(kSample);
  CHECK(tab_inversions(sample) == 11);
  const std::set<std::pair<int, int>> pairs{{7, 9}, {7, 8}, {7, 10}, {6, 8}, {6, 10}, {4, 5},
                                            {4, 9}, {4, 10}, {1, 5}, {1, 3}, {1, 2}};
  CHECK(higher_pairs(sample, false) == pairs);
  CHECK(column_inversions(sample) == 2);
  CHECK(higher_pairs(sample, true) == std::set<std::pair<int, int>>{{6, 9}, {4, 8}});
  CHECK(tab_permutation(sample) == P("2,3,5,1,8,9,10,4,6,7,11,12"));

  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto s = super_tableau(w);
      CHECK(tab_inversions(s) == 0);
      CHECK(column_inversions(s) == 0);
      CHECK(tab_permutation(s).is_identity());
      const auto reach = oracle::tab_bfs(raw(s));
      for (const auto& t : enumerate_sbt(w)) {
        CHECK(tab_inversions(t) == static_cast<long long>(higher_pairs(t, false).size()));
        CHECK(tab_inversions(t) == length(tab_permutation(t)) - row_coinversions(t));
        CHECK(tab_inversions(t) == reach.at(raw(t)).distance);
        CHECK(column_inversions(t) == reach.at(raw(t)).braids);
      }
    }
}

TEST_CASE("row-sort reconstruction") {
  const auto sample = T(kSample);
  const auto d = sample.filling().diagram();
  auto rows = row_contents(sample);
  for (auto& r : rows) std::sort(r.begin(), r.end());
  const auto back = reconstruct_from_row_multisets(d, rows);
  REQUIRE(back.has_value());
  CHECK(*back == sample);

  const auto d321 = rothe_diagram(P("3,2,1"));
  CHECK(reconstruct_from_row_multisets(d321, {{1, 2}, {3}}) == super_tableau(P("3,2,1")));
  CHECK_FALSE(reconstruct_from_row_multisets(d321, {{1, 3}, {2}}).has_value());
  for (const auto& t : oracle::balanced_tableaux({3, 2, 1})) {
    const std::set<int> bottom{t.at({1, 1}), t.at({1, 2})};
    CHECK(bottom != std::set<int>{1, 3});
  }
  CHECK_THROWS_AS(reconstruct_from_row_multisets(d321, {{1}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct_from_row_multisets(d321, {{1, 1}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct_from_row_multisets(d321, {{1, 2, 3}}), std::invalid_argument);

  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n))
      for (const auto& t : enumerate_sbt(w)) {
        const auto r = reconstruct_from_row_multisets(rothe_diagram(w), row_contents(t));
        REQUIRE(r.has_value());
        CHECK(*r == t);
      }
}

TEST_CASE("flip") {
  const auto f = flip(T(kSample));
  CHECK(f.permutation() == P("2,6,7,1,4,8,3,5"));
  CHECK(f.to_string() == "1,1,8;2,1,10;2,3,4;2,4,7;2,5,1;3,1,11;3,3,5;3,4,9;3,5,2;5,3,3;6,3,12;6,5,6");
  CHECK(tab_permutation(f) == P("8,1,4,7,10,2,5,9,11,3,6,12"));

  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n))
      for (const auto& t : enumerate_sbt(w)) {
        const auto g = flip(t);
        const int len = t.size();
        CHECK(g.permutation() == inverse(w));
        CHECK(flip(g) == t);
        for (int i = 1; i < len; ++i) CHECK(flip(tab_commutation(t, i)) == tab_commutation(g, len - i));
        for (int i = 2; i < len; ++i) CHECK(flip(tab_braid(t, i)) == tab_braid(g, len - i + 1));
      }
}

TEST_CASE("psi and the staircase") {
  const auto w0 = longest_permutation(4);
  const auto b = psi(super_tableau(w0));
  CHECK(b.to_string() == "1,1,4;1,2,5;1,3,6;2,1,2;2,2,3;3,1,1");
  CHECK(tab_inversions(b) == 7);
  for (const auto& t : enumerate_sbt(w0)) {
    CHECK(psi(psi(t)) == t);
    CHECK(tab_inversions(t) + tab_inversions(psi(t)) == 7);
  }
  CHECK_THROWS_AS(psi(super_tableau(P("4,2,1,5,3"))), std::invalid_argument);

  CHECK(min_inv_w0(2) == 0);
  CHECK(min_inv_w0(3) == 1);
  CHECK(min_inv_w0(4) == 7);
  CHECK(min_inv_w0(5) == 25);
  for (int n = 2; n <= 5; ++n) CHECK(tab_inversions(psi(super_tableau(longest_permutation(n)))) == min_inv_w0(n));
}
