#include "redinv/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace redinv {

namespace {

// For each cell, the indices of cells to its right in the same row and above
// it in the same column.
struct Neighbours {
  std::vector<std::vector<int>> right;
  std::vector<std::vector<int>> above;
};

Neighbours neighbours(std::span<const Cell> cells) {
  Neighbours nb;
  nb.right.resize(cells.size());
  nb.above.resize(cells.size());
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = 0; b < cells.size(); ++b) {
      if (cells[a].row == cells[b].row && cells[b].col > cells[a].col) nb.right[a].push_back(static_cast<int>(b));
      if (cells[a].col == cells[b].col && cells[b].row > cells[a].row) nb.above[a].push_back(static_cast<int>(b));
    }
  return nb;
}

bool balanced_at(std::span<const int> entries, const Neighbours& nb, std::size_t k) {
  int greater_right = 0, smaller_above = 0;
  for (int b : nb.right[k])
    if (entries[static_cast<std::size_t>(b)] > entries[k]) ++greater_right;
  for (int b : nb.above[k])
    if (entries[static_cast<std::size_t>(b)] < entries[k]) ++smaller_above;
  return greater_right == smaller_above;
}

void require_standard(const Filling& f) {
  std::vector<bool> seen(static_cast<std::size_t>(f.size()) + 1, false);
  for (int e : f.entries()) {
    if (e < 1 || e > f.size() || seen[static_cast<std::size_t>(e)])
      throw std::invalid_argument("filling is not a bijection onto {1.." + std::to_string(f.size()) +
                                  "}: " + f.to_string());
    seen[static_cast<std::size_t>(e)] = true;
  }
}

}  // namespace

BalancedTableau make_trusted_tableau(Permutation w, Filling f) {
  return BalancedTableau(BalancedTableau::Trusted{}, std::move(w), std::move(f));
}

BalancedTableau::BalancedTableau(Permutation w, Filling filling) : w_(std::move(w)), filling_(std::move(filling)) {
  if (filling_.diagram() != rothe_diagram(w_))
    throw std::invalid_argument("filling shape is not D(" + w_.to_string() + ")");
  if (!is_balanced(filling_)) throw std::invalid_argument("filling is not balanced: " + filling_.to_string());
}

BalancedTableau BalancedTableau::from_filling(Filling filling) {
  auto w = permutation_of_diagram(filling.diagram());
  if (!w) throw std::invalid_argument("cells do not form a Rothe diagram: " + filling.diagram().to_string());
  return BalancedTableau(std::move(*w), std::move(filling));
}

bool is_balanced(const Filling& f) {
  require_standard(f);
  const auto nb = neighbours(f.cells());
  for (std::size_t k = 0; k < f.entries().size(); ++k)
    if (!balanced_at(f.entries(), nb, k)) return false;
  return true;
}

std::vector<BalancedTableau> enumerate_sbt(const Permutation& w) {
  const auto d = rothe_diagram(w);
  const auto nb = neighbours(d.cells());
  const std::size_t len = static_cast<std::size_t>(d.size());

  // Fill top row first, right to left within a row: every cell's right and
  // above neighbours are then already placed, so balance is checked exactly
  // at placement time.
  std::vector<std::size_t> order(len);
  for (std::size_t k = 0; k < len; ++k) order[k] = len - 1 - k;

  std::vector<int> entries(len, 0);
  std::vector<bool> used(len + 1, false);
  std::vector<std::vector<int>> found;

  std::function<void(std::size_t)> place = [&](std::size_t depth) {
    if (depth == len) {
      found.push_back(entries);
      return;
    }
    const std::size_t k = order[depth];
    for (int v = 1; v <= static_cast<int>(len); ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      entries[k] = v;
      if (!balanced_at(entries, nb, k)) continue;
      used[static_cast<std::size_t>(v)] = true;
      place(depth + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
    entries[k] = 0;
  };
  place(0);

  std::sort(found.begin(), found.end());
  std::vector<BalancedTableau> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(make_trusted_tableau(w, Filling(d, std::move(e))));
  return out;
}

BalancedTableau super_tableau(const Permutation& w) { return make_trusted_tableau(w, super_filling(w)); }

namespace {

BalancedTableau swap_entries(const BalancedTableau& t, int a, int b) {
  std::vector<int> entries(t.filling().entries().begin(), t.filling().entries().end());
  for (int& e : entries) {
    if (e == a)
      e = b;
    else if (e == b)
      e = a;
  }
  return make_trusted_tableau(t.permutation(), Filling(t.filling().diagram(), std::move(entries)));
}

}  // namespace

BalancedTableau tab_commutation(const BalancedTableau& t, int i) {
  if (i < 1 || i >= t.size())
    throw std::out_of_range("commutation value " + std::to_string(i) + " out of range for " +
                            std::to_string(t.size()) + " cells");
  const Cell a = t.cell_of(i), b = t.cell_of(i + 1);
  if (a.row == b.row || a.col == b.col) return t;
  return swap_entries(t, i, i + 1);
}

BalancedTableau tab_braid(const BalancedTableau& t, int i) {
  if (i <= 1 || i >= t.size())
    throw std::out_of_range("braid value " + std::to_string(i) + " out of range for " +
                            std::to_string(t.size()) + " cells");
  const Cell mid = t.cell_of(i), lo = t.cell_of(i - 1), hi = t.cell_of(i + 1);
  auto above = [&](Cell c) { return c.col == mid.col && c.row > mid.row; };
  auto right = [&](Cell c) { return c.row == mid.row && c.col > mid.col; };
  if ((above(lo) && right(hi)) || (above(hi) && right(lo))) return swap_entries(t, i - 1, i + 1);
  return t;
}

namespace {

template <class Pred>
long long count_pairs(const BalancedTableau& t, Pred pred) {
  const auto cells = t.filling().cells();
  const auto entries = t.filling().entries();
  long long count = 0;
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = 0; b < cells.size(); ++b)
      if (entries[a] < entries[b] && pred(cells[a], cells[b])) ++count;
  return count;
}

}  // namespace

long long tab_inversions(const BalancedTableau& t) {
  return count_pairs(t, [](Cell smaller, Cell larger) { return smaller.row > larger.row && smaller.col != larger.col; });
}

long long column_inversions(const BalancedTableau& t) {
  return count_pairs(t, [](Cell smaller, Cell larger) { return smaller.row > larger.row && smaller.col == larger.col; });
}

long long row_coinversions(const BalancedTableau& t) {
  return count_pairs(t, [](Cell smaller, Cell larger) { return smaller.row == larger.row && smaller.col < larger.col; });
}

std::vector<std::vector<int>> row_contents(const BalancedTableau& t) {
  std::vector<std::vector<int>> out;
  for (int r : t.filling().diagram().rows()) out.push_back(t.filling().row_entries(r));
  return out;
}

Permutation tab_permutation(const BalancedTableau& t) {
  if (t.size() == 0) return Permutation(1);
  std::vector<int> reading;
  for (auto row : row_contents(t)) {
    // decreasing left to right, read right to left: ascending
    std::sort(row.begin(), row.end());
    reading.insert(reading.end(), row.begin(), row.end());
  }
  return Permutation(std::move(reading));
}

std::optional<BalancedTableau> reconstruct_from_row_multisets(const Diagram& d,
                                                              const std::vector<std::vector<int>>& rows) {
  const auto w = permutation_of_diagram(d);
  if (!w) throw std::invalid_argument("not a Rothe diagram: " + d.to_string());
  const auto row_ids = d.rows();
  if (rows.size() != row_ids.size())
    throw std::invalid_argument("expected " + std::to_string(row_ids.size()) + " row contents, got " +
                                std::to_string(rows.size()));
  std::vector<bool> seen(static_cast<std::size_t>(d.size()) + 1, false);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != d.row_cells(row_ids[r]).size())
      throw std::invalid_argument("row " + std::to_string(row_ids[r]) + " content has the wrong size");
    for (int e : rows[r]) {
      if (e < 1 || e > d.size() || seen[static_cast<std::size_t>(e)])
        throw std::invalid_argument("row contents are not a partition of {1.." + std::to_string(d.size()) + "}");
      seen[static_cast<std::size_t>(e)] = true;
    }
  }

  std::vector<int> entries(static_cast<std::size_t>(d.size()), 0);
  // Top row down. Within a row, place left to right: with remaining
  // candidates x_1 > ... > x_k, the placed entry x_i will have exactly i-1
  // greater entries to its right, so it must also have i-1 smaller above.
  for (std::size_t r = rows.size(); r-- > 0;) {
    std::vector<int> remaining = rows[r];
    std::sort(remaining.begin(), remaining.end(), std::greater<>());
    for (const Cell& c : d.row_cells(row_ids[r])) {
      std::vector<int> above;
      for (const Cell& o : d.cells())
        if (o.col == c.col && o.row > c.row) above.push_back(entries[static_cast<std::size_t>(d.index_of(o))]);
      std::optional<std::size_t> pick;
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        const auto smaller = std::count_if(above.begin(), above.end(), [&](int e) { return e < remaining[i]; });
        if (static_cast<std::size_t>(smaller) == i) {
          pick = i;
          break;
        }
      }
      if (!pick) return std::nullopt;
      entries[static_cast<std::size_t>(d.index_of(c))] = remaining[*pick];
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(*pick));
    }
  }
  Filling f(d, std::move(entries));
  if (!is_balanced(f)) return std::nullopt;
  return make_trusted_tableau(*w, std::move(f));
}

BalancedTableau flip(const BalancedTableau& t) {
  const int len = t.size();
  std::vector<Cell> cells;
  std::vector<std::pair<Cell, int>> items;
  for (std::size_t k = 0; k < t.filling().entries().size(); ++k) {
    const Cell c = t.filling().cells()[k];
    items.push_back({{c.col, c.row}, len - t.filling().entries()[k] + 1});
  }
  std::sort(items.begin(), items.end());
  std::vector<int> entries;
  for (auto& [c, e] : items) {
    cells.push_back(c);
    entries.push_back(e);
  }
  return BalancedTableau(inverse(t.permutation()), Filling(Diagram(std::move(cells)), std::move(entries)));
}

BalancedTableau psi(const BalancedTableau& t) {
  const auto& w = t.permutation();
  if (w != longest_permutation(w.size()))
    throw std::invalid_argument("psi is only defined on SBT(w_0); got w = " + w.to_string());
  const int len = t.size();
  std::vector<int> entries(t.filling().entries().begin(), t.filling().entries().end());
  for (int& e : entries) e = len - e + 1;
  return BalancedTableau(w, Filling(t.filling().diagram(), std::move(entries)));
}

long long min_inv_w0(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const long long m = n;
  return (m - 2) * (m - 1) * m * (3 * m - 5) / 24;
}

}  // namespace redinv
