#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "redinv/permutation.hpp"
#include "redinv/words.hpp"

namespace redinv {

/// A cell in the first quadrant. Row 1 is the bottom row; "above" always means
/// a strictly larger row index, "right" a strictly larger column index.
struct Cell {
  int row = 1;
  int col = 1;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A finite cell set kept sorted row-major: bottom row first, left to right.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<Cell> cells);

  /// "row,col;row,col;..." in any order; duplicates are rejected.
  static Diagram parse(std::string_view text);

  std::span<const Cell> cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }

  /// Index of the cell in row-major order, or -1.
  int index_of(Cell c) const;

  /// Occupied row numbers, ascending.
  std::vector<int> rows() const;
  /// Cells of one row, left to right.
  std::vector<Cell> row_cells(int row) const;

  Diagram transposed() const;
  std::string to_string() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Cell> cells_;
};

/// D(w) = {(i, w_j) | i < j, w_i > w_j}.
Diagram rothe_diagram(const Permutation& w);

/// Recovers w from D(w) with the smallest n for which D(w) is the given set,
/// or nullopt when the set is not a Rothe diagram.
std::optional<Permutation> permutation_of_diagram(const Diagram& d);

/// A positive-integer filling of a diagram; entry k belongs to cells()[k].
class Filling {
 public:
  Filling() = default;
  Filling(Diagram diagram, std::vector<int> entries);

  /// "row,col,entry;..." in any cell order.
  static Filling parse(std::string_view text);

  const Diagram& diagram() const { return diagram_; }
  std::span<const Cell> cells() const { return diagram_.cells(); }
  std::span<const int> entries() const { return entries_; }
  int size() const { return diagram_.size(); }

  int entry(Cell c) const;
  /// Cell holding `value`; throws std::out_of_range if absent.
  Cell cell_of(int value) const;

  /// Entries of one row, left to right.
  std::vector<int> row_entries(int row) const;

  /// Single-line serialization, row-major: "1,1,3;1,2,2;1,3,1".
  std::string to_string() const;
  /// Multi-line display, top row first, columns aligned. Not a parse format.
  std::string render() const;

  friend bool operator==(const Filling&, const Filling&) = default;
  friend bool operator<(const Filling& a, const Filling& b) {
    if (a.diagram_.cells().size() != b.diagram_.cells().size()) return a.size() < b.size();
    return a.entries_ < b.entries_;
  }

 private:
  Diagram diagram_;
  std::vector<int> entries_;
};

/// Row r receives r, r+1, r+2, ... from left to right.
Filling row_interval_filling(const Diagram& d);

/// True when every column of the row-interval filling reads c, c+1, ... from
/// its bottom cell upward, c being the column index. Every Rothe diagram
/// passes, but so do some other sets such as {(1,1),(2,2)}; use
/// permutation_of_diagram for an exact test.
bool is_rothe_diagram(const Diagram& d);

/// Rows read left to right, top row first.
ReducedWord reading_word(const Filling& f);

/// Entries 1, 2, ... placed right to left along each row, bottom row first.
Filling super_filling(const Permutation& w);

}  // namespace redinv
