#include "redinv/diagrams.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "redinv/text.hpp"

namespace redinv {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  text = trim(text);
  if (text.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(sep, start);
    parts.push_back(trim(text.substr(start, end == std::string_view::npos ? text.npos : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

}  // namespace

Diagram::Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (cells_[k].row < 1 || cells_[k].col < 1)
      throw std::invalid_argument("cell coordinates must be positive");
    if (k && cells_[k] == cells_[k - 1])
      throw std::invalid_argument("duplicate cell " + std::to_string(cells_[k].row) + "," +
                                  std::to_string(cells_[k].col));
  }
}

Diagram Diagram::parse(std::string_view text) {
  std::vector<Cell> cells;
  for (auto part : split(text, ';')) {
    const auto v = parse_int_list(part, ',');
    if (v.size() != 2) throw std::invalid_argument("expected row,col but got '" + std::string(part) + "'");
    cells.push_back({v[0], v[1]});
  }
  return Diagram(std::move(cells));
}

int Diagram::index_of(Cell c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  return it != cells_.end() && *it == c ? static_cast<int>(it - cells_.begin()) : -1;
}

std::vector<int> Diagram::rows() const {
  std::vector<int> out;
  for (const auto& c : cells_)
    if (out.empty() || out.back() != c.row) out.push_back(c.row);
  return out;
}

std::vector<Cell> Diagram::row_cells(int row) const {
  std::vector<Cell> out;
  for (const auto& c : cells_)
    if (c.row == row) out.push_back(c);
  return out;
}

Diagram Diagram::transposed() const {
  std::vector<Cell> t;
  t.reserve(cells_.size());
  for (const auto& c : cells_) t.push_back({c.col, c.row});
  return Diagram(std::move(t));
}

std::string Diagram::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (k) out += ';';
    out += std::to_string(cells_[k].row) + "," + std::to_string(cells_[k].col);
  }
  return out;
}

Diagram rothe_diagram(const Permutation& w) {
  std::vector<Cell> cells;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) cells.push_back({i, w(j)});
  return Diagram(std::move(cells));
}

std::optional<Permutation> permutation_of_diagram(const Diagram& d) {
  // Row i of D(w) has one cell per later, smaller value: its size is the
  // Lehmer code entry c_i. Decode the code, then confirm the cell positions.
  int n = 1;
  std::map<int, int> code;
  for (const auto& c : d.cells()) ++code[c.row];
  for (auto [row, count] : code) n = std::max(n, row + count);
  std::vector<int> remaining(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) remaining[static_cast<std::size_t>(v - 1)] = v;
  std::vector<int> entries;
  for (int i = 1; i <= n; ++i) {
    const auto it = code.find(i);
    const int c = it == code.end() ? 0 : it->second;
    entries.push_back(remaining[static_cast<std::size_t>(c)]);
    remaining.erase(remaining.begin() + c);
  }
  Permutation w(std::move(entries));
  if (rothe_diagram(w) != d) return std::nullopt;
  return w;
}

Filling::Filling(Diagram diagram, std::vector<int> entries)
    : diagram_(std::move(diagram)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != diagram_.size())
    throw std::invalid_argument("filling has " + std::to_string(entries_.size()) + " entries for " +
                                std::to_string(diagram_.size()) + " cells");
  for (int e : entries_)
    if (e < 1) throw std::invalid_argument("filling entries must be positive");
}

Filling Filling::parse(std::string_view text) {
  std::vector<std::pair<Cell, int>> items;
  for (auto part : split(text, ';')) {
    const auto v = parse_int_list(part, ',');
    if (v.size() != 3)
      throw std::invalid_argument("expected row,col,entry but got '" + std::string(part) + "'");
    items.push_back({{v[0], v[1]}, v[2]});
  }
  std::sort(items.begin(), items.end());
  std::vector<Cell> cells;
  std::vector<int> entries;
  for (auto& [c, e] : items) {
    cells.push_back(c);
    entries.push_back(e);
  }
  return Filling(Diagram(std::move(cells)), std::move(entries));
}

int Filling::entry(Cell c) const {
  const int k = diagram_.index_of(c);
  if (k < 0) throw std::out_of_range("cell not in diagram");
  return entries_[static_cast<std::size_t>(k)];
}

Cell Filling::cell_of(int value) const {
  auto it = std::find(entries_.begin(), entries_.end(), value);
  if (it == entries_.end()) throw std::out_of_range("entry " + std::to_string(value) + " not in filling");
  return diagram_.cells()[static_cast<std::size_t>(it - entries_.begin())];
}

std::vector<int> Filling::row_entries(int row) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (cells()[k].row == row) out.push_back(entries_[k]);
  return out;
}

std::string Filling::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) out += ';';
    out += std::to_string(cells()[k].row) + "," + std::to_string(cells()[k].col) + "," +
           std::to_string(entries_[k]);
  }
  return out;
}

std::string Filling::render() const {
  if (entries_.empty()) return "(empty)\n";
  int max_row = 0, max_col = 0;
  std::size_t width = 1;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    max_row = std::max(max_row, cells()[k].row);
    max_col = std::max(max_col, cells()[k].col);
    width = std::max(width, std::to_string(entries_[k]).size());
  }
  std::ostringstream out;
  for (int r = max_row; r >= 1; --r) {
    std::string line = "|";
    for (int c = 1; c <= max_col; ++c) {
      const int k = diagram_.index_of({r, c});
      std::string s = k < 0 ? "." : std::to_string(entries_[static_cast<std::size_t>(k)]);
      line += ' ' + std::string(width - s.size(), ' ') + s;
    }
    while (!line.empty() && (line.back() == '.' || line.back() == ' ') && line.size() > 1) line.pop_back();
    out << line << '\n';
  }
  out << '+' << std::string(static_cast<std::size_t>(max_col) * (width + 1), '-') << '\n';
  return out.str();
}

Filling row_interval_filling(const Diagram& d) {
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(d.size()));
  int row = 0, next = 0;
  for (const auto& c : d.cells()) {
    if (c.row != row) {
      row = c.row;
      next = row;
    }
    entries.push_back(next++);
  }
  return Filling(d, std::move(entries));
}

bool is_rothe_diagram(const Diagram& d) {
  const auto f = row_interval_filling(d);
  std::map<int, std::vector<std::pair<int, int>>> columns;  // col -> (row, entry)
  for (std::size_t k = 0; k < f.entries().size(); ++k)
    columns[f.cells()[k].col].push_back({f.cells()[k].row, f.entries()[k]});
  for (auto& [col, items] : columns) {
    std::sort(items.begin(), items.end());
    for (std::size_t k = 0; k < items.size(); ++k)
      if (items[k].second != col + static_cast<int>(k)) return false;
  }
  return true;
}

ReducedWord reading_word(const Filling& f) {
  std::vector<int> letters;
  auto rows = f.diagram().rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    for (int e : f.row_entries(*it)) letters.push_back(e);
  return ReducedWord(std::move(letters));
}

Filling super_filling(const Permutation& w) {
  auto d = rothe_diagram(w);
  std::vector<int> entries(static_cast<std::size_t>(d.size()));
  int next = 1;
  std::size_t k = 0;
  while (k < entries.size()) {
    std::size_t end = k;
    while (end < entries.size() && d.cells()[end].row == d.cells()[k].row) ++end;
    for (std::size_t m = end; m > k; --m) entries[m - 1] = next++;
    k = end;
  }
  return Filling(std::move(d), std::move(entries));
}

}  // namespace redinv
