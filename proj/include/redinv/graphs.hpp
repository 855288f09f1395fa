#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "redinv/bijection.hpp"
#include "redinv/permutation.hpp"
#include "redinv/report.hpp"

namespace redinv {

enum class Model { Words, Tableaux };

std::string_view to_string(Model m);
/// "words" or "tableaux"; throws std::invalid_argument otherwise.
Model parse_model(std::string_view text);

struct GraphEdge {
  int u = 0;
  int v = 0;
  Move move;
};

/// The Coxeter-move graph on R(w) or SBT(w). Vertices are identified by their
/// canonical text form; ranks are inversion numbers.
class CoxeterGraph {
 public:
  CoxeterGraph(Model model, Permutation w, std::vector<std::string> elements, std::vector<long long> ranks,
               std::vector<GraphEdge> edges);

  Model model() const { return model_; }
  const Permutation& permutation() const { return w_; }
  int vertex_count() const { return static_cast<int>(elements_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<long long>& ranks() const { return ranks_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  /// Vertex id of an element's canonical text; throws std::out_of_range.
  int vertex(std::string_view element) const;
  bool contains(std::string_view element) const { return index_.count(std::string(element)) > 0; }

  /// Neighbour ids with the edge index, in edge order.
  struct Adjacent {
    int vertex;
    int edge;
  };
  const std::vector<Adjacent>& neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }

 private:
  Model model_;
  Permutation w_;
  std::vector<std::string> elements_;
  std::vector<long long> ranks_;
  std::vector<GraphEdge> edges_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<Adjacent>> adjacency_;
};

inline constexpr std::size_t kDefaultVertexBudget = 1'000'000;

/// Number of reduced words of w, counted without listing them.
unsigned long long count_reduced_words(const Permutation& w);

/// Builds the full move graph. Throws std::length_error when |R(w)| exceeds
/// the vertex budget.
CoxeterGraph build_graph(const Permutation& w, Model model, std::size_t vertex_budget = kDefaultVertexBudget);

/// Single-source BFS distances (-1 for unreachable).
std::vector<int> bfs_distances(const CoxeterGraph& g, int source);

int bfs_distance(const CoxeterGraph& g, int a, int b);
int bfs_distance(const CoxeterGraph& g, std::string_view a, std::string_view b);

/// For every vertex, the fewest braid edges on a shortest path from source
/// (-1 for unreachable).
std::vector<int> min_braid_counts(const CoxeterGraph& g, int source);

/// Fewest braid edges on any shortest path from a to b.
int min_braid_count(const CoxeterGraph& g, int a, int b);
int min_braid_count(const CoxeterGraph& g, std::string_view a, std::string_view b);

bool is_connected(const CoxeterGraph& g);

/// Largest BFS distance over all vertex pairs, by a BFS from every vertex.
int diameter(const CoxeterGraph& g);

/// Diameter of a w_0 graph from two BFS runs: checks that every vertex lies
/// on a geodesic between the rank-0 vertex P and the top-rank vertex B and
/// then returns dist(P, B). Throws std::invalid_argument when w is not w_0,
/// std::runtime_error when the geodesic check fails.
int diameter_via_antipodes(const CoxeterGraph& g);

/// Checks that ranks differ by one along edges, that a unique vertex has rank
/// 0, that every positive-rank vertex covers a vertex of one lower rank, and
/// that rank equals BFS distance to the rank-0 vertex.
Report validate_ranked_poset(const CoxeterGraph& g);

enum class ExportFormat { Dot, Json };
ExportFormat parse_export_format(std::string_view text);

std::string export_graph(const CoxeterGraph& g, ExportFormat format);

/// Parses the JSON export back into a graph.
CoxeterGraph graph_from_json(std::string_view text);

}  // namespace redinv
