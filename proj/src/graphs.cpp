#include "redinv/graphs.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "redinv/tableaux.hpp"
#include "redinv/words.hpp"

namespace redinv {

std::string_view to_string(Model m) { return m == Model::Words ? "words" : "tableaux"; }

Model parse_model(std::string_view text) {
  if (text == "words") return Model::Words;
  if (text == "tableaux") return Model::Tableaux;
  throw std::invalid_argument("unknown model '" + std::string(text) + "' (expected words or tableaux)");
}

namespace {

Move parse_move(std::string_view label) {
  if (label.size() < 2 || (label[0] != 'c' && label[0] != 'b'))
    throw std::invalid_argument("malformed move label '" + std::string(label) + "'");
  const int index = std::stoi(std::string(label.substr(1)));
  return {label[0] == 'c' ? MoveKind::Commutation : MoveKind::YangBaxter, index};
}

std::vector<Move> moves_for_length(int len) {
  std::vector<Move> moves;
  for (int i = 1; i < len; ++i) moves.push_back({MoveKind::Commutation, i});
  for (int i = 2; i < len; ++i) moves.push_back({MoveKind::YangBaxter, i});
  return moves;
}

}  // namespace

CoxeterGraph::CoxeterGraph(Model model, Permutation w, std::vector<std::string> elements, std::vector<long long> ranks,
                           std::vector<GraphEdge> edges)
    : model_(model), w_(std::move(w)), elements_(std::move(elements)), ranks_(std::move(ranks)), edges_(std::move(edges)) {
  if (ranks_.size() != elements_.size()) throw std::invalid_argument("graph: one rank per vertex required");
  index_.reserve(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k)
    if (!index_.emplace(elements_[k], static_cast<int>(k)).second)
      throw std::invalid_argument("graph: duplicate vertex " + elements_[k]);
  adjacency_.resize(elements_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    if (edge.u < 0 || edge.v < 0 || edge.u >= vertex_count() || edge.v >= vertex_count() || edge.u == edge.v)
      throw std::invalid_argument("graph: bad edge endpoints");
    adjacency_[static_cast<std::size_t>(edge.u)].push_back({edge.v, static_cast<int>(e)});
    adjacency_[static_cast<std::size_t>(edge.v)].push_back({edge.u, static_cast<int>(e)});
  }
}

int CoxeterGraph::vertex(std::string_view element) const {
  auto it = index_.find(std::string(element));
  if (it == index_.end()) throw std::out_of_range("vertex '" + std::string(element) + "' not in graph");
  return it->second;
}

unsigned long long count_reduced_words(const Permutation& w) {
  std::map<std::vector<int>, unsigned long long> memo;
  auto count = [&](auto&& self, std::vector<int>& v) -> unsigned long long {
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    unsigned long long total = 0;
    bool any = false;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
      if (v[k] <= v[k + 1]) continue;
      any = true;
      std::swap(v[k], v[k + 1]);
      total += self(self, v);
      std::swap(v[k], v[k + 1]);
    }
    if (!any) total = 1;
    memo.emplace(v, total);
    return total;
  };
  std::vector<int> v(w.entries().begin(), w.entries().end());
  return count(count, v);
}

namespace {

template <class Element, class Serialize, class Rank>
CoxeterGraph assemble(Model model, const Permutation& w, const std::vector<Element>& elems, Serialize serialize,
                      Rank rank) {
  std::vector<std::string> names;
  std::vector<long long> ranks;
  names.reserve(elems.size());
  ranks.reserve(elems.size());
  std::unordered_map<std::string, int> index;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    names.push_back(serialize(elems[k]));
    ranks.push_back(rank(elems[k]));
    index.emplace(names.back(), static_cast<int>(k));
  }
  std::vector<GraphEdge> edges;
  const int len = static_cast<int>(length(w));
  const auto moves = moves_for_length(len);
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& m : moves) {
      auto moved = apply_move(elems[k], m);
      if (moved == elems[k]) continue;
      auto it = index.find(serialize(moved));
      if (it == index.end()) throw std::logic_error("move " + m.label() + " leaves the vertex set at " + names[k]);
      if (static_cast<int>(k) < it->second) edges.push_back({static_cast<int>(k), it->second, m});
    }
  return CoxeterGraph(model, w, std::move(names), std::move(ranks), std::move(edges));
}

}  // namespace

CoxeterGraph build_graph(const Permutation& w, Model model, std::size_t vertex_budget) {
  const auto count = count_reduced_words(w);
  if (count > vertex_budget)
    throw std::length_error("graph for w=" + w.to_string() + " has " + std::to_string(count) +
                            " vertices, above the budget of " + std::to_string(vertex_budget));
  if (model == Model::Words) {
    const auto super = super_word(w);
    return assemble(model, w, enumerate_reduced_words(w), [](const ReducedWord& r) { return r.to_string(); },
                    [&](const ReducedWord& r) { return word_inversions(r, super); });
  }
  return assemble(model, w, enumerate_sbt(w), [](const BalancedTableau& t) { return t.to_string(); },
                  [](const BalancedTableau& t) { return tab_inversions(t); });
}

std::vector<int> bfs_distances(const CoxeterGraph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> queue;
  queue.reserve(dist.size());
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (const auto& adj : g.neighbours(u)) {
      auto& d = dist[static_cast<std::size_t>(adj.vertex)];
      if (d >= 0) continue;
      d = dist[static_cast<std::size_t>(u)] + 1;
      queue.push_back(adj.vertex);
    }
  }
  return dist;
}

namespace {

void check_vertex(const CoxeterGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex id " + std::to_string(v) + " not in graph");
}

}  // namespace

int bfs_distance(const CoxeterGraph& g, int a, int b) {
  check_vertex(g, a);
  check_vertex(g, b);
  return bfs_distances(g, a)[static_cast<std::size_t>(b)];
}

int bfs_distance(const CoxeterGraph& g, std::string_view a, std::string_view b) {
  return bfs_distance(g, g.vertex(a), g.vertex(b));
}

std::vector<int> min_braid_counts(const CoxeterGraph& g, int source) {
  check_vertex(g, source);
  // Layered BFS: vertices leave the queue in nondecreasing distance, so every
  // shortest-path predecessor is final before its successors are relaxed.
  constexpr int kUnset = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> braids(dist.size(), kUnset);
  std::vector<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  braids[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    const auto du = dist[static_cast<std::size_t>(u)];
    for (const auto& adj : g.neighbours(u)) {
      const auto v = static_cast<std::size_t>(adj.vertex);
      if (dist[v] < 0) {
        dist[v] = du + 1;
        queue.push_back(adj.vertex);
      }
      if (dist[v] != du + 1) continue;
      const int cost = g.edges()[static_cast<std::size_t>(adj.edge)].move.kind == MoveKind::YangBaxter ? 1 : 0;
      braids[v] = std::min(braids[v], braids[static_cast<std::size_t>(u)] + cost);
    }
  }
  for (std::size_t v = 0; v < braids.size(); ++v)
    if (dist[v] < 0) braids[v] = -1;
  return braids;
}

int min_braid_count(const CoxeterGraph& g, int a, int b) {
  check_vertex(g, b);
  return min_braid_counts(g, a)[static_cast<std::size_t>(b)];
}

int min_braid_count(const CoxeterGraph& g, std::string_view a, std::string_view b) {
  return min_braid_count(g, g.vertex(a), g.vertex(b));
}

bool is_connected(const CoxeterGraph& g) {
  if (g.vertex_count() == 0) return true;
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

int diameter(const CoxeterGraph& g) {
  int best = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    const auto d = bfs_distances(g, s);
    for (int x : d) {
      if (x < 0) throw std::runtime_error("diameter: graph is disconnected");
      best = std::max(best, x);
    }
  }
  return best;
}

int diameter_via_antipodes(const CoxeterGraph& g) {
  const auto& w = g.permutation();
  if (w != longest_permutation(w.size()))
    throw std::invalid_argument("antipodal diameter applies to w_0 only; got w = " + w.to_string());
  const auto& ranks = g.ranks();
  const int bottom = static_cast<int>(std::min_element(ranks.begin(), ranks.end()) - ranks.begin());
  const int top = static_cast<int>(std::max_element(ranks.begin(), ranks.end()) - ranks.begin());
  const auto from_bottom = bfs_distances(g, bottom);
  const auto from_top = bfs_distances(g, top);
  const int span = from_bottom[static_cast<std::size_t>(top)];
  for (std::size_t v = 0; v < from_bottom.size(); ++v)
    if (from_bottom[v] < 0 || from_bottom[v] + from_top[v] != span)
      throw std::runtime_error("vertex " + g.elements()[v] + " is not on a geodesic between the extreme ranks");
  return span;
}

Report validate_ranked_poset(const CoxeterGraph& g) {
  Report r;
  const std::string cover = "poset.edges_cover", unique = "poset.unique_rank0", down = "poset.has_lower_cover",
                    dist = "poset.rank_is_distance";
  for (const auto& name : {cover, unique, down, dist}) r.touch(name);
  const auto& ranks = g.ranks();
  for (const auto& e : g.edges()) {
    const auto diff = ranks[static_cast<std::size_t>(e.u)] - ranks[static_cast<std::size_t>(e.v)];
    if (diff != 1 && diff != -1)
      r.fail(cover, g.elements()[static_cast<std::size_t>(e.u)] + " -" + e.move.label() + "- " +
                        g.elements()[static_cast<std::size_t>(e.v)]);
  }
  std::vector<int> zeros;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (ranks[static_cast<std::size_t>(v)] == 0) zeros.push_back(v);
  if (zeros.size() != 1) {
    r.fail(unique, std::to_string(zeros.size()) + " vertices of rank 0");
    r.fail(dist, "no unique rank-0 vertex");
    return r;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto rv = ranks[static_cast<std::size_t>(v)];
    if (rv <= 0) continue;
    const auto& adj = g.neighbours(v);
    if (std::none_of(adj.begin(), adj.end(), [&](const auto& a) { return ranks[static_cast<std::size_t>(a.vertex)] == rv - 1; }))
      r.fail(down, g.elements()[static_cast<std::size_t>(v)]);
  }
  const auto d = bfs_distances(g, zeros.front());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (d[static_cast<std::size_t>(v)] != ranks[static_cast<std::size_t>(v)])
      r.fail(dist, g.elements()[static_cast<std::size_t>(v)] + " rank " + std::to_string(ranks[static_cast<std::size_t>(v)]) +
                       " distance " + std::to_string(d[static_cast<std::size_t>(v)]));
  return r;
}

ExportFormat parse_export_format(std::string_view text) {
  if (text == "dot") return ExportFormat::Dot;
  if (text == "json") return ExportFormat::Json;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected dot or json)");
}

std::string export_graph(const CoxeterGraph& g, ExportFormat format) {
  if (format == ExportFormat::Json) {
    nlohmann::ordered_json j;
    j["model"] = to_string(g.model());
    j["w"] = g.permutation().to_string();
    j["vertices"] = nlohmann::ordered_json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
      j["vertices"].push_back({{"id", v}, {"elem", g.elements()[static_cast<std::size_t>(v)]}, {"rank", g.ranks()[static_cast<std::size_t>(v)]}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"move", e.move.label()}});
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "graph \"" << (g.model() == Model::Words ? "R" : "SBT") << "(" << g.permutation().to_string() << ")\" {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "  " << v << " [label=\"" << g.elements()[static_cast<std::size_t>(v)] << "\", rank=" << g.ranks()[static_cast<std::size_t>(v)] << "];\n";
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << " [label=\"" << e.move.label() << "\"];\n";
  out << "}\n";
  return out.str();
}

CoxeterGraph graph_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  const auto model = parse_model(j.at("model").get<std::string>());
  auto w = Permutation::parse(j.at("w").get<std::string>());
  const auto& vs = j.at("vertices");
  std::vector<std::string> elements(vs.size());
  std::vector<long long> ranks(vs.size());
  std::vector<bool> seen(vs.size(), false);
  for (const auto& v : vs) {
    const auto id = v.at("id").get<std::size_t>();
    if (id >= vs.size() || seen[id]) throw std::invalid_argument("graph json: bad vertex id");
    seen[id] = true;
    elements[id] = v.at("elem").get<std::string>();
    ranks[id] = v.at("rank").get<long long>();
  }
  std::vector<GraphEdge> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(), parse_move(e.at("move").get<std::string>())});
  return CoxeterGraph(model, std::move(w), std::move(elements), std::move(ranks), std::move(edges));
}

}  // namespace redinv
