#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace hypercyc {

// Vertices are 1..n. Edges are kept sorted (lexicographically by their sorted
// elements) and duplicate-free; edges of size 1 are loops.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(int n, std::vector<VertexSet> edges) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
      throw ResourceError("vertex count " + std::to_string(n) + " exceeds limit " +
                          std::to_string(kMaxVertices));
    }
    const VertexSet all = VertexSet::full(n);
    for (VertexSet e : edges) {
      if (e.empty()) throw ParameterError("empty hyperedge");
      if (!all.contains(e)) throw ParameterError("hyperedge {" + e.to_string() + "} not within 1..n");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw ParameterError("duplicate hyperedge");
    }
    edges_ = std::move(edges);
  }

  static Hypergraph from_lists(int n, const std::vector<std::vector<int>>& edges) {
    std::vector<VertexSet> sets;
    sets.reserve(edges.size());
    for (const auto& e : edges) {
      for (int v : e) {
        if (v < 1 || v > n) throw ParameterError("vertex " + std::to_string(v) + " not within 1..n");
      }
      VertexSet s = VertexSet::of(e);
      if (static_cast<std::size_t>(s.size()) != e.size()) throw ParameterError("repeated vertex in hyperedge");
      sets.push_back(s);
    }
    return Hypergraph(n, std::move(sets));
  }

  int n() const { return n_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  bool has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(), [](VertexSet e) { return e.size() == 1; });
  }

  // The common edge size, if every edge has the same size (nullopt for no edges).
  std::optional<int> uniform_rank() const {
    if (edges_.empty()) return std::nullopt;
    const int k = edges_.front().size();
    for (VertexSet e : edges_) {
      if (e.size() != k) return std::nullopt;
    }
    return k;
  }

  bool is_k_uniform(int k) const {
    return std::all_of(edges_.begin(), edges_.end(), [k](VertexSet e) { return e.size() == k; });
  }

  // Vertices covered by no edge.
  VertexSet singletons() const {
    VertexSet covered;
    for (VertexSet e : edges_) covered = covered | e;
    return vertices() - covered;
  }

  // True iff some edge is a subset of `block`.
  bool block_contains_edge(VertexSet block) const {
    return std::any_of(edges_.begin(), edges_.end(), [block](VertexSet e) { return block.contains(e); });
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

// A hypergraph whose edges all have two distinct endpoints.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Hypergraph h) : h_(std::move(h)) {
    if (!h_.is_k_uniform(2)) throw StructureError("graph edges must have exactly two endpoints");
  }
  static Graph from_pairs(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> lists;
    for (auto [a, b] : edges) lists.push_back({a, b});
    return Graph(Hypergraph::from_lists(n, lists));
  }

  int n() const { return h_.n(); }
  const std::vector<VertexSet>& edges() const { return h_.edges(); }
  const Hypergraph& hypergraph() const { return h_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Hypergraph h_;
};

// ---------------------------------------------------------------------------
// Families

inline Hypergraph make_complete_k_uniform(int n, int k) {
  if (k < 1 || k > n) throw ParameterError("complete k-uniform requires 1 <= k <= n");
  if (n > kMaxVertices) throw ResourceError("vertex count exceeds limit");
  return Hypergraph(n, k_subsets(n, k));
}

// All size-k edges through vertex 1.
inline Hypergraph make_vertex1_star(int n, int k) {
  if (k < 2 || k > n) throw ParameterError("vertex-1 hypergraph requires 2 <= k <= n");
  if (n > kMaxVertices) throw ResourceError("vertex count exceeds limit");
  std::vector<VertexSet> edges;
  for (VertexSet s : k_subsets(n - 1, k - 1)) {
    edges.push_back(VertexSet(s.bits() << 1) | VertexSet::of({1}));
  }
  return Hypergraph(n, std::move(edges));
}

// Edges core ∪ {v} for the m smallest vertices v outside the core.
inline Hypergraph make_star_hypergraph(int n, int k, int m, VertexSet core) {
  if (k < 1 || k > n) throw ParameterError("star hypergraph requires 1 <= k <= n");
  if (n > kMaxVertices) throw ResourceError("vertex count exceeds limit");
  if (core.size() != k - 1) throw ParameterError("star core must have k-1 vertices");
  if (!VertexSet::full(n).contains(core)) throw ParameterError("star core not within 1..n");
  if (m < 0) throw ParameterError("negative edge count");
  const std::vector<int> tips = (VertexSet::full(n) - core).elements();
  if (static_cast<std::size_t>(m) > tips.size()) {
    throw StructureError("star hypergraph needs " + std::to_string(m) + " vertices outside the core, only " +
                         std::to_string(tips.size()) + " available");
  }
  std::vector<VertexSet> edges;
  for (int i = 0; i < m; ++i) edges.push_back(core | VertexSet::of({tips[i]}));
  return Hypergraph(n, std::move(edges));
}

// Windows {i, ..., i+k-1} for i = 1..n-k+1.
inline Hypergraph make_diagonal_hypergraph(int n, int k) {
  if (k < 1 || k > n) throw ParameterError("diagonal hypergraph requires 1 <= k <= n");
  if (n > kMaxVertices) throw ResourceError("vertex count exceeds limit");
  std::vector<VertexSet> edges;
  const VertexSet window = VertexSet::full(k);
  for (int i = 0; i + k <= n; ++i) edges.push_back(VertexSet(window.bits() << i));
  return Hypergraph(n, std::move(edges));
}

// E_n: a loop at every vertex. Every block of every partition contains an edge.
inline Hypergraph make_looped(int n) {
  if (n < 1 || n > kMaxVertices) throw ResourceError("vertex count out of range");
  return Hypergraph(n, k_subsets(n, 1));
}

inline Hypergraph make_edgeless(int n) { return Hypergraph(n, {}); }

// ---------------------------------------------------------------------------
// Star shape detection and core contraction

struct StarShape {
  int k = 0;
  VertexSet core;        // common (k-1)-set
  VertexSet tips;        // the vertex each edge adds to the core
  VertexSet singletons;  // vertices in no edge
};

// Recognizes a k-uniform hypergraph whose edges pairwise meet exactly in a
// common (k-1)-set, possibly with extra isolated vertices. A single edge has
// no well-defined core and is rejected.
inline std::optional<StarShape> detect_star(const Hypergraph& h) {
  if (h.edge_count() < 2) return std::nullopt;
  auto k = h.uniform_rank();
  if (!k || *k < 2) return std::nullopt;
  VertexSet core = h.edges().front();
  for (VertexSet e : h.edges()) core = core & e;
  if (core.size() != *k - 1) return std::nullopt;
  StarShape s;
  s.k = *k;
  s.core = core;
  for (VertexSet e : h.edges()) s.tips = s.tips | (e - core);
  s.singletons = h.singletons();
  return s;
}

// A star hypergraph satisfies the no-singleton requirement, or carries extras.
enum class StarRegime { not_a_star, star, star_with_singletons };

inline StarRegime classify_star(const Hypergraph& h) {
  auto s = detect_star(h);
  if (!s) return StarRegime::not_a_star;
  return s->singletons.empty() ? StarRegime::star : StarRegime::star_with_singletons;
}

struct ContractedGraph {
  Graph graph;
  // relabel[v] is the new label of old vertex v (index 0 unused); all core
  // vertices map to 1.
  std::vector<int> relabel;
};

// Collapses the star core to a single vertex 1 adjacent to every tip; the
// remaining vertices are relabeled 2.. in increasing order. The result has
// n-k+2 vertices.
inline ContractedGraph contract_core(const Hypergraph& h) {
  auto s = detect_star(h);
  if (!s) throw StructureError("hypergraph is not a star hypergraph plus singleton vertices");
  ContractedGraph out;
  out.relabel.assign(h.n() + 1, 0);
  int next = 2;
  for (int v = 1; v <= h.n(); ++v) out.relabel[v] = s->core.contains(v) ? 1 : next++;
  std::vector<std::pair<int, int>> edges;
  for (int t : s->tips.elements()) edges.emplace_back(1, out.relabel[t]);
  out.graph = Graph::from_pairs(next - 1, edges);
  return out;
}

// ---------------------------------------------------------------------------
// JSON: {"n": int, "edges": [[int,...],...]}, edges and their entries sorted.

inline nlohmann::ordered_json to_json(const Hypergraph& h) {
  nlohmann::ordered_json j;
  j["n"] = h.n();
  j["edges"] = nlohmann::ordered_json::array();
  for (VertexSet e : h.edges()) j["edges"].push_back(e.elements());
  return j;
}

inline Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw ParameterError("hypergraph JSON needs \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_integer()) throw ParameterError("\"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (n < 0) throw ParameterError("\"n\" must be nonnegative");
  if (n > kMaxVertices) throw ResourceError("vertex count exceeds limit");
  std::vector<std::vector<int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array()) throw ParameterError("each edge must be an array");
    edges.push_back(e.get<std::vector<int>>());
  }
  return Hypergraph::from_lists(n, edges);
}

}  // namespace hypercyc
