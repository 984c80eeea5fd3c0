#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace tensegrity {

/// Unordered vertex pair, stored with a < b. Vertices are 1-based.
struct Edge {
  int a = 0;
  int b = 0;

  Edge() = default;
  Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

  bool contains(int v) const { return a == v || b == v; }
  int other(int v) const { return v == a ? b : a; }

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {}
  /// Throws std::invalid_argument on loops, duplicates or out-of-range indices.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  static Graph complete(int n);
  static Graph complete_bipartite(int left, int right);
  static Graph cycle(int n);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges in lexicographic order; this order indexes every stress vector.
  std::vector<Edge> edges() const { return {edges_.begin(), edges_.end()}; }
  const std::set<Edge>& edge_set() const { return edges_; }

  bool has_edge(int u, int v) const { return u != v && edges_.contains(Edge(u, v)); }
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;
  int min_degree() const;

  void add_edge(int u, int v);

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::set<Edge> edges_;
};

/// Throws std::invalid_argument("no such edge") if e is absent.
Graph delete_edge(const Graph& g, Edge e);

struct InducedSubgraph {
  Graph graph;
  /// original_index[k] is the vertex of g that became vertex k+1.
  std::vector<int> original_index;
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

bool is_connected(const Graph& g);

struct Connectivity {
  int kappa = 0;
  int lambda = 0;
};

/// Vertex and edge connectivity by exhaustive separator search. A graph that
/// is disconnected or has fewer than two vertices reports (0, 0). For a
/// complete graph kappa is n - 1 by convention.
Connectivity connectivity(const Graph& g);

/// Lexicographically least 4-set of vertices inducing K4.
std::optional<std::array<int, 4>> find_induced_k4(const Graph& g);

}  // namespace tensegrity
