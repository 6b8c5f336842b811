#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wuchar/types.hpp"

namespace wuchar {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints. Repeated edges are merged.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return m_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;
  /// Edges (u,v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// Induced subgraph together with the original label of each new vertex.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> vertices;
};

Subgraph induced(const Graph& g, std::vector<Vertex> vertices);
Subgraph unit_sphere(const Graph& g, Vertex v);
Subgraph unit_ball(const Graph& g, Vertex v);
/// Vertices at distance at most r from v.
Subgraph ball(const Graph& g, Vertex v, std::size_t r);
/// Adds two non-adjacent vertices n and n+1 joined to every vertex.
Graph suspension(const Graph& g);
/// Vertices of h are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
bool is_connected(const Graph& g);

// Generators. Hubs and centers are vertex 0.
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph star(std::size_t rays);
Graph wheel(std::size_t rim);
Graph complete_bipartite(std::size_t a, std::size_t b);
/// k cycles of length girth sharing vertex 0.
Graph bouquet(std::size_t k, std::size_t girth = 4);
/// d = 1 gives C_4, each step suspends: d = 2 is the octahedron.
Graph cross_polytope(std::size_t d);
Graph hypercube(std::size_t d);
/// kite, house, figure8, cube, dodecahedron, icosahedron, tesseract, utility.
Graph named(const std::string& name);
/// G(n,p): one draw per pair (u,v), u < v in lexicographic order, from the library generator.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);
/// Exactly m edges chosen uniformly.
Graph random_graph_with_edges(std::size_t n, std::size_t m, std::uint64_t seed);
/// Dispatch by family name, as used by the command line.
Graph generate(const std::string& family, const std::vector<std::string>& args);

// Serialization.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);
Graph parse_graph_json(std::string_view text);
std::string to_graph_json(const Graph& g);
/// JSON when the first non-blank byte is '{', graph6 otherwise.
Graph read_graph(std::string_view text);

}  // namespace wuchar
