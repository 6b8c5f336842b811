#include "wuchar/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace wuchar {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& row : adj_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    m_ += row.size();
  }
  m_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = adj_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Subgraph induced(const Graph& g, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<Edge> edges;
  for (Vertex i = 0; i < vertices.size(); ++i) {
    const auto& row = g.neighbors(vertices[i]);
    // both lists are sorted, so a merge finds the neighbors inside the subset
    auto it = std::upper_bound(vertices.begin(), vertices.end(), vertices[i]);
    auto r = std::upper_bound(row.begin(), row.end(), vertices[i]);
    while (it != vertices.end() && r != row.end()) {
      if (*it < *r) {
        ++it;
      } else if (*r < *it) {
        ++r;
      } else {
        edges.emplace_back(i, static_cast<Vertex>(it - vertices.begin()));
        ++it;
        ++r;
      }
    }
  }
  Subgraph s{Graph(vertices.size(), edges), std::move(vertices)};
  return s;
}

Subgraph unit_sphere(const Graph& g, Vertex v) { return induced(g, g.neighbors(v)); }

Subgraph unit_ball(const Graph& g, Vertex v) {
  auto vs = g.neighbors(v);
  vs.push_back(v);
  return induced(g, std::move(vs));
}

Subgraph ball(const Graph& g, Vertex v, std::size_t r) {
  std::vector<std::size_t> dist(g.order(), SIZE_MAX);
  std::vector<Vertex> seen{v};
  std::queue<Vertex> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    if (dist[u] == r) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != SIZE_MAX) continue;
      dist[w] = dist[u] + 1;
      seen.push_back(w);
      q.push(w);
    }
  }
  return induced(g, std::move(seen));
}

Graph suspension(const Graph& g) {
  auto edges = g.edges();
  auto n = static_cast<Vertex>(g.order());
  for (Vertex v = 0; v < n; ++v) {
    edges.emplace_back(v, n);
    edges.emplace_back(v, n + 1);
  }
  return Graph(n + 2, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  auto edges = g.edges();
  auto shift = static_cast<Vertex>(g.order());
  for (auto [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(g.order() + h.order(), edges);
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.order();
}

}  // namespace wuchar
