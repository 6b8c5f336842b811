#include <algorithm>
#include <map>
#include <stdexcept>

#include "wuchar/graph.hpp"
#include "wuchar/random.hpp"

namespace wuchar {

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph complete(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph star(std::size_t rays) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= rays; ++i) e.emplace_back(0, i);
  return Graph(rays + 1, e);
}

Graph wheel(std::size_t rim) {
  if (rim < 4) throw std::invalid_argument("wheel needs rim >= 4");
  std::vector<Edge> e;
  for (Vertex i = 1; i <= rim; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % rim + 1);
  }
  return Graph(rim + 1, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) e.emplace_back(i, static_cast<Vertex>(a + j));
  return Graph(a + b, e);
}

Graph bouquet(std::size_t k, std::size_t girth) {
  if (girth < 4) throw std::invalid_argument("bouquet needs girth >= 4");
  std::vector<Edge> e;
  Vertex next = 1;
  for (std::size_t c = 0; c < k; ++c) {
    Vertex prev = 0;
    for (std::size_t j = 0; j + 1 < girth; ++j) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, 0);
  }
  return Graph(next, e);
}

Graph cross_polytope(std::size_t d) {
  if (d < 1) throw std::invalid_argument("cross_polytope needs d >= 1");
  Graph g = cycle(4);
  for (std::size_t i = 1; i < d; ++i) g = suspension(g);
  return g;
}

Graph hypercube(std::size_t d) {
  if (d < 1) throw std::invalid_argument("hypercube needs d >= 1");
  std::vector<Edge> e;
  Vertex n = Vertex{1} << d;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t b = 0; b < d; ++b) {
      Vertex w = v ^ (Vertex{1} << b);
      if (v < w) e.emplace_back(v, w);
    }
  return Graph(n, e);
}

namespace {

Graph from_list(std::size_t n, std::vector<Edge> e) { return Graph(n, e); }

}  // namespace

Graph named(const std::string& name) {
  if (name == "kite") return from_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  if (name == "house") return from_list(5, {{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {2, 4}});
  if (name == "figure8") return bouquet(2, 4);
  if (name == "cube") return hypercube(3);
  if (name == "tesseract") return hypercube(4);
  if (name == "utility") return complete_bipartite(3, 3);
  if (name == "dodecahedron")
    // Frucht numbering of the dodecahedral graph
    return from_list(20, {{0, 1},   {0, 10},  {0, 19},  {1, 2},   {1, 8},   {2, 3},   {2, 6},   {3, 4},
                          {3, 19},  {4, 5},   {4, 17},  {5, 6},   {5, 15},  {6, 7},   {7, 8},   {7, 14},
                          {8, 9},   {9, 10},  {9, 13},  {10, 11}, {11, 12}, {11, 18}, {12, 13}, {12, 16},
                          {13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 18}, {18, 19}});
  if (name == "icosahedron") {
    static const int rows[12][5] = {{1, 2, 3, 4, 5},  {0, 4, 5, 8, 9},   {0, 3, 4, 7, 10},  {0, 2, 5, 7, 11},
                                    {0, 1, 2, 8, 10}, {0, 1, 3, 9, 11},  {7, 8, 9, 10, 11}, {2, 3, 6, 10, 11},
                                    {1, 4, 6, 9, 10}, {1, 5, 6, 8, 11},  {2, 4, 6, 7, 8},   {3, 5, 6, 7, 9}};
    std::vector<Edge> e;
    for (Vertex i = 0; i < 12; ++i)
      for (int j : rows[i])
        if (i < static_cast<Vertex>(j)) e.emplace_back(i, j);
    return Graph(12, e);
  }
  throw std::invalid_argument("unknown named graph: " + name);
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph random_graph_with_edges(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  if (m > all.size()) throw std::invalid_argument("too many edges requested");
  Rng rng(seed);
  rng.shuffle(all);
  all.resize(m);
  return Graph(n, all);
}

namespace {

std::size_t arg(const std::vector<std::string>& args, std::size_t i, const std::string& family) {
  if (i >= args.size()) throw std::invalid_argument(family + ": missing parameter");
  std::size_t pos = 0;
  long long value = std::stoll(args[i], &pos);
  if (pos != args[i].size() || value < 0) throw std::invalid_argument(family + ": bad parameter " + args[i]);
  return static_cast<std::size_t>(value);
}

}  // namespace

Graph generate(const std::string& family, const std::vector<std::string>& args) {
  if (family == "cycle") return cycle(arg(args, 0, family));
  if (family == "path") return path(arg(args, 0, family));
  if (family == "complete") return complete(arg(args, 0, family));
  if (family == "star") return star(arg(args, 0, family));
  if (family == "wheel") return wheel(arg(args, 0, family));
  if (family == "complete_bipartite") return complete_bipartite(arg(args, 0, family), arg(args, 1, family));
  if (family == "bouquet") return bouquet(arg(args, 0, family), args.size() > 1 ? arg(args, 1, family) : 4);
  if (family == "cross_polytope") return cross_polytope(arg(args, 0, family));
  if (family == "hypercube") return hypercube(arg(args, 0, family));
  if (family == "erdos_renyi") {
    if (args.size() < 3) throw std::invalid_argument("erdos_renyi: expected n p seed");
    return erdos_renyi(arg(args, 0, family), std::stod(args[1]), std::stoull(args[2]));
  }
  return named(family);
}

}  // namespace wuchar
