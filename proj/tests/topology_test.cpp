#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"

using namespace wuchar;

namespace {

Graph cone(const Graph& g) {
  auto edges = g.edges();
  const Vertex apex = static_cast<Vertex>(g.order());
  for (Vertex v = 0; v < apex; ++v) edges.emplace_back(v, apex);
  return Graph(g.order() + 1, edges);
}

}  // namespace

TEST_CASE("contractibility") {
  CHECK(is_contractible(complete(1)).result == Tri::yes);
  CHECK(is_contractible(complete(5)).result == Tri::yes);
  CHECK(is_contractible(path(6)).result == Tri::yes);
  CHECK(is_contractible(star(4)).result == Tri::yes);
  CHECK(is_contractible(wheel(6)).result == Tri::yes);
  CHECK(is_contractible(named("kite")).result == Tri::yes);
  CHECK(is_contractible(cycle(4)).result == Tri::no);
  CHECK(is_contractible(named("house")).result == Tri::no);
  CHECK(is_contractible(cross_polytope(2)).result == Tri::no);
  CHECK(is_contractible(Graph()).result == Tri::no);
  CHECK(is_contractible(disjoint_union(complete(1), complete(1))).result == Tri::no);
  // the collapse order removes vertices with contractible unit spheres
  auto c = is_contractible(wheel(5));
  CHECK(c.collapse.size() == 5);  // all but the last vertex
}

TEST_CASE("spheres") {
  auto s = is_sphere(cycle(5));
  CHECK(s.result == Tri::yes);
  CHECK(s.dimension == 1);
  CHECK(is_sphere(cross_polytope(2)).dimension == 2);
  CHECK(is_sphere(named("icosahedron")).dimension == 2);
  CHECK(is_sphere(cross_polytope(3)).dimension == 3);
  CHECK(is_sphere(Graph(2)).dimension == 0);
  CHECK(is_sphere(Graph()).dimension == -1);
  CHECK(is_sphere(Graph()).result == Tri::yes);
  CHECK(is_sphere(cycle(3)).result == Tri::no);
  CHECK(is_sphere(wheel(5)).result == Tri::no);
  CHECK(is_sphere(named("figure8")).result == Tri::no);
}

TEST_CASE("d-graphs with boundary") {
  auto d = is_dgraph(wheel(5));
  CHECK(d.result == Tri::yes);
  CHECK(d.dimension == 2);
  CHECK(d.has_boundary);
  CHECK(d.boundary == std::vector<Vertex>{1, 2, 3, 4, 5});
  auto p = is_dgraph(path(4));
  CHECK(p.dimension == 1);
  CHECK(p.boundary == std::vector<Vertex>{0, 3});
  CHECK_FALSE(is_dgraph(cross_polytope(2)).has_boundary);
  auto f = is_dgraph(named("figure8"));
  CHECK(f.result == Tri::no);
  CHECK(f.failing_vertex == Vertex{0});
  auto b = boundary(cone(named("icosahedron")));
  CHECK(b.graph.order() == 12);
  CHECK(is_sphere(b.graph).dimension == 2);
  CHECK_THROWS_AS(boundary(cross_polytope(2)), PreconditionError);
  // every vertex of K2 and K3 sees a ball, so the induced boundary is the graph itself
  CHECK(is_dgraph(complete(2)).result == Tri::no);
  CHECK(is_dgraph(complete(3)).result == Tri::no);
}

TEST_CASE("classification") {
  CHECK(classify(cross_polytope(3)).kind == "sphere");
  CHECK(classify(cross_polytope(3)).dimension == 3);
  auto w = classify(wheel(5));
  CHECK(w.kind == "dgraph");
  CHECK(w.has_boundary);
  CHECK(w.contractible == Tri::yes);
  CHECK(classify(named("figure8")).kind == "other");
  CHECK(classify(star(3)).kind == "contractible");
  CHECK(classify(Graph()).kind == "empty");
  auto tight = classify(cross_polytope(3), {1, {}});
  CHECK(tight.kind == "indeterminate");
  CHECK(to_json(w).find("\"dgraph\"") != std::string::npos);
}

TEST_CASE("boundary formula") {
  std::vector<Graph> suite{wheel(5), wheel(6), wheel(7), wheel(8), cone(named("icosahedron"))};
  // paths with two to six edges
  for (std::size_t n = 3; n <= 7; ++n) suite.push_back(path(n));
  for (const auto& g : suite) {
    auto b = boundary(g);
    CHECK(wu(g) == euler_characteristic(g) - euler_characteristic(b.graph));
    CHECK(wu(g, 3) == euler_characteristic(g));
  }
  CHECK(wu(cone(named("icosahedron"))) == -1);
}

TEST_CASE("inductive dimension") {
  CHECK(inductive_dimension(Graph()) == -1);
  CHECK(inductive_dimension(Graph(3)) == 0);
  CHECK(inductive_dimension(complete(4)) == 3);
  CHECK(inductive_dimension(star(3)) == 1);
  CHECK(inductive_dimension(cross_polytope(2)) == 2);
  // kite: two triangles sharing an edge; degree-two vertices see an edge, the others a path
  CHECK(inductive_dimension(named("kite")) == 2);
  CHECK(inductive_dimension(named("house")) == Rational(22, 15));
}

TEST_CASE("Puiseux gap") {
  for (auto v : puiseux_gap(cross_polytope(2), parse_valuation("ds:0", 3)).values) CHECK(v == 0);
  // Euler is not Dehn-Sommerville in dimension two: 2 chi(ball) - chi(circle) = 2
  for (auto v : puiseux_gap(named("icosahedron"), euler_valuation(3)).values) CHECK(v == 2);
  auto kite = puiseux_gap(named("kite"), euler_valuation(3)).values;
  CHECK(std::any_of(kite.begin(), kite.end(), [](const Rational& v) { return v != 0; }));
}

TEST_CASE("closed d-graphs have all Wu characteristics equal to Euler") {
  for (const Graph& g : {cross_polytope(2), named("icosahedron"), cross_polytope(3), cross_polytope(4)}) {
    CHECK(wu(g, 2) == euler_characteristic(g));
    CHECK(wu(g, 3) == euler_characteristic(g));
  }
}

TEST_CASE("refinement keeps spheres spheres") {
  for (const Graph& g : {cycle(4), cross_polytope(2), named("icosahedron"), wheel(5), named("kite")}) {
    auto a = is_sphere(g), b = is_sphere(refine(g));
    CHECK(a.result == b.result);
    CHECK(a.dimension == b.dimension);
  }
}
