#include <doctest.h>

#include <set>

#include "oracle.hpp"

using namespace wuchar;

namespace {

std::vector<Graph> sample_graphs() {
  std::vector<Graph> out{complete(4), cycle(5), named("kite"), named("house"), named("figure8"), wheel(6),
                         cross_polytope(2), star(3)};
  for (std::uint64_t seed = 0; seed < 10; ++seed) out.push_back(erdos_renyi(5 + seed % 4, 0.55, seed));
  return out;
}

}  // namespace

TEST_CASE("Whitney complex lists every clique once") {
  for (const auto& g : sample_graphs()) {
    WhitneyComplex c(g);
    auto expected = oracle::cliques(g);
    std::set<oracle::Mask> seen;
    for (std::size_t id = 0; id < c.size(); ++id) {
      oracle::Mask m = 0;
      for (Vertex v : c.simplex(id)) m |= oracle::Mask{1} << v;
      CHECK(static_cast<std::size_t>(oracle::dim(m)) == c.dim(id));
      seen.insert(m);
    }
    CHECK(seen.size() == c.size());
    CHECK(seen == std::set<oracle::Mask>(expected.begin(), expected.end()));
    CHECK(c.f_vector() == oracle::f_vector(g));
  }
}

TEST_CASE("Whitney complex is closed under faces") {
  WhitneyComplex c(complete(5));
  for (std::size_t id = 0; id < c.size(); ++id) {
    std::size_t faces = 0;
    c.for_each_face(id, [&](std::size_t f) {
      ++faces;
      CHECK(c.dim(f) <= c.dim(id));
    });
    CHECK(faces == (std::size_t{1} << (c.dim(id) + 1)) - 1);
  }
  std::vector<Vertex> missing{0, 9};
  CHECK_FALSE(c.find(missing).has_value());
}

TEST_CASE("simplex cap is enforced") {
  CHECK_THROWS_AS(WhitneyComplex(complete(12), Limits{100, 1000}), CapExceeded);
  CHECK_THROWS_AS(f_tensor(complete(6), 3, Limits{1000, 50}), CapExceeded);
}

TEST_CASE("f-tensors agree with tuple enumeration") {
  for (const auto& g : sample_graphs()) {
    for (std::size_t k = 1; k <= 3; ++k) CHECK(f_tensor(g, k).data() == oracle::f_tensor(g, k));
    CHECK(f_tensor(g, 2, {}, IntersectionRule::pairwise) == f_tensor(g, 2));
    CHECK(f_tensor(g, 3, {}, IntersectionRule::pairwise).data() == oracle::f_tensor_pairwise(g, 3));
  }
}

TEST_CASE("f-matrix is symmetric with the f-vector on the first row of order 1") {
  Graph g = named("house");
  auto m = f_matrix(g).matrix();
  CHECK(oracle::equal(m, m.transpose()));
  auto f = f_vector(g);
  CHECK(f_tensor(g, 1).data() == f);
}

TEST_CASE("star with three rays") {
  auto m = f_matrix(star(3));
  CHECK(m.data() == std::vector<Count>{4, 6, 6, 9});
}

TEST_CASE("intersection form of overlapping stars") {
  Graph g = star(3);
  auto v = intersection_form(g, {1, 0, 2}, {0, 2, 3});
  CHECK(v.data() == std::vector<Count>{2, 3, 3, 4});
  CHECK(intersection_form(g, {0, 1, 2, 3}, {0, 1, 2, 3}) == f_matrix(g));
  CHECK_THROWS(intersection_form(g, {0, 7}, {0}));
}

TEST_CASE("coface counts") {
  WhitneyComplex c(complete(3));
  auto n = coface_counts(c);
  // vertex 0 lies in one vertex, two edges and one triangle
  CHECK(n[0] == 1);
  CHECK(n[1] == 2);
  CHECK(n[2] == 1);
}

TEST_CASE("tensor json nests by order") {
  CHECK(to_json(f_matrix(complete(2))) == R"({"data":[[2,2],[2,1]],"order":2})");
}
