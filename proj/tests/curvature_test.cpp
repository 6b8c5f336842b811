#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"

using namespace wuchar;

namespace {

std::vector<Rational> random_function(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[i] = i;
  Rng rng(seed);
  rng.shuffle(rank);
  std::vector<Rational> f;
  for (auto r : rank) f.emplace_back(static_cast<long long>(r) * 3 - 7, 2);
  return f;
}

std::vector<Rational> as_rational(const std::vector<Integer>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("linear curvature matches the brute-force distribution") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = erdos_renyi(5 + seed % 6, 0.5, seed);
    std::size_t c = f_vector(g).size();
    for (std::size_t i = 0; i < c; ++i) {
      auto x = vk_valuation(i, c);
      auto k = curvature_linear(g, x);
      CHECK(k.values == oracle::curvature(g, oracle::coefficients(x)));
      CHECK(k.total() == Rational(evaluate(g, x)));
    }
  }
}

TEST_CASE("Wu curvature matches the brute-force distribution") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Graph g = erdos_renyi(4 + seed % 5, 0.55, seed);
    for (std::size_t k = 1; k <= 3; ++k) {
      auto field = curvature_wu(g, k);
      CHECK(field.values == oracle::wu_curvature(g, k));
      CHECK(field.total() == Rational(wu(g, k)));
    }
  }
}

TEST_CASE("constant curvature on spheres") {
  for (auto v : curvature_linear(cross_polytope(2), euler_valuation(3)).values) CHECK(v == Rational(1, 3));
  for (auto v : curvature_wu(named("icosahedron")).values) CHECK(v == Rational(1, 6));
  for (auto v : curvature_linear(cycle(7), euler_valuation(2)).values) CHECK(v == 0);
}

TEST_CASE("house curvature") {
  auto k = curvature_wu(named("house"));
  CHECK(k.values == std::vector<Rational>{0, Rational(2, 3), Rational(2, 3), 0, Rational(2, 3)});
  auto e = curvature_linear(named("house"), euler_valuation(3));
  CHECK(e.values == std::vector<Rational>{0, Rational(-1, 6), Rational(-1, 6), 0, Rational(1, 3)});
}

TEST_CASE("triangle-free Wu curvature") {
  for (const Graph& g : {named("figure8"), named("cube"), star(5), cycle(6), named("utility")})
    CHECK(trianglefree_wu_curvature(g) == curvature_wu(g));
  CHECK_THROWS_AS(trianglefree_wu_curvature(complete(3)), PreconditionError);
}

TEST_CASE("linear indices are sublevel jumps") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = erdos_renyi(5 + seed % 6, 0.5, seed + 100);
    auto f = random_function(g.order(), seed);
    std::size_t c = f_vector(g).size();
    for (std::size_t i = 0; i < c; ++i) {
      auto x = vk_valuation(i, c);
      auto coeff = oracle::coefficients(x);
      auto want = oracle::sublevel_index(g, f, [&](const Graph& h) { return oracle::evaluate(coeff, h); });
      auto got = index_linear(g, x, f);
      CHECK(got.values == as_rational(want));
      CHECK(got.total() == Rational(evaluate(g, x)));
    }
  }
}

TEST_CASE("Wu indices follow the four-term formula") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Graph g = erdos_renyi(4 + seed % 5, 0.55, seed + 200);
    auto f = random_function(g.order(), seed);
    IntMatrix m = wu_index_matrix(g, f);
    auto want = oracle::wu_index_matrix(g, f);
    auto idx = wu_index(g, f, 2).values;
    Integer total = 0;
    for (Eigen::Index v = 0; v < m.rows(); ++v) {
      Integer row = 0;
      for (Eigen::Index w = 0; w < m.cols(); ++w) {
        CHECK(m(v, w) == want[v][w]);
        CHECK(m(v, w) == m(w, v));
        row += want[v][w];
      }
      CHECK(idx[v] == Rational(row));
      total += row;
    }
    CHECK(total == wu(g));
    CHECK(wu_index(g, f, 3).values == as_rational(oracle::wu_index(g, f, 3)));
    CHECK(wu_index(g, f, 3).total() == Rational(wu(g, 3)));
  }
}

TEST_CASE("index of a non-injective function is rejected") {
  std::vector<Rational> f{1, 1, 2};
  CHECK_THROWS_AS(index_linear(path(3), euler_valuation(2), f), std::invalid_argument);
}

TEST_CASE("paper index vectors") {
  auto ico = wu_index(named("icosahedron"), identity_function(12));
  CHECK(ico.values == as_rational({1, 0, 0, 0, 0, 0, 1, -1, -1, 0, 1, 1}));
  auto house = wu_index(named("house"), identity_function(5));
  CHECK(house.values == as_rational({-1, 0, 1, 1, 1}));
}

TEST_CASE("index expectation is curvature") {
  for (const Graph& g : {named("house"), named("kite"), wheel(5), cycle(5), star(3)}) {
    CHECK(index_expectation_exact(g, euler_valuation(f_vector(g).size())).values ==
          curvature_linear(g, euler_valuation(f_vector(g).size())).values);
  }
  // the Wu analogue averages indices too, and still sums to Wu
  auto w = wu_index_expectation_exact(named("kite"), 2);
  CHECK(w.total() == Rational(wu(named("kite"))));
  CHECK_THROWS(index_expectation_exact(complete(10), euler_valuation(10)));
}

TEST_CASE("Monte-Carlo index expectation") {
  Graph g = named("house");
  auto mc = index_expectation_mc(g, euler_valuation(3), 20000, 7);
  auto exact = curvature_linear(g, euler_valuation(3)).values;
  CHECK(mc.samples == 20000);
  CHECK(mc.seed == 7);
  for (std::size_t v = 0; v < g.order(); ++v) {
    CHECK(mc.stderr_[v] >= 0);
    CHECK(std::abs(mc.mean[v] - exact[v].convert_to<double>()) < 5 * mc.stderr_[v] + 1e-9);
  }
  auto again = index_expectation_mc(g, euler_valuation(3), 20000, 7);
  CHECK(again.mean == mc.mean);
}

TEST_CASE("simplex interaction sums to Wu") {
  WhitneyComplex c(named("kite"));
  auto s = simplex_interaction(c, 2);
  Integer total = 0;
  for (std::size_t x = 0; x < c.size(); ++x) total += s[x];
  CHECK(total == wu(named("kite")));
}

TEST_CASE("field json") {
  VertexField f{"curvature", {Rational(1, 2), Rational(-1)}};
  CHECK(to_json(f).find("\"1/2\"") != std::string::npos);
}

TEST_CASE("Wu curvature of a wheel sits at the hub") {
  auto k = curvature_wu(wheel(5)).values;
  CHECK(k[0] == 1);
  for (std::size_t v = 1; v < k.size(); ++v) CHECK(k[v] == 0);
}
