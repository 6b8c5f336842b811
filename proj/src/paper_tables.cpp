#include <ostream>
#include <sstream>

#include "wuchar/cli.hpp"
#include "wuchar/wuchar.hpp"

namespace wuchar {

namespace {

using Rows = std::vector<std::vector<long long>>;

IntMatrix to_matrix(const Rows& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

bool compare_matrix(std::ostream& os, const IntMatrix& got, const Rows& want) {
  os << got << "\n";
  IntMatrix w = to_matrix(want);
  if (got.rows() != w.rows() || got.cols() != w.cols()) return false;
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    for (Eigen::Index j = 0; j < w.cols(); ++j)
      if (got(i, j) != w(i, j)) return false;
  return true;
}

bool compare_vector(std::ostream& os, const std::vector<Integer>& got, const std::vector<long long>& want) {
  bool ok = got.size() == want.size();
  for (std::size_t i = 0; i < got.size(); ++i) {
    os << (i ? " " : "") << got[i];
    if (ok && got[i] != want[i]) ok = false;
  }
  os << "\n";
  return ok;
}

bool compare_field(std::ostream& os, const VertexField& got, const std::vector<std::string>& want) {
  bool ok = got.values.size() == want.size();
  for (std::size_t i = 0; i < got.values.size(); ++i) {
    os << (i ? " " : "") << to_string(got.values[i]);
    if (ok && got.values[i] != parse_rational(want[i])) ok = false;
  }
  os << "\n";
  return ok;
}

std::vector<Integer> to_vector(const IntVector& v) { return {v.begin(), v.end()}; }

bool check_cubic(std::ostream& os, const IntTensor3& t, const std::vector<Rows>& want) {
  bool ok = true;
  const std::size_t c = t.dim();
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      os << "[";
      for (std::size_t k = 0; k < c; ++k) {
        os << (k ? "," : "") << t(i, j, k);
        if (t(i, j, k) != want[i][j][k]) ok = false;
      }
      os << "] ";
    }
    os << "\n";
  }
  return ok;
}

bool wu_golden(std::ostream& os) {
  struct Case {
    std::string name;
    Graph g;
    std::size_t k;
    long long want;
  };
  std::vector<Case> cases = {
      {"K_2", complete(2), 2, -1},          {"K_3", complete(3), 2, 1},
      {"kite", named("kite"), 2, 1},        {"C_4", cycle(4), 2, 0},
      {"octahedron", cross_polytope(2), 2, 2}, {"16-cell", cross_polytope(3), 2, 0},
      {"K_3,3", named("utility"), 2, 15},   {"cube", named("cube"), 2, 20},
      {"dodecahedron", named("dodecahedron"), 2, 50}, {"tesseract", named("tesseract"), 2, 112},
      {"figure8", named("figure8"), 2, 7},  {"figure8", named("figure8"), 3, -25},
      {"figure8", named("figure8"), 4, 79},
  };
  for (std::size_t d = 0; d <= 5; ++d) cases.push_back({"K_" + std::to_string(d + 1), complete(d + 1), 2, d % 2 ? -1 : 1});
  for (long long k = 1; k <= 5; ++k) cases.push_back({"bouquet " + std::to_string(k), bouquet(k, 4), 2, 4 * k * k - 5 * k + 1});
  for (long long n = 0; n <= 9; ++n) cases.push_back({"star " + std::to_string(n), star(n), 2, n * n - 3 * n + 1});
  bool ok = true;
  for (const auto& c : cases) {
    Integer got = wu(c.g, c.k);
    bool pass = got == c.want;
    ok = ok && pass;
    os << "omega_" << c.k << "(" << c.name << ") = " << got << (pass ? "" : "  expected " + std::to_string(c.want))
       << "\n";
  }
  os << "note: omega_3(figure8) is printed as 25 in the source; its definition gives -25\n";
  return ok;
}

}  // namespace

const std::vector<PaperTable>& paper_tables() {
  static const std::vector<PaperTable> tables = {
      {"wu-golden", "Wu characteristics of the example graphs", wu_golden},
      {"bary-operator", "Barycentric refinement operator, c = 5",
       [](std::ostream& os) {
         return compare_matrix(os, bary_operator<Integer>(5),
                               {{1, 1, 1, 1, 1}, {0, 2, 6, 14, 30}, {0, 0, 6, 36, 150}, {0, 0, 0, 24, 240}, {0, 0, 0, 0, 120}});
       }},
      {"eigenbasis", "Eigenvectors of the transposed operator, c = 5",
       [](std::ostream& os) {
         IntMatrix m(5, 5);
         auto basis = bary_eigenvectors(5);
         for (int k = 0; k < 5; ++k) m.row(k) = basis[k].transpose();
         return compare_matrix(
             os, m, {{1, -1, 1, -1, 1}, {0, -22, 33, -40, 45}, {0, 0, 19, -38, 55}, {0, 0, 0, -2, 5}, {0, 0, 0, 0, 1}});
       }},
      {"star3-fmatrix", "f-matrix of the star with three rays",
       [](std::ostream& os) { return compare_matrix(os, f_matrix(star(3)).matrix(), {{4, 6}, {6, 9}}); }},
      {"octahedron-fmatrix", "f-matrix of the octahedron",
       [](std::ostream& os) {
         return compare_matrix(os, f_matrix(cross_polytope(2)).matrix(), {{6, 24, 24}, {24, 84, 72}, {24, 72, 56}});
       }},
      {"16cell-fmatrix", "f-matrix of the 16-cell",
       [](std::ostream& os) {
         return compare_matrix(os, f_matrix(cross_polytope(3)).matrix(),
                               {{8, 48, 96, 64}, {48, 264, 480, 288}, {96, 480, 800, 448}, {64, 288, 448, 240}});
       }},
      {"4cross-fmatrix", "f-matrix of the 4-dimensional cross polytope",
       [](std::ostream& os) {
         return compare_matrix(os, f_matrix(cross_polytope(4)).matrix(),
                               {{10, 80, 240, 320, 160},
                                {80, 600, 1680, 2080, 960},
                                {240, 1680, 4400, 5120, 2240},
                                {320, 2080, 5120, 5680, 2400},
                                {160, 960, 2240, 2400, 992}});
       }},
      {"4cross-bary", "Barycentric characteristic numbers of the 4-dimensional cross polytope",
       [](std::ostream& os) { return compare_vector(os, to_vector(bary_numbers(cross_polytope(4))), {2, 0, 240, 0, 32}); }},
      {"4cross-omega", "Quadratic invariants of the 4-dimensional cross polytope",
       [](std::ostream& os) {
         return compare_matrix(os, ds_quadratic(cross_polytope(4)),
                               {{2, 0, 240, 0, 32},
                                {0, -4560, 7760, -800, 1440},
                                {240, 7760, 47440, 2720, 5920},
                                {0, -800, 2720, -480, 160},
                                {32, 1440, 5920, 160, 992}});
       }},
      {"16cell-omega", "Quadratic invariants of the 16-cell",
       [](std::ostream& os) {
         return compare_matrix(os, ds_quadratic(cross_polytope(3)),
                               {{0, 112, 0, 16}, {112, 10176, 224, 1152}, {0, 224, -32, 32}, {16, 1152, 32, 240}});
       }},
      {"16cell-cubic", "Cubic invariants of the 16-cell",
       [](std::ostream& os) {
         return check_cubic(os, ds_cubic(cross_polytope(3)),
                            {{{0, 112, 0, 16}, {112, 10176, 224, 1152}, {0, 224, -32, 32}, {16, 1152, 32, 240}},
                             {{112, 10176, 224, 1152}, {10176, 703264, 21216, 76480}, {224, 21216, -1056, 2880},
                              {1152, 76480, 2880, 14848}},
                             {{0, 224, -32, 32}, {224, 21216, -1056, 2880}, {-32, -1056, -288, 0}, {32, 2880, 0, 864}},
                             {{16, 1152, 32, 240}, {1152, 76480, 2880, 14848}, {32, 2880, 0, 864},
                              {240, 14848, 864, 2800}}});
       }},
      {"octahedron-omega", "Quadratic invariants of the octahedron",
       [](std::ostream& os) {
         return compare_matrix(os, ds_quadratic(cross_polytope(2)), {{2, 0, 8}, {0, -24, 24}, {8, 24, 56}});
       }},
      {"octahedron-cubic", "Cubic invariants of the octahedron (pairwise intersecting triples)",
       [](std::ostream& os) {
         return check_cubic(os, ds_cubic(cross_polytope(2), {}, IntersectionRule::pairwise),
                            {{{2, 0, 8}, {0, -24, 24}, {8, 24, 56}},
                             {{0, -24, 24}, {-24, -120, 120}, {24, 120, 264}},
                             {{8, 24, 56}, {24, 120, 264}, {56, 264, 344}}});
       }},
      {"icosahedron-index", "Wu index matrix and indices of the icosahedron, identity ordering",
       [](std::ostream& os) {
         auto g = named("icosahedron");
         auto f = identity_function(12);
         bool ok = compare_matrix(os, wu_index_matrix(g, f),
                                  {{1, -1, -1, 0, 1, 1, 0, 0, 0, 0, 0, 0},
                                   {-1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                   {-1, 1, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0},
                                   {1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
                                   {1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 1, -1, -1, 0, 1, 1},
                                   {0, 0, 0, 0, 0, 0, -1, 1, 1, 0, -1, -1},
                                   {0, 0, 0, 0, 0, 0, -1, 1, 1, 0, -1, -1},
                                   {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 1, -1, -1, 0, 1, 1},
                                   {0, 0, 0, 0, 0, 0, 1, -1, -1, 0, 1, 1}});
         return compare_field(os, wu_index(g, f), {"1", "0", "0", "0", "0", "0", "1", "-1", "-1", "0", "1", "1"}) && ok;
       }},
      {"house-index", "Wu index matrix and indices of the house graph, identity ordering",
       [](std::ostream& os) {
         auto g = named("house");
         auto f = identity_function(5);
         bool ok = compare_matrix(os, wu_index_matrix(g, f),
                                  {{1, -1, 0, -1, 0}, {-1, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {-1, 1, 0, 1, 0}, {0, 0, 1, 0, 0}});
         return compare_field(os, wu_index(g, f), {"-1", "0", "1", "1", "1"}) && ok;
       }},
      {"house-curvature", "Euler and Wu curvatures of the house graph",
       [](std::ostream& os) {
         auto g = named("house");
         bool ok = compare_field(os, curvature_linear(g, euler_valuation(3)), {"0", "-1/6", "-1/6", "0", "1/3"});
         return compare_field(os, curvature_wu(g, 2), {"0", "2/3", "2/3", "0", "2/3"}) && ok;
       }},
      {"constant-curvature", "Constant curvatures: icosahedron Euler and volume, cube and tesseract Wu",
       [](std::ostream& os) {
         bool ok = compare_field(os, curvature_linear(named("icosahedron"), euler_valuation(3)),
                                 std::vector<std::string>(12, "1/6"));
         ok = compare_field(os, curvature_linear(named("icosahedron"), volume_valuation(3)),
                            std::vector<std::string>(12, "5/3")) && ok;
         ok = compare_field(os, curvature_wu(named("cube"), 2), std::vector<std::string>(8, "5/2")) && ok;
         return compare_field(os, curvature_wu(named("tesseract"), 2), std::vector<std::string>(16, "7")) && ok;
       }},
      {"octahedron-squared", "Product of two octahedra: f-vector, Euler characteristic, volume, Dehn-Sommerville zeros",
       [](std::ostream& os) {
         Graph p = cartesian(cross_polytope(2), cross_polytope(2)).graph;
         WhitneyComplex complex(p);
         auto f = complex.f_vector();
         bool ok = compare_vector(os, {f.begin(), f.end()}, {676, 8928, 28992, 34560, 13824});
         auto basis = bary_eigenvectors(5);
         std::vector<Integer> numbers;
         for (const auto& chi : basis) numbers.push_back(evaluate(Valuation{"", chi}, f));
         os << "bary numbers:";
         for (const auto& x : numbers) os << " " << x;
         IntMatrix omega = ds_quadratic(f_tensor(complex, 2));
         os << "\nOmega row 1: " << omega.row(0) << "\n";
         Integer chi = evaluate(euler_valuation(5), f);
         os << "chi = " << chi << ", volume = " << f[4] << "\n";
         return ok && chi == 4 && f[4] == 13824 && numbers[1] == 0 && numbers[3] == 0 && omega(0, 1) == 0 &&
                omega(0, 3) == 0;
       }},
  };
  return tables;
}

}  // namespace wuchar
