#include "wuchar/barycentric.hpp"

#include <stdexcept>

namespace wuchar {

Graph refine(const Graph& g, const Limits& limits) {
  WhitneyComplex complex(g, limits);
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < complex.size(); ++x)
    complex.for_each_face(x, [&](std::size_t z) {
      if (z != x) edges.emplace_back(static_cast<Vertex>(z), static_cast<Vertex>(x));
    });
  return Graph(complex.size(), edges);
}

Integer stirling2(unsigned j, unsigned i) {
  // row[t] = S(m, t), advanced one m at a time
  std::vector<Integer> row(i + 1, 0);
  row[0] = 1;
  for (unsigned m = 1; m <= j; ++m) {
    for (unsigned t = std::min(m, i); t >= 1; --t) row[t] = t * row[t] + row[t - 1];
    row[0] = 0;
  }
  return row[i];
}

namespace {

IntVector to_primitive(const RatVector& q, bool last_positive) {
  Integer lcm = 1;
  for (const auto& x : q) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
  IntVector z(q.size());
  Integer g = 0;
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    Rational scaled = q(i) * lcm;
    z(i) = boost::multiprecision::numerator(scaled);
    g = boost::multiprecision::gcd(g, z(i));
  }
  if (g == 0) return z;
  Integer lead = 0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    Eigen::Index j = last_positive ? z.size() - 1 - i : i;
    if (z(j) != 0) {
      lead = z(j);
      break;
    }
  }
  if (lead < 0) g = -g;
  for (auto& x : z) x /= g;
  return z;
}

}  // namespace

std::vector<IntVector> bary_eigenvectors(std::size_t c) {
  const auto a = bary_operator<Rational>(c);
  std::vector<IntVector> basis;
  for (std::size_t k = 0; k < c; ++k) {
    RatVector chi = RatVector::Zero(c);
    chi(k) = 1;
    for (std::size_t j = k + 1; j < c; ++j) {
      Rational s = 0;
      for (std::size_t m = k; m < j; ++m) s += a(m, j) * chi(m);
      chi(j) = s / (a(k, k) - a(j, j));
    }
    basis.push_back(to_primitive(chi, true));
  }
  return basis;
}

IntVector ds_vector(int k, std::size_t c) {
  if (k < -1 || k >= static_cast<int>(c)) throw std::invalid_argument("ds index must lie in -1..c-1");
  auto binom = [](std::size_t n, std::size_t r) {
    Integer b = 1;
    for (std::size_t i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return b;
  };
  RatVector d = RatVector::Zero(c);
  for (std::size_t j = static_cast<std::size_t>(std::max(k, 0)); j < c; ++j) {
    Integer b = binom(j + 1, static_cast<std::size_t>(k + 1));
    d(j) = Rational(j % 2 == 0 ? b : Integer(-b));
  }
  if (k >= 0) d(k) += c % 2 == 0 ? 1 : -1;
  return to_primitive(d, false);
}

IntVector bary_numbers(const Graph& g, const Limits& limits) {
  auto f = f_vector(g, limits);
  auto basis = bary_eigenvectors(f.size());
  IntVector out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    Integer s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s += basis[k](i) * f[i];
    out(k) = s;
  }
  return out;
}

IntMatrix ds_quadratic(const FTensor& v) {
  const std::size_t c = v.dim();
  IntMatrix x(c, c);
  auto basis = bary_eigenvectors(c);
  for (std::size_t k = 0; k < c; ++k) x.col(k) = basis[k];
  IntMatrix vm = v.matrix();
  return x.transpose() * vm * x;
}

IntMatrix ds_quadratic(const Graph& g, const Limits& limits) { return ds_quadratic(f_matrix(g, limits)); }

IntTensor3 ds_cubic(const Graph& g, const Limits& limits, IntersectionRule rule) {
  auto v = f_tensor(g, 3, limits, rule);
  const std::size_t c = v.dim();
  auto basis = bary_eigenvectors(c);
  // contract one slot at a time: T1[k][j][n], T2[k][l][n], T3[k][l][m]
  std::vector<Integer> t1(c * c * c, 0), t2(c * c * c, 0);
  IntTensor3 out(c);
  for (std::size_t k = 0; k < c; ++k)
    for (std::size_t i = 0; i < c; ++i)
      if (basis[k](i) != 0)
        for (std::size_t j = 0; j < c; ++j)
          for (std::size_t n = 0; n < c; ++n) t1[(k * c + j) * c + n] += basis[k](i) * v[(i * c + j) * c + n];
  for (std::size_t k = 0; k < c; ++k)
    for (std::size_t l = 0; l < c; ++l)
      for (std::size_t j = 0; j < c; ++j)
        if (basis[l](j) != 0)
          for (std::size_t n = 0; n < c; ++n) t2[(k * c + l) * c + n] += basis[l](j) * t1[(k * c + j) * c + n];
  for (std::size_t k = 0; k < c; ++k)
    for (std::size_t l = 0; l < c; ++l)
      for (std::size_t m = 0; m < c; ++m)
        for (std::size_t n = 0; n < c; ++n) out(k, l, m) += basis[m](n) * t2[(k * c + l) * c + n];
  return out;
}

Integer gruenbaum_gap(const Graph& g, const IntVector& psi, const Limits& limits) {
  WhitneyComplex complex(g, limits);
  auto v = f_tensor(complex, 2, limits);
  const std::size_t c = v.dim();
  IntVector p = IntVector::Zero(c);
  for (std::size_t i = 0; i < std::min<std::size_t>(c, psi.size()); ++i) p(i) = psi(i);
  Integer lhs = v.contract({bary_eigenvectors(c)[0], p});
  Integer rhs = 0;
  auto f = complex.f_vector();
  for (std::size_t i = 0; i < c; ++i) rhs += p(i) * f[i];
  return lhs - rhs;
}

RatMatrix trianglefree_refinement_map() {
  RatMatrix m(3, 3);
  m << Rational(1), Rational(1, 2), Rational(0), Rational(0), Rational(2), Rational(0), Rational(0), Rational(3, 2),
      Rational(1);
  return m;
}

}  // namespace wuchar
