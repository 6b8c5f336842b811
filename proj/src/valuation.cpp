#include "wuchar/valuation.hpp"

#include <stdexcept>

#include "wuchar/barycentric.hpp"

namespace wuchar {

Valuation euler_valuation(std::size_t c) {
  Valuation x{"euler", IntVector(c)};
  for (std::size_t i = 0; i < c; ++i) x.coefficients(i) = i % 2 == 0 ? 1 : -1;
  return x;
}

Valuation volume_valuation(std::size_t c) {
  Valuation x{"volume", IntVector::Zero(c)};
  if (c > 0) x.coefficients(c - 1) = 1;
  return x;
}

Valuation vk_valuation(std::size_t i, std::size_t c) {
  Valuation x{"vk:" + std::to_string(i), IntVector::Zero(std::max(c, i + 1))};
  x.coefficients(i) = 1;
  return x;
}

Valuation custom_valuation(const std::vector<Integer>& coefficients) {
  Valuation x{"custom", IntVector(coefficients.size())};
  for (std::size_t i = 0; i < coefficients.size(); ++i) x.coefficients(i) = coefficients[i];
  return x;
}

namespace {

std::size_t parse_index(const std::string& s) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad valuation index: " + s);
  }
  if (pos != s.size() || v < 0) throw std::invalid_argument("bad valuation index: " + s);
  return static_cast<std::size_t>(v);
}

}  // namespace

Valuation parse_valuation(const std::string& spec, std::size_t c) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "euler" && arg.empty()) return euler_valuation(c);
  if (head == "volume" && arg.empty()) return volume_valuation(c);
  if (head == "vk") {
    auto i = parse_index(arg);
    if (i >= c) throw std::invalid_argument("vk index beyond clique number");
    return vk_valuation(i, c);
  }
  if (head == "bary") {
    auto k = parse_index(arg);
    if (k < 1 || k > c) throw std::invalid_argument("bary index must be in 1..c");
    return Valuation{spec, bary_eigenvectors(c)[k - 1]};
  }
  if (head == "ds") {
    if (arg.empty()) throw std::invalid_argument("ds needs an index");
    int k = arg == "-1" ? -1 : static_cast<int>(parse_index(arg));
    return Valuation{spec, ds_vector(k, c)};
  }
  if (head == "custom") {
    std::vector<Integer> coeffs;
    std::size_t start = 0;
    while (start <= arg.size()) {
      auto comma = arg.find(',', start);
      std::string item = arg.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      try {
        coeffs.emplace_back(item);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad custom coefficient: " + item);
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (coeffs.size() > c) throw std::invalid_argument("custom vector longer than clique number");
    auto x = custom_valuation(coeffs);
    x.name = spec;
    return x;
  }
  throw std::invalid_argument("unknown valuation: " + spec);
}

Integer evaluate(const Valuation& x, const std::vector<Count>& f) {
  Integer total = 0;
  for (std::size_t i = 0; i < std::min(x.size(), f.size()); ++i) total += x.coefficients(i) * f[i];
  return total;
}

Integer evaluate(const Graph& g, const Valuation& x, const Limits& limits) {
  return evaluate(x, f_vector(g, limits));
}

Integer euler_characteristic(const Graph& g, const Limits& limits) {
  auto f = f_vector(g, limits);
  return evaluate(euler_valuation(f.size()), f);
}

Integer wu(const WhitneyComplex& complex, std::size_t k, const Limits& limits) {
  if (k < 1) throw std::invalid_argument("wu needs k >= 1");
  const std::size_t c = complex.clique_number();
  auto n = coface_counts(complex, nullptr, limits);
  Integer total = 0;
  for (std::size_t z = 0; z < complex.size(); ++z) {
    Count s = 0;
    for (std::size_t i = 0; i < c; ++i) s += i % 2 == 0 ? n[z * c + i] : -n[z * c + i];
    Integer term = boost::multiprecision::pow(Integer(s), static_cast<unsigned>(k));
    if (complex.dim(z) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

Integer wu(const Graph& g, std::size_t k, const Limits& limits) { return wu(WhitneyComplex(g, limits), k, limits); }

Integer wu_intersection(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                        const Limits& limits) {
  for (Vertex v : a)
    if (v >= g.order()) throw std::invalid_argument("vertex out of range");
  for (Vertex v : b)
    if (v >= g.order()) throw std::invalid_argument("vertex out of range");
  auto v = intersection_form(g, a, b, limits);
  auto chi = euler_valuation(v.dim()).coefficients;
  return v.contract({chi, chi});
}

std::vector<Integer> wu_function(const Graph& g, std::size_t max_order, const Limits& limits) {
  WhitneyComplex complex(g, limits);
  std::vector<Integer> out;
  for (std::size_t k = 1; k <= max_order; ++k) out.push_back(wu(complex, k, limits));
  return out;
}

Integer wu_algebraic(const Graph& g, const Limits& limits) {
  WhitneyComplex complex(g, limits);
  const std::size_t m = complex.size();
  if (static_cast<std::uint64_t>(m) * m > limits.max_tuples) throw CapExceeded("disjoint pair count", limits.max_tuples);
  Integer f_at_minus_one = 0;
  std::vector<int> sign(m);
  for (std::size_t x = 0; x < m; ++x) {
    sign[x] = complex.dim(x) % 2 == 0 ? -1 : 1;
    f_at_minus_one += sign[x];
  }
  std::vector<char> mark(g.order(), 0);
  Count disjoint = 0;
  for (std::size_t x = 0; x < m; ++x) {
    for (Vertex v : complex.simplex(x)) mark[v] = 1;
    for (std::size_t y = 0; y < m; ++y) {
      auto s = complex.simplex(y);
      if (std::none_of(s.begin(), s.end(), [&](Vertex v) { return mark[v] != 0; })) disjoint += sign[x] * sign[y];
    }
    for (Vertex v : complex.simplex(x)) mark[v] = 0;
  }
  return f_at_minus_one * f_at_minus_one - disjoint;
}

Rational expected_euler(std::size_t n, const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0,1]");
  Rational total = 0;
  Integer binom = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    binom = binom * (n - k + 1) / k;
    std::size_t e = k * (k - 1) / 2;
    auto e32 = static_cast<unsigned>(e);
    Rational power(boost::multiprecision::pow(boost::multiprecision::numerator(p), e32),
                   boost::multiprecision::pow(boost::multiprecision::denominator(p), e32));
    Rational term = power * binom;
    if (k % 2 == 1)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace wuchar
