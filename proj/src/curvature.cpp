#include "wuchar/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <numeric>
#include <stdexcept>

#include "wuchar/random.hpp"

namespace wuchar {

Rational VertexField::total() const { return std::accumulate(values.begin(), values.end(), Rational(0)); }

namespace {

// Distributes per-simplex weights equally over the simplex vertices.
VertexField distribute(const WhitneyComplex& complex, const std::vector<Integer>& weight, std::string kind) {
  const std::size_t n = complex.vertex_count(), c = complex.clique_number();
  std::vector<Integer> by_size(n * c, 0);
  for (std::size_t x = 0; x < complex.size(); ++x) {
    if (weight[x] == 0) continue;
    auto s = complex.simplex(x);
    for (Vertex v : s) by_size[v * c + s.size() - 1] += weight[x];
  }
  VertexField field{std::move(kind), std::vector<Rational>(n, 0)};
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t m = 0; m < c; ++m)
      if (by_size[v * c + m] != 0) field.values[v] += Rational(by_size[v * c + m], m + 1);
  return field;
}

std::vector<Integer> linear_weights(const WhitneyComplex& complex, const Valuation& x) {
  std::vector<Integer> w(complex.size());
  for (std::size_t s = 0; s < complex.size(); ++s) {
    auto d = complex.dim(s);
    w[s] = d < x.size() ? x.coefficients(d) : Integer(0);
  }
  return w;
}

std::vector<Vertex> owners(const WhitneyComplex& complex, const std::vector<Rational>& f) {
  if (f.size() != complex.vertex_count()) throw std::invalid_argument("function length differs from vertex count");
  std::vector<Vertex> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return f[a] < f[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (f[order[i - 1]] == f[order[i]]) throw std::invalid_argument("vertex function is not injective");
  std::vector<std::size_t> rank(f.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  std::vector<Vertex> top(complex.size());
  for (std::size_t x = 0; x < complex.size(); ++x) {
    auto s = complex.simplex(x);
    top[x] = *std::max_element(s.begin(), s.end(), [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
  }
  return top;
}

VertexField sum_by_owner(const WhitneyComplex& complex, const std::vector<Integer>& weight,
                         const std::vector<Vertex>& top) {
  std::vector<Integer> acc(complex.vertex_count(), 0);
  for (std::size_t x = 0; x < complex.size(); ++x) acc[top[x]] += weight[x];
  VertexField field{"index", {}};
  for (auto& a : acc) field.values.emplace_back(a);
  return field;
}

VertexField exact_expectation(const WhitneyComplex& complex, const std::vector<Integer>& weight) {
  const std::size_t n = complex.vertex_count();
  if (n > 9) throw std::invalid_argument("exact expectation needs n <= 9; use the Monte-Carlo estimate");
  std::vector<Count> w(weight.size());
  for (std::size_t x = 0; x < weight.size(); ++x) w[x] = weight[x].convert_to<Count>();
  std::vector<std::size_t> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  std::vector<Count> acc(n, 0);
  Count perms = 0;
  do {
    ++perms;
    for (std::size_t x = 0; x < complex.size(); ++x) {
      auto s = complex.simplex(x);
      Vertex top = s[0];
      for (Vertex v : s)
        if (rank[v] > rank[top]) top = v;
      acc[top] += w[x];
    }
  } while (std::next_permutation(rank.begin(), rank.end()));
  VertexField field{"expectation", {}};
  for (auto a : acc) field.values.emplace_back(a, perms);
  return field;
}

McField mc_expectation(const WhitneyComplex& complex, const std::vector<Integer>& weight, std::size_t samples,
                       std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  const std::size_t n = complex.vertex_count();
  std::vector<double> w(weight.size());
  for (std::size_t x = 0; x < weight.size(); ++x) w[x] = weight[x].convert_to<double>();
  Rng rng(seed);
  std::vector<std::size_t> rank(n);
  std::vector<double> sum(n, 0), sum2(n, 0), current(n);
  for (std::size_t s = 0; s < samples; ++s) {
    std::iota(rank.begin(), rank.end(), 0);
    rng.shuffle(rank);
    std::fill(current.begin(), current.end(), 0.0);
    for (std::size_t x = 0; x < complex.size(); ++x) {
      auto sx = complex.simplex(x);
      Vertex top = sx[0];
      for (Vertex v : sx)
        if (rank[v] > rank[top]) top = v;
      current[top] += w[x];
    }
    for (std::size_t v = 0; v < n; ++v) {
      sum[v] += current[v];
      sum2[v] += current[v] * current[v];
    }
  }
  McField out;
  out.samples = samples;
  out.seed = seed;
  for (std::size_t v = 0; v < n; ++v) {
    double mean = sum[v] / static_cast<double>(samples);
    double var = samples > 1 ? (sum2[v] - samples * mean * mean) / static_cast<double>(samples - 1) : 0.0;
    out.mean.push_back(mean);
    out.stderr_.push_back(std::sqrt(std::max(var, 0.0) / static_cast<double>(samples)));
  }
  return out;
}

}  // namespace

std::vector<Integer> simplex_interaction(const WhitneyComplex& complex, std::size_t k, const Limits& limits) {
  if (k < 1) throw std::invalid_argument("order must be >= 1");
  const std::size_t c = complex.clique_number();
  std::vector<Integer> kappa(complex.size());
  if (k == 1) {
    for (std::size_t x = 0; x < complex.size(); ++x) kappa[x] = complex.dim(x) % 2 == 0 ? 1 : -1;
    return kappa;
  }
  auto n = coface_counts(complex, nullptr, limits);
  // signed term (-1)^dim z S(z)^(k-1) for every simplex z
  std::vector<Integer> term(complex.size());
  for (std::size_t z = 0; z < complex.size(); ++z) {
    Count s = 0;
    for (std::size_t i = 0; i < c; ++i) s += i % 2 == 0 ? n[z * c + i] : -n[z * c + i];
    term[z] = boost::multiprecision::pow(Integer(s), static_cast<unsigned>(k - 1));
    if (complex.dim(z) % 2 == 1) term[z] = -term[z];
  }
  for (std::size_t x = 0; x < complex.size(); ++x) {
    Integer sum = 0;
    complex.for_each_face(x, [&](std::size_t z) { sum += term[z]; });
    kappa[x] = complex.dim(x) % 2 == 0 ? sum : Integer(-sum);
  }
  return kappa;
}

VertexField curvature_linear(const Graph& g, const Valuation& x, const Limits& limits) {
  WhitneyComplex complex(g, limits);
  return distribute(complex, linear_weights(complex, x), "curvature");
}

VertexField curvature_wu(const Graph& g, std::size_t k, const Limits& limits) {
  WhitneyComplex complex(g, limits);
  return distribute(complex, simplex_interaction(complex, k, limits), "curvature");
}

VertexField trianglefree_wu_curvature(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    const auto &a = g.neighbors(u), &b = g.neighbors(v);
    std::vector<Vertex> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (!common.empty())
      throw PreconditionError("triangle " + std::to_string(u) + "," + std::to_string(v) + "," +
                              std::to_string(common[0]));
  }
  VertexField field{"curvature", {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    Integer d = g.degree(v), neighbor_sum = 0;
    for (Vertex w : g.neighbors(v)) neighbor_sum += g.degree(w);
    field.values.push_back(Rational(1) - Rational(5 * d, 2) + Rational(d * d, 2) + Rational(neighbor_sum, 2));
  }
  return field;
}

VertexField index_linear(const Graph& g, const Valuation& x, const std::vector<Rational>& f, const Limits& limits) {
  WhitneyComplex complex(g, limits);
  return sum_by_owner(complex, linear_weights(complex, x), owners(complex, f));
}

IntMatrix wu_index_matrix(const Graph& g, const std::vector<Rational>& f, const Limits& limits) {
  WhitneyComplex complex(g, limits);
  auto top = owners(complex, f);
  const std::size_t n = g.order();
  struct Entry {
    std::size_t face;
    Vertex owner;
    int sign;
  };
  std::vector<Entry> entries;
  std::uint64_t work = 0;
  for (std::size_t k = 0; k < complex.clique_number(); ++k) work += complex.count(k) << (k + 1);
  if (work > limits.max_tuples) throw CapExceeded("face enumeration", limits.max_tuples);
  for (std::size_t x = 0; x < complex.size(); ++x) {
    int sign = complex.dim(x) % 2 == 0 ? 1 : -1;
    complex.for_each_face(x, [&](std::size_t z) { entries.push_back({z, top[x], sign}); });
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return std::tie(a.face, a.owner) < std::tie(b.face, b.owner); });
  std::vector<Count> m(n * n, 0);
  std::vector<std::pair<Vertex, Count>> column;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t z = entries[i].face;
    column.clear();
    for (; i < entries.size() && entries[i].face == z; ++i) {
      if (!column.empty() && column.back().first == entries[i].owner)
        column.back().second += entries[i].sign;
      else
        column.emplace_back(entries[i].owner, entries[i].sign);
    }
    Count sign = complex.dim(z) % 2 == 0 ? 1 : -1;
    for (auto [a, ca] : column)
      for (auto [b, cb] : column) m[a * n + b] += sign * ca * cb;
  }
  IntMatrix out(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out(a, b) = m[a * n + b];
  return out;
}

VertexField wu_index(const Graph& g, const std::vector<Rational>& f, std::size_t k, const Limits& limits) {
  WhitneyComplex complex(g, limits);
  return sum_by_owner(complex, simplex_interaction(complex, k, limits), owners(complex, f));
}

VertexField index_expectation_exact(const Graph& g, const Valuation& x, const Limits& limits) {
  WhitneyComplex complex(g, limits);
  return exact_expectation(complex, linear_weights(complex, x));
}

VertexField wu_index_expectation_exact(const Graph& g, std::size_t k, const Limits& limits) {
  WhitneyComplex complex(g, limits);
  return exact_expectation(complex, simplex_interaction(complex, k, limits));
}

McField index_expectation_mc(const Graph& g, const Valuation& x, std::size_t samples, std::uint64_t seed,
                             const Limits& limits) {
  WhitneyComplex complex(g, limits);
  return mc_expectation(complex, linear_weights(complex, x), samples, seed);
}

McField wu_index_expectation_mc(const Graph& g, std::size_t k, std::size_t samples, std::uint64_t seed,
                                const Limits& limits) {
  WhitneyComplex complex(g, limits);
  return mc_expectation(complex, simplex_interaction(complex, k, limits), samples, seed);
}

std::vector<Rational> identity_function(std::size_t n) {
  std::vector<Rational> f;
  for (std::size_t v = 0; v < n; ++v) f.emplace_back(v);
  return f;
}

std::string to_json(const VertexField& field) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t v = 0; v < field.values.size(); ++v) rows.push_back({{"vertex", v}, {"value", to_string(field.values[v])}});
  return rows.dump();
}

std::string to_json(const McField& field) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t v = 0; v < field.mean.size(); ++v)
    rows.push_back({{"vertex", v}, {"value", field.mean[v]}, {"stderr", field.stderr_[v]}});
  nlohmann::json j{{"rows", rows}, {"samples", field.samples}, {"seed", field.seed}};
  return j.dump();
}

}  // namespace wuchar
