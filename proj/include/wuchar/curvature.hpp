#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wuchar/complex.hpp"
#include "wuchar/graph.hpp"
#include "wuchar/valuation.hpp"

namespace wuchar {

/// One exact value per vertex.
struct VertexField {
  std::string kind;  // curvature | index | expectation
  std::vector<Rational> values;

  Rational total() const;
  bool operator==(const VertexField&) const = default;
};

/// Sample means of indices over random orderings.
struct McField {
  std::vector<double> mean;
  std::vector<double> stderr_;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

VertexField curvature_linear(const Graph& g, const Valuation& x, const Limits& limits = {});
VertexField curvature_wu(const Graph& g, std::size_t k = 2, const Limits& limits = {});
/// Closed form 1 - 5d/2 + d^2/2 + sum of neighbor degrees / 2. Throws PreconditionError on a triangle.
VertexField trianglefree_wu_curvature(const Graph& g);

/// X(B^-(v)) - X(S^-(v)) for the sublevel sets of an injective f.
VertexField index_linear(const Graph& g, const Valuation& x, const std::vector<Rational>& f,
                         const Limits& limits = {});
/// i_f(v,w): Wu pairing of the simplices topped by v against those topped by w.
IntMatrix wu_index_matrix(const Graph& g, const std::vector<Rational>& f, const Limits& limits = {});
/// Order k Wu index; for k = 2 these are the row sums of wu_index_matrix.
VertexField wu_index(const Graph& g, const std::vector<Rational>& f, std::size_t k = 2, const Limits& limits = {});

/// Average of index_linear over all n! orderings. Throws std::invalid_argument for n > 9.
VertexField index_expectation_exact(const Graph& g, const Valuation& x, const Limits& limits = {});
/// Same average for the order k Wu index (k >= 2); not an identity, offered for comparison.
VertexField wu_index_expectation_exact(const Graph& g, std::size_t k, const Limits& limits = {});
McField index_expectation_mc(const Graph& g, const Valuation& x, std::size_t samples, std::uint64_t seed,
                             const Limits& limits = {});
McField wu_index_expectation_mc(const Graph& g, std::size_t k, std::size_t samples, std::uint64_t seed,
                                const Limits& limits = {});

/// Simplex curvature weights kappa_k(x), indexed by simplex id; k = 1 gives sigma(x).
std::vector<Integer> simplex_interaction(const WhitneyComplex& complex, std::size_t k, const Limits& limits = {});

/// Identity ordering f(v) = v.
std::vector<Rational> identity_function(std::size_t n);

std::string to_json(const VertexField& field);
std::string to_json(const McField& field);

}  // namespace wuchar
