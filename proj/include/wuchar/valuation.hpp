#pragma once

#include <string>
#include <vector>

#include "wuchar/complex.hpp"
#include "wuchar/graph.hpp"
#include "wuchar/types.hpp"

namespace wuchar {

/// Linear valuation X(G) = psi . v(G), psi indexed by dimension.
struct Valuation {
  std::string name;
  IntVector coefficients;

  std::size_t size() const { return static_cast<std::size_t>(coefficients.size()); }
};

Valuation euler_valuation(std::size_t c);
Valuation volume_valuation(std::size_t c);
Valuation vk_valuation(std::size_t i, std::size_t c);
Valuation custom_valuation(const std::vector<Integer>& coefficients);
/// Parses "euler" | "volume" | "vk:i" | "bary:k" | "ds:k" | "custom:a,b,...", resolved at clique number c.
/// Throws std::invalid_argument on unknown names, bad indices or custom vectors longer than c.
Valuation parse_valuation(const std::string& spec, std::size_t c);

/// psi . v with the shorter of the two zero-extended.
Integer evaluate(const Valuation& x, const std::vector<Count>& f_vector);
Integer evaluate(const Graph& g, const Valuation& x, const Limits& limits = {});
Integer euler_characteristic(const Graph& g, const Limits& limits = {});

/// Wu characteristic of order k (k = 1 is the Euler characteristic).
Integer wu(const Graph& g, std::size_t k = 2, const Limits& limits = {});
Integer wu(const WhitneyComplex& complex, std::size_t k, const Limits& limits = {});
/// Wu pairing of the simplices of G[A] against those of G[B].
Integer wu_intersection(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                        const Limits& limits = {});
/// (omega_1, ..., omega_K).
std::vector<Integer> wu_function(const Graph& g, std::size_t max_order, const Limits& limits = {});
/// f(-1)^2 - (f^2)(-1), computed from disjoint ordered pairs of simplices.
Integer wu_algebraic(const Graph& g, const Limits& limits = {});
/// Expected Euler characteristic of G(n,p).
Rational expected_euler(std::size_t n, const Rational& p);

}  // namespace wuchar
