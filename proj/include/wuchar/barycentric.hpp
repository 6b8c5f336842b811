#pragma once

#include <vector>

#include "wuchar/complex.hpp"
#include "wuchar/graph.hpp"
#include "wuchar/types.hpp"

namespace wuchar {

/// Barycentric refinement: one vertex per simplex (canonical order), edges for strict containment.
Graph refine(const Graph& g, const Limits& limits = {});

/// Stirling number of the second kind S(j,i).
Integer stirling2(unsigned j, unsigned i);

/// A_ij = i! S(j,i), 1-based, maps f-vectors to f-vectors of the refinement.
template <class Scalar = Integer>
Matrix<Scalar> bary_operator(std::size_t c) {
  Matrix<Scalar> a = Matrix<Scalar>::Zero(c, c);
  Integer factorial = 1;
  for (unsigned i = 1; i <= c; ++i) {
    factorial *= i;
    for (unsigned j = i; j <= c; ++j) a(i - 1, j - 1) = Scalar(factorial * stirling2(j, i));
  }
  return a;
}

/// Eigenvectors chi_1..chi_c of A^T (eigenvalue k! for chi_k): integer, content 1,
/// last nonzero entry positive.
std::vector<IntVector> bary_eigenvectors(std::size_t c);

/// Dehn-Sommerville vector d_k for clique number c, first nonzero entry positive.
/// k = -1 gives the Euler vector; k = c-1 gives the zero vector.
IntVector ds_vector(int k, std::size_t c);

/// chi_k . v(G) for k = 1..c.
IntVector bary_numbers(const Graph& g, const Limits& limits = {});

/// Omega_kl = chi_k^T V(G) chi_l.
IntMatrix ds_quadratic(const Graph& g, const Limits& limits = {});
IntMatrix ds_quadratic(const FTensor& f_matrix);

/// Cubic contractions T_klm of the order 3 f-tensor.
class IntTensor3 {
 public:
  explicit IntTensor3(std::size_t c = 0) : c_(c), data_(c * c * c) {}
  std::size_t dim() const { return c_; }
  Integer& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * c_ + j) * c_ + k]; }
  const Integer& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * c_ + j) * c_ + k];
  }

 private:
  std::size_t c_;
  std::vector<Integer> data_;
};

IntTensor3 ds_cubic(const Graph& g, const Limits& limits = {}, IntersectionRule rule = IntersectionRule::common);

/// chi_1^T V(G) psi - v(G) . psi.
Integer gruenbaum_gap(const Graph& g, const IntVector& psi, const Limits& limits = {});

/// Action of refinement on (V_00, V_01, V_11) for triangle-free graphs.
RatMatrix trianglefree_refinement_map();

}  // namespace wuchar
