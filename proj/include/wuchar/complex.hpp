#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wuchar/graph.hpp"
#include "wuchar/types.hpp"

namespace wuchar {

/// Whitney complex: all nonempty cliques, ordered by dimension then lexicographically.
/// Simplex ids follow that order.
class WhitneyComplex {
 public:
  WhitneyComplex() = default;
  explicit WhitneyComplex(const Graph& g, const Limits& limits = {});

  std::size_t size() const { return offset_.empty() ? 0 : offset_.back(); }
  /// Size of the largest clique; 0 for the empty graph.
  std::size_t clique_number() const { return flat_.size(); }
  std::size_t vertex_count() const { return n_; }
  std::size_t count(std::size_t dim) const { return dim < flat_.size() ? flat_[dim].size() / (dim + 1) : 0; }
  std::size_t dim(std::size_t id) const;
  std::span<const Vertex> simplex(std::size_t id) const;
  std::size_t id(std::size_t dim, std::size_t index) const { return offset_[dim] + index; }
  std::optional<std::size_t> find(std::span<const Vertex> sorted_vertices) const;
  std::vector<Count> f_vector() const;

  /// Calls visit(face_id) for every nonempty face of simplex id, itself included.
  template <class F>
  void for_each_face(std::size_t id, F&& visit) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Vertex>> flat_;  // flat_[k] holds the k-simplices, k+1 entries each
  std::vector<std::size_t> offset_;        // offset_[k] = id of the first k-simplex
};

/// Dense tensor of order k over indices 0..c-1, row-major.
class FTensor {
 public:
  FTensor() = default;
  FTensor(std::size_t order, std::size_t dim);

  std::size_t order() const { return order_; }
  std::size_t dim() const { return dim_; }
  Count& at(std::span<const std::size_t> index);
  Count at(std::span<const std::size_t> index) const;
  Count& operator[](std::size_t flat) { return data_[flat]; }
  Count operator[](std::size_t flat) const { return data_[flat]; }
  const std::vector<Count>& data() const { return data_; }
  /// Only for order 2.
  IntMatrix matrix() const;
  /// Full contraction with one vector per slot (all slots use psi when only one is given).
  Integer contract(const std::vector<IntVector>& vectors) const;
  bool operator==(const FTensor&) const = default;

 private:
  std::size_t order_ = 0, dim_ = 0;
  std::vector<Count> data_;
};

/// Entry (z, i) counts the i-simplices containing simplex z, restricted to simplices
/// whose vertices all lie in `within` when it is given. Row-major, clique_number() columns.
std::vector<Count> coface_counts(const WhitneyComplex& complex, const std::vector<bool>* within = nullptr,
                                 const Limits& limits = {});

std::vector<Count> f_vector(const Graph& g, const Limits& limits = {});
/// Which k-tuples of simplices count as intersecting.
enum class IntersectionRule {
  common,    // all members share a vertex
  pairwise,  // every two members share a vertex
};

/// V_{i1..ik}: number of k-tuples of simplices of dimensions i1..ik with a common vertex.
FTensor f_tensor(const Graph& g, std::size_t k, const Limits& limits = {},
                 IntersectionRule rule = IntersectionRule::common);
FTensor f_tensor(const WhitneyComplex& complex, std::size_t k, const Limits& limits = {},
                 IntersectionRule rule = IntersectionRule::common);
inline FTensor f_matrix(const Graph& g, const Limits& limits = {}) { return f_tensor(g, 2, limits); }
/// V_ij(A,B): pairs (x,y), x an i-simplex of G[A], y a j-simplex of G[B], x and y intersecting.
/// Sized by the clique number of G.
FTensor intersection_form(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                          const Limits& limits = {});

std::string to_json(const FTensor& t);

template <class F>
void WhitneyComplex::for_each_face(std::size_t id, F&& visit) const {
  auto x = simplex(id);
  const auto m = static_cast<unsigned>(x.size());
  Vertex buf[64];
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::size_t len = 0;
    for (unsigned b = 0; b < m; ++b)
      if (mask >> b & 1u) buf[len++] = x[b];
    visit(*find(std::span<const Vertex>(buf, len)));
  }
}

}  // namespace wuchar
