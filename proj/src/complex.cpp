#include "wuchar/complex.hpp"

#include <algorithm>
#include <json.hpp>
#include <functional>
#include <stdexcept>

namespace wuchar {

namespace {

struct CliqueCollector {
  const Graph& g;
  std::uint64_t cap;
  std::uint64_t total = 0;
  std::vector<std::vector<Vertex>>& flat;
  std::vector<Vertex> clique;

  void emit() {
    if (++total > cap) throw CapExceeded("simplex count", cap);
    std::size_t k = clique.size() - 1;
    if (flat.size() <= k) flat.resize(k + 1);
    flat[k].insert(flat[k].end(), clique.begin(), clique.end());
  }

  // Depth-first extension in increasing vertex order yields each dimension lexicographically.
  void extend(const std::vector<Vertex>& candidates) {
    emit();
    std::vector<Vertex> next;
    for (Vertex w : candidates) {
      next.clear();
      const auto& row = g.neighbors(w);
      std::set_intersection(std::upper_bound(candidates.begin(), candidates.end(), w), candidates.end(),
                            std::upper_bound(row.begin(), row.end(), w), row.end(), std::back_inserter(next));
      clique.push_back(w);
      extend(next);
      clique.pop_back();
    }
  }
};

using Wide = __int128;

Count narrow(Wide x) {
  if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("count exceeds 64 bits");
  return static_cast<Count>(x);
}

}  // namespace

WhitneyComplex::WhitneyComplex(const Graph& g, const Limits& limits) : n_(g.order()) {
  CliqueCollector c{g, limits.max_simplices, 0, flat_, {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& row = g.neighbors(v);
    std::vector<Vertex> higher(std::upper_bound(row.begin(), row.end(), v), row.end());
    c.clique.assign(1, v);
    c.extend(higher);
  }
  offset_.assign(1, 0);
  for (std::size_t k = 0; k < flat_.size(); ++k) offset_.push_back(offset_.back() + flat_[k].size() / (k + 1));
}

std::size_t WhitneyComplex::dim(std::size_t id) const {
  return static_cast<std::size_t>(std::upper_bound(offset_.begin(), offset_.end(), id) - offset_.begin()) - 1;
}

std::span<const Vertex> WhitneyComplex::simplex(std::size_t id) const {
  std::size_t k = dim(id);
  return {flat_[k].data() + (id - offset_[k]) * (k + 1), k + 1};
}

std::optional<std::size_t> WhitneyComplex::find(std::span<const Vertex> x) const {
  if (x.empty() || x.size() > flat_.size()) return std::nullopt;
  std::size_t k = x.size() - 1, len = k + 1;
  const auto& f = flat_[k];
  std::size_t lo = 0, hi = f.size() / len;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    const Vertex* p = f.data() + mid * len;
    if (std::lexicographical_compare(p, p + len, x.begin(), x.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < f.size() / len && std::equal(x.begin(), x.end(), f.data() + lo * len)) return offset_[k] + lo;
  return std::nullopt;
}

std::vector<Count> WhitneyComplex::f_vector() const {
  std::vector<Count> v;
  for (std::size_t k = 0; k < flat_.size(); ++k) v.push_back(static_cast<Count>(count(k)));
  return v;
}

FTensor::FTensor(std::size_t order, std::size_t dim) : order_(order), dim_(dim) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < order; ++i) total *= dim;
  data_.assign(total, 0);
}

Count& FTensor::at(std::span<const std::size_t> index) {
  std::size_t flat = 0;
  for (auto i : index) flat = flat * dim_ + i;
  return data_[flat];
}

Count FTensor::at(std::span<const std::size_t> index) const { return const_cast<FTensor*>(this)->at(index); }

IntMatrix FTensor::matrix() const {
  if (order_ != 2) throw std::logic_error("matrix() needs an order 2 tensor");
  IntMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = data_[i * dim_ + j];
  return m;
}

Integer FTensor::contract(const std::vector<IntVector>& vectors) const {
  if (vectors.size() != order_ && vectors.size() != 1) throw std::invalid_argument("contract: wrong vector count");
  auto slot = [&](std::size_t s, std::size_t i) -> Integer {
    const IntVector& v = vectors.size() == 1 ? vectors[0] : vectors[s];
    return i < static_cast<std::size_t>(v.size()) ? v(i) : Integer(0);
  };
  Integer total = 0;
  std::vector<std::size_t> idx(order_, 0);
  for (std::size_t flat = 0; flat < data_.size(); ++flat) {
    if (data_[flat] != 0) {
      Integer term = data_[flat];
      for (std::size_t s = 0; s < order_ && term != 0; ++s) term *= slot(s, idx[s]);
      total += term;
    }
    for (std::size_t s = order_; s-- > 0;) {
      if (++idx[s] < dim_) break;
      idx[s] = 0;
    }
  }
  return total;
}

std::vector<Count> coface_counts(const WhitneyComplex& complex, const std::vector<bool>* within,
                                 const Limits& limits) {
  const std::size_t c = complex.clique_number();
  std::uint64_t work = 0;
  for (std::size_t k = 0; k < c; ++k) work += complex.count(k) * ((std::uint64_t{1} << (k + 1)) - 1);
  if (work > limits.max_tuples) throw CapExceeded("face enumeration", limits.max_tuples);
  std::vector<Count> n(complex.size() * c, 0);
  for (std::size_t x = 0; x < complex.size(); ++x) {
    if (within) {
      auto s = complex.simplex(x);
      if (!std::all_of(s.begin(), s.end(), [&](Vertex v) { return (*within)[v]; })) continue;
    }
    std::size_t k = complex.dim(x);
    complex.for_each_face(x, [&](std::size_t z) { ++n[z * c + k]; });
  }
  return n;
}

std::vector<Count> f_vector(const Graph& g, const Limits& limits) { return WhitneyComplex(g, limits).f_vector(); }

namespace {

// sum over z of (-1)^dim z times the outer product of the coface count rows of each slot
FTensor moebius_tensor(const WhitneyComplex& complex, const std::vector<const std::vector<Count>*>& rows,
                       const Limits& limits) {
  const std::size_t c = complex.clique_number(), k = rows.size();
  FTensor t(k, c);
  std::uint64_t updates = complex.size() * t.data().size();
  if (k > 0 && updates > limits.max_tuples) throw CapExceeded("tensor accumulation", limits.max_tuples);
  if (c == 0) return t;
  std::vector<Wide> acc(t.data().size(), 0);
  std::vector<Wide> partial(t.data().size());
  for (std::size_t z = 0; z < complex.size(); ++z) {
    Wide sign = complex.dim(z) % 2 == 0 ? 1 : -1;
    // partial products built slot by slot
    std::size_t len = 1;
    partial[0] = sign;
    bool zero = false;
    for (std::size_t s = 0; s < k && !zero; ++s) {
      const Count* row = rows[s]->data() + z * c;
      zero = std::all_of(row, row + c, [](Count x) { return x == 0; });
      for (std::size_t p = len; p-- > 0;)
        for (std::size_t i = c; i-- > 0;) partial[p * c + i] = partial[p] * row[i];
      len *= c;
    }
    if (zero) continue;
    for (std::size_t p = 0; p < len; ++p) acc[p] += partial[p];
  }
  for (std::size_t p = 0; p < acc.size(); ++p) t[p] = narrow(acc[p]);
  return t;
}

}  // namespace

namespace {

// Tuples are extended one simplex at a time; the candidate list is the running intersection of
// the neighbor lists in the simplex intersection graph, so dead prefixes are pruned early.
struct PairwiseCounter {
  const WhitneyComplex& complex;
  const std::vector<std::vector<std::size_t>>& meets;
  std::size_t k;
  std::uint64_t cap;
  std::uint64_t steps = 0;
  FTensor& out;
  std::vector<std::size_t> dims;

  void extend(const std::vector<std::size_t>& candidates) {
    if (dims.size() == k) {
      ++out.at(dims);
      return;
    }
    std::vector<std::size_t> next;
    for (std::size_t y : candidates) {
      if (++steps > cap) throw CapExceeded("tuple enumeration", cap);
      next.clear();
      std::set_intersection(candidates.begin(), candidates.end(), meets[y].begin(), meets[y].end(),
                            std::back_inserter(next));
      dims.push_back(complex.dim(y));
      extend(next);
      dims.pop_back();
    }
  }
};

FTensor pairwise_tensor(const WhitneyComplex& complex, std::size_t k, const Limits& limits) {
  std::vector<std::vector<std::size_t>> star(complex.vertex_count());
  for (std::size_t x = 0; x < complex.size(); ++x)
    for (Vertex v : complex.simplex(x)) star[v].push_back(x);
  std::vector<std::vector<std::size_t>> meets(complex.size());
  std::uint64_t work = 0;
  for (std::size_t x = 0; x < complex.size(); ++x) {
    for (Vertex v : complex.simplex(x)) meets[x].insert(meets[x].end(), star[v].begin(), star[v].end());
    std::sort(meets[x].begin(), meets[x].end());
    meets[x].erase(std::unique(meets[x].begin(), meets[x].end()), meets[x].end());
    if ((work += meets[x].size()) > limits.max_tuples) throw CapExceeded("intersection graph", limits.max_tuples);
  }
  FTensor t(k, complex.clique_number());
  std::vector<std::size_t> all(complex.size());
  for (std::size_t x = 0; x < all.size(); ++x) all[x] = x;
  PairwiseCounter counter{complex, meets, k, limits.max_tuples, 0, t, {}};
  counter.extend(all);
  return t;
}

}  // namespace

FTensor f_tensor(const WhitneyComplex& complex, std::size_t k, const Limits& limits, IntersectionRule rule) {
  if (k < 1) throw std::invalid_argument("f_tensor needs k >= 1");
  if (rule == IntersectionRule::pairwise) return pairwise_tensor(complex, k, limits);
  auto n = coface_counts(complex, nullptr, limits);
  return moebius_tensor(complex, std::vector<const std::vector<Count>*>(k, &n), limits);
}

FTensor f_tensor(const Graph& g, std::size_t k, const Limits& limits, IntersectionRule rule) {
  return f_tensor(WhitneyComplex(g, limits), k, limits, rule);
}

FTensor intersection_form(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                          const Limits& limits) {
  WhitneyComplex complex(g, limits);
  std::vector<bool> in_a(g.order(), false), in_b(g.order(), false);
  for (Vertex v : a) in_a.at(v) = true;
  for (Vertex v : b) in_b.at(v) = true;
  auto na = coface_counts(complex, &in_a, limits);
  auto nb = coface_counts(complex, &in_b, limits);
  return moebius_tensor(complex, {&na, &nb}, limits);
}

std::string to_json(const FTensor& t) {
  using nlohmann::json;
  std::function<json(std::size_t, std::size_t)> build = [&](std::size_t depth, std::size_t base) -> json {
    if (depth == t.order()) return t[base];
    json arr = json::array();
    for (std::size_t i = 0; i < t.dim(); ++i) arr.push_back(build(depth + 1, base * t.dim() + i));
    return arr;
  };
  json j;
  j["order"] = t.order();
  j["data"] = t.order() == 0 ? json::array() : build(0, 0);
  return j.dump();
}

}  // namespace wuchar
