#include "wuchar/product.hpp"

#include <json.hpp>

#include "wuchar/complex.hpp"

namespace wuchar {

namespace {

std::vector<std::vector<std::size_t>> face_lists(const WhitneyComplex& complex) {
  std::vector<std::vector<std::size_t>> faces(complex.size());
  for (std::size_t x = 0; x < complex.size(); ++x)
    complex.for_each_face(x, [&](std::size_t z) { faces[x].push_back(z); });
  return faces;
}

}  // namespace

Product cartesian(const Graph& g, const Graph& h, const Limits& limits) {
  WhitneyComplex cg(g, limits), ch(h, limits);
  const std::uint64_t ng = cg.size(), nh = ch.size();
  if (ng * nh > limits.max_simplices) throw CapExceeded("product vertex count", limits.max_simplices);
  auto fg = face_lists(cg), fh = face_lists(ch);
  std::uint64_t work = 0;
  for (auto& a : fg)
    for (auto& b : fh) work += a.size() * b.size();
  if (work > limits.max_tuples) throw CapExceeded("product edge enumeration", limits.max_tuples);
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < ng; ++x)
    for (std::size_t y = 0; y < nh; ++y) {
      auto top = static_cast<Vertex>(x * nh + y);
      for (std::size_t a : fg[x])
        for (std::size_t b : fh[y]) {
          auto low = static_cast<Vertex>(a * nh + b);
          if (low != top) edges.emplace_back(low, top);
        }
    }
  Product p{Graph(ng * nh, edges), {}};
  p.labels.reserve(ng * nh);
  for (std::size_t x = 0; x < ng; ++x)
    for (std::size_t y = 0; y < nh; ++y) {
      auto sx = cg.simplex(x), sy = ch.simplex(y);
      p.labels.emplace_back(std::vector<Vertex>(sx.begin(), sx.end()), std::vector<Vertex>(sy.begin(), sy.end()));
    }
  return p;
}

std::string labels_to_json(const Product& p) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [x, y] : p.labels) rows.push_back({{"g", x}, {"h", y}});
  return rows.dump();
}

}  // namespace wuchar
