#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wuchar/graph.hpp"

namespace wuchar {

/// Stanley-Reisner product together with the (simplex of G, simplex of H) label of each vertex.
struct Product {
  Graph graph;
  std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> labels;
};

/// Vertices are pairs of simplices in canonical order (G-major); (x1,y1) ~ (x2,y2) when
/// x1 is a face of x2 and y1 a face of y2, or the other way round.
Product cartesian(const Graph& g, const Graph& h, const Limits& limits = {});

std::string labels_to_json(const Product& p);

}  // namespace wuchar
