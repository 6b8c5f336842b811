#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wuchar/curvature.hpp"
#include "wuchar/graph.hpp"
#include "wuchar/valuation.hpp"

namespace wuchar {

enum class Tri { no, yes, unknown };

struct TopologyOptions {
  /// Maximal number of distinct induced subgraphs examined before answering unknown.
  std::size_t budget = 200'000;
  Limits limits;
};

struct Contractibility {
  Tri result = Tri::unknown;
  /// Vertices removed in order, each with a contractible unit sphere at the time; ends at a single vertex.
  std::vector<Vertex> collapse;
};

struct SphereResult {
  Tri result = Tri::unknown;
  int dimension = -1;  // valid when result is yes
};

struct DGraphResult {
  Tri result = Tri::unknown;
  int dimension = -1;
  bool has_boundary = false;
  std::vector<Vertex> boundary;
  /// A vertex whose unit sphere is neither a sphere nor a ball of the right dimension.
  std::optional<Vertex> failing_vertex;
};

struct TopoClassification {
  /// empty | sphere | dgraph | contractible | other | indeterminate
  std::string kind;
  std::optional<int> dimension;
  bool has_boundary = false;
  std::vector<Vertex> boundary_vertices;
  Tri contractible = Tri::unknown;
  std::vector<Vertex> collapse;
  std::optional<Vertex> failing_vertex;
};

Contractibility is_contractible(const Graph& g, const TopologyOptions& options = {});
SphereResult is_sphere(const Graph& g, const TopologyOptions& options = {});
/// Every unit sphere a (d-1)-sphere or (d-1)-ball, and the boundary a (d-1)-graph without boundary.
DGraphResult is_dgraph(const Graph& g, const TopologyOptions& options = {});
TopoClassification classify(const Graph& g, const TopologyOptions& options = {});
/// Induced subgraph on the vertices whose unit sphere is a ball. Throws PreconditionError otherwise.
Subgraph boundary(const Graph& g, const TopologyOptions& options = {});
/// 1 + average dimension of the unit spheres, -1 for the empty graph.
Rational inductive_dimension(const Graph& g);
/// 2 X(B(v)) - X(S(v)) per vertex.
VertexField puiseux_gap(const Graph& g, const Valuation& x, const Limits& limits = {});

std::string to_json(const TopoClassification& c);

}  // namespace wuchar
