#include "wuchar/topology.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <unordered_map>

namespace wuchar {

namespace {

using Set = std::vector<Vertex>;  // sorted vertices of the ambient graph

struct SetHash {
  std::size_t operator()(const Set& s) const {
    std::size_t h = 1469598103934665603ULL;
    for (Vertex v : s) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

struct Dg {
  Tri result = Tri::unknown;
  int dimension = -1;
  Set boundary;
  std::optional<Vertex> failing;
};

// Every graph visited is an induced subgraph of g, so results are memoized per vertex subset.
class Engine {
 public:
  Engine(const Graph& g, const TopologyOptions& options) : g_(g), options_(options) {}

  Set all() const {
    Set s(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) s[v] = v;
    return s;
  }

  Set sphere_of(const Set& s, Vertex x) const {
    Set out;
    const auto& row = g_.neighbors(x);
    std::set_intersection(s.begin(), s.end(), row.begin(), row.end(), std::back_inserter(out));
    return out;
  }

  static Set without(const Set& s, Vertex x) {
    Set out;
    for (Vertex v : s)
      if (v != x) out.push_back(v);
    return out;
  }

  Integer chi(const Set& s) { return euler_characteristic(induced(g_, s).graph, options_.limits); }

  bool connected(const Set& s) { return is_connected(induced(g_, s).graph); }

  Tri contractible(const Set& s) {
    if (auto it = contractible_.find(s); it != contractible_.end()) return it->second.first;
    Tri r = contractible_uncached(s);
    return r;
  }

  // Replays the stored choices into a collapse sequence.
  std::vector<Vertex> collapse(Set s) {
    std::vector<Vertex> out;
    while (s.size() > 1) {
      Vertex x = contractible_.at(s).second;
      out.push_back(x);
      s = without(s, x);
    }
    return out;
  }

  std::pair<Tri, int> sphere(const Set& s) {
    if (auto it = sphere_.find(s); it != sphere_.end()) return it->second;
    auto r = sphere_uncached(s);
    sphere_[s] = r;
    return r;
  }

  Dg dgraph(const Set& s) {
    if (auto it = dgraph_.find(s); it != dgraph_.end()) return it->second;
    Dg r = dgraph_uncached(s);
    dgraph_[s] = r;
    return r;
  }

  // contractible m-graph whose boundary is an (m-1)-sphere
  Tri ball(const Set& s, int m) {
    Tri c = contractible(s);
    if (c == Tri::no) return Tri::no;
    Dg d = dgraph(s);
    if (d.result == Tri::no) return Tri::no;
    if (d.result == Tri::yes && d.dimension != m) return Tri::no;
    Tri inner = Tri::unknown;
    if (d.result == Tri::yes) {
      auto [sr, sd] = sphere(d.boundary);
      if (sr == Tri::no || (sr == Tri::yes && sd != m - 1)) return Tri::no;
      inner = sr;
    }
    if (c == Tri::yes && d.result == Tri::yes && inner == Tri::yes) return Tri::yes;
    return Tri::unknown;
  }

 private:
  bool charge() { return ++visited_ <= options_.budget; }

  Tri contractible_uncached(const Set& s) {
    auto store = [&](Tri t, Vertex x = 0) {
      contractible_[s] = {t, x};
      return t;
    };
    if (s.empty()) return store(Tri::no);
    if (s.size() == 1) return store(Tri::yes);
    if (!charge()) return store(Tri::unknown);
    if (!connected(s) || chi(s) != 1) return store(Tri::no);
    Set order = s;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return sphere_of(s, a).size() < sphere_of(s, b).size(); });
    bool unknown = false;
    for (Vertex x : order) {
      Tri a = contractible(sphere_of(s, x));
      if (a == Tri::no) continue;
      Tri b = contractible(without(s, x));
      if (a == Tri::yes && b == Tri::yes) return store(Tri::yes, x);
      if (a == Tri::unknown || b == Tri::unknown) unknown = true;
    }
    return store(unknown ? Tri::unknown : Tri::no);
  }

  std::pair<Tri, int> sphere_uncached(const Set& s) {
    if (s.empty()) return {Tri::yes, -1};
    if (!charge()) return {Tri::unknown, -1};
    int d = -2;
    bool unknown = false;
    for (Vertex x : s) {
      auto [r, sd] = sphere(sphere_of(s, x));
      if (r == Tri::no) return {Tri::no, -1};
      if (r == Tri::unknown) {
        unknown = true;
        continue;
      }
      if (d == -2) d = sd + 1;
      if (sd + 1 != d) return {Tri::no, -1};
    }
    if (unknown) return {Tri::unknown, -1};
    // Euler characteristic of a d-sphere is 1 + (-1)^d
    if (chi(s) != (d % 2 == 0 ? 2 : 0)) return {Tri::no, -1};
    for (Vertex x : s) {
      Tri r = contractible(without(s, x));
      if (r == Tri::yes) return {Tri::yes, d};
      if (r == Tri::unknown) unknown = true;
    }
    return {unknown ? Tri::unknown : Tri::no, -1};
  }

  Dg dgraph_uncached(const Set& s) {
    Dg out;
    if (s.empty()) {
      out.result = Tri::yes;
      return out;
    }
    if (!charge()) return out;
    int d = -2;
    bool unknown = false;
    for (Vertex x : s) {
      Set sx = sphere_of(s, x);
      auto [r, sd] = sphere(sx);
      if (r == Tri::yes) {
        if (d == -2) d = sd + 1;
        if (sd + 1 == d) continue;
      }
      if (r == Tri::unknown) unknown = true;
      int m = d == -2 ? static_cast<int>(dgraph(sx).dimension) : d - 1;
      Tri b = ball(sx, m);
      if (b == Tri::yes) {
        if (d == -2) d = m + 1;
        out.boundary.push_back(x);
        continue;
      }
      if (b == Tri::unknown) {
        unknown = true;
        continue;
      }
      if (r != Tri::unknown) {
        out.result = Tri::no;
        out.failing = x;
        return out;
      }
    }
    if (unknown) return out;
    out.dimension = d;
    if (out.boundary.size() == s.size()) {
      // the induced boundary would be the whole graph, which has dimension d
      out.result = Tri::no;
      out.failing = s.front();
      return out;
    }
    if (!out.boundary.empty()) {
      Dg b = dgraph(out.boundary);
      if (b.result == Tri::unknown) return out;
      if (b.result == Tri::no || b.dimension != d - 1 || !b.boundary.empty()) {
        out.result = Tri::no;
        return out;
      }
    }
    out.result = Tri::yes;
    return out;
  }

  const Graph& g_;
  TopologyOptions options_;
  std::size_t visited_ = 0;
  std::unordered_map<Set, std::pair<Tri, Vertex>, SetHash> contractible_;
  std::unordered_map<Set, std::pair<Tri, int>, SetHash> sphere_;
  std::unordered_map<Set, Dg, SetHash> dgraph_;
};

}  // namespace

Contractibility is_contractible(const Graph& g, const TopologyOptions& options) {
  Engine e(g, options);
  Contractibility out;
  out.result = e.contractible(e.all());
  if (out.result == Tri::yes) out.collapse = e.collapse(e.all());
  return out;
}

SphereResult is_sphere(const Graph& g, const TopologyOptions& options) {
  Engine e(g, options);
  auto [r, d] = e.sphere(e.all());
  return {r, d};
}

DGraphResult is_dgraph(const Graph& g, const TopologyOptions& options) {
  Engine e(g, options);
  Dg d = e.dgraph(e.all());
  DGraphResult out;
  out.result = d.result;
  out.dimension = d.dimension;
  out.has_boundary = !d.boundary.empty();
  out.boundary = d.boundary;
  out.failing_vertex = d.failing;
  return out;
}

TopoClassification classify(const Graph& g, const TopologyOptions& options) {
  TopoClassification c;
  if (g.order() == 0) {
    c.kind = "empty";
    c.dimension = -1;
    c.contractible = Tri::no;
    return c;
  }
  Engine e(g, options);
  auto all = e.all();
  c.contractible = e.contractible(all);
  if (c.contractible == Tri::yes) c.collapse = e.collapse(all);
  auto [sr, sd] = e.sphere(all);
  Dg d = e.dgraph(all);
  c.failing_vertex = d.failing;
  if (sr == Tri::yes) {
    c.kind = "sphere";
    c.dimension = sd;
  } else if (d.result == Tri::yes) {
    c.kind = "dgraph";
    c.dimension = d.dimension;
    c.has_boundary = !d.boundary.empty();
    c.boundary_vertices = d.boundary;
  } else if (sr == Tri::unknown || d.result == Tri::unknown) {
    c.kind = "indeterminate";
  } else if (c.contractible == Tri::yes) {
    c.kind = "contractible";
  } else if (c.contractible == Tri::unknown) {
    c.kind = "indeterminate";
  } else {
    c.kind = "other";
  }
  return c;
}

Subgraph boundary(const Graph& g, const TopologyOptions& options) {
  auto d = is_dgraph(g, options);
  if (d.result != Tri::yes) throw PreconditionError("not a d-graph");
  if (!d.has_boundary) throw PreconditionError("d-graph without boundary");
  return induced(g, d.boundary);
}

namespace {

Rational dimension_of(const Graph& g, const Set& s, std::map<Set, Rational>& memo) {
  if (s.empty()) return -1;
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  Rational total = 0;
  for (Vertex x : s) {
    Set sx;
    const auto& row = g.neighbors(x);
    std::set_intersection(s.begin(), s.end(), row.begin(), row.end(), std::back_inserter(sx));
    total += dimension_of(g, sx, memo);
  }
  Rational d = 1 + total / static_cast<unsigned>(s.size());
  memo[s] = d;
  return d;
}

}  // namespace

Rational inductive_dimension(const Graph& g) {
  Set all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  std::map<Set, Rational> memo;
  return dimension_of(g, all, memo);
}

VertexField puiseux_gap(const Graph& g, const Valuation& x, const Limits& limits) {
  VertexField field{"curvature", {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    Integer b = evaluate(unit_ball(g, v).graph, x, limits);
    Integer s = evaluate(unit_sphere(g, v).graph, x, limits);
    field.values.emplace_back(2 * b - s);
  }
  return field;
}

std::string to_json(const TopoClassification& c) {
  nlohmann::json j;
  j["kind"] = c.kind;
  j["dimension"] = c.dimension ? nlohmann::json(*c.dimension) : nlohmann::json(nullptr);
  j["boundary_vertices"] = c.boundary_vertices;
  j["contractible"] = c.contractible == Tri::unknown ? nlohmann::json(nullptr) : nlohmann::json(c.contractible == Tri::yes);
  j["collapse"] = c.collapse;
  if (c.failing_vertex) j["failing_vertex"] = *c.failing_vertex;
  return j.dump();
}

}  // namespace wuchar
