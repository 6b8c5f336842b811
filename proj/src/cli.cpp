#include "wuchar/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "wuchar/wuchar.hpp"

namespace wuchar {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

struct Options {
  std::string in = "-";
  std::string second;
  std::string format;
  std::string out = "json";
  std::size_t threads = 1;
  std::uint64_t max_simplices = Limits{}.max_simplices;
  std::uint64_t max_tuples = Limits{}.max_tuples;
  std::size_t order = 0;
  std::string valuation;
  std::string function;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::string rule = "common";
  std::string table;
  std::string labels;
  std::vector<Vertex> a, b;
  std::vector<std::string> gen_args;
  bool list = false;

  Limits limits() const { return {max_simplices, max_tuples}; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) h = (h ^ c) * 1099511628211ULL;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

Graph parse_input(const std::string& text, const std::string& format) {
  if (format == "graph6") return parse_graph6(text);
  if (format == "json") return parse_graph_json(text);
  if (!format.empty()) throw UsageError("unknown format " + format);
  return read_graph(text);
}

std::string format_graph(const Graph& g, const std::string& format) {
  return format == "json" ? to_graph_json(g) : to_graph6(g);
}

json strings(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json strings(const IntVector& v) { return strings(std::vector<Integer>(v.begin(), v.end())); }

json strings(const IntMatrix& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(strings(IntVector(m.row(i).transpose())));
  return a;
}

json field_rows(const VertexField& f) {
  json rows = json::array();
  for (std::size_t v = 0; v < f.values.size(); ++v) rows.push_back({{"vertex", v}, {"value", to_string(f.values[v])}});
  return rows;
}

json tensor_json(const FTensor& t) { return json::parse(to_json(t)); }

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(*it, prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::vector<Rational> vertex_function(const Options& o, std::size_t n) {
  if (!o.function.empty()) {
    std::ifstream f(o.function);
    if (!f) throw UsageError("cannot open " + o.function);
    std::stringstream ss;
    ss << f.rdbuf();
    std::string text = ss.str();
    std::vector<Rational> values;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
      for (const auto& x : json::parse(text)) values.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
    } else {
      std::string token;
      std::istringstream tokens(text);
      while (tokens >> token) values.push_back(parse_rational(token));
    }
    if (values.size() != n) throw UsageError("function has " + std::to_string(values.size()) + " values, graph has " + std::to_string(n));
    return values;
  }
  if (o.seed) {
    std::vector<Rational> f;
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[i] = i;
    Rng rng(*o.seed);
    rng.shuffle(rank);
    for (auto r : rank) f.emplace_back(r);
    return f;
  }
  return identity_function(n);
}

struct Job {
  const Options& o;
  std::istream& in;
  std::ostream& out;
  std::string source_text;
  Graph g;
  json params = json::object();

  void load() {
    source_text = read_source(o.in, in);
    g = parse_input(source_text, o.format);
  }

  void report(const std::string& operation, const json& result, std::chrono::steady_clock::time_point start) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.out == "csv") {
      std::vector<std::pair<std::string, std::string>> rows;
      flatten(result, "", rows);
      out << "key,value\n";
      for (const auto& [k, v] : rows) out << k << "," << v << "\n";
      return;
    }
    json r;
    r["tool"] = "wuchar";
    r["version"] = kVersion;
    r["operation"] = operation;
    r["parameters"] = params;
    r["input"] = {{"source", o.in}, {"fnv1a64", fnv1a64(source_text)}, {"n", g.order()}, {"edges", g.size()}};
    r["limits"] = {{"max_simplices", o.max_simplices}, {"max_tuples", o.max_tuples}};
    r["threads"] = o.threads;
    r["result"] = result;
    r["timing_ms"] = ms;
    out << r.dump(2) << "\n";
  }
};

std::size_t clique_number(const Graph& g, const Limits& limits) { return f_vector(g, limits).size(); }

int run_paper_tables(const Options& o, std::ostream& out, std::ostream& err) {
  const auto& tables = paper_tables();
  if (o.list) {
    for (const auto& t : tables) out << t.name << "  " << t.title << "\n";
    return kOk;
  }
  bool found = false, all = true;
  for (const auto& t : tables) {
    if (!o.table.empty() && t.name != o.table) continue;
    found = true;
    out << "== " << t.name << ": " << t.title << "\n";
    bool pass = t.check(out);
    all = all && pass;
    out << (pass ? "PASS " : "FAIL ") << t.name << "\n";
  }
  if (!found) {
    err << "unknown table " << o.table << " (use --list)\n";
    return kUsage;
  }
  return all ? kOk : kMismatch;
}

int dispatch(const std::string& cmd, const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (cmd == "paper-tables") return run_paper_tables(o, out, err);
  const Limits limits = o.limits();
  if (cmd == "gen") {
    if (o.gen_args.empty()) throw UsageError("gen needs a family");
    std::vector<std::string> rest(o.gen_args.begin() + 1, o.gen_args.end());
    out << format_graph(generate(o.gen_args[0], rest), o.format) << "\n";
    return kOk;
  }
  Job job{o, in, out, {}, {}, json::object()};
  job.load();
  const Graph& g = job.g;
  auto start = std::chrono::steady_clock::now();
  auto resolve = [&](const std::string& fallback) {
    std::string spec = o.valuation.empty() ? fallback : o.valuation;
    job.params["valuation"] = spec;
    return parse_valuation(spec, clique_number(g, limits));
  };
  if (cmd == "refine") {
    out << format_graph(refine(g, limits), o.format) << "\n";
    return kOk;
  }
  if (cmd == "product") {
    if (o.second.empty()) throw UsageError("product needs --with FILE");
    std::istringstream none;
    Graph h = parse_input(read_source(o.second, none), o.format);
    auto p = cartesian(g, h, limits);
    if (!o.labels.empty()) {
      std::ofstream f(o.labels);
      f << labels_to_json(p) << "\n";
    }
    out << format_graph(p.graph, o.format) << "\n";
    return kOk;
  }
  if (cmd == "boundary") {
    auto b = boundary(g, {200'000, limits});
    out << format_graph(b.graph, o.format) << "\n";
    return kOk;
  }
  json result;
  if (cmd == "invariants") {
    WhitneyComplex complex(g, limits);
    auto f = complex.f_vector();
    result["clique_number"] = f.size();
    result["f_vector"] = f;
    result["euler"] = evaluate(euler_valuation(f.size()), f).str();
    result["wu"] = wu(complex, 2, limits).str();
    result["wu3"] = wu(complex, 3, limits).str();
    result["bary_numbers"] = strings(bary_numbers(g, limits));
    result["dimension"] = to_string(inductive_dimension(g));
  } else if (cmd == "chi") {
    result["chi"] = euler_characteristic(g, limits).str();
  } else if (cmd == "wu") {
    std::size_t k = o.order ? o.order : 2;
    job.params["order"] = k;
    result["wu"] = wu(g, k, limits).str();
  } else if (cmd == "fvector") {
    result["f_vector"] = f_vector(g, limits);
  } else if (cmd == "fmatrix") {
    result["f_matrix"] = tensor_json(f_matrix(g, limits));
  } else if (cmd == "ftensor") {
    std::size_t k = o.order ? o.order : 3;
    job.params["order"] = k;
    job.params["rule"] = o.rule;
    if (o.rule != "common" && o.rule != "pairwise") throw UsageError("rule must be common or pairwise");
    result["f_tensor"] = tensor_json(
        f_tensor(g, k, limits, o.rule == "pairwise" ? IntersectionRule::pairwise : IntersectionRule::common));
  } else if (cmd == "curvature") {
    VertexField f;
    if (o.order) {
      job.params["order"] = o.order;
      f = curvature_wu(g, o.order, limits);
    } else {
      f = curvature_linear(g, resolve("euler"), limits);
    }
    result["field"] = field_rows(f);
    result["total"] = to_string(f.total());
  } else if (cmd == "index") {
    auto fn = vertex_function(o, g.order());
    if (o.seed) job.params["seed"] = *o.seed;
    if (!o.function.empty()) job.params["function"] = o.function;
    VertexField f;
    if (o.order) {
      job.params["order"] = o.order;
      f = wu_index(g, fn, o.order, limits);
      if (o.order == 2) result["matrix"] = strings(wu_index_matrix(g, fn, limits));
    } else {
      f = index_linear(g, resolve("euler"), fn, limits);
    }
    result["field"] = field_rows(f);
    result["total"] = to_string(f.total());
  } else if (cmd == "expectation") {
    if (o.order) job.params["order"] = o.order;
    if (o.samples) {
      std::uint64_t seed = o.seed.value_or(1);
      job.params["samples"] = *o.samples;
      job.params["seed"] = seed;
      McField f = o.order ? wu_index_expectation_mc(g, o.order, *o.samples, seed, limits)
                          : index_expectation_mc(g, resolve("euler"), *o.samples, seed, limits);
      result = json::parse(to_json(f));
    } else {
      VertexField f = o.order ? wu_index_expectation_exact(g, o.order, limits)
                              : index_expectation_exact(g, resolve("euler"), limits);
      result["field"] = field_rows(f);
      result["total"] = to_string(f.total());
    }
  } else if (cmd == "ds") {
    WhitneyComplex complex(g, limits);
    auto f = complex.f_vector();
    const std::size_t c = f.size();
    result["bary_numbers"] = strings(bary_numbers(g, limits));
    result["omega"] = strings(ds_quadratic(f_tensor(complex, 2, limits)));
    json ds = json::array();
    for (int k = 0; k + 1 < static_cast<int>(c); ++k) {
      Valuation x{"ds:" + std::to_string(k), ds_vector(k, c)};
      ds.push_back({{"k", k}, {"coefficients", strings(x.coefficients)}, {"value", evaluate(x, f).str()}});
    }
    result["ds_vectors"] = ds;
    if (o.order == 3) {
      auto t = ds_cubic(g, limits);
      json cubic = json::array();
      for (std::size_t i = 0; i < c; ++i) {
        json plane = json::array();
        for (std::size_t j = 0; j < c; ++j) {
          json row = json::array();
          for (std::size_t k = 0; k < c; ++k) row.push_back(t(i, j, k).str());
          plane.push_back(row);
        }
        cubic.push_back(plane);
      }
      result["cubic"] = cubic;
    }
  } else if (cmd == "classify") {
    auto c = classify(g, {200'000, limits});
    result = json::parse(to_json(c));
    job.report(cmd, result, start);
    return c.kind == "indeterminate" ? kIndeterminate : kOk;
  } else if (cmd == "dimension") {
    result["dimension"] = to_string(inductive_dimension(g));
  } else if (cmd == "intersect") {
    job.params["a"] = o.a;
    job.params["b"] = o.b;
    result["intersection_form"] = tensor_json(intersection_form(g, o.a, o.b, limits));
    result["wu"] = wu_intersection(g, o.a, o.b, limits).str();
  } else {
    throw UsageError("unknown command " + cmd);
  }
  job.report(cmd, result, start);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Valuations, Wu characteristics and curvatures of finite simple graphs", "wuchar"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s) {
    s->add_option("--in", o.in, "Input graph file, - for standard input");
    s->add_option("--format", o.format, "Graph format: graph6 or json (default: detect)")
        ->check(CLI::IsMember({"graph6", "json"}));
    s->add_option("--out", o.out, "Report format")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--threads", o.threads, "Thread cap (recorded; computation is sequential)");
    s->add_option("--max-simplices", o.max_simplices, "Simplex count cap");
    s->add_option("--max-tuples", o.max_tuples, "Tuple work cap");
  };
  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {{"gen", "Generate a graph: FAMILY [PARAMS...]"},
                        {"invariants", "Summary of invariants"},
                        {"chi", "Euler characteristic"},
                        {"wu", "Wu characteristic of order --order"},
                        {"fvector", "f-vector"},
                        {"fmatrix", "f-matrix"},
                        {"ftensor", "f-tensor of order --order"},
                        {"curvature", "Curvature of --valuation or Wu --order"},
                        {"index", "Poincare-Hopf indices"},
                        {"expectation", "Index expectation, exact or with --samples"},
                        {"refine", "Barycentric refinement"},
                        {"product", "Product with the graph in --with"},
                        {"ds", "Barycentric and Dehn-Sommerville invariants"},
                        {"classify", "Topological classification"},
                        {"boundary", "Boundary of a d-graph with boundary"},
                        {"dimension", "Inductive dimension"},
                        {"intersect", "Intersection form of --a and --b"},
                        {"paper-tables", "Recompute the stored tables"}};
  for (const auto& spec : specs) {
    auto* s = app.add_subcommand(spec.name, spec.help);
    common(s);
    std::string name = spec.name;
    if (name == "gen") s->add_option("family", o.gen_args, "Family and parameters")->required();
    if (name == "wu" || name == "ftensor" || name == "curvature" || name == "index" || name == "expectation" ||
        name == "ds")
      s->add_option("--order", o.order, "Order k");
    if (name == "curvature" || name == "index" || name == "expectation")
      s->add_option("--valuation", o.valuation, "euler | volume | vk:i | bary:k | ds:k | custom:a,b,...");
    if (name == "index") s->add_option("--function", o.function, "File with one value per vertex");
    if (name == "index" || name == "expectation") s->add_option("--seed", o.seed, "Seed for random orderings");
    if (name == "expectation") s->add_option("--samples", o.samples, "Monte-Carlo sample count")->check(CLI::PositiveNumber);
    if (name == "ftensor") s->add_option("--rule", o.rule, "common or pairwise");
    if (name == "product") {
      s->add_option("--with", o.second, "Second factor")->required();
      s->add_option("--labels", o.labels, "Write vertex labels as JSON to this file");
    }
    if (name == "intersect") {
      s->add_option("--a", o.a, "Vertex set A")->delimiter(',')->required();
      s->add_option("--b", o.b, "Vertex set B")->delimiter(',')->required();
    }
    if (name == "paper-tables") {
      s->add_option("--table", o.table, "Only this table");
      s->add_flag("--list", o.list, "List table names");
    }
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, o, in, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace wuchar
