#include <json.hpp>

#include "wuchar/graph.hpp"

namespace wuchar {

namespace {

constexpr std::uint64_t kMaxGraph6Order = 68719476735ULL;

std::size_t strip_line_end(std::string_view text) {
  std::size_t end = text.size();
  if (end > 0 && text[end - 1] == '\n') --end;
  if (end > 0 && text[end - 1] == '\r') --end;
  return end;
}

unsigned sextet(std::string_view text, std::size_t pos) {
  auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", pos);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  std::size_t end = strip_line_end(text);
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (pos + k > end) throw ParseError("graph6: truncated input", end);
  };
  need(1);
  std::uint64_t n = 0;
  if (text[0] != 126) {
    n = sextet(text, 0);
    pos = 1;
  } else if (need(2), text[1] != 126) {
    need(4);
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text, i);
    pos = 4;
  } else {
    need(8);
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text, i);
    pos = 8;
  }
  if (n > kMaxGraph6Order) throw ParseError("graph6: order too large", 0);
  std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::uint64_t bytes = (bits + 5) / 6;
  need(bytes);
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  Vertex i = 0, j = 1;
  for (std::uint64_t b = 0; b < bytes; ++b) {
    unsigned x = sextet(text, pos + b);
    for (int s = 5; s >= 0; --s, ++k) {
      bool bit = (x >> s) & 1u;
      if (k >= bits) {
        if (bit) throw ParseError("graph6: nonzero padding bit", pos + b);
        continue;
      }
      if (bit) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  if (pos + bytes != end) throw ParseError("graph6: trailing bytes", pos + bytes);
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned())
    throw ParseError("json: expected object with unsigned \"n\"", 0);
  auto n = j["n"].get<std::size_t>();
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("json: \"edges\" must be an array", 0);
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
        throw ParseError("json: each edge must be [u,v]", 0);
      auto u = e[0].get<std::uint64_t>(), v = e[1].get<std::uint64_t>();
      if (u >= n || v >= n) throw ParseError("json: edge endpoint out of range", 0);
      if (u == v) throw ParseError("json: self-loop", 0);
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph(n, edges);
}

std::string to_graph_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = std::move(edges);
  return j.dump();
}

Graph read_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
  return parse_graph6(text);
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(Integer(s.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: " + s);
  }
}

}  // namespace wuchar
