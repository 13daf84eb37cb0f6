#pragma once

// Text formats for multigraphs: the canonical edge list, graph6 (simple graphs
// only) and JSON.
//
// Edge list: "n; u v [mult [weight]]; ..." where weight is "p/q" or an integer.
// JSON:      {"n": 3, "edges": [[0, 1, 1, "1"], [1, 2, 1, "1"]]}

#include "gdom/graph.hpp"

#include "json.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

namespace gdom {

enum class GraphFormat { edge_list, graph6, json };

inline GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edge_list" || name == "edges" || name == "el") return GraphFormat::edge_list;
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "json") return GraphFormat::json;
  throw Error(ErrorKind::unsupported_format, "unknown graph format '" + std::string(name) + "'");
}

namespace detail {

inline Error syntax_error(std::size_t pos, const std::string& msg) {
  return Error(ErrorKind::syntax, "at offset " + std::to_string(pos) + ": " + msg);
}

inline Multigraph parse_edge_list(std::string_view text) {
  std::vector<std::vector<std::pair<std::string, std::size_t>>> clauses(1);
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ';' || c == '\n') {
      clauses.emplace_back();
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && text[i] != ';' && text[i] != '\n' && text[i] != '#' &&
             std::isspace(static_cast<unsigned char>(text[i])) == 0) {
        ++i;
      }
      clauses.back().emplace_back(std::string(text.substr(start, i - start)), start);
    }
  }
  std::erase_if(clauses, [](const auto& cl) { return cl.empty(); });
  if (clauses.empty()) throw syntax_error(0, "empty input");

  auto to_count = [](const std::pair<std::string, std::size_t>& tok, const char* what) {
    const auto& s = tok.first;
    if (s.empty() || s.size() > 18 ||
        !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; })) {
      throw syntax_error(tok.second, std::string("expected ") + what + ", got '" + s + "'");
    }
    return std::stoull(s);
  };

  if (clauses[0].size() != 1) throw syntax_error(clauses[0][0].second, "first clause must be the vertex count alone");
  const std::size_t n = to_count(clauses[0][0], "vertex count");
  if (n == 0) throw syntax_error(clauses[0][0].second, "vertex count must be positive");
  std::vector<Edge> edges;
  for (std::size_t c = 1; c < clauses.size(); ++c) {
    const auto& cl = clauses[c];
    if (cl.size() < 2 || cl.size() > 4) throw syntax_error(cl[0].second, "edge clause needs 2 to 4 fields");
    Edge e;
    const auto u = to_count(cl[0], "vertex");
    const auto v = to_count(cl[1], "vertex");
    if (u >= n || v >= n) throw syntax_error(cl[0].second, "vertex out of range");
    if (u == v) throw Error(ErrorKind::loop_in_input, "loop at vertex " + std::to_string(u) + " (offset " +
                                                         std::to_string(cl[0].second) + ")");
    e.u = static_cast<Vertex>(u);
    e.v = static_cast<Vertex>(v);
    if (cl.size() >= 3) {
      e.multiplicity = to_count(cl[2], "multiplicity");
      if (e.multiplicity == 0) throw syntax_error(cl[2].second, "multiplicity must be positive");
    }
    if (cl.size() == 4) {
      try {
        e.weight = parse_rational(cl[3].first);
      } catch (const Error&) {
        throw syntax_error(cl[3].second, "malformed weight '" + cl[3].first + "'");
      }
      if (e.weight <= 0) throw syntax_error(cl[3].second, "weight must be positive");
    }
    edges.push_back(std::move(e));
  }
  return Multigraph::create(n, std::move(edges));
}

inline std::string serialize_edge_list(const Multigraph& g) {
  std::ostringstream out;
  out << g.size();
  for (const auto& e : g.edges()) {
    out << "; " << e.u << ' ' << e.v;
    if (e.multiplicity != 1 || e.weight != 1) out << ' ' << e.multiplicity;
    if (e.weight != 1) out << ' ' << to_string(e.weight);
  }
  return out.str();
}

inline Multigraph parse_graph6(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())) != 0) text.remove_suffix(1);
  std::size_t pos = 0;
  if (text.substr(0, 10) == ">>graph6<<") pos = 10;
  auto byte_at = [&](std::size_t p) -> unsigned {
    if (p >= text.size()) throw syntax_error(p, "truncated graph6 data");
    const auto b = static_cast<unsigned char>(text[p]);
    if (b < 63 || b > 126) throw syntax_error(p, "byte outside graph6 range");
    return b - 63U;
  };
  if (pos < text.size() && text[pos] == ':') throw Error(ErrorKind::unsupported_format, "sparse6 input is not supported");
  std::size_t n = 0;
  if (byte_at(pos) == 63) {
    if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
      throw Error(ErrorKind::size_bound, "graph6 graphs with more than 258047 vertices are not supported");
    }
    n = (std::size_t{byte_at(pos + 1)} << 12U) | (std::size_t{byte_at(pos + 2)} << 6U) | byte_at(pos + 3);
    pos += 4;
  } else {
    n = byte_at(pos);
    pos += 1;
  }
  if (n == 0) throw syntax_error(0, "graph6 graph has no vertices");
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) throw syntax_error(pos, "graph6 body has wrong length for n = " + std::to_string(n));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const unsigned chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1U) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((byte_at(pos + k / 6) >> (5 - k % 6)) & 1U) throw syntax_error(pos + k / 6, "nonzero graph6 padding");
  }
  return Multigraph::create(n, std::move(edges));
}

inline std::string serialize_graph6(const Multigraph& g) {
  if (!g.is_simple() || !g.is_unweighted()) {
    throw Error(ErrorKind::unsupported_format, "graph6 encodes simple unweighted graphs only");
  }
  const std::size_t n = g.size();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12U) & 63U) + 63));
    out.push_back(static_cast<char>(((n >> 6U) & 63U) + 63));
    out.push_back(static_cast<char>((n & 63U) + 63));
  } else {
    throw Error(ErrorKind::size_bound, "too many vertices for graph6");
  }
  const auto mult = g.multiplicity_matrix();
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1U) | (mult[i][j] != 0 ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << static_cast<unsigned>(6 - filled)) + 63));
  return out;
}

}  // namespace detail

inline nlohmann::json graph_to_json(const Multigraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.multiplicity, to_string(e.weight)});
  nlohmann::json j{{"n", g.size()}, {"edges", edges}};
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

inline Multigraph graph_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
      throw Error(ErrorKind::syntax, "graph JSON needs 'n' and 'edges'");
    }
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& item : j.at("edges")) {
      if (!item.is_array() || item.size() < 2 || item.size() > 4) {
        throw Error(ErrorKind::syntax, "edge entry must be [u, v, mult?, weight?]");
      }
      Edge e;
      const auto u = item[0].get<std::size_t>();
      const auto v = item[1].get<std::size_t>();
      if (u >= n || v >= n) throw Error(ErrorKind::syntax, "edge endpoint out of range");
      if (u == v) throw Error(ErrorKind::loop_in_input, "loop at vertex " + std::to_string(u));
      e.u = static_cast<Vertex>(u);
      e.v = static_cast<Vertex>(v);
      if (item.size() >= 3) e.multiplicity = item[2].get<std::uint64_t>();
      if (item.size() == 4) {
        e.weight = item[3].is_string() ? parse_rational(item[3].get<std::string>())
                                       : parse_rational(std::to_string(item[3].get<long long>()));
      }
      edges.push_back(std::move(e));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Multigraph::create(n, std::move(edges), std::move(labels));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::syntax, std::string("graph JSON: ") + ex.what());
  }
}

inline Multigraph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::edge_list: return detail::parse_edge_list(text);
    case GraphFormat::graph6: return detail::parse_graph6(text);
    case GraphFormat::json: {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& ex) {
        throw Error(ErrorKind::syntax, "at offset " + std::to_string(ex.byte) + ": invalid JSON");
      }
      return graph_from_json(j);
    }
  }
  throw Error(ErrorKind::unsupported_format, "unknown format");
}

inline std::string serialize_graph(const Multigraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::edge_list: return detail::serialize_edge_list(g);
    case GraphFormat::graph6: return detail::serialize_graph6(g);
    case GraphFormat::json: return graph_to_json(g).dump();
  }
  throw Error(ErrorKind::unsupported_format, "unknown format");
}

/// Picks a format from content: '{' means JSON, a ';' or whitespace-separated
/// leading count means edge list, anything else graph6.
inline GraphFormat sniff_graph_format(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) != 0) ++i;
  if (i < text.size() && text[i] == '{') return GraphFormat::json;
  if (text.substr(i, 10) == ">>graph6<<") return GraphFormat::graph6;
  std::size_t j = i;
  while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) != 0) ++j;
  if (j > i && (j == text.size() || text[j] == ';' || std::isspace(static_cast<unsigned char>(text[j])) != 0)) {
    return GraphFormat::edge_list;
  }
  return GraphFormat::graph6;
}

}  // namespace gdom
