#pragma once

// JSON encodings of certificates, polynomials, reports and hunt results.
// Exact numbers are written as decimal strings ("p/q" for rationals).

#include "gdom/graph_io.hpp"
#include "gdom/harness.hpp"
#include "gdom/polynomial.hpp"
#include "gdom/relations.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace gdom {

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[v & 0xfU];
    v >>= 4U;
  }
  return out;
}

inline nlohmann::json vertex_set_to_json(const VertexSet& s) { return s.items(); }

inline nlohmann::json subgraph_to_json(const Subgraph& s) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : s.edges) edges.push_back({e.u, e.v, e.multiplicity, to_string(e.weight)});
  return {{"vertices", vertex_set_to_json(s.vertices)}, {"edges", edges}};
}

inline nlohmann::json certificate_to_json(const TilingCertificate& c) {
  nlohmann::json copies = nlohmann::json::array();
  for (const auto& s : c.copies) copies.push_back(subgraph_to_json(s));
  return {{"type", "tiling"}, {"copies", copies}};
}

inline nlohmann::json certificate_to_json(const FractionalTilingCertificate& c) {
  nlohmann::json copies = nlohmann::json::array();
  for (std::size_t i = 0; i < c.copies.size(); ++i) {
    copies.push_back({{"copy", subgraph_to_json(c.copies[i])}, {"multiplicity", to_string(c.multiplicities[i])}});
  }
  return {{"type", c.mode == TilingMode::vertex ? "fractional_tiling" : "fractional_edge_tiling"},
          {"coverage", to_string(c.coverage)},
          {"copies", copies}};
}

inline nlohmann::json certificate_to_json(const CouplingCertificate& c) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : c.entries) entries.push_back({e.x, e.y, to_string(e.mass)});
  return {{"type", "domination"}, {"g_size", c.g_size}, {"h_size", c.h_size}, {"coupling", entries}};
}

inline nlohmann::json certificate_to_json(const RelationCertificate& c) {
  return std::visit([](const auto& inner) { return certificate_to_json(inner); }, c);
}

inline Subgraph subgraph_from_json(const nlohmann::json& j) {
  Subgraph s;
  s.vertices = VertexSet(j.at("vertices").get<std::vector<Vertex>>());
  for (const auto& e : j.at("edges")) {
    s.edges.push_back(Edge{e.at(0).get<Vertex>(), e.at(1).get<Vertex>(), e.at(2).get<std::uint64_t>(),
                           parse_rational(e.at(3).get<std::string>())});
  }
  return s;
}

inline RelationCertificate certificate_from_json(const nlohmann::json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "tiling") {
      TilingCertificate c;
      for (const auto& s : j.at("copies")) c.copies.push_back(subgraph_from_json(s));
      return c;
    }
    if (type == "fractional_tiling" || type == "fractional_edge_tiling") {
      FractionalTilingCertificate c;
      c.mode = type == "fractional_tiling" ? TilingMode::vertex : TilingMode::edge;
      c.coverage = BigInt(j.at("coverage").get<std::string>());
      for (const auto& item : j.at("copies")) {
        c.copies.push_back(subgraph_from_json(item.at("copy")));
        c.multiplicities.emplace_back(item.at("multiplicity").get<std::string>());
      }
      return c;
    }
    if (type == "domination") {
      CouplingCertificate c;
      c.g_size = j.at("g_size").get<std::size_t>();
      c.h_size = j.at("h_size").get<std::size_t>();
      for (const auto& e : j.at("coupling")) {
        c.entries.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>(), parse_rational(e.at(2).get<std::string>())});
      }
      return c;
    }
    throw Error(ErrorKind::syntax, "unknown certificate type: " + type);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::syntax, std::string("certificate JSON: ") + ex.what());
  }
}

/// Terms as [i, j, "coefficient"] for x^i y^j, in increasing (i, j) order.
inline nlohmann::json polynomial_to_json(const BivariatePolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.first, e.second, to_string(c)});
  return terms;
}

inline BivariatePolynomial polynomial_from_json(const nlohmann::json& j) {
  BivariatePolynomial p;
  for (const auto& t : j) p.add_term(t.at(0).get<std::uint32_t>(), t.at(1).get<std::uint32_t>(), BigInt(t.at(2).get<std::string>()));
  return p;
}

inline nlohmann::json quantity_to_json(const Quantity& q) {
  nlohmann::json j{{"expression", q.expression}, {"approx", q.approx}};
  if (q.exact) {
    j["exact"] = to_string(*q.exact);
    j["root"] = q.root;
  } else {
    j["error"] = q.error;
  }
  return j;
}

inline nlohmann::json report_to_json(const CheckReport& r) {
  nlohmann::json j{{"id", to_string(r.id)},
                   {"variant", r.variant},
                   {"g", r.g},
                   {"h", r.h},
                   {"hypothesis", r.hypothesis},
                   {"hypothesis_holds", r.hypothesis_holds},
                   {"theorem_regime", r.theorem_regime},
                   {"theorem_applies", r.theorem_applies},
                   {"status", to_string(r.status)},
                   {"relation", to_string(r.direction)},
                   {"verdict", to_string(r.verdict)},
                   {"note", r.note}};
  j["raw_verdict"] = r.raw_verdict ? nlohmann::json(to_string(*r.raw_verdict)) : nlohmann::json(nullptr);
  j["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : nlohmann::json(nullptr);
  if (r.lhs) j["lhs"] = quantity_to_json(*r.lhs);
  if (r.rhs) j["rhs"] = quantity_to_json(*r.rhs);
  if (!r.grid.empty()) {
    nlohmann::json grid = nlohmann::json::array();
    for (const auto& p : r.grid) {
      grid.push_back({{"parameter", p.parameter},
                      {"lhs", quantity_to_json(p.lhs)},
                      {"rhs", quantity_to_json(p.rhs)},
                      {"verdict", to_string(p.verdict)}});
    }
    j["grid_name"] = r.grid_name;
    j["grid"] = grid;
  }
  return j;
}

/// Standalone counterexample: both graphs, the domination certificate, the report
/// and what is needed to regenerate the pair.
inline nlohmann::json counterexample_bundle(const HuntFinding& f, const PairGenerator& gen) {
  return {{"schema", 1},
          {"g", graph_to_json(f.pair.g)},
          {"h", graph_to_json(f.pair.h)},
          {"certificate", certificate_to_json(f.pair.certificate)},
          {"report", report_to_json(f.report)},
          {"reproduce",
           {{"strategy", to_string(gen.strategy)},
            {"seed", gen.seed},
            {"trial", f.pair.trial},
            {"min_n", gen.min_n},
            {"max_n", gen.max_n},
            {"rng", kRngName}}}};
}

inline nlohmann::json hunt_summary_to_json(const HuntResult& r) {
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& f : r.violations) trials.push_back(f.pair.trial);
  return {{"id", to_string(r.id)},
          {"strategy", to_string(r.generator.strategy)},
          {"seed", r.generator.seed},
          {"max_n", r.generator.max_n},
          {"trials", r.trials},
          {"holds", r.holds},
          {"holds_with_equality", r.equalities},
          {"hypothesis_failed", r.hypothesis_failed},
          {"inconclusive", r.inconclusive},
          {"errors", r.errors},
          {"violations", r.violations.size()},
          {"violating_trials", trials}};
}

}  // namespace gdom
