#pragma once

// The `gdom` command line: analyze, relate, check, hunt and report, with a
// JSONL run log. `run` is the whole program minus process setup.

#include "gdom/counting.hpp"
#include "gdom/graph_io.hpp"
#include "gdom/harness.hpp"
#include "gdom/relations.hpp"
#include "gdom/report_json.hpp"
#include "gdom/spectral.hpp"
#include "gdom/symmetry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef GDOM_VERSION
#define GDOM_VERSION "1.0.0"
#endif

namespace gdom::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitHypothesisFailed = 2;
inline constexpr int kExitInconclusive = 3;

inline int exit_code(Verdict v) {
  switch (v) {
    case Verdict::holds:
    case Verdict::holds_with_equality: return kExitHolds;
    case Verdict::violated: return kExitViolated;
    case Verdict::hypothesis_failed: return kExitHypothesisFailed;
    case Verdict::inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

/// A graph argument read from disk, with the digest recorded in the run log.
struct GraphInput {
  std::string path;
  std::string digest;
  Multigraph graph;
};

/// `builtin:NAME` names a small standard graph: K<n>, C<n>, P<n>, S<n> (star with
/// n leaves), Q<d>, G<r>x<c> (grid), edge.
inline Multigraph builtin_graph(const std::string& name) {
  auto number = [&](std::size_t from) {
    const std::string digits = name.substr(from);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::syntax, "unknown builtin graph: " + name);
    }
    return static_cast<std::size_t>(std::stoul(digits));
  };
  if (name == "edge") return graphs::edge();
  if (name.empty()) throw Error(ErrorKind::syntax, "empty builtin graph name");
  switch (name[0]) {
    case 'K': return graphs::complete(number(1));
    case 'C': return graphs::cycle(number(1));
    case 'P': return graphs::path(number(1));
    case 'S': return graphs::star(number(1));
    case 'Q': return graphs::hypercube(number(1));
    case 'G': {
      const auto x = name.find('x');
      if (x == std::string::npos) break;
      const std::size_t cols = number(x + 1);
      return graphs::grid(std::stoul(name.substr(1, x - 1)), cols);
    }
    default: break;
  }
  throw Error(ErrorKind::syntax, "unknown builtin graph: " + name);
}

inline GraphInput read_graph(const std::string& path, const std::string& format) {
  GraphInput in;
  in.path = path;
  std::string text;
  if (path.rfind("builtin:", 0) == 0) {
    text = path;
    in.graph = builtin_graph(path.substr(8));
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::syntax, "cannot read " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
    const GraphFormat fmt = format == "auto" ? sniff_graph_format(text) : parse_graph_format(format);
    in.graph = parse_graph(text, fmt);
  }
  in.digest = "fnv1a64:" + hex64(fnv1a64(text));
  return in;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw Error(ErrorKind::syntax, "empty list: " + text);
  return out;
}

inline VertexSet parse_vertex_set(const std::string& text) {
  std::vector<Vertex> vs;
  for (const auto& item : split(text, ',')) vs.push_back(static_cast<Vertex>(std::stoul(item)));
  return VertexSet(std::move(vs));
}

/// Entries "x:y" are points; plain entries form the axis of a square grid.
inline std::vector<std::pair<Rational, Rational>> parse_xy_grid(const std::string& text) {
  std::vector<std::pair<Rational, Rational>> points;
  std::vector<Rational> axis;
  for (const auto& item : split(text, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      axis.push_back(parse_rational(item));
    } else {
      points.emplace_back(parse_rational(item.substr(0, colon)), parse_rational(item.substr(colon + 1)));
    }
  }
  for (const auto& x : axis) {
    for (const auto& y : axis) points.emplace_back(x, y);
  }
  if (points.empty()) throw Error(ErrorKind::syntax, "empty grid: " + text);
  return points;
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

inline std::string render_quantity(const Quantity& q) {
  std::ostringstream out;
  out << q.expression << " = ";
  if (q.exact) {
    out << to_string(*q.exact);
    if (q.root != 1) out << "^(1/" << q.root << ")";
    out << " ~ " << std::setprecision(12) << q.approx;
  } else {
    out << std::setprecision(15) << q.approx << " +/- " << std::setprecision(3) << q.error;
  }
  return out.str();
}

inline void render_report(std::ostream& out, const CheckReport& r) {
  out << "id: " << to_string(r.id) << (r.variant.empty() ? "" : " [" + r.variant + "]") << '\n';
  out << "G: " << r.g << '\n';
  if (!r.h.empty()) out << "H: " << r.h << '\n';
  out << "hypothesis: " << r.hypothesis << " -> " << (r.hypothesis_holds ? "certified" : "not certified") << '\n';
  out << "theorem regime: " << r.theorem_regime << " -> " << (r.theorem_applies ? "applies" : "does not apply") << '\n';
  out << "status: " << to_string(r.status) << '\n';
  if (r.lhs) {
    out << "lhs: " << render_quantity(*r.lhs) << '\n';
    out << "relation: lhs " << to_string(r.direction) << " rhs\n";
    out << "rhs: " << render_quantity(*r.rhs) << '\n';
  }
  if (!r.grid.empty()) {
    out << "grid: " << r.grid_name << " (lhs " << to_string(r.direction) << " rhs)\n";
    for (const auto& p : r.grid) {
      out << "  " << p.parameter << ": " << std::setprecision(12) << p.lhs.approx << " vs " << p.rhs.approx << "  "
          << to_string(p.verdict) << '\n';
    }
  }
  if (!r.note.empty()) out << "note: " << r.note << '\n';
  if (r.raw_verdict && r.verdict == Verdict::hypothesis_failed) out << "raw verdict: " << to_string(*r.raw_verdict) << '\n';
  out << "verdict: " << to_string(r.verdict) << '\n';
}

/// Options shared by every subcommand.
struct Options {
  std::string format = "auto";
  bool json = false;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  std::size_t min_n = 2;
  std::size_t max_n = 8;
  std::string t_grid;
  std::string xy_grid;
  std::string family;
  std::string log_dir = "gdom-log";
  std::vector<std::string> hinge;
  std::vector<std::string> functionals;
  std::string monotone = "shifted_log";
  std::uint64_t colors = 3;
  std::string set_a;
  std::string set_b;
  std::string cover;
  std::string packing;
  double budget = 1e-9;
  std::uint64_t tutte_bound = kDefaultTutteBound;
  std::string strategy = "overlay_copies";
  unsigned threads = 0;
  std::string id;
  std::vector<std::string> graphs;
};

/// Everything one invocation needs to write its RunRecord.
struct Run {
  std::string command;
  nlohmann::json inputs = nlohmann::json::array();
  nlohmann::json payload;
  nlohmann::json outcome;
  std::optional<std::uint64_t> seed;
  int exit = 0;
};

inline CheckParams build_params(const Options& o, Run& run) {
  CheckParams p;
  if (!o.t_grid.empty()) {
    p.t_grid = parse_rational_list(o.t_grid);
    p.t_grid_name = "{" + o.t_grid + "}";
  }
  if (!o.xy_grid.empty()) {
    p.xy_grid = parse_xy_grid(o.xy_grid);
    p.xy_grid_name = "{" + o.xy_grid + "}";
  }
  for (const auto& c : o.hinge) p.functionals.push_back(FunctionalSpec::make(FunctionalFamily::hinge, parse_rational(c)));
  for (const auto& f : o.functionals) {
    const auto colon = f.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::syntax, "functional must be family:parameter");
    p.functionals.push_back(
        FunctionalSpec::make(parse_functional_family(f.substr(0, colon)), parse_rational(f.substr(colon + 1))));
  }
  p.monotone_family = parse_functional_family(o.monotone);
  p.family = o.family;
  p.colors = o.colors;
  if (!o.set_a.empty()) p.set_a = parse_vertex_set(o.set_a);
  if (!o.set_b.empty()) p.set_b = parse_vertex_set(o.set_b);
  if (!o.cover.empty()) {
    std::vector<VertexSet> cover;
    for (const auto& s : split(o.cover, ';')) cover.push_back(parse_vertex_set(s));
    p.cover = std::move(cover);
  }
  if (!o.packing.empty()) {
    GraphInput k = read_graph(o.packing, o.format);
    run.inputs.push_back({{"role", "K"}, {"path", k.path}, {"digest", k.digest}});
    p.packing_graph = std::move(k.graph);
  }
  p.error_budget = o.budget;
  p.tutte_bound = o.tutte_bound;
  return p;
}

/// "name[:family]".
inline InequalityId split_id(const std::string& text, std::string& family) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return parse_inequality_id(text);
  family = text.substr(colon + 1);
  return parse_inequality_id(text.substr(0, colon));
}

inline std::vector<GraphInput> load_graphs(const Options& o, Run& run) {
  std::vector<GraphInput> out;
  const char* roles[] = {"G", "H"};
  for (std::size_t i = 0; i < o.graphs.size(); ++i) {
    out.push_back(read_graph(o.graphs[i], o.format));
    run.inputs.push_back({{"role", roles[std::min<std::size_t>(i, 1)]}, {"path", out.back().path}, {"digest", out.back().digest}});
  }
  return out;
}

inline void cmd_analyze(const Options& o, Run& run, std::ostream& out) {
  const auto inputs = load_graphs(o, run);
  const Multigraph& g = inputs.at(0).graph;
  nlohmann::json j;
  // Each field is computed independently so one bound error leaves the rest intact.
  auto field = [&](const char* name, auto compute) {
    try {
      j[name] = compute();
    } catch (const Error& e) {
      j[name] = {{"error", to_string(e.kind())}, {"message", e.what()}};
      run.exit = kExitInconclusive;
    }
  };
  field("vertices", [&] { return g.size(); });
  field("edge_units", [&] { return g.edge_units(); });
  field("transitive", [&] { return is_transitive(g); });
  field("cut_edge", [&] { return has_cut_edge(g); });
  field("spanning_trees", [&] { return to_string(count_spanning_trees(g)); });
  field("tutte", [&] { return polynomial_to_json(tutte_polynomial(g, o.tutte_bound)); });
  field("matchings", [&] { return to_string(count_matchings(g)); });
  field("independent_sets", [&] { return to_string(count_independent_sets(g)); });
  field("spectrum", [&] { return eigenvalues(g).values; });
  field("heat_trace", [&] {
    const auto ts = o.t_grid.empty() ? default_t_grid() : parse_rational_list(o.t_grid);
    const Spectrum s = eigenvalues(g);
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& t : ts) samples.push_back({to_string(t), heat_trace(s, to_double(t))});
    return samples;
  });
  run.payload = j;
  run.outcome = {{"vertices", g.size()}};
  if (o.json) {
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : j.items()) {
    if (k == "tutte" && v.is_array()) {
      BivariatePolynomial p = polynomial_from_json(v);
      out << k << ": " << p.to_string() << '\n';
    } else if (v.is_object() && v.contains("error")) {
      out << k << ": error (" << v["error"].get<std::string>() << "): " << v["message"].get<std::string>() << '\n';
    } else if (v.is_string()) {
      out << k << ": " << v.get<std::string>() << '\n';
    } else {
      out << k << ": " << v.dump() << '\n';
    }
  }
}

inline void cmd_relate(const Options& o, Run& run, std::ostream& out) {
  const auto inputs = load_graphs(o, run);
  const Multigraph& g = inputs.at(0).graph;
  const Multigraph& h = inputs.at(1).graph;
  nlohmann::json j;
  const auto tiling = check_tiling(g, h);
  j["tiling"] = {{"decision", to_string(tiling.decision)},
                 {"certificate", tiling.certificate ? certificate_to_json(*tiling.certificate) : nlohmann::json(nullptr)}};
  for (const auto& [name, result] : {std::pair{"fractional_tiling", check_fractional_tiling(g, h)},
                                     std::pair{"fractional_edge_tiling", check_fractional_edge_tiling(g, h)}}) {
    nlohmann::json entry{{"decision", to_string(result.decision)}, {"copies", result.copy_count}};
    if (result.certificate) {
      entry["m"] = to_string(result.certificate->coverage);
      entry["certificate"] = certificate_to_json(*result.certificate);
    }
    j[name] = entry;
  }
  const auto dom = check_domination(g, h);
  j["domination"] = {{"decision", dom ? "holds" : "fails"},
                     {"certificate", dom ? certificate_to_json(*dom) : nlohmann::json(nullptr)}};
  run.payload = j;
  run.outcome = {{"tiling", j["tiling"]["decision"]},
                 {"fractional_tiling", j["fractional_tiling"]["decision"]},
                 {"fractional_edge_tiling", j["fractional_edge_tiling"]["decision"]},
                 {"domination", j["domination"]["decision"]}};
  if (o.json) {
    out << j.dump(2) << '\n';
    return;
  }
  for (const char* name : {"tiling", "fractional_tiling", "fractional_edge_tiling", "domination"}) {
    out << name << ": " << j[name]["decision"].get<std::string>();
    if (j[name].contains("m")) out << " (m=" << j[name]["m"].get<std::string>() << ")";
    out << '\n';
  }
}

inline void cmd_check(const Options& o, Run& run, std::ostream& out) {
  std::string family;
  const InequalityId id = split_id(o.id, family);
  Options opts = o;
  if (!family.empty()) opts.family = family;
  const CheckParams params = build_params(opts, run);
  const auto inputs = load_graphs(o, run);
  if (inputs.empty()) throw Error(ErrorKind::missing_params, "check needs at least one graph");
  std::optional<Multigraph> h;
  if (inputs.size() > 1) h = inputs[1].graph;
  const CheckReport report = check(id, inputs[0].graph, h, params);
  run.payload = report_to_json(report);
  run.outcome = {{"verdict", to_string(report.verdict)}};
  run.exit = exit_code(report.verdict);
  if (o.json) {
    out << run.payload.dump(2) << '\n';
  } else {
    render_report(out, report);
  }
}

inline void cmd_hunt(const Options& o, Run& run, std::ostream& out) {
  std::string family;
  const InequalityId id = split_id(o.id, family);
  Options opts = o;
  if (!family.empty()) opts.family = family;
  const CheckParams params = build_params(opts, run);
  PairGenerator gen;
  gen.strategy = parse_pair_strategy(o.strategy);
  gen.seed = o.seed;
  gen.min_n = o.min_n;
  gen.max_n = o.max_n;
  run.seed = o.seed;
  const auto start = std::chrono::steady_clock::now();
  const HuntResult result = hunt(id, gen, o.trials, params, o.threads);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  nlohmann::json bundles = nlohmann::json::array();
  const auto dir = std::filesystem::path(o.log_dir) / "counterexamples";
  if (!result.violations.empty()) std::filesystem::create_directories(dir);
  for (const auto& f : result.violations) {
    const auto name = std::string(to_string(id)) + "-" + to_string(gen.strategy) + "-s" + std::to_string(gen.seed) +
                      "-t" + std::to_string(f.pair.trial) + ".json";
    std::ofstream(dir / name) << counterexample_bundle(f, gen).dump(2) << '\n';
    bundles.push_back((dir / name).string());
  }
  nlohmann::json summary = hunt_summary_to_json(result);
  summary["variant"] = opts.family;
  run.payload = summary;
  run.outcome = {{"violations", result.violations.size()}, {"elapsed_seconds", elapsed}, {"bundles", bundles}};
  run.exit = result.violations.empty() ? kExitHolds : kExitViolated;
  if (o.json) {
    nlohmann::json j = summary;
    j["bundles"] = bundles;
    out << j.dump(2) << '\n';
    return;
  }
  out << "hunt " << to_string(id) << (opts.family.empty() ? "" : ":" + opts.family) << " strategy=" << o.strategy
      << " seed=" << gen.seed << " trials=" << result.trials << " holds=" << result.holds
      << " equalities=" << result.equalities << " hypothesis_failed=" << result.hypothesis_failed
      << " inconclusive=" << result.inconclusive << " errors=" << result.errors
      << " violations=" << result.violations.size() << " elapsed=" << std::fixed << std::setprecision(2) << elapsed
      << "s\n";
  for (const auto& b : bundles) out << "archived " << b.get<std::string>() << '\n';
}

inline std::filesystem::path log_file(const std::string& dir) { return std::filesystem::path(dir) / "runs.jsonl"; }

inline void cmd_report(const Options& o, Run& run, std::ostream& out) {
  const auto path = log_file(o.log_dir);
  nlohmann::json records = nlohmann::json::array();
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      records.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::parse_error&) {
      throw Error(ErrorKind::syntax, "corrupt record in " + path.string());
    }
  }
  run.payload = {{"records", records.size()}};
  run.outcome = run.payload;
  if (o.json) {
    out << records.dump(2) << '\n';
    return;
  }
  for (const auto& r : records) {
    out << r.value("timestamp", "?") << "  exit=" << r.value("exit", -1) << "  " << r.value("command", "") << "  "
        << r.value("outcome", nlohmann::json::object()).dump() << '\n';
  }
  out << records.size() << " record(s) in " << path.string() << '\n';
}

inline void append_record(const Options& o, const Run& run) {
  std::filesystem::create_directories(o.log_dir);
  nlohmann::json record{{"schema", 1},
                        {"timestamp", utc_timestamp()},
                        {"version", GDOM_VERSION},
                        {"command", run.command},
                        {"rng", kRngName},
                        {"inputs", run.inputs},
                        {"exit", run.exit},
                        {"outcome", run.outcome},
                        {"payload", run.payload}};
  record["seed"] = run.seed ? nlohmann::json(*run.seed) : nlohmann::json(nullptr);
  std::ofstream(log_file(o.log_dir), std::ios::app) << record.dump() << '\n';
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph domination inequalities: relations, counts, spectra and counterexample hunts", "gdom"};
  app.set_version_flag("--version", GDOM_VERSION);
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Input format: auto, edge_list, graph6, json")->capture_default_str();
    sub->add_flag("--json", o.json, "Print JSON instead of text");
    sub->add_option("--log-dir", o.log_dir, "Directory of the JSONL run log")->capture_default_str();
  };
  auto params = [&](CLI::App* sub) {
    sub->add_option("--t-grid", o.t_grid, "Comma-separated rationals t > 0");
    sub->add_option("--grid", o.xy_grid, "Tutte grid: axis values, or x:y points");
    sub->add_option("--family", o.family, "Counting family for vertex_counting / edge_counting");
    sub->add_option("--hinge", o.hinge, "Add the functional (c - s)^+");
    sub->add_option("--functional", o.functionals, "Add a functional family:parameter");
    sub->add_option("--monotone", o.monotone, "op_monotone family: shifted_log or shifted_inverse")->capture_default_str();
    sub->add_option("--colors", o.colors, "Colors for the colorings family")->capture_default_str();
    sub->add_option("--set-a", o.set_a, "Vertex set A (comma-separated)");
    sub->add_option("--set-b", o.set_b, "Vertex set B (comma-separated)");
    sub->add_option("--cover", o.cover, "Cover sets separated by ';'");
    sub->add_option("--packing", o.packing, "Graph file for the packed graph K");
    sub->add_option("--budget", o.budget, "Floating-point error budget")->capture_default_str();
    sub->add_option("--tutte-bound", o.tutte_bound, "Edge-unit bound for uncached Tutte polynomials")->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "Invariants of one graph");
  common(analyze);
  analyze->add_option("graph", o.graphs, "Graph file or builtin:NAME")->required()->expected(1);
  analyze->add_option("--t-grid", o.t_grid, "Heat-trace sample times");
  analyze->add_option("--tutte-bound", o.tutte_bound, "Edge-unit bound for uncached Tutte polynomials");

  auto* relate = app.add_subcommand("relate", "Decide tiling, fractional tiling and domination of G over H");
  common(relate);
  relate->add_option("graphs", o.graphs, "G and H")->required()->expected(2);

  auto* check_cmd = app.add_subcommand("check", "Check one inequality on (G, H)");
  common(check_cmd);
  params(check_cmd);
  check_cmd->add_option("id", o.id, "Inequality id, optionally id:family")->required();
  check_cmd->add_option("graphs", o.graphs, "G and, where needed, H")->required()->expected(1, 2);

  auto* hunt_cmd = app.add_subcommand("hunt", "Search generated dominating pairs for violations");
  common(hunt_cmd);
  params(hunt_cmd);
  hunt_cmd->add_option("id", o.id, "Inequality id, optionally id:family")->required();
  hunt_cmd->add_option("--strategy", o.strategy, "overlay_copies, transitive_catalog or random_connected_pair")
      ->capture_default_str();
  hunt_cmd->add_option("--seed", o.seed, "Run seed")->capture_default_str();
  hunt_cmd->add_option("--trials", o.trials, "Number of trials")->capture_default_str();
  hunt_cmd->add_option("--min-n", o.min_n, "Smallest |G|")->capture_default_str();
  hunt_cmd->add_option("--max-n", o.max_n, "Largest |G|")->capture_default_str();
  hunt_cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  auto* report = app.add_subcommand("report", "Summarize the run log");
  common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInconclusive;
  }

  Run r;
  for (int i = 0; i < argc; ++i) r.command += (i ? " " : "") + std::string(argv[i]);
  try {
    if (*analyze) cmd_analyze(o, r, out);
    else if (*relate) cmd_relate(o, r, out);
    else if (*check_cmd) cmd_check(o, r, out);
    else if (*hunt_cmd) cmd_hunt(o, r, out);
    else if (*report) cmd_report(o, r, out);
  } catch (const Error& e) {
    err << "gdom: error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    r.exit = kExitInconclusive;
    r.outcome = {{"error", to_string(e.kind())}, {"message", e.what()}};
  } catch (const std::exception& e) {
    err << "gdom: error: " << e.what() << '\n';
    r.exit = kExitInconclusive;
    r.outcome = {{"error", "exception"}, {"message", e.what()}};
  }
  try {
    append_record(o, r);
  } catch (const std::exception& e) {
    err << "gdom: cannot write run log: " << e.what() << '\n';
  }
  return r.exit;
}

}  // namespace gdom::cli
