#pragma once

// Command-line front end. Everything lives behind run_cli so the tests can
// drive the same code in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spor/spor.hpp"
#include "spor/stats_json.hpp"

namespace spor::cli {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

/// Oracle parameters as given on the command line. Unset fields take the
/// algorithm's default.
struct AlgoParams {
  std::optional<double> epsilon;
  std::optional<double> c;
  std::optional<unsigned> k;
  std::optional<double> r;
  std::optional<double> rho;
};

inline const std::map<std::string, std::set<std::string>>& allowed_params() {
  static const std::map<std::string, std::set<std::string>> table = {
      {"sss", {"epsilon", "c"}},      {"kcc", {"epsilon", "c", "k"}}, {"spanner3", {"r", "c"}},
      {"spanner5", {"r", "c"}},       {"bs", {"k", "rho", "c"}},
  };
  return table;
}

inline void check_params(const std::string& algo, const AlgoParams& p) {
  const auto it = allowed_params().find(algo);
  if (it == allowed_params().end()) throw UsageError("unknown algorithm '" + algo + "'");
  auto reject = [&](bool given, const char* name) {
    if (given && !it->second.contains(name)) {
      throw UsageError(std::string("--") + name + " does not apply to " + algo);
    }
  };
  reject(p.epsilon.has_value(), "epsilon");
  reject(p.c.has_value(), "c");
  reject(p.k.has_value(), "k");
  reject(p.r.has_value(), "r");
  reject(p.rho.has_value(), "rho");
}

inline SssBuildParams sss_params(const AlgoParams& a, std::uint64_t seed) {
  SssBuildParams p;
  p.epsilon = a.epsilon.value_or(p.epsilon);
  p.c = a.c.value_or(p.c);
  p.seed = seed;
  p.validate();
  return p;
}

inline SpannerParams spanner_params(const AlgoParams& a, std::uint64_t seed, std::size_t n,
                                    unsigned root) {
  SpannerParams p;
  // Default r is the size-optimal choice: floor(sqrt n) or floor(cbrt n).
  const double natural = std::floor(std::pow(static_cast<double>(n), 1.0 / root) + 1e-9);
  p.r = a.r.value_or(std::max(1.0, natural));
  p.c = a.c.value_or(p.c);
  p.seed = seed;
  p.validate();
  return p;
}

inline BsParams bs_params(const AlgoParams& a, std::uint64_t seed) {
  BsParams p;
  p.k = a.k.value_or(p.k);
  p.rho = a.rho.value_or(p.rho);
  p.c = a.c.value_or(p.c);
  p.seed = seed;
  p.validate();
  return p;
}

inline json params_json(const std::string& algo, const AlgoParams& a, std::uint64_t seed,
                        std::size_t n) {
  json j;
  if (algo == "sss" || algo == "kcc") {
    const SssBuildParams p = sss_params(a, seed);
    j = {{"epsilon", p.epsilon}, {"c", p.c}};
    if (algo == "kcc") j["k"] = a.k.value_or(2);
  } else if (algo == "spanner3" || algo == "spanner5") {
    const SpannerParams p = spanner_params(a, seed, n, algo == "spanner3" ? 2 : 3);
    j = {{"r", p.r}, {"c", p.c}};
  } else {
    const BsParams p = bs_params(a, seed);
    j = {{"k", p.k}, {"rho", p.rho}, {"c", p.c}};
  }
  return j;
}

struct BuildOutcome {
  json oracle;
  double build_seconds = 0.0;
  double enumerate_seconds = 0.0;
  std::optional<std::vector<Edge>> yes;
};

/// Builds the named oracle, timing the build and (when asked) the
/// enumeration of its YES set separately.
inline BuildOutcome build_oracle(const std::string& algo, const Graph& g, const AlgoParams& a,
                                 std::uint64_t seed, bool enumerate) {
  using clock = std::chrono::steady_clock;
  BuildOutcome out;
  auto run = [&](auto&& build) {
    const auto t0 = clock::now();
    auto oracle = build();
    out.build_seconds = std::chrono::duration<double>(clock::now() - t0).count();
    out.oracle = to_json(oracle);
    if (enumerate) {
      const auto t1 = clock::now();
      out.yes = enumerate_yes_edges(oracle, g);
      out.enumerate_seconds = std::chrono::duration<double>(clock::now() - t1).count();
    }
  };
  if (algo == "sss") {
    run([&] { return build_sss(g, sss_params(a, seed)); });
  } else if (algo == "kcc") {
    run([&] { return build_kcc(g, a.k.value_or(2), sss_params(a, seed)); });
  } else if (algo == "spanner3") {
    run([&] { return build_spanner3(g, spanner_params(a, seed, g.num_nodes(), 2)); });
  } else if (algo == "spanner5") {
    run([&] { return build_spanner5(g, spanner_params(a, seed, g.num_nodes(), 3)); });
  } else if (algo == "bs") {
    run([&] { return build_bs(g, bs_params(a, seed)); });
  } else {
    throw UsageError("unknown algorithm '" + algo + "'");
  }
  return out;
}

struct VerifyOutcome {
  bool pass = true;
  json report;
};

/// Property check matching the algorithm, plus the size cap for sss and kcc.
inline VerifyOutcome verify_yes_set(const std::string& algo, const Graph& g,
                                    const std::vector<Edge>& yes, const AlgoParams& a) {
  VerifyOutcome out;
  json checks = json::array();
  auto add = [&](const VerificationReport& rep) {
    out.pass = out.pass && rep.pass;
    checks.push_back(to_json(rep));
  };
  const double n = static_cast<double>(g.num_nodes());
  if (algo == "sss" || algo == "kcc") {
    const double eps = a.epsilon.value_or(SssBuildParams{}.epsilon);
    const unsigned k = algo == "kcc" ? a.k.value_or(2) : 1;
    if (algo == "sss") {
      add(check_spanning(yes, g));
    } else {
      add(check_k_certificate(yes, g, k));
    }
    const double limit = (1.0 + 2.0 * eps) * k * n;
    const bool size_ok = static_cast<double>(yes.size()) <= limit;
    out.pass = out.pass && size_ok;
    out.report["size"] = {{"yes_edges", yes.size()}, {"limit", limit}, {"pass", size_ok}};
  } else if (algo == "spanner3") {
    add(check_stretch(yes, g, 3));
  } else if (algo == "spanner5") {
    add(check_stretch(yes, g, 5));
  } else if (algo == "bs") {
    add(check_stretch(yes, g, 2 * a.k.value_or(BsParams{}.k) - 1));
  } else {
    throw UsageError("unknown algorithm '" + algo + "'");
  }
  out.report["checks"] = checks;
  out.report["pass"] = out.pass;
  return out;
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline void write_json(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw GraphError(GraphError::Kind::Io, "cannot write " + path);
  f << j.dump(2) << '\n';
}

inline void add_param_flags(CLI::App* cmd, AlgoParams& a) {
  cmd->add_option("--epsilon", a.epsilon, "Size slack epsilon in (0,1) (sss, kcc)");
  cmd->add_option("--c", a.c, "Algorithm constant (all)");
  cmd->add_option("--k", a.k, "Certificate connectivity (kcc) or stretch parameter (bs)");
  cmd->add_option("--r", a.r, "Sampling budget parameter (spanner3, spanner5)");
  cmd->add_option("--rho", a.rho, "Sampling divisor (bs)");
}

// ---- gen -------------------------------------------------------------------

struct GenConfig {
  std::string kind;
  std::size_t n = 0;
  double p = 0.5;
  std::size_t parts = 10;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "text";
};

inline int cmd_gen(const GenConfig& c, std::ostream& out, std::ostream& err) {
  static const std::set<std::string> random_kinds = {"gnp", "tree", "two-cliques", "union-gnp"};
  if (random_kinds.contains(c.kind) && !c.seed) {
    throw UsageError("--seed is required for --kind " + c.kind);
  }
  Rng rng = Rng::derive(c.seed.value_or(0), "gen");
  Graph g;
  if (c.kind == "complete") {
    g = gen_complete(c.n);
  } else if (c.kind == "path") {
    g = gen_path(c.n);
  } else if (c.kind == "star") {
    g = gen_star(c.n);
  } else if (c.kind == "tree") {
    g = gen_random_tree(c.n, rng);
  } else if (c.kind == "gnp") {
    g = gen_gnp(c.n, c.p, rng);
  } else if (c.kind == "two-cliques") {
    g = gen_two_cliques_cut_edge(c.n, rng).graph;
  } else if (c.kind == "union-gnp") {
    std::vector<Graph> pieces;
    for (std::size_t i = 0; i < c.parts; ++i) pieces.push_back(gen_gnp(c.n, c.p, rng));
    g = gen_disjoint_union(pieces);
  } else {
    throw UsageError("unknown generator kind '" + c.kind + "'");
  }
  std::ostringstream summary;
  summary << "n=" << g.num_nodes() << " m=" << g.num_edges();
  if (c.seed) summary << " seed=" << *c.seed;
  if (c.out.empty() || c.out == "-") {
    if (c.format == "binary") {
      write_binary(out, g);
    } else {
      write_text(out, g);
    }
    err << summary.str() << '\n';
  } else {
    save_graph(c.out, g, c.format == "binary");
    out << summary.str() << '\n';
  }
  return kExitPass;
}

// ---- build -----------------------------------------------------------------

struct BuildConfig {
  std::string algo;
  std::string graph;
  std::uint64_t seed = 0;
  AlgoParams params;
  std::string stats;
  std::string enumerate;
  bool omit_timing = false;
};

inline int cmd_build(const BuildConfig& c, std::ostream& out) {
  check_params(c.algo, c.params);
  const Graph g = load_graph(c.graph);
  BuildOutcome b = build_oracle(c.algo, g, c.params, c.seed, !c.enumerate.empty());
  json stats = {{"schema", kStatsSchema},
                {"algo", c.algo},
                {"seed", c.seed},
                {"graph", {{"n", g.num_nodes()}, {"m", g.num_edges()}}},
                {"params", params_json(c.algo, c.params, c.seed, g.num_nodes())},
                {"oracle", b.oracle}};
  if (!c.omit_timing) stats["build_seconds"] = b.build_seconds;
  if (b.yes) {
    std::ofstream f(c.enumerate);
    if (!f) throw GraphError(GraphError::Kind::Io, "cannot write " + c.enumerate);
    write_text(f, g.num_nodes(), *b.yes);
    stats["yes_edges"] = b.yes->size();
    if (!c.omit_timing) stats["enumerate_seconds"] = b.enumerate_seconds;
  }
  write_json(stats, c.stats, out);
  return kExitPass;
}

// ---- verify ----------------------------------------------------------------

struct VerifyConfig {
  std::string algo;
  std::string graph;
  std::string yes;
  AlgoParams params;
  std::string report;
};

inline int cmd_verify(const VerifyConfig& c, std::ostream& out) {
  check_params(c.algo, c.params);
  const Graph g = load_graph(c.graph);
  const EdgeListFile h = load_edge_list(c.yes);
  if (h.n != g.num_nodes()) {
    throw UsageError("YES file has n=" + std::to_string(h.n) + " but the graph has n=" +
                     std::to_string(g.num_nodes()));
  }
  VerifyOutcome v = verify_yes_set(c.algo, g, h.edges, c.params);
  json report = {{"schema", kStatsSchema}, {"algo", c.algo}};
  report.update(v.report);
  write_json(report, c.report, out);
  return v.pass ? kExitPass : kExitFail;
}

// ---- bench -----------------------------------------------------------------

struct BenchConfig {
  std::string algo;
  std::string kind = "gnp";
  std::string sizes;
  std::string densities = "0.1";
  std::string sweep;
  std::string values;
  std::size_t repeat = 1;
  std::uint64_t seed = 0;
  AlgoParams params;
  std::string format = "csv";
  std::string out;
  bool verify = false;
  bool omit_timing = false;
};

inline void set_param(AlgoParams& a, const std::string& name, const std::string& value) {
  const double x = std::stod(value);
  if (name == "epsilon") {
    a.epsilon = x;
  } else if (name == "c") {
    a.c = x;
  } else if (name == "k") {
    a.k = static_cast<unsigned>(x);
  } else if (name == "r") {
    a.r = x;
  } else if (name == "rho") {
    a.rho = x;
  } else {
    throw UsageError("cannot sweep unknown parameter '" + name + "'");
  }
}

inline int cmd_bench(const BenchConfig& c, std::ostream& out) {
  check_params(c.algo, c.params);
  if (c.sweep.empty() != c.values.empty()) throw UsageError("--sweep and --values go together");
  const auto sizes = split_list(c.sizes);
  if (sizes.empty()) throw UsageError("--n needs at least one size");
  const auto densities = c.kind == "gnp" ? split_list(c.densities) : std::vector<std::string>{"1"};
  const auto values = c.sweep.empty() ? std::vector<std::string>{""} : split_list(c.values);

  json rows = json::array();
  std::uint64_t cell = 0;
  for (const auto& n_text : sizes) {
    const std::size_t n = std::stoull(n_text);
    for (const auto& p_text : densities) {
      const double p = std::stod(p_text);
      for (const auto& value : values) {
        AlgoParams a = c.params;
        if (!c.sweep.empty()) set_param(a, c.sweep, value);
        check_params(c.algo, a);
        for (std::size_t rep = 0; rep < c.repeat; ++rep, ++cell) {
          // The graph depends on (n, p, rep) only, so every swept value sees
          // the same instances.
          Rng graph_rng = Rng::derive(c.seed, "bench-graph:" + n_text + ":" + p_text, rep);
          const Graph g = c.kind == "complete" ? gen_complete(n) : gen_gnp(n, p, graph_rng);
          const std::uint64_t oracle_seed = Rng::derive(c.seed, "bench-oracle", rep).seed();
          BuildOutcome b = build_oracle(c.algo, g, a, oracle_seed, true);
          json row = {{"algo", c.algo}, {"kind", c.kind}, {"n", n},
                      {"p", p},         {"rep", rep},     {"seed", oracle_seed},
                      {"m", g.num_edges()}, {"yes_edges", b.yes->size()}};
          if (!c.sweep.empty()) row[c.sweep] = std::stod(value);
          if (!c.omit_timing) row["build_ms"] = b.build_seconds * 1e3;
          if (c.verify) row["verified"] = verify_yes_set(c.algo, g, *b.yes, a).pass;
          rows.push_back(row);
        }
      }
    }
  }

  std::ostringstream text;
  if (c.format == "json") {
    text << json{{"schema", kStatsSchema}, {"rows", rows}}.dump(2) << '\n';
  } else {
    std::vector<std::string> cols = {"algo", "kind", "n", "p"};
    if (!c.sweep.empty()) cols.push_back(c.sweep);
    for (const char* col : {"rep", "seed", "m", "yes_edges"}) cols.emplace_back(col);
    if (!c.omit_timing) cols.emplace_back("build_ms");
    if (c.verify) cols.emplace_back("verified");
    for (std::size_t i = 0; i < cols.size(); ++i) text << (i ? "," : "") << cols[i];
    text << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const json& v = row.at(cols[i]);
        text << (i ? "," : "") << (v.is_string() ? v.get<std::string>() : v.dump());
      }
      text << '\n';
    }
  }
  if (c.out.empty() || c.out == "-") {
    out << text.str();
  } else {
    std::ofstream f(c.out);
    if (!f) throw GraphError(GraphError::Kind::Io, "cannot write " + c.out);
    f << text.str();
  }
  return kExitPass;
}

// ---- entry point -----------------------------------------------------------

/// Runs one command line (args excludes the program name). Returns the exit
/// code: 0 pass, 1 verification failure, 2 usage or runtime error.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adjacency oracles for sparse spanning subgraphs, connectivity certificates and spanners",
               "spor"};
  app.require_subcommand(1);
  const std::vector<std::string> algos = {"sss", "kcc", "spanner3", "spanner5", "bs"};

  GenConfig gen;
  auto* g = app.add_subcommand("gen", "Generate a graph instance");
  g->add_option("--kind", gen.kind, "Generator")
      ->required()
      ->check(CLI::IsMember({"complete", "path", "star", "tree", "gnp", "two-cliques", "union-gnp"}));
  g->add_option("--n", gen.n, "Node count (per part for union-gnp)")->required();
  g->add_option("--p", gen.p, "Edge probability (gnp, union-gnp)");
  g->add_option("--parts", gen.parts, "Number of parts (union-gnp)");
  g->add_option("--seed", gen.seed, "Seed (required for random kinds)");
  g->add_option("--out", gen.out, "Output file; stdout when omitted");
  g->add_option("--format", gen.format, "Graph format")->check(CLI::IsMember({"text", "binary"}));

  BuildConfig build;
  auto* b = app.add_subcommand("build", "Build an oracle and write stats JSON");
  b->add_option("--algo", build.algo, "Oracle")->required()->check(CLI::IsMember(algos));
  b->add_option("--graph", build.graph, "Graph file (text or binary)")->required();
  b->add_option("--seed", build.seed, "Seed")->required();
  add_param_flags(b, build.params);
  b->add_option("--stats", build.stats, "Stats JSON file; stdout when omitted");
  b->add_option("--enumerate", build.enumerate, "Write the YES-edge list to this file");
  b->add_flag("--omit-timing", build.omit_timing, "Leave wall times out of the stats");

  VerifyConfig verify;
  auto* v = app.add_subcommand("verify", "Check a YES-edge file against its guarantee");
  v->add_option("--algo", verify.algo, "Oracle the YES file came from")->required()->check(CLI::IsMember(algos));
  v->add_option("--graph", verify.graph, "Graph file")->required();
  v->add_option("--yes", verify.yes, "YES-edge file (text edge list)")->required();
  add_param_flags(v, verify.params);
  v->add_option("--report", verify.report, "Report JSON file; stdout when omitted");

  BenchConfig bench;
  auto* be = app.add_subcommand("bench", "Sweep a parameter grid");
  be->add_option("--algo", bench.algo, "Oracle")->required()->check(CLI::IsMember(algos));
  be->add_option("--kind", bench.kind, "Instance family")->check(CLI::IsMember({"gnp", "complete"}));
  be->add_option("--n", bench.sizes, "Comma-separated node counts")->required();
  be->add_option("--p", bench.densities, "Comma-separated edge probabilities (gnp)");
  be->add_option("--sweep", bench.sweep, "Parameter to sweep")
      ->check(CLI::IsMember({"epsilon", "c", "k", "r", "rho"}));
  be->add_option("--values", bench.values, "Comma-separated values for --sweep");
  be->add_option("--repeat", bench.repeat, "Seeds per cell");
  be->add_option("--seed", bench.seed, "Base seed")->required();
  add_param_flags(be, bench.params);
  be->add_option("--format", bench.format, "Table format")->check(CLI::IsMember({"csv", "json"}));
  be->add_option("--out", bench.out, "Output file; stdout when omitted");
  be->add_flag("--verify", bench.verify, "Verify every cell");
  be->add_flag("--omit-timing", bench.omit_timing, "Leave timing columns out");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (g->parsed()) return cmd_gen(gen, out, err);
    if (b->parsed()) return cmd_build(build, out);
    if (v->parsed()) return cmd_verify(verify, out);
    return cmd_bench(bench, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace spor::cli
