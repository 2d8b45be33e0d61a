// Command line front end. Exit codes: 0 success, 1 result invariant
// violation, 2 bad parameters, 3 input file problems.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypercore/generator.hpp"
#include "hypercore/kg_core.hpp"
#include "hypercore/kgp.hpp"
#include "hypercore/oracle.hpp"
#include "hypercore/report.hpp"

namespace {

using namespace hypercore;

double ms_between(std::chrono::steady_clock::time_point a,
                  std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("empty list: " + s);
  return out;
}

std::size_t intersecting_count(const Hypergraph& g, const NodeSet& nodes) {
  std::size_t n = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (NodeId v : g.edge_members(e)) {
      if (nodes.contains(v)) {
        ++n;
        break;
      }
    }
  }
  return n;
}

void print_sorted_labels(const Hypergraph& g, const NodeSet& nodes, std::ostream& out) {
  std::vector<std::string> labels;
  labels.reserve(nodes.size());
  for (NodeId v : nodes.to_sorted_vector()) labels.push_back(g.label(v));
  std::sort(labels.begin(), labels.end());
  for (const auto& l : labels) out << l << "\n";
}

std::string instance_text(const Hypergraph& g) {
  std::ostringstream out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& members = g.edge_members(e);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) out << ' ';
      out << g.label(members[i]);
    }
    out << '\n';
  }
  return out.str();
}

RunReport kg_only_report(const Hypergraph& g, std::int64_t k, std::int64_t gmin,
                         const KgResult& r, double ms) {
  RunReport rep;
  rep.algo = "kg";
  rep.k = k;
  rep.g = gmin;
  rep.input_nodes = g.node_count();
  rep.input_edges = g.edge_count();
  rep.result_nodes = r.alive.size();
  rep.result_edges = intersecting_count(g, r.alive);
  rep.gnbr_calls_kg = r.gnbr_calls;
  rep.wall_ms_kg = ms;
  rep.wall_ms_total = ms;
  return rep;
}

struct PeelRun {
  CoreResult core;
  RunReport report;
};

PeelRun run_peel(const Hypergraph& g, const std::string& algo, std::int64_t k, std::int64_t gmin,
                 const Threshold& p, const AsapOptions& opts) {
  if (algo == "npa") {
    PeelOutcome o = npa(g, k, gmin, p);
    return {std::move(o.core), std::move(o.report)};
  }
  PeelOutcome o = asap(g, k, gmin, p, opts);
  return {std::move(o.core), std::move(o.report)};
}

int run_core(const std::string& input, std::int64_t k, std::int64_t gmin,
             const std::string& p_text, const std::string& algo, bool want_report,
             bool no_timing, bool debug_sound, bool exact_seed) {
  if (algo == "kg" && !p_text.empty()) {
    throw std::invalid_argument("--algo kg takes no -p; pick npa or asap");
  }
  if (algo != "kg" && p_text.empty()) {
    throw std::invalid_argument("-p is required for --algo " + algo);
  }
  Hypergraph g = load_hypergraph_file(input).graph;

  if (algo == "kg") {
    auto t0 = std::chrono::steady_clock::now();
    KgResult r = kg_core(g, k, gmin);
    auto t1 = std::chrono::steady_clock::now();
    if (want_report) {
      std::cout << report_to_json(kg_only_report(g, k, gmin, r, ms_between(t0, t1)), !no_timing);
    } else {
      print_sorted_labels(g, r.alive, std::cout);
    }
    return 0;
  }

  Threshold p = Threshold::parse(p_text);
  PeelRun run = run_peel(g, algo, k, gmin, p, AsapOptions{debug_sound, exact_seed});
  if (want_report) {
    std::cout << report_to_json(run.report, !no_timing);
  } else {
    print_sorted_labels(g, run.core.nodes, std::cout);
  }
  return 0;
}

int run_sweep(const std::string& input, const std::string& vary, const std::string& values_csv,
              std::int64_t k, std::int64_t gmin, const std::string& p_text,
              const std::string& algos_csv) {
  Hypergraph g = load_hypergraph_file(input).graph;
  std::vector<std::string> values = split_csv(values_csv);
  std::vector<std::string> algos = split_csv(algos_csv);
  for (const auto& a : algos) {
    if (a != "kg" && a != "npa" && a != "asap") {
      throw std::invalid_argument("unknown algorithm: " + a);
    }
    if (a == "kg" && vary == "p") {
      throw std::invalid_argument("kg has no fraction threshold to sweep");
    }
  }

  std::vector<SweepRow> rows;
  for (const auto& algo : algos) {
    for (const auto& value : values) {
      std::int64_t kk = k, gg = gmin;
      std::string pp = p_text;
      if (vary == "k") {
        kk = std::stoll(value);
      } else if (vary == "g") {
        gg = std::stoll(value);
      } else {
        pp = value;
      }
      SweepRow row;
      row.algo = algo;
      row.varied = vary;
      row.value = value;
      if (algo == "kg") {
        auto t0 = std::chrono::steady_clock::now();
        KgResult r = kg_core(g, kk, gg);
        auto t1 = std::chrono::steady_clock::now();
        row.result_nodes = r.alive.size();
        row.result_edges = intersecting_count(g, r.alive);
        row.gnbr_calls = r.gnbr_calls;
        row.iterations = 0;
        row.wall_ms = ms_between(t0, t1);
      } else {
        if (pp.empty()) throw std::invalid_argument("-p is required when sweeping with " + algo);
        PeelRun run = run_peel(g, algo, kk, gg, Threshold::parse(pp), AsapOptions{});
        row.result_nodes = run.report.result_nodes;
        row.result_edges = run.report.result_edges;
        row.gnbr_calls = run.report.gnbr_calls_total();
        row.iterations = run.report.iterations;
        row.wall_ms = run.report.wall_ms_total;
      }
      rows.push_back(std::move(row));
    }
  }
  std::cout << sweep_csv(rows);
  return 0;
}

int run_gen(const GenConfig& config, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    write_hypergraph(config, std::cout);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  write_hypergraph(config, out);
  if (!out.good()) throw std::runtime_error("write failed: " + out_path);
  return 0;
}

int run_bench(const std::string& sizes_csv, const std::string& algos_csv, int repeats,
              std::int64_t k, std::int64_t gmin, const std::string& p_text, std::uint64_t seed) {
  std::vector<std::string> algos = split_csv(algos_csv);
  for (const auto& a : algos) {
    if (a != "npa" && a != "asap") {
      throw std::invalid_argument("bench compares the peeling algorithms: npa, asap");
    }
  }
  Threshold p = Threshold::parse(p_text);

  int rc = 0;
  std::vector<BenchRow> rows;
  for (const auto& size_text : split_csv(sizes_csv)) {
    std::size_t size = static_cast<std::size_t>(std::stoull(size_text));
    GenConfig cfg;
    cfg.node_count = size;
    cfg.edge_count = 2 * size;
    cfg.seed = seed + size;
    Hypergraph g = gen_hypergraph(cfg);

    std::optional<PeelRun> first_npa, first_asap;
    for (const auto& algo : algos) {
      std::vector<double> walls;
      std::optional<PeelRun> first;
      for (int r = 0; r < repeats; ++r) {
        PeelRun run = run_peel(g, algo, k, gmin, p, AsapOptions{});
        walls.push_back(run.report.wall_ms_total);
        if (!first) first = std::move(run);
      }
      std::sort(walls.begin(), walls.end());
      double median = walls.size() % 2 == 1
                          ? walls[walls.size() / 2]
                          : 0.5 * (walls[walls.size() / 2 - 1] + walls[walls.size() / 2]);
      BenchRow row;
      row.size = size;
      row.algo = algo;
      row.result_nodes = first->report.result_nodes;
      row.result_edges = first->report.result_edges;
      row.gnbr_calls = first->report.gnbr_calls_total();
      row.iterations = first->report.iterations;
      row.median_wall_ms = median;
      row.first3_removal_share = first3_removal_share(first->report);
      rows.push_back(std::move(row));
      if (algo == "npa") first_npa = std::move(first);
      if (algo == "asap") first_asap = std::move(first);
    }

    if (first_npa && first_asap) {
      bool same = first_npa->core.nodes == first_asap->core.nodes &&
                  first_npa->core.strong_edges == first_asap->core.strong_edges;
      if (!same) {
        std::string dump = "bench_failure_" + std::to_string(size) + ".hg";
        std::ofstream out(dump);
        write_hypergraph(cfg, out);
        std::cerr << "mismatch between npa and asap at size " << size << " (seed " << cfg.seed
                  << ", k=" << k << ", g=" << gmin << ", p=" << p.text()
                  << "); instance written to " << dump << "\n";
        rc = 1;
      }
      if (first_asap->report.gnbr_calls_total() > first_npa->report.gnbr_calls_total()) {
        std::cerr << "lazy bounds cost more neighbour computations than direct peeling at size "
                  << size << "\n";
        rc = 1;
      }
    }
  }
  std::cout << bench_csv(rows);
  return rc;
}

// Shared by verify --input and verify --random: full three-way agreement.
bool agrees(const Hypergraph& g, std::int64_t k, std::int64_t gmin, const Threshold& p) {
  OracleResult want = oracle_kgp(g, k, gmin, p);
  PeelOutcome direct = npa(g, k, gmin, p);
  PeelOutcome lazy = asap(g, k, gmin, p, AsapOptions{true, false});
  return direct.core.nodes == want.nodes && direct.core.strong_edges == want.strong_edges &&
         lazy.core.nodes == want.nodes && lazy.core.strong_edges == want.strong_edges;
}

int report_disagreement(const Hypergraph& g, std::int64_t k, std::int64_t gmin,
                        const Threshold& p) {
  Hypergraph small = minimize_counterexample(
      g, [&](const Hypergraph& h) { return !agrees(h, k, gmin, p); });
  std::cerr << "disagreement at k=" << k << " g=" << gmin << " p=" << p.text()
            << "; minimized instance:\n"
            << instance_text(small);
  return 1;
}

int run_verify_input(const std::string& input, std::int64_t k, std::int64_t gmin,
                     const std::string& p_text) {
  if (p_text.empty()) throw std::invalid_argument("-p is required with --input");
  Threshold p = Threshold::parse(p_text);
  Hypergraph g = load_hypergraph_file(input).graph;
  if (g.node_count() > 64) {
    throw std::invalid_argument("reference check handles at most 64 nodes");
  }
  if (!agrees(g, k, gmin, p)) return report_disagreement(g, k, gmin, p);
  std::cout << "ok\n";
  return 0;
}

int run_verify_random(std::uint64_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    GenConfig cfg;
    cfg.node_count = 5 + rng() % 26;
    cfg.edge_count = 3 + rng() % 38;
    cfg.cardinality_min = 2;
    cfg.cardinality_max = std::min<std::size_t>(2 + rng() % 5, cfg.node_count);
    cfg.skew = 0.7 * static_cast<double>(t % 3);
    cfg.seed = rng();
    Hypergraph g = gen_hypergraph(cfg);
    std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 4);
    std::int64_t gmin = 1 + static_cast<std::int64_t>(rng() % 3);
    Threshold p = Threshold::from_ratio(static_cast<std::int64_t>(rng() % 5), 4);
    if (!agrees(g, k, gmin, p)) return report_disagreement(g, k, gmin, p);
  }
  std::cout << "ok " << trials << " instances\n";
  return 0;
}

int run_verify_fixture() {
  auto checks = replay_fixture_proof();
  std::cout << format_proof_log(checks);
  for (const auto& c : checks) {
    if (!c.pass) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohesive subgraph toolkit for hypergraphs"};
  app.require_subcommand(1);

  // The stock positive-number check is double-typed and its error echoes
  // DBL_MIN/DBL_MAX, which is nonsense for count flags. Validate as integer
  // text instead.
  const CLI::Validator positive_int{
      [](std::string& s) {
        try {
          std::size_t used = 0;
          if (std::stoll(s, &used) >= 1 && used == s.size()) return std::string{};
        } catch (const std::exception&) {
        }
        return "expected a positive integer, got '" + s + "'";
      },
      "POSITIVE_INT", "positive_int"};

  // core
  auto* core = app.add_subcommand("core", "compute the cohesive node set of one instance");
  std::string core_input, core_p, core_algo = "asap";
  std::int64_t core_k = 0, core_g = 0;
  bool core_report = false, core_no_timing = false, core_debug_sound = false,
       core_exact_seed = false;
  core->add_option("-i,--input", core_input, "hypergraph file, one hyperedge per line")
      ->required();
  core->add_option("-k", core_k, "minimum number of supported neighbours")
      ->required()
      ->check(positive_int);
  core->add_option("-g", core_g, "minimum co-membership support per neighbour")
      ->required()
      ->check(positive_int);
  core->add_option("-p", core_p, "fraction threshold in [0,1], decimal or ratio");
  core->add_option("--algo", core_algo, "kg, npa or asap")
      ->check(CLI::IsMember({"kg", "npa", "asap"}));
  core->add_flag("--report", core_report, "print a JSON run report instead of node labels");
  core->add_flag("--no-timing", core_no_timing, "omit wall times from the report");
  core->add_flag("--debug-sound", core_debug_sound,
                 "cross-check every lower bound against an exact recount (asap only)");
  core->add_flag("--exact-seed", core_exact_seed,
                 "seed lazy tables with full histograms (asap only)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "rerun one instance over a parameter range, CSV out");
  std::string sweep_input, sweep_vary, sweep_values, sweep_p, sweep_algos = "npa,asap";
  std::int64_t sweep_k = 1, sweep_g = 1;
  sweep->add_option("-i,--input", sweep_input)->required();
  sweep->add_option("--vary", sweep_vary, "which parameter the values replace")
      ->required()
      ->check(CLI::IsMember({"k", "g", "p"}));
  sweep->add_option("--values", sweep_values, "comma separated parameter values")->required();
  sweep->add_option("-k", sweep_k, "fixed k when not varied")->check(positive_int);
  sweep->add_option("-g", sweep_g, "fixed g when not varied")->check(positive_int);
  sweep->add_option("-p", sweep_p, "fixed fraction threshold when not varied");
  sweep->add_option("--algos", sweep_algos, "comma separated subset of kg,npa,asap");

  // gen
  auto* gen = app.add_subcommand("gen", "emit a synthetic instance");
  GenConfig gen_cfg;
  std::string gen_out = "-";
  gen->add_option("-n,--nodes", gen_cfg.node_count);
  gen->add_option("-m,--edges", gen_cfg.edge_count);
  gen->add_option("--card-min", gen_cfg.cardinality_min);
  gen->add_option("--card-max", gen_cfg.cardinality_max);
  gen->add_option("--skew", gen_cfg.skew, "0 is uniform; larger favours low ids");
  auto* gen_seed_opt = gen->add_option("--seed", gen_cfg.seed);
  gen->add_option("-o,--out", gen_out, "output path, - for stdout");

  // bench
  auto* bench = app.add_subcommand("bench", "compare peeling algorithms on synthetic instances");
  std::string bench_sizes, bench_algos = "npa,asap", bench_p = "0.5";
  std::int64_t bench_k = 2, bench_g = 2;
  int bench_repeats = 3;
  std::uint64_t bench_seed = 42;
  bench->add_option("--sizes", bench_sizes, "comma separated node counts; edges are 2x")
      ->required();
  bench->add_option("--algos", bench_algos);
  bench->add_option("--repeats", bench_repeats)->check(positive_int);
  bench->add_option("-k", bench_k)->check(positive_int);
  bench->add_option("-g", bench_g)->check(positive_int);
  bench->add_option("-p", bench_p);
  bench->add_option("--seed", bench_seed);

  // verify
  auto* verify = app.add_subcommand("verify", "check the algorithms against the reference");
  bool verify_fixture = false;
  std::string verify_input, verify_p;
  std::int64_t verify_k = 1, verify_g = 1;
  std::uint64_t verify_random = 0, verify_seed = 42;
  verify->add_flag("--fixture", verify_fixture, "replay the built-in worked example");
  verify->add_option("-i,--input", verify_input, "check one instance (at most 64 nodes)");
  verify->add_option("-k", verify_k)->check(positive_int);
  verify->add_option("-g", verify_g)->check(positive_int);
  verify->add_option("-p", verify_p);
  verify->add_option("--random", verify_random, "check N random small instances");
  verify->add_option("--seed", verify_seed);

  int rc = 0;
  core->callback([&] {
    rc = run_core(core_input, core_k, core_g, core_p, core_algo, core_report, core_no_timing,
                  core_debug_sound, core_exact_seed);
  });
  sweep->callback(
      [&] { rc = run_sweep(sweep_input, sweep_vary, sweep_values, sweep_k, sweep_g, sweep_p,
                           sweep_algos); });
  gen->callback([&] {
    if (gen_seed_opt->count() == 0) {
      if (const char* env = std::getenv("HYPERCORE_SEED")) {
        gen_cfg.seed = std::stoull(env);
      }
    }
    rc = run_gen(gen_cfg, gen_out);
  });
  bench->callback([&] {
    rc = run_bench(bench_sizes, bench_algos, bench_repeats, bench_k, bench_g, bench_p,
                   bench_seed);
  });
  verify->callback([&] {
    int modes = (verify_fixture ? 1 : 0) + (verify_input.empty() ? 0 : 1) +
                (verify_random > 0 ? 1 : 0);
    if (modes != 1) {
      throw std::invalid_argument("pick exactly one of --fixture, --input, --random");
    }
    if (verify_fixture) {
      rc = run_verify_fixture();
    } else if (!verify_input.empty()) {
      rc = run_verify_input(verify_input, verify_k, verify_g, verify_p);
    } else {
      rc = run_verify_random(verify_random, verify_seed);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // Help and version are successes; anything else is a usage error.
    return code == 0 ? 0 : 2;
  } catch (const IngestError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
