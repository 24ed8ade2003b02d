// Command-line front end: csz, table, enumerate, verify, search, bounds, oeis.
//
// Exit codes: 0 all requested checks hold, 1 a check failed, 2 usage or input
// error, 3 network failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cszidx/cszidx.hpp"
#include "cszidx/oeis_http.hpp"
#include "cszidx/serialize.hpp"

namespace {

using namespace cszidx;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNetwork = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t default_threads() {
  return std::max(1U, std::thread::hardware_concurrency());
}

ProgressFn stderr_progress(bool quiet) {
  if (quiet) return {};
  return [](std::size_t done, std::size_t total) {
    std::cerr << "\rshards " << done << "/" << total << std::flush;
    if (done == total) std::cerr << '\n';
  };
}

void warn_if_over_cap(const SearchConfig& cfg) {
  if (cfg.cap_override && cfg.n > mode_cap(cfg.mode) && cfg.n <= kHardCap) {
    std::cerr << "warning: n=" << cfg.n << " is above the " << to_string(cfg.mode)
              << " cap of " << mode_cap(cfg.mode) << "; this may run for a long time\n";
  }
}

int run_csz(const std::string& path, const std::string& format) {
  const auto graphs = read_graph_file(path);
  if (format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& g : graphs) arr.push_back({{"graph6", to_graph6(g)}, {"csz", csz(g)}});
    std::cout << arr.dump() << '\n';
  } else {
    for (const auto& g : graphs) std::cout << csz(g) << '\n';
  }
  return kExitOk;
}

int run_table(std::size_t from, std::size_t to, const std::string& format) {
  if (from < 5 || to < from || to > kMaxOrder) {
    throw UsageError("table range must satisfy 5 <= from <= to <= " + std::to_string(kMaxOrder));
  }
  const auto rows = k_table(from, to);
  if (format == "csv") {
    std::cout << k_table_csv(rows);
  } else if (format == "json") {
    std::cout << to_json(rows).dump() << '\n';
  } else {
    for (const auto& r : rows) {
      std::cout << r.n << ' ' << r.best_k.front() << ' ' << r.best_value;
      if (r.tied()) std::cout << " tie:" << join_k(r.best_k, ';');
      std::cout << '\n';
    }
  }
  return kExitOk;
}

void print_report(const ExtremalReport& r, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(r).dump() << '\n';
    return;
  }
  std::cout << "n=" << r.n << " mode=" << to_string(r.mode) << " max_value=" << r.max_value
            << " scanned=" << r.graphs_scanned << '\n';
  std::cout << "witnesses:";
  for (const auto& w : r.witnesses) std::cout << ' ' << w;
  std::cout << "\nwitness_k: " << join_k(r.witness_k, ',')
            << " joins=" << (r.all_witnesses_are_joins ? "yes" : "no")
            << " prop1=" << r.prop1_holds << " prop2=" << r.prop2_holds
            << " prop3=" << r.prop3_holds << '\n';
}

int run_enumerate(const SearchConfig& cfg, std::size_t threads, const std::string& format,
                  const std::string& dump_path, bool quiet) {
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) throw UsageError("cannot write " + dump_path);
    const auto count = write_corpus(cfg.n, cfg.mode, out);
    if (!quiet) std::cerr << "wrote " << count << " graphs to " << dump_path << '\n';
  }
  const auto report = enumerate_extremal(cfg, threads, stderr_progress(quiet));
  print_report(report, format);
  return report.prop1_holds && report.prop2_holds && report.prop3_holds ? kExitOk
                                                                         : kExitCheckFailed;
}

int run_verify(const SearchConfig& cfg, std::size_t threads, const std::string& format,
               bool quiet) {
  const auto verdict = verify_conjecture(cfg, threads, stderr_progress(quiet));
  const auto& r = verdict.report;
  if (format == "json") {
    auto j = to_json(r);
    j["conjecture_holds"] = verdict.holds;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (verdict.holds ? "CONJECTURE HOLDS" : "CONJECTURE FAILS") << " n=" << r.n
              << " k=" << join_k(r.witness_k, ',') << '\n';
  }
  return verdict.holds ? kExitOk : kExitCheckFailed;
}

int run_search(const SearchConfig& cfg, const std::string& seed_path, const std::string& format) {
  std::optional<Graph> seed_graph;
  if (!seed_path.empty()) seed_graph = read_graph_file(seed_path).front();
  const auto result = local_search(cfg, seed_graph);
  const auto k = recognize_join(result.graph);
  const std::size_t n = result.graph.order();
  if (format == "json") {
    nlohmann::json j = {{"seed", cfg.seed},
                        {"restarts", cfg.restarts},
                        {"max_steps", cfg.max_steps},
                        {"n", n},
                        {"value", result.value},
                        {"graph6", to_graph6(result.graph)},
                        {"local_maximum", result.local_maximum},
                        {"join_k", k ? nlohmann::json(*k) : nlohmann::json(nullptr)}};
    if (n >= 5) j["optimal_k"] = optimal_k(n).best_k;
    auto trace = nlohmann::json::array();
    for (const auto& m : result.trace) trace.push_back(to_json(m));
    j["trace"] = std::move(trace);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "# seed=" << cfg.seed << " restarts=" << cfg.restarts
              << " max_steps=" << cfg.max_steps << '\n';
    for (const auto& m : result.trace) {
      std::cout << (m.added ? "add " : "remove ") << m.u << ' ' << m.v << ' ' << to_string(m.kind)
                << ' ' << m.delta << '\n';
    }
    std::cout << "value " << result.value << '\n';
    std::cout << "graph6 " << to_graph6(result.graph) << '\n';
    std::cout << "join_k " << (k ? std::to_string(*k) : std::string("none"));
    if (n >= 5) std::cout << " optimal_k " << join_k(optimal_k(n).best_k, ',');
    std::cout << '\n';
  }
  return kExitOk;
}

int run_bounds(std::size_t from, std::size_t to) {
  if (from < 4 || to < from || to > kMaxOrder) {
    throw UsageError("bounds range must satisfy 4 <= from <= to <= " + std::to_string(kMaxOrder));
  }
  std::size_t violations = 0;
  for (const auto& r : bound_sweep(from, to)) {
    std::cout << to_json(r).dump() << '\n';
    violations += (r.in_scope && !r.holds);
  }
  std::cerr << violations << " violation(s)\n";
  return violations == 0 ? kExitOk : kExitCheckFailed;
}

int run_oeis(std::vector<std::uint64_t> terms, const std::vector<std::size_t>& from_table,
             bool live, const std::string& fixture, bool prefix) {
  if (!from_table.empty()) {
    if (from_table.size() != 2) throw UsageError("--from-table takes two orders");
    terms.clear();
    for (const auto& row : k_table(from_table[0], from_table[1])) {
      terms.push_back(row.best_k.front());
    }
  }
  if (terms.empty()) throw UsageError("give sequence terms or --from-table");
  const oeis::SequenceQuery q{terms, prefix ? oeis::MatchMode::prefix : oeis::MatchMode::subsequence};
  std::cout << "sequence (" << terms.size() << " terms): " << oeis::join_terms(terms) << '\n';
  if (!live && fixture.empty()) {
    std::cout << "lookup skipped (pass --live or --fixture)\n";
    return kExitOk;
  }
  oeis::Client client = fixture.empty()
                            ? oeis::Client(oeis::http_transport(), oeis::endpoint_from_env(),
                                           oeis::kLiveInterval)
                            : oeis::Client(oeis::fixture_transport(fixture), "fixture");
  std::cout << "query " << client.url_for(q) << '\n';
  const auto matches = client.query(q);
  std::cout << "matches " << matches.size() << '\n';
  for (const auto& m : matches) std::cout << m.id << ' ' << m.name << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complementary second Zagreb index toolkit"};
  app.require_subcommand(1);

  std::string format = "plain";
  bool quiet = false;
  std::size_t threads = default_threads();
  SearchConfig cfg;
  std::string mode = "universal-vertex";

  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("-n,--n", cfg.n, "graph order")->required();
    sub->add_option("--mode", mode, "unrestricted | universal-vertex")
        ->check(CLI::IsMember({"unrestricted", "universal-vertex", "universal"}));
    sub->add_option("--shards", cfg.shard_count, "number of enumeration shards")
        ->check(CLI::Range(1, 4096));
    sub->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--cap-override", cfg.cap_override, "allow n above the mode cap");
    sub->add_flag("-q,--quiet", quiet, "no progress output");
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(choices));
  };

  auto* csz_cmd = app.add_subcommand("csz", "print cM2 of each graph in a file");
  std::string graph_path;
  csz_cmd->add_option("file", graph_path, "graph6 or edge-list file")->required();
  add_format(csz_cmd, {"plain", "json"});

  auto* table_cmd = app.add_subcommand("table", "optimal clique size k per order n");
  std::size_t n_from = 5;
  std::size_t n_to = 149;
  table_cmd->add_option("n_min", n_from, "smallest order");
  table_cmd->add_option("n_max", n_to, "largest order");
  add_format(table_cmd, {"plain", "csv", "json"});

  auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive extremal search");
  std::string dump_path;
  add_search_flags(enum_cmd);
  add_format(enum_cmd, {"plain", "json"});
  enum_cmd->add_option("--dump-corpus", dump_path, "write all scanned connected graphs (graph6)");

  auto* verify_cmd = app.add_subcommand("verify", "check extremal graphs against the join form");
  add_search_flags(verify_cmd);
  add_format(verify_cmd, {"plain", "json"});

  auto* search_cmd = app.add_subcommand("search", "hill climbing from seeded random graphs");
  std::string seed_path;
  search_cmd->add_option("-n,--n", cfg.n, "graph order");
  search_cmd->add_option("--seed", cfg.seed, "random seed");
  search_cmd->add_option("--restarts", cfg.restarts, "additional random restarts");
  search_cmd->add_option("--max-steps", cfg.max_steps, "step limit per run");
  search_cmd->add_option("--seed-graph", seed_path, "start the first run from this graph");
  add_format(search_cmd, {"plain", "json"});

  auto* bounds_cmd = app.add_subcommand("bounds", "sweep the order-indexed bound checks");
  std::size_t b_from = 4;
  std::size_t b_to = 1000;
  bounds_cmd->add_option("n_min", b_from, "smallest order");
  bounds_cmd->add_option("n_max", b_to, "largest order");

  auto* oeis_cmd = app.add_subcommand("oeis", "look up a sequence in the OEIS");
  std::vector<std::uint64_t> terms;
  std::vector<std::size_t> from_table;
  bool live = false;
  bool prefix = false;
  std::string fixture;
  oeis_cmd->add_option("terms", terms, "sequence terms");
  oeis_cmd->add_option("--from-table", from_table, "use k for n_min..n_max")->expected(2);
  oeis_cmd->add_flag("--live", live, "query the live service");
  oeis_cmd->add_option("--fixture", fixture, "answer from a saved response body");
  oeis_cmd->add_flag("--prefix", prefix, "only keep sequences starting with the terms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.mode = parse_search_mode(mode);
    if (*csz_cmd) return run_csz(graph_path, format);
    if (*table_cmd) return run_table(n_from, n_to, format);
    if (*enum_cmd || *verify_cmd) warn_if_over_cap(cfg);
    if (*enum_cmd) return run_enumerate(cfg, threads, format, dump_path, quiet);
    if (*verify_cmd) return run_verify(cfg, threads, format, quiet);
    if (*search_cmd) {
      if (cfg.n == 0 && seed_path.empty()) throw UsageError("search needs --n or --seed-graph");
      return run_search(cfg, seed_path, format);
    }
    if (*bounds_cmd) return run_bounds(b_from, b_to);
    if (*oeis_cmd) return run_oeis(terms, from_table, live, fixture, prefix);
  } catch (const oeis::NetworkError& e) {
    std::cerr << "network error: " << e.what() << '\n';
    return kExitNetwork;
  } catch (const oeis::ResponseParseError& e) {
    std::cerr << "bad response: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
