// ulamcodes: command-line front end for the ulam library.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ulam/ball_lis.hpp"
#include "ulam/code_search.hpp"
#include "ulam/errors.hpp"
#include "ulam/ilp.hpp"
#include "ulam/permutation.hpp"
#include "ulam/report.hpp"

#ifndef ULAM_VERSION
#define ULAM_VERSION "0.0.0"
#endif

namespace {

using Json = nlohmann::ordered_json;
using namespace ulam;

enum ExitCode { ok = 0, usage = 1, capacity = 2, invariant = 3 };

struct RunConfig {
  std::string command;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  bool seed_given = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  double max_seconds = 0.0;
  std::uint64_t max_nodes = 0;
  std::string format = "text";
  std::string out;
  bool strict = false;
  bool randomized = false;

  Budget budget() const { return {max_nodes, max_seconds}; }
};

/// A finished command: machine-readable result plus its text and CSV renderings.
struct Output {
  bool bounded = false;
  Json result = Json::object();
  std::string text;
  std::string csv;
  double elapsed = 0.0;
};

Json header_json(const RunConfig &cfg) {
  Json h;
  h["tool"] = "ulamcodes";
  h["version"] = ULAM_VERSION;
  h["command"] = cfg.command;
  h["seed"] = cfg.randomized ? Json(cfg.seed) : Json(nullptr);
  h["samples"] = cfg.randomized ? Json(cfg.samples) : Json(nullptr);
  h["budget"] = {{"max_seconds", cfg.max_seconds}, {"max_nodes", cfg.max_nodes}};
  h["threads"] = cfg.threads;
  return h;
}

std::string header_lines(const RunConfig &cfg, const char *comment = "#") {
  std::ostringstream s;
  s << comment << " ulamcodes " << ULAM_VERSION << " " << cfg.command << "\n" << comment << " seed "
    << (cfg.randomized ? std::to_string(cfg.seed) : std::string("-")) << ", max_seconds " << cfg.max_seconds
    << ", max_nodes " << cfg.max_nodes << ", threads " << cfg.threads << "\n";
  return s.str();
}

std::string render(const RunConfig &cfg, const Output &o) {
  if (cfg.format == "json") {
    Json j;
    j["header"] = header_json(cfg);
    j["status"] = o.bounded ? "bounded" : "ok";
    j["result"] = o.result;
    j["elapsed_seconds"] = o.elapsed;
    return j.dump(2) + "\n";
  }
  const std::string status = std::string("# status ") + (o.bounded ? "bounded" : "ok") + "\n";
  if (cfg.format == "csv")
    return header_lines(cfg) + status + o.csv;
  return header_lines(cfg) + status + o.text;
}

void emit(const RunConfig &cfg, const std::string &text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f)
    throw std::invalid_argument("cannot open output file " + cfg.out);
  f << text;
}

std::string read_file(const std::string &path) {
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw std::invalid_argument("cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::pair<unsigned, unsigned> parse_range(const std::string &text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const unsigned v = static_cast<unsigned>(std::stoul(text, &used));
      if (used != text.size())
        throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const unsigned a = static_cast<unsigned>(std::stoul(lo, &used));
    if (used != lo.size())
      throw std::invalid_argument(text);
    const unsigned b = static_cast<unsigned>(std::stoul(hi, &used));
    if (used != hi.size() || b < a)
      throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error &) {
    throw std::invalid_argument("expected N or LO..HI, got '" + text + "'");
  }
}

Json words_json(const std::vector<Permutation> &words) {
  Json a = Json::array();
  for (const auto &w : words)
    a.push_back(Json(std::vector<Symbol>(w.entries().begin(), w.entries().end())));
  return a;
}

// ---- subcommands ----

Output run_distance(const std::vector<std::string> &perms, const std::string &file) {
  std::vector<Permutation> ps;
  if (!file.empty()) {
    std::istringstream in(read_file(file));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#')
        continue;
      ps.push_back(parse_permutation(line, lineno));
    }
  } else {
    for (std::size_t i = 0; i < perms.size(); ++i)
      ps.push_back(parse_permutation(perms[i], i + 1));
  }
  if (ps.size() != 2)
    throw std::invalid_argument("distance needs exactly two permutations");
  if (ps[0].size() != ps[1].size())
    throw DimensionError("permutations have lengths " + std::to_string(ps[0].size()) + " and " +
                         std::to_string(ps[1].size()));
  Output o;
  const auto lcs = lcs_length(ps[0], ps[1]);
  const auto dist = ulam_distance(ps[0], ps[1]);
  o.result = {{"n", ps[0].size()}, {"lcs", lcs}, {"distance", dist}};
  o.text = "n " + std::to_string(ps[0].size()) + "\nlcs " + std::to_string(lcs) + "\ndistance " +
           std::to_string(dist) + "\n";
  o.csv = "n,lcs,distance\n" + std::to_string(ps[0].size()) + "," + std::to_string(lcs) + "," +
          std::to_string(dist) + "\n";
  return o;
}

Output run_bounds(const RunConfig &cfg, unsigned n, unsigned d, bool with_ip, bool with_sphere) {
  BoundOptions opts;
  opts.with_ip = with_ip;
  opts.with_sphere = with_sphere;
  opts.ip_budget = cfg.budget();
  const BoundReport r = bound_report(CodeParams(n, d), opts);
  Output o;
  o.bounded = r.ip_status && *r.ip_status == IlpStatus::bound_only;
  o.result = to_json(r);
  o.text = to_text(r);
  const auto opt = [](const std::optional<BigInt> &x) { return x ? to_string(*x) : std::string(); };
  o.csv = "n,d,singleton_upper,gv_lower,ip_upper,sphere_lower,sphere_upper,best_lower,best_upper\n" +
          std::to_string(n) + "," + std::to_string(d) + "," + to_string(r.singleton_upper) + "," +
          to_string(r.gv_lower) + "," + opt(r.ip_upper) + "," + opt(r.sphere_lower) + "," + opt(r.sphere_upper) +
          "," + to_string(r.best_lower) + "," + to_string(r.best_upper) + "\n";
  return o;
}

std::string code_text(const Code &code) {
  std::ostringstream s;
  write_code(s, code.params, code.words);
  return s.str();
}

Output run_search(const RunConfig &cfg, unsigned n, unsigned d, bool singleton_only, bool no_fix,
                  const std::string &code_out) {
  const CodeParams params(n, d);
  Output o;
  std::optional<Code> code;
  if (singleton_only) {
    const auto r = find_singleton_optimal(params, cfg.budget());
    o.bounded = r.verdict == SingletonVerdict::unknown;
    o.result = {{"params", {{"n", n}, {"d", d}}},
                {"singleton_upper", json_integer(singleton_upper(params))},
                {"verdict", to_string(r.verdict)},
                {"nodes_explored", r.nodes_explored}};
    o.text = "singleton_optimal " + std::string(to_string(r.verdict)) + "\nnodes " +
             std::to_string(r.nodes_explored) + "\n";
    o.csv = "n,d,singleton_optimal,nodes\n" + std::to_string(n) + "," + std::to_string(d) + "," +
            to_string(r.verdict) + "," + std::to_string(r.nodes_explored) + "\n";
    o.elapsed = r.elapsed_seconds;
    code = r.code;
    if (code)
      o.result["code"] = words_json(code->words);
  } else {
    SearchOptions opts;
    opts.fix_identity = !no_fix;
    const auto r = max_code_search(params, cfg.budget(), opts);
    o.bounded = r.optimality == Optimality::lower_bound_only;
    o.result = {{"params", {{"n", n}, {"d", d}}},
                {"size", r.code.size()},
                {"min_distance", r.code.min_distance},
                {"optimality", to_string(r.optimality)},
                {"upper_bound_used", json_integer(r.upper_bound_used)},
                {"nodes_explored", r.nodes_explored},
                {"code", words_json(r.code.words)}};
    o.text = "size " + std::to_string(r.code.size()) + "\noptimality " + to_string(r.optimality) +
             "\nupper_bound_used " + to_string(r.upper_bound_used) + "\nnodes " +
             std::to_string(r.nodes_explored) + "\n" + code_text(r.code);
    o.csv = "n,d,size,optimality,upper_bound_used,nodes\n" + std::to_string(n) + "," + std::to_string(d) + "," +
            std::to_string(r.code.size()) + "," + to_string(r.optimality) + "," + to_string(r.upper_bound_used) +
            "," + std::to_string(r.nodes_explored) + "\n";
    o.elapsed = r.elapsed_seconds;
    code = r.code;
  }
  if (!code_out.empty() && code) {
    std::ofstream f(code_out);
    if (!f)
      throw std::invalid_argument("cannot open " + code_out);
    write_code(f, code->params, code->words);
  }
  return o;
}

Output run_verify(const std::string &path) {
  std::istringstream in(read_file(path));
  CodeFile file = read_code(in);
  const Code code = verify_code(std::move(file.words), file.params);
  Output o;
  o.result = {{"params", {{"n", code.params.n()}, {"d", code.params.d()}}},
              {"size", code.size()},
              {"min_distance", code.min_distance},
              {"valid", true}};
  o.text = "valid\nsize " + std::to_string(code.size()) + "\nmin_distance " + std::to_string(code.min_distance) + "\n";
  o.csv = "n,d,size,min_distance,valid\n" + std::to_string(code.params.n()) + "," + std::to_string(code.params.d()) +
          "," + std::to_string(code.size()) + "," + std::to_string(code.min_distance) + ",true\n";
  return o;
}

Output run_tables(const RunConfig &cfg, const std::string &n_range, const std::string &d_range, bool long_run,
                  bool no_ip) {
  TableOptions opts;
  std::tie(opts.n_min, opts.n_max) = parse_range(n_range);
  if (!d_range.empty())
    std::tie(opts.d_min, opts.d_max) = parse_range(d_range);
  opts.long_run = long_run;
  opts.with_ip = !no_ip;
  if (cfg.max_seconds > 0.0 || cfg.max_nodes > 0) {
    opts.cell_budget = cfg.budget();
    opts.bounded_budget = cfg.budget();
  }
  const TableReport report = reproduce_tables(opts);
  Output o;
  Json cells = Json::array();
  for (const auto &c : report.cells) {
    const char *status = c.status == TableCell::Status::proven        ? "proven"
                         : c.status == TableCell::Status::lower_bound ? "bounded"
                                                                      : "skipped";
    o.bounded = o.bounded || c.status != TableCell::Status::proven;
    cells.push_back({{"n", c.n},
                     {"d", c.d},
                     {"status", status},
                     {"value", json_integer(c.value)},
                     {"upper_bound", json_integer(c.upper_bound)},
                     {"cell", format_size_cell(c)},
                     {"singleton_optimal", format_verdict_cell(c)},
                     {"method", c.method},
                     {"nodes", c.nodes}});
  }
  o.result = {{"cells", cells}};
  o.text = table_text(report);
  o.csv = table_csv(report);
  return o;
}

Output run_ball(unsigned n, const std::string &cache_dir, unsigned threads) {
  const EnumerationOptions eo{kDefaultEnumerationLimit, threads};
  const LisDistribution dist = cache_dir.empty() ? lis_distribution_exact(n, eo) : DistributionCache(cache_dir).exact(n, eo);
  const BallTable t = ball_table(dist);
  Output o;
  Json sizes = Json::array();
  o.csv = "r,ball_size\n";
  for (unsigned r = 0; r < t.sizes.size(); ++r) {
    sizes.push_back({{"r", r}, {"size", t.sizes[r]}});
    o.text += std::to_string(r) + " " + std::to_string(t.sizes[r]) + "\n";
    o.csv += std::to_string(r) + "," + std::to_string(t.sizes[r]) + "\n";
  }
  o.result = {{"n", n}, {"balls", sizes}};
  return o;
}

Output run_lisdist(const RunConfig &cfg, unsigned n, bool sampled, const std::string &cache_dir) {
  LisDistribution dist;
  if (sampled)
    dist = lis_distribution_sampled(n, cfg.samples, cfg.seed, cfg.threads);
  else if (!cache_dir.empty())
    dist = DistributionCache(cache_dir).exact(n, {kDefaultEnumerationLimit, cfg.threads});
  else
    dist = lis_distribution_exact(n, {kDefaultEnumerationLimit, cfg.threads});
  Output o;
  Json counts = Json::array();
  o.csv = "k,count\n";
  for (unsigned k = 1; k <= n; ++k) {
    counts.push_back({{"k", k}, {"count", dist.counts[k]}});
    o.text += std::to_string(k) + " " + std::to_string(dist.counts[k]) + "\n";
    o.csv += std::to_string(k) + "," + std::to_string(dist.counts[k]) + "\n";
  }
  o.result = {{"n", n}, {"kind", sampled ? "sampled" : "exact"}, {"total", dist.total}, {"counts", counts}};
  return o;
}

Output run_mc(const RunConfig &cfg, unsigned n, unsigned k) {
  const McEstimate e = lis_prob_mc(n, k, cfg.samples, cfg.seed, cfg.threads);
  Output o;
  o.result = {{"n", n},
              {"k", k},
              {"samples", e.samples},
              {"hits", e.hits},
              {"estimate", e.estimate},
              {"standard_error", e.standard_error}};
  char buf[128];
  std::snprintf(buf, sizeof buf, "estimate %.10g\nstandard_error %.10g\n", e.estimate, e.standard_error);
  o.text = "hits " + std::to_string(e.hits) + "\nsamples " + std::to_string(e.samples) + "\n" + buf;
  std::snprintf(buf, sizeof buf, "%u,%u,%llu,%llu,%.17g,%.17g\n", n, k, static_cast<unsigned long long>(e.samples),
                static_cast<unsigned long long>(e.hits), e.estimate, e.standard_error);
  o.csv = std::string("n,k,samples,hits,estimate,standard_error\n") + buf;
  return o;
}

Output run_clt(const RunConfig &cfg, unsigned n) {
  const auto values = clt_samples(n, cfg.samples, cfg.seed, cfg.threads);
  Output o;
  double mean = 0.0;
  for (double v : values)
    mean += v;
  mean /= static_cast<double>(values.size());
  o.result = {{"n", n}, {"samples", values.size()}, {"mean", mean}, {"values", values}};
  char buf[64];
  o.csv = "value\n";
  for (double v : values) {
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    o.text += buf;
    o.csv += buf;
  }
  return o;
}

Output run_export_lp(unsigned n, unsigned d) {
  Output o;
  o.text = export_lp(build_model(CodeParams(n, d)));
  o.csv = o.text;
  o.result = {{"params", {{"n", n}, {"d", d}}}, {"lp", o.text}};
  return o;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Permutation codes under the Ulam metric: distances, bounds and exact searches."};
  app.set_version_flag("--version", ULAM_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--samples", cfg.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
  auto *seed_opt = app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-seconds", cfg.max_seconds, "wall-clock budget, 0 = unlimited")->check(CLI::NonNegativeNumber);
  app.add_option("--max-nodes", cfg.max_nodes, "search-node budget, 0 = unlimited");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out, "write output to this file");
  app.add_flag("--strict", cfg.strict, "randomized commands require an explicit --seed");

  unsigned n = 0, d = 0, k = 0;
  std::string file, n_range, d_range, cache_dir, code_out;
  std::vector<std::string> perms;
  bool with_ip = false, with_sphere = false, singleton = false, no_fix = false, long_run = false, no_ip = false,
       sampled = false;

  auto *distance = app.add_subcommand("distance", "Ulam distance and LCS of two permutations");
  distance->add_option("perms", perms, "two permutations, e.g. \"1 2 3\" \"3 2 1\"");
  distance->add_option("--file", file, "file with one permutation per line");

  auto *bounds = app.add_subcommand("bounds", "analytic and integer-program bounds on A(n,d)");
  bounds->add_option("--n", n)->required();
  bounds->add_option("--d", d)->required();
  bounds->add_flag("--with-ip", with_ip, "solve the integer program");
  bounds->add_flag("--with-sphere", with_sphere, "sphere-packing bounds from exact ball sizes");

  auto *search = app.add_subcommand("search", "largest code by branch and bound");
  search->add_option("--n", n)->required();
  search->add_option("--d", d)->required();
  search->add_flag("--singleton", singleton, "only decide whether a Singleton-optimal code exists");
  search->add_flag("--no-fix-identity", no_fix, "do not fix the identity as a codeword");
  search->add_option("--code-out", code_out, "write the code found to this file");

  auto *verify = app.add_subcommand("verify", "check a code file");
  verify->add_option("code", file, "code file: \"n d\" then one permutation per line")->required();

  auto *tables = app.add_subcommand("tables", "reproduce the A(n,d) and Singleton-optimality tables");
  tables->add_option("--n", n_range, "N or LO..HI")->default_val("4..6");
  tables->add_option("--d", d_range, "D or LO..HI (default: every valid d)");
  tables->add_flag("--long-run", long_run, "full budgets for every cell");
  tables->add_flag("--no-ip", no_ip, "skip the integer-program bound");

  auto *ball = app.add_subcommand("ball", "Ulam ball sizes |B(r)| for every radius");
  ball->add_option("--n", n)->required();
  ball->add_option("--cache-dir", cache_dir, "directory for cached distributions");

  auto *lisdist = app.add_subcommand("lisdist", "distribution of the LIS length over S_n");
  lisdist->add_option("--n", n)->required();
  lisdist->add_flag("--sampled", sampled, "estimate from --samples uniform permutations");
  lisdist->add_option("--cache-dir", cache_dir, "directory for cached distributions");

  auto *mc = app.add_subcommand("mc", "Monte Carlo estimate of P(L_n >= k)");
  mc->add_option("--n", n)->required();
  mc->add_option("--k", k)->required();

  auto *clt = app.add_subcommand("clt", "samples of (L_n - 2 sqrt(n)) / n^(1/6)");
  clt->add_option("--n", n)->required();

  auto *export_lp_cmd = app.add_subcommand("export-lp", "write the integer program in LP format");
  export_lp_cmd->add_option("--n", n)->required();
  export_lp_cmd->add_option("--d", d)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.seed_given = seed_opt->count() > 0;
  cfg.randomized = cfg.command == "mc" || cfg.command == "clt" || (cfg.command == "lisdist" && sampled);
  if (cfg.strict && cfg.randomized && !cfg.seed_given) {
    std::cerr << "error: --strict requires an explicit --seed for " << cfg.command << "\n";
    return ExitCode::usage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Output o;
    if (cfg.command == "distance")
      o = run_distance(perms, file);
    else if (cfg.command == "bounds")
      o = run_bounds(cfg, n, d, with_ip, with_sphere);
    else if (cfg.command == "search")
      o = run_search(cfg, n, d, singleton, no_fix, code_out);
    else if (cfg.command == "verify")
      o = run_verify(file);
    else if (cfg.command == "tables")
      o = run_tables(cfg, n_range, d_range, long_run, no_ip);
    else if (cfg.command == "ball")
      o = run_ball(n, cache_dir, cfg.threads);
    else if (cfg.command == "lisdist")
      o = run_lisdist(cfg, n, sampled, cache_dir);
    else if (cfg.command == "mc")
      o = run_mc(cfg, n, k);
    else if (cfg.command == "clt")
      o = run_clt(cfg, n);
    else
      o = run_export_lp(n, d);
    o.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cfg.command == "export-lp" && cfg.format == "text")
      emit(cfg, header_lines(cfg, "\\") + o.text); // LP comments start with a backslash
    else
      emit(cfg, render(cfg, o));
    return ExitCode::ok;
  } catch (const CapacityError &e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return ExitCode::capacity;
  } catch (const CodeViolation &e) {
    std::cerr << "invalid code: " << e.what() << "\n";
    return ExitCode::invariant;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const std::logic_error &e) {
    // invalid_argument, domain_error and out_of_range are all logic_errors; treat them as bad input.
    if (dynamic_cast<const std::invalid_argument *>(&e) || dynamic_cast<const std::domain_error *>(&e) ||
        dynamic_cast<const std::out_of_range *>(&e)) {
      std::cerr << "error: " << e.what() << "\n";
      return ExitCode::usage;
    }
    std::cerr << "internal error: " << e.what() << "\n";
    return ExitCode::invariant;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return ExitCode::invariant;
  }
}
