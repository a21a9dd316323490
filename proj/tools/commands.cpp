#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "output.hpp"
#include "permstat/asymptotics.hpp"
#include "permstat/error.hpp"
#include "permstat/exact_oracle.hpp"
#include "permstat/height_graph.hpp"
#include "permstat/inclusion_exclusion.hpp"
#include "permstat/montecarlo.hpp"
#include "permstat/permutation.hpp"
#include "permstat/sampler.hpp"
#include "permstat/statistics.hpp"
#include "permstat/timing.hpp"

namespace permstat::cli {
namespace {

using Clock = std::chrono::steady_clock;

void emit(std::ostream& out, OutputFormat format, const Table& table, const Json& doc) {
  switch (format) {
    case OutputFormat::csv:
      write_csv(out, table);
      break;
    case OutputFormat::json:
      write_json(out, doc);
      break;
    case OutputFormat::plain:
      write_plain(out, table);
      break;
  }
}

Json table_records(const Table& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json record = Json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) record[table.columns[c]] = row[c];
    rows.push_back(std::move(record));
  }
  return rows;
}

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_all(in);
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  return read_all(file);
}

unsigned resolve_threads(unsigned flag) { return flag > 0 ? flag : workers_from_environment(1); }

Json generator_json(const GeneratorMetadata& g) {
  return Json{{"algorithm", g.algorithm_id}, {"seed", std::to_string(g.seed)}, {"streams", g.streams}};
}

// ---- stat ------------------------------------------------------------------

struct StatOptions {
  std::string format = "plain";
  std::string algo = "adaptive";
  std::string input;
  std::vector<std::string> words;
  std::optional<std::uint64_t> d;
};

std::uint64_t run_algorithm(DistanceAlgorithm algo, const Permutation& p) {
  switch (algo) {
    case DistanceAlgorithm::naive:
      return min_distance_naive(p);
    case DistanceAlgorithm::banded:
      return min_distance_banded(p, breadth_band_limit(p.size()) + 1);
    case DistanceAlgorithm::adaptive:
      return min_distance_adaptive(p);
  }
  throw InternalError("unhandled algorithm");
}

void cmd_stat(const StatOptions& opt, std::istream& in, std::ostream& out) {
  std::vector<std::string> lines;
  if (!opt.words.empty()) {
    std::string joined;
    for (const auto& w : opt.words) joined += (joined.empty() ? "" : " ") + w;
    lines.push_back(joined);
  } else {
    std::istringstream text(read_input(opt.input, in));
    for (std::string line; std::getline(text, line);) lines.push_back(line);
  }

  std::vector<DistanceAlgorithm> algos;
  if (opt.algo == "all") {
    algos = {DistanceAlgorithm::naive, DistanceAlgorithm::banded, DistanceAlgorithm::adaptive};
  } else {
    algos = {parse_algorithm(opt.algo)};
  }

  Table table;
  table.columns = {"index", "n", "algorithm", "d", "mj"};
  if (opt.d) table.columns.insert(table.columns.end(), {"close_pairs", "starters"});
  table.columns.push_back("seconds");

  std::size_t index = 0;
  for (std::size_t l = 0; l < lines.size(); ++l) {
    if (lines[l].find_first_not_of(" \t\r,") == std::string::npos) continue;
    std::optional<Permutation> perm;
    try {
      perm = parse_permutation(lines[l]);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(l + 1) + ": " + e.what(), e.position());
    }
    if (perm->size() < 2) throw DomainError("line " + std::to_string(l + 1) + ": need n >= 2");
    ++index;
    const auto mj = min_jump(*perm);
    std::optional<std::uint64_t> agreed;
    for (auto algo : algos) {
      const auto start = Clock::now();
      const auto d = run_algorithm(algo, *perm);
      const std::chrono::duration<double> elapsed = Clock::now() - start;
      if (agreed && *agreed != d) {
        throw InternalError("algorithms disagree on line " + std::to_string(l + 1) + ": " + std::to_string(*agreed) +
                            " vs " + std::to_string(d) + " (" + std::string(algorithm_name(algo)) + ")");
      }
      agreed = d;
      std::vector<Json> row{index, perm->size(), std::string(algorithm_name(algo)), d, mj};
      if (opt.d) {
        const auto report = close_pairs(*perm, *opt.d);
        row.insert(row.end(), {report.pairs.size(), report.starter_count()});
      }
      row.push_back(elapsed.count());
      table.add(std::move(row));
    }
  }
  if (index == 0) throw ParseError("no permutation given");

  Json doc{{"results", table_records(table)}};
  if (opt.d) doc["close_pair_threshold"] = *opt.d;
  emit(out, parse_format(opt.format), table, doc);
}

// ---- sample ----------------------------------------------------------------

struct SampleOptions {
  std::string format = "plain";
  std::uint64_t n = 10;
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;
  std::uint64_t count = 1;
};

void cmd_sample(const SampleOptions& opt, std::ostream& out) {
  SeededGenerator gen(opt.seed, opt.stream);
  Table table;
  table.columns = {"index", "permutation"};
  Json perms = Json::array();
  for (std::uint64_t k = 0; k < opt.count; ++k) {
    const auto p = sample_permutation(opt.n, gen);
    table.add({k + 1, p.to_string()});
    perms.push_back(std::vector<std::uint32_t>(p.values().begin(), p.values().end()));
  }
  const auto format = parse_format(opt.format);
  if (format == OutputFormat::plain) {
    // Bare one-line notation, one per line, so the output feeds `stat`.
    for (const auto& row : table.rows) out << cell_text(row[1]) << '\n';
    return;
  }
  Json doc{{"n", opt.n},
           {"generator", generator_json({std::string(SeededGenerator::kAlgorithmId), opt.seed, 1})},
           {"stream", std::to_string(opt.stream)},
           {"permutations", perms}};
  emit(out, format, table, doc);
}

// ---- trials ----------------------------------------------------------------

struct TrialsOptions {
  std::string format = "plain";
  std::uint64_t n = 1000;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::optional<std::uint64_t> d;
  std::string engine = "adaptive";
  std::string statistic = "breadth";
  std::optional<std::uint64_t> budget;
};

Json comparison_json(const ComparisonTable& t) {
  Json buckets = Json::array();
  for (const auto& b : t.buckets) {
    buckets.push_back({{"value", b.value},
                       {"observed", b.observed},
                       {"expected", b.expected},
                       {"probability", b.probability},
                       {"z", b.z},
                       {"exact_binomial", b.exact_binomial},
                       {"tail_probability", b.tail_probability}});
  }
  return Json{{"buckets", buckets}, {"max_abs_z", t.max_abs_z}};
}

void cmd_trials(const TrialsOptions& opt, std::ostream& out) {
  TrialConfig config;
  config.n = opt.n;
  config.trials = opt.trials;
  config.seed = opt.seed;
  config.workers = resolve_threads(opt.threads);
  config.d_probe = opt.d;
  if (opt.engine == "naive") {
    config.engine = DistanceEngine::naive;
  } else if (opt.engine != "adaptive") {
    throw ParseError("unknown engine '" + opt.engine + "' (expected adaptive or naive)");
  }
  if (opt.budget) config.budget = *opt.budget;
  if (opt.statistic != "breadth" && opt.statistic != "minjump") {
    throw ParseError("unknown statistic '" + opt.statistic + "' (expected breadth or minjump)");
  }

  const auto report = run_trials(config);
  const auto cmp = compare_with_prediction(report);
  const auto& chosen = opt.statistic == "breadth" ? cmp.breadth : cmp.minjump;

  Table table;
  table.columns = {"n", "value", "observed", "expected", "z"};
  for (const auto& b : chosen.buckets) table.add({opt.n, b.value, b.observed, b.expected, b.z});

  Json closepairs = nullptr;
  if (report.closepairs) {
    Json hist = Json::object();
    for (const auto& [v, c] : report.closepairs->histogram) hist[std::to_string(v)] = c;
    closepairs = {{"d", report.closepairs->d},
                  {"lambda", lambda(report.closepairs->d)},
                  {"mean", report.closepairs->mean},
                  {"variance", report.closepairs->variance},
                  {"histogram", hist}};
  }
  Json doc{{"config",
            {{"n", config.n},
             {"trials", config.trials},
             {"seed", std::to_string(config.seed)},
             {"workers", config.workers},
             {"d_probe", config.d_probe ? Json(*config.d_probe) : Json(nullptr)},
             {"engine", opt.engine},
             {"block_size", config.block_size}}},
           {"generator", generator_json(report.generator)},
           {"breadth", comparison_json(cmp.breadth)},
           {"minjump", comparison_json(cmp.minjump)},
           {"closepairs", closepairs},
           {"timings",
            {{"sampling_seconds", report.timings.sampling_seconds},
             {"breadth_seconds", report.timings.breadth_seconds},
             {"minjump_seconds", report.timings.minjump_seconds},
             {"closepair_seconds", report.timings.closepair_seconds},
             {"wall_seconds", report.timings.wall_seconds}}}};
  const auto format = parse_format(opt.format);
  emit(out, format, table, doc);
  if (format == OutputFormat::plain) {
    out << "max |z| = " << chosen.max_abs_z << '\n';
    if (report.closepairs) {
      out << "close-pair starters at d = " << report.closepairs->d << ": mean " << report.closepairs->mean
          << ", variance " << report.closepairs->variance << ", lambda " << lambda(report.closepairs->d) << '\n';
    }
  }
}

// ---- enumerate -------------------------------------------------------------

struct EnumerateOptions {
  std::string format = "plain";
  unsigned n = 8;
  std::string statistic = "breadth";
  unsigned max_exact_n = OracleLimits::kDefaultCap;
  unsigned threads = 0;
};

void cmd_enumerate(const EnumerateOptions& opt, std::ostream& out) {
  OracleLimits limits;
  limits.max_n = opt.max_exact_n;
  limits.threads = resolve_threads(opt.threads);
  const auto dist = enumerate_distribution(opt.n, Statistic::parse(opt.statistic), limits);

  Table table;
  table.columns = {"value", "count", "probability"};
  Json counts = Json::object();
  for (const auto& [v, c] : dist.counts) {
    table.add({v, to_string(c), to_string(dist.probability(v))});
    counts[std::to_string(v)] = to_string(c);
  }
  Json doc{{"n", dist.n}, {"statistic", dist.statistic_name}, {"counts", counts}, {"total", to_string(dist.total)}};
  emit(out, parse_format(opt.format), table, doc);
}

// ---- predict ---------------------------------------------------------------

struct PredictOptions {
  std::string format = "plain";
  std::string statistic = "breadth";
  std::uint64_t trials = 10'000'000;
  std::optional<std::int64_t> max_value;
  unsigned order = 2;
};

LimitKind parse_limit_kind(const std::string& name) {
  if (name == "breadth") return LimitKind::breadth;
  if (name == "minjump") return LimitKind::minjump;
  throw ParseError("unknown statistic '" + name + "' (expected breadth or minjump)");
}

void cmd_predict(const PredictOptions& opt, std::ostream& out) {
  const auto kind = parse_limit_kind(opt.statistic);
  const std::int64_t top = opt.max_value.value_or(limit_floor(kind) + 3);
  const auto expected = predicted_counts(opt.trials, kind, top);

  Table table;
  table.columns = {"quantity", "argument", "value"};
  Json rows = Json::array();
  for (const auto& [v, e] : expected) {
    const double tail = limit_tail(kind, v);
    const double pmf = limit_pmf(kind, v);
    table.add({"tail", v, tail});
    table.add({"pmf", v, pmf});
    table.add({"expected", v, e});
    rows.push_back({{"value", v}, {"tail", tail}, {"pmf", pmf}, {"expected", e}});
  }
  Json moments = Json::array();
  for (unsigned a = 1; a <= opt.order; ++a) {
    const double m = limit_moment(kind, a);
    table.add({"moment", a, m});
    moments.push_back({{"order", a}, {"value", m}});
  }
  Json doc{{"statistic", opt.statistic}, {"trials", std::to_string(opt.trials)}, {"rows", rows}, {"moments", moments}};
  emit(out, parse_format(opt.format), table, doc);
}

// ---- sm --------------------------------------------------------------------

struct SmOptions {
  std::string format = "plain";
  unsigned n = 8;
  std::uint64_t d = 1;
  std::optional<unsigned> m;
  std::string statistic = "minjump";
  unsigned max_exact_n = OracleLimits::kDefaultCap;
  unsigned threads = 0;
};

void cmd_sm(const SmOptions& opt, std::ostream& out) {
  if (opt.n < 2) throw DomainError("sm requires n >= 2");
  const auto family = indicator_family(Statistic::parse(opt.statistic).kind);
  const unsigned top = std::min(opt.m.value_or(std::min(opt.n - 1, 4u)), opt.n - 1);
  OracleLimits limits;
  limits.max_n = opt.max_exact_n;
  limits.threads = resolve_threads(opt.threads);
  const bool exhaustive = opt.n <= opt.max_exact_n;

  std::vector<ExactRational> formula;
  if (family == IndicatorFamily::minjump) {
    for (unsigned m = 0; m <= top; ++m) formula.push_back(Sm_formula(opt.n, opt.d, m));
  }
  std::vector<ExactRational> exact;
  std::optional<ExactRational> prob;
  if (exhaustive) {
    exact = exact_Sm_table(opt.n, opt.d, family, limits);
    const auto stat = family == IndicatorFamily::breadth ? Statistic::breadth() : Statistic::minjump();
    prob = exact_prob_ge(opt.n, stat, prolific_threshold(family, opt.d), limits);
  } else if (family == IndicatorFamily::breadth) {
    throw BudgetExceeded("breadth S_m needs exhaustive enumeration; n = " + std::to_string(opt.n) +
                         " exceeds --max-exact-n " + std::to_string(opt.max_exact_n));
  }
  const auto& S = formula.empty() ? exact : formula;

  Table table;
  table.columns = {"m", "S_m_formula", "S_m_exact", "reference", "bracket_lower", "bracket_upper", "probability"};
  double reference = 1.0;  // (2d)^m / m!
  for (unsigned m = 0; m <= top; ++m) {
    if (m > 0) reference *= 2.0 * static_cast<double>(opt.d) / m;
    const auto bracket = bonferroni_bracket_from(std::vector<ExactRational>(S.begin(), S.begin() + m + 1), m);
    table.add({formula.empty() ? Json(nullptr) : Json(to_string(formula[m])),
               exact.empty() ? Json(nullptr) : Json(to_string(exact[m])), reference, to_string(bracket.lower),
               to_string(bracket.upper), prob ? Json(to_string(*prob)) : Json(nullptr)});
    table.rows.back().insert(table.rows.back().begin(), m);
  }
  Json doc{{"n", opt.n},
           {"d", opt.d},
           {"statistic", opt.statistic},
           {"probability", prob ? Json(to_string(*prob)) : Json(nullptr)},
           {"rows", table_records(table)}};
  emit(out, parse_format(opt.format), table, doc);
}

// ---- zstar -----------------------------------------------------------------

struct ZStarOptions {
  std::string format = "plain";
  std::string input;
  std::uint64_t n = 10;
  std::uint64_t d = 1;
  unsigned vertices = 0;
  std::string method = "automatic";
  std::optional<std::uint64_t> budget;
};

// Lines "u v red" or "u v blue"; '#' starts a comment. Vertices are numbered
// from 0 and the graph has max(index) + 1 vertices unless more are requested.
ColoredGraph parse_edge_list(const std::string& text, unsigned min_vertices) {
  struct Parsed {
    unsigned u, v;
    EdgeColor color;
  };
  std::vector<Parsed> edges;
  unsigned vertices = min_vertices;
  std::istringstream lines(text);
  std::size_t line_no = 0;
  for (std::string line; std::getline(lines, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b, colour, extra;
    if (!(fields >> a)) continue;
    const auto where = "edge list line " + std::to_string(line_no);
    if (!(fields >> b >> colour) || (fields >> extra)) throw ParseError(where + ": expected 'u v red|blue'");
    Parsed e{};
    try {
      std::size_t used_a = 0, used_b = 0;
      const auto ua = std::stoul(a, &used_a);
      const auto ub = std::stoul(b, &used_b);
      if (used_a != a.size() || used_b != b.size() || ua > 1'000'000 || ub > 1'000'000) throw std::invalid_argument("");
      e.u = static_cast<unsigned>(ua);
      e.v = static_cast<unsigned>(ub);
    } catch (const std::logic_error&) {
      throw ParseError(where + ": vertex ids must be non-negative integers");
    }
    if (colour == "red") {
      e.color = EdgeColor::red;
    } else if (colour == "blue") {
      e.color = EdgeColor::blue;
    } else {
      throw ParseError(where + ": colour must be red or blue, got '" + colour + "'");
    }
    vertices = std::max({vertices, e.u + 1, e.v + 1});
    edges.push_back(e);
  }
  ColoredGraph g(vertices);
  for (const auto& e : edges) g.add_edge(e.u, e.v, e.color);
  return g;
}

void cmd_zstar(const ZStarOptions& opt, std::istream& in, std::ostream& out) {
  const auto graph = parse_edge_list(read_input(opt.input, in), opt.vertices);
  ZStarMethod method = ZStarMethod::automatic;
  if (opt.method == "tuples") {
    method = ZStarMethod::tuples;
  } else if (opt.method == "pie") {
    method = ZStarMethod::pie;
  } else if (opt.method != "automatic") {
    throw ParseError("unknown method '" + opt.method + "' (expected automatic, tuples or pie)");
  }
  CountingBudget budget;
  if (opt.budget) budget.max_tuples = *opt.budget;

  const auto z = Z(graph, opt.n, opt.d, budget);
  std::optional<BigInt> zstar;
  if (graph.all_red()) zstar = Z_star(graph, opt.n, opt.d, method, budget);

  Table table;
  table.columns = {"vertices", "edges", "red_edges", "n", "d", "Z", "Z_star"};
  table.add({graph.vertex_count(), graph.edges().size(), graph.red_edge_count(), opt.n, opt.d, to_string(z),
             zstar ? Json(to_string(*zstar)) : Json(nullptr)});
  Json doc = table_records(table).at(0);
  doc["method"] = opt.method;
  emit(out, parse_format(opt.format), table, doc);
}

// ---- bench -----------------------------------------------------------------

struct BenchOptions {
  std::string format = "plain";
  std::vector<std::uint64_t> n_list{1024, 2048, 4096};
  std::vector<std::string> algos{"adaptive"};
  std::uint64_t seed = 1;
  unsigned reps = 5;
  double min_seconds = 0.002;
  std::optional<std::uint64_t> budget;
};

void cmd_bench(const BenchOptions& opt, std::ostream& out) {
  BenchConfig config;
  config.n_list = opt.n_list;
  config.algorithms.clear();
  for (const auto& name : opt.algos) {
    if (name == "all") {
      config.algorithms = {DistanceAlgorithm::naive, DistanceAlgorithm::banded, DistanceAlgorithm::adaptive};
      break;
    }
    config.algorithms.push_back(parse_algorithm(name));
  }
  config.seed = opt.seed;
  config.reps = opt.reps;
  config.min_seconds_per_rep = opt.min_seconds;
  if (opt.budget) config.budget = *opt.budget;
  const auto rows = run_bench(config);

  Table table;
  table.columns = {"algorithm", "n", "median_seconds", "doubling_ratio"};
  for (const auto& r : rows) {
    table.add({std::string(algorithm_name(r.algorithm)), r.n, r.median_seconds,
               r.doubling_ratio ? Json(*r.doubling_ratio) : Json(nullptr)});
  }
  Json doc{{"seed", std::to_string(opt.seed)}, {"reps", opt.reps}, {"rows", table_records(table)}};
  emit(out, parse_format(opt.format), table, doc);
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "plain"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum distance and minimum jump statistics of permutations", "permstat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "permstat 0.1.0");

  StatOptions stat;
  auto* stat_cmd = app.add_subcommand("stat", "d(pi) and mj(pi) of permutations given inline, by file or on stdin");
  add_format(stat_cmd, stat.format);
  stat_cmd->add_option("permutation", stat.words, "One-line notation, e.g. 1 4 7 2 5 8 3 6 9");
  stat_cmd->add_option("--input,-i", stat.input, "File with one permutation per line ('-' for stdin)");
  stat_cmd->add_option("--algo", stat.algo, "naive, banded, adaptive or all")
      ->check(CLI::IsMember({"naive", "banded", "adaptive", "all"}));
  stat_cmd->add_option("--d", stat.d, "Also report close pairs at this threshold");

  SampleOptions sample;
  auto* sample_cmd = app.add_subcommand("sample", "Seeded uniform random permutations");
  add_format(sample_cmd, sample.format);
  sample_cmd->add_option("--n", sample.n)->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", sample.seed);
  sample_cmd->add_option("--stream", sample.stream);
  sample_cmd->add_option("--count", sample.count);

  TrialsOptions trials;
  auto* trials_cmd = app.add_subcommand("trials", "Monte Carlo histograms compared with the limit laws");
  add_format(trials_cmd, trials.format);
  trials_cmd->add_option("--n", trials.n);
  trials_cmd->add_option("--trials", trials.trials);
  trials_cmd->add_option("--seed", trials.seed);
  trials_cmd->add_option("--threads", trials.threads, "Workers (default: PERMSTAT_THREADS or 1)");
  trials_cmd->add_option("--d", trials.d, "Record close-pair starters at this threshold");
  trials_cmd->add_option("--engine", trials.engine, "adaptive or naive");
  trials_cmd->add_option("--statistic", trials.statistic, "Table shown in csv/plain: breadth or minjump");
  trials_cmd->add_option("--budget", trials.budget, "Upper limit on n * trials");

  EnumerateOptions enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Exact distribution over all of S_n");
  add_format(enumerate_cmd, enumerate.format);
  enumerate_cmd->add_option("--n", enumerate.n);
  enumerate_cmd->add_option("--statistic", enumerate.statistic, "breadth, minjump or closepairs@D");
  enumerate_cmd->add_option("--max-exact-n", enumerate.max_exact_n);
  enumerate_cmd->add_option("--threads", enumerate.threads);

  PredictOptions predict;
  auto* predict_cmd = app.add_subcommand("predict", "Limit-law tails, pmf, expected counts and moments");
  add_format(predict_cmd, predict.format);
  predict_cmd->add_option("--statistic", predict.statistic, "breadth or minjump");
  predict_cmd->add_option("--trials", predict.trials);
  predict_cmd->add_option("--max-value", predict.max_value);
  predict_cmd->add_option("--order", predict.order, "Highest moment order");

  SmOptions sm;
  auto* sm_cmd = app.add_subcommand("sm", "Binomial moments S_m with Bonferroni brackets");
  add_format(sm_cmd, sm.format);
  sm_cmd->add_option("--n", sm.n);
  sm_cmd->add_option("--d", sm.d);
  sm_cmd->add_option("--m", sm.m, "Largest m (default min(n - 1, 4))");
  sm_cmd->add_option("--statistic", sm.statistic, "minjump or breadth");
  sm_cmd->add_option("--max-exact-n", sm.max_exact_n);
  sm_cmd->add_option("--threads", sm.threads);

  ZStarOptions zstar;
  auto* zstar_cmd = app.add_subcommand("zstar", "Z and Z* of an edge list 'u v red|blue'");
  add_format(zstar_cmd, zstar.format);
  zstar_cmd->add_option("--input,-i", zstar.input, "Edge list file ('-' or omitted for stdin)");
  zstar_cmd->add_option("--n", zstar.n);
  zstar_cmd->add_option("--d", zstar.d);
  zstar_cmd->add_option("--vertices", zstar.vertices, "Minimum vertex count");
  zstar_cmd->add_option("--method", zstar.method, "automatic, tuples or pie");
  zstar_cmd->add_option("--budget", zstar.budget, "Tuple enumeration budget");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Median timings and doubling ratios");
  add_format(bench_cmd, bench.format);
  bench_cmd->add_option("--n-list", bench.n_list)->delimiter(',');
  bench_cmd->add_option("--algo", bench.algos, "naive, banded, adaptive or all")->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--reps", bench.reps)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--min-seconds", bench.min_seconds);
  bench_cmd->add_option("--budget", bench.budget);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (stat_cmd->parsed()) cmd_stat(stat, in, out);
    if (sample_cmd->parsed()) cmd_sample(sample, out);
    if (trials_cmd->parsed()) cmd_trials(trials, out);
    if (enumerate_cmd->parsed()) cmd_enumerate(enumerate, out);
    if (predict_cmd->parsed()) cmd_predict(predict, out);
    if (sm_cmd->parsed()) cmd_sm(sm, out);
    if (zstar_cmd->parsed()) cmd_zstar(zstar, in, out);
    if (bench_cmd->parsed()) cmd_bench(bench, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what();
    if (e.position() != std::string::npos) err << " (at offset " << e.position() << ")";
    err << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace permstat::cli
