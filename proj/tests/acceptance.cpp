// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Pass a criterion number (or several) to run only those.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "permstat/asymptotics.hpp"
#include "permstat/exact_oracle.hpp"
#include "permstat/height_graph.hpp"
#include "permstat/inclusion_exclusion.hpp"
#include "permstat/montecarlo.hpp"
#include "permstat/sampler.hpp"
#include "permstat/statistics.hpp"
#include "permstat/timing.hpp"
#include "support/oracles.hpp"

using namespace permstat;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

unsigned workers() {
  return workers_from_environment(std::max(1u, std::thread::hardware_concurrency()));
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const auto k = xs.size() / 2;
  return xs.size() % 2 ? xs[k] : 0.5 * (xs[k - 1] + xs[k]);
}

Outcome anchor_example() {
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run({"stat", "--algo", "all", "--format", "json", "1 4 7 2 5 8 3 6 9"}, in, out, err);
  if (code != 0) return {false, "stat exited with " + std::to_string(code) + ": " + err.str()};
  const auto doc = nlohmann::json::parse(out.str());
  Outcome o;
  for (const auto& row : doc["results"]) {
    const auto d = row["d"].get<int>();
    const auto mj = row["mj"].get<int>();
    o.pass = o.pass && d == 4 && mj == 3;
    o.detail += row["algorithm"].get<std::string>() + ": d=" + std::to_string(d) + " mj=" + std::to_string(mj) + "; ";
  }
  return o;
}

Outcome predicted_row() {
  const auto counts = predicted_counts(10'000'000, LimitKind::breadth, 5);
  const long long want[] = {8646647, 1328565, 24726, 61};
  Outcome o;
  for (std::int64_t v = 2; v <= 5; ++v) {
    const auto got = std::llround(counts.at(v));
    o.pass = o.pass && got == want[v - 2];
    o.detail += std::to_string(got) + (v < 5 ? " " : "");
  }
  return o;
}

Outcome monte_carlo_reproduction() {
  TrialConfig config;
  config.n = 1000;
  config.trials = 1'000'000;
  config.seed = 20240229;
  config.workers = workers();
  const auto start = Clock::now();
  const auto report = run_trials(config);
  const double elapsed = seconds_since(start);
  const auto table = compare_with_prediction(report).breadth;
  Outcome o;
  double worst = 0;
  for (const auto& b : table.buckets) {
    if (b.expected < kNormalApproximationMinExpected) continue;
    worst = std::max(worst, std::fabs(b.z));
    o.detail += fmt("v=%lld obs=%llu exp=%.1f z=%+.2f; ", static_cast<long long>(b.value),
                    static_cast<unsigned long long>(b.observed), b.expected, b.z);
  }
  o.pass = worst <= 5.0 && elapsed < 120.0;
  o.detail += fmt("max|z|=%.2f, %.1fs with %u worker(s)", worst, elapsed, config.workers);
  return o;
}

Outcome limit_constants() {
  const double y1 = limit_moment(LimitKind::breadth, 1);
  const double z1 = limit_moment(LimitKind::minjump, 1);
  const double ey = std::fabs(y1 - 2.1378201816868795778);
  const double ez = std::fabs(z1 - 1.1565176427496656518);
  const double eg = std::fabs(z1 - 1.0 / (1.0 - std::exp(-2.0)));
  return {ey <= 1e-15 && ez <= 1e-15 && eg <= 1e-15,
          fmt("E[Y]=%.19g (err %.1e), E[Z]=%.19g (err %.1e, vs 1/(1-e^-2) %.1e)", y1, ey, z1, ez, eg)};
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  Outcome o;
  unsigned compared = 0;
  for (unsigned n = 2; n <= 9; ++n) {
    for (std::uint64_t d = 0; d <= 2; ++d) {
      const auto oracle = exact_Sm_table(n, d, IndicatorFamily::minjump);
      for (unsigned m = 0; m < n; ++m, ++compared) {
        if (Sm_formula(n, d, m) != oracle[m]) {
          o.pass = false;
          o.detail += fmt("mismatch n=%u d=%llu m=%u; ", n, static_cast<unsigned long long>(d), m);
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  o.pass = o.pass && elapsed < 300.0;
  o.detail += fmt("%u exact comparisons in %.2fs", compared, elapsed);
  return o;
}

Outcome pie_and_bonferroni() {
  Outcome o;
  unsigned cases = 0;
  for (unsigned n = 2; n <= 8; ++n) {
    for (std::uint64_t d = 0; d <= 2; ++d) {
      for (auto family : {IndicatorFamily::breadth, IndicatorFamily::minjump}) {
        const auto S = exact_Sm_table(n, d, family);
        const auto stat = family == IndicatorFamily::breadth ? Statistic::breadth() : Statistic::minjump();
        const auto exact = exact_prob_ge(n, stat, prolific_threshold(family, d));
        const auto partial = alternating_partial_sums(S);
        bool ok = partial.back() == exact;
        for (unsigned r = 0; r < n; ++r) ok = ok && (r % 2 ? partial[r] <= exact : partial[r] >= exact);
        ++cases;
        if (!ok) {
          o.pass = false;
          o.detail += fmt("fail n=%u d=%llu; ", n, static_cast<unsigned long long>(d));
        }
      }
    }
  }
  o.detail += fmt("%u (n, d, statistic) cases: identity exact, partial sums alternate", cases);
  return o;
}

Outcome graph_counting() {
  const auto start = Clock::now();
  Outcome o;
  unsigned graphs = 0, checks = 0;
  for (unsigned V = 1; V <= 6; ++V) {
    for (const auto& g : testing::nonisomorphic_graphs(V)) {
      ++graphs;
      for (std::uint64_t d = 1; d <= 2; ++d) {
        for (std::uint64_t n = 1; n <= 15; ++n) {
          ++checks;
          if (Z_star(g, n, d, ZStarMethod::pie) != Z_star(g, n, d, ZStarMethod::tuples)) {
            o.pass = false;
            o.detail += fmt("mismatch V=%u E=%zu n=%llu d=%llu; ", V, g.edges().size(),
                            static_cast<unsigned long long>(n), static_cast<unsigned long long>(d));
          }
        }
      }
    }
  }
  ColoredGraph edge(2);
  edge.add_edge(0, 1, EdgeColor::red);
  unsigned edge_checks = 0;
  for (std::uint64_t n = 1; n <= 100; ++n) {
    for (std::uint64_t d = 1; d <= 5; ++d) {
      // 2dn - d(d+1) is the count while every offset in K fits in [n], i.e. d <= n.
      if (d > n) continue;
      ++edge_checks;
      if (Z(edge, n, d) != 2 * d * n - d * (d + 1)) {
        o.pass = false;
        o.detail += fmt("single edge n=%llu d=%llu; ", static_cast<unsigned long long>(n),
                        static_cast<unsigned long long>(d));
      }
    }
  }
  o.detail += fmt("%u graphs x %u (n, d) pairs, pie = tuples; single edge %u cases; %.1fs", graphs,
                  checks / graphs, edge_checks, seconds_since(start));
  return o;
}

Outcome algorithm_agreement() {
  Outcome o;
  std::uint64_t exhaustive = 0;
  for (unsigned n = 2; n <= 7; ++n) {
    testing::for_each_permutation(n, [&](const std::vector<std::uint32_t>& v) {
      const auto naive = kernels::min_distance_naive(v);
      const auto banded = kernels::min_distance_banded(v, breadth_band_limit(n) + 1);
      const auto adaptive = kernels::min_distance_adaptive(v);
      ++exhaustive;
      if (naive != banded || naive != adaptive) o.pass = false;
    });
  }
  std::uint64_t sampled = 0;
  for (std::uint64_t n : {64u, 128u, 256u, 512u}) {
    SeededGenerator gen(8, n);
    std::vector<std::uint32_t> v(n);
    for (int k = 0; k < 10'000; ++k, ++sampled) {
      sample_permutation_into(v, gen);
      const auto naive = kernels::min_distance_naive(v);
      if (naive != kernels::min_distance_banded(v, breadth_band_limit(n) + 1) ||
          naive != kernels::min_distance_adaptive(v)) {
        o.pass = false;
      }
    }
  }
  o.detail = fmt("%llu exhaustive (n <= 7) and %llu seeded permutations", static_cast<unsigned long long>(exhaustive),
                 static_cast<unsigned long long>(sampled));
  return o;
}

// Median over seeds of each doubling ratio along n_list.
std::vector<double> median_ratios(DistanceAlgorithm algo, std::vector<std::uint64_t> n_list, unsigned seeds) {
  std::vector<std::vector<double>> per_step(n_list.size() - 1);
  for (unsigned s = 1; s <= seeds; ++s) {
    BenchConfig config;
    config.n_list = n_list;
    config.algorithms = {algo};
    config.seed = s;
    config.reps = 5;
    config.min_seconds_per_rep = 0.01;
    const auto rows = run_bench(config);
    for (std::size_t k = 1; k < rows.size(); ++k) per_step[k - 1].push_back(*rows[k].doubling_ratio);
  }
  std::vector<double> out;
  for (const auto& xs : per_step) out.push_back(median(xs));
  return out;
}

Outcome scaling() {
  Outcome o;
  const auto adaptive = median_ratios(DistanceAlgorithm::adaptive, {1 << 13, 1 << 14, 1 << 15, 1 << 16, 1 << 17}, 5);
  o.detail += "adaptive ratios";
  for (double r : adaptive) {
    o.pass = o.pass && r <= 2.5;
    o.detail += fmt(" %.2f", r);
  }
  const auto naive = median_ratios(DistanceAlgorithm::naive, {1 << 9, 1 << 10, 1 << 11}, 5);
  o.detail += "; naive ratios";
  for (double r : naive) {
    o.pass = o.pass && r >= 3.4;
    o.detail += fmt(" %.2f", r);
  }
  // Convergence trend of S_m m! / (2d)^m to 1 at d = 1: the error should
  // roughly halve each time n doubles.
  o.detail += "; S_m trend e(n)/e(2n)";
  for (unsigned m = 1; m <= 3; ++m) {
    double factorial = 1;
    for (unsigned k = 2; k <= m; ++k) factorial *= k;
    std::vector<double> err;
    for (unsigned n : {50u, 100u, 200u, 400u}) {
      err.push_back(std::fabs(to_double(Sm_formula(n, 1, m)) * factorial / std::pow(2.0, m) - 1.0));
    }
    o.detail += fmt(" m=%u:", m);
    for (std::size_t k = 1; k < err.size(); ++k) {
      const double ratio = err[k - 1] / err[k];
      o.pass = o.pass && ratio >= 1.6 && ratio <= 2.5;
      o.detail += fmt("%s%.2f", k > 1 ? "," : "", ratio);
    }
  }
  return o;
}

Outcome poisson_remark() {
  TrialConfig config;
  config.n = 400;
  config.trials = 100'000;
  config.seed = 6;
  config.workers = workers();
  config.d_probe = 2;
  const auto report = run_trials(config);
  const double mean = report.closepairs->mean;
  const double var = report.closepairs->variance;
  return {std::fabs(mean - 6.0) <= 0.6 && std::fabs(var - 6.0) <= 0.6,
          fmt("mean %.4f, variance %.4f, lambda 6", mean, var)};
}

Outcome exponential_polynomials() {
  Outcome o;
  double worst = 0;
  for (unsigned a = 0; a <= 6; ++a) {
    const auto b = exp_polynomial(a);
    for (double x : {-1.5, -0.3, 0.7, 1.0, 2.5}) {
      double term = 1.0;
      double sum = 0.0;
      for (unsigned m = 0; m <= 60; ++m) {
        if (m > 0) term *= x / m;
        sum += std::pow(static_cast<double>(m), a) * term;
      }
      worst = std::max(worst, std::fabs(b.evaluate(x) * std::exp(x) - sum));
    }
  }
  o.pass = worst <= 1e-9;
  o.detail = fmt("max abs difference %.2e over a <= 6, x in {-1.5, -0.3, 0.7, 1, 2.5}", worst);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"anchors: 1 4 7 2 5 8 3 6 9 has d = 4, mj = 3", anchor_example},
      {"predicted row for 10^7 trials", predicted_row},
      {"Monte Carlo n = 1000, 10^6 trials within 5 SE", monte_carlo_reproduction},
      {"limit constants E[Y], E[Z]", limit_constants},
      {"Sm_formula = exhaustive S_m, n <= 9, d <= 2", oracle_equivalence},
      {"inclusion-exclusion identity and Bonferroni parity", pie_and_bonferroni},
      {"Z* pie = tuples on all graphs <= 6 vertices; single-edge Z", graph_counting},
      {"naive = banded = adaptive", algorithm_agreement},
      {"scaling: doubling ratios and S_m convergence trend", scaling},
      {"close-pair starters at n = 400, d = 2: mean, variance ~ 6", poisson_remark},
      {"exponential polynomials b_a(x) e^x", exponential_polynomials},
  };
  std::vector<bool> selected(criteria.size(), argc == 1);
  for (int k = 1; k < argc; ++k) {
    const int c = std::atoi(argv[k]);
    if (c >= 1 && c <= static_cast<int>(criteria.size())) selected[c - 1] = true;
  }

  const auto start = Clock::now();
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (!selected[k]) continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2zu  %s  [%s]\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d failure(s), %.1fs total\n", failures, seconds_since(start));
  return failures == 0 ? 0 : 1;
}
