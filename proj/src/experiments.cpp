#include "avgcase/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <map>
#include <numeric>
#include <stdexcept>

#include "avgcase/binpack.hpp"
#include "avgcase/geometry.hpp"
#include "avgcase/graphs.hpp"
#include "avgcase/hashing.hpp"
#include "avgcase/parallel.hpp"
#include "avgcase/sorting.hpp"
#include "avgcase/stopping.hpp"
#include "avgcase/tsp.hpp"

namespace avgcase {

namespace {

const std::vector<ExperimentSpec>& catalog() {
  static const std::vector<ExperimentSpec> specs = {
      {"prophet",
       "exact optimal, median-threshold and prophet values on random discrete instances (one row per instance)",
       {{"stages", "4", "number of stages per instance"},
        {"support-size", "3", "maximum support points per stage distribution"}}},
      {"quicksort",
       "mean first-pivot QuickSort comparisons over random permutations against the exact formula",
       {{"n", "100", "array length, or a comma-separated list"}}},
      {"probing",
       "linear-probing insertion cost at each load factor against 1/(1-alpha)",
       {{"capacity", "65536", "table capacity"}, {"alphas", "0.5,0.75,0.9", "comma-separated load factors"}}},
      {"binpack",
       "FFD and truncate-and-match bin counts on uniform [0,1] items (one row per trial)",
       {{"n", "1000", "number of items"}, {"algo", "both", "ffd, tm or both"}}},
      {"hull",
       "mean convex hull size of uniform points in the unit square",
       {{"n", "100,1000,10000", "point count, or a comma-separated list"}}},
      {"tsp",
       "Stitch tour length over sqrt(n) and grid occupancy (one row per trial)",
       {{"n", "1024", "point count, or a comma-separated list"},
        {"oracle", "false", "also compute the exact Held-Karp tour (n <= 14)"}}},
      {"graphs.er-bisection",
       "extreme sampled bisection cuts of G(n,p) relative to p n^2/4",
       {{"n", "200", "vertex count (even)"},
        {"p", "0.5", "edge probability"},
        {"samples", "10000", "random bisections sampled per graph"},
        {"dump", "", "write the first trial's graph as an edge list"}}},
      {"graphs.planted-clique",
       "top-k-degree recovery of a planted clique in G(n,1/2)",
       {{"n", "1000", "vertex count"},
        {"k", "0", "clique size; 0 means ceil(3 sqrt(n ln n))"},
        {"dump", "", "write the first trial's graph as an edge list"}}},
      {"graphs.planted-bisection",
       "common-neighbour recovery of a planted bisection",
       {{"n", "500", "vertex count (even)"},
        {"p", "0.5", "same-side edge probability"},
        {"q", "0.25", "cross edge probability"},
        {"dump", "", "write the first trial's graph as an edge list"}}},
      {"graphs.greedy-clique",
       "random-order greedy clique size in G(n,p) against log2 n",
       {{"n", "10000", "vertex count"},
        {"p", "0.5", "edge probability"},
        {"dump", "", "write the first trial's graph as an edge list"}}},
  };
  return specs;
}

class Params {
 public:
  Params(const ExperimentSpec& spec, const ExperimentConfig& config) {
    for (const ParamSpec& p : spec.params) values_[std::string(p.name)] = std::string(p.default_value);
    for (const auto& [key, value] : config.params) {
      auto it = values_.find(key);
      if (it == values_.end())
        throw std::invalid_argument("unknown parameter --" + key + " for experiment " + std::string(spec.name));
      it->second = value;
    }
  }

  // Set when only the parameter values are being validated.
  bool check_only() const { return check_only_; }
  void set_check_only() { check_only_ = true; }

  const std::string& text(const std::string& name) const { return values_.at(name); }

  std::size_t size(const std::string& name, std::size_t min_value = 0) const {
    return parse_size(name, text(name), min_value);
  }

  std::vector<std::size_t> sizes(const std::string& name, std::size_t min_value = 0) const {
    std::vector<std::size_t> out;
    for (const std::string& item : split(name)) out.push_back(parse_size(name, item, min_value));
    return out;
  }

  double real(const std::string& name, double lo, double hi) const { return parse_real(name, text(name), lo, hi); }

  std::vector<double> reals(const std::string& name, double lo, double hi) const {
    std::vector<double> out;
    for (const std::string& item : split(name)) out.push_back(parse_real(name, item, lo, hi));
    return out;
  }

  bool flag(const std::string& name) const {
    const std::string& v = text(name);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument("invalid value for --" + name + ": '" + v + "' (expected true or false)");
  }

 private:
  std::vector<std::string> split(const std::string& name) const {
    std::vector<std::string> items;
    const std::string& v = text(name);
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = v.find(',', start);
      items.push_back(v.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return items;
  }

  static std::size_t parse_size(const std::string& name, const std::string& v, std::size_t min_value) {
    std::size_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty() || out < min_value)
      throw std::invalid_argument("invalid value for --" + name + ": '" + v + "' (expected an integer >= " +
                                  std::to_string(min_value) + ")");
    return out;
  }

  static double parse_real(const std::string& name, const std::string& v, double lo, double hi) {
    std::size_t used = 0;
    double out = 0.0;
    try {
      out = std::stod(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != v.size() || !(out >= lo && out <= hi))
      throw std::invalid_argument("invalid value for --" + name + ": '" + v + "' (expected a number in [" +
                                  format_real(lo) + ", " + format_real(hi) + "])");
    return out;
  }

  std::map<std::string, std::string> values_;
  bool check_only_ = false;
};

ExperimentRecord base_record(const ExperimentConfig& config) {
  ExperimentRecord r;
  r.experiment = config.name;
  r.seed = config.seed;
  return r;
}

double mean_of(std::span<const double> values) {
  return values.empty() ? 0.0 : std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

void maybe_dump(const Params& params, const Graph& g) {
  const std::string& path = params.text("dump");
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  write_edge_list(g, out);
  if (!out) throw std::ios_base::failure("failed writing " + path);
}

constexpr double kExactSlack = 1e-12;

ExperimentOutcome run_prophet(const ExperimentConfig& config, const Params& params) {
  const std::size_t stages = params.size("stages", 1);
  const std::size_t support = params.size("support-size", 1);
  if (params.check_only()) return {};
  ExperimentOutcome out;
  out.records.resize(config.trials);
  std::vector<std::string> problems(config.trials);
  parallel_for(config.trials, [&](std::size_t t) {
    Rng rng(config.seed, trial_stream(0, t));
    const StoppingInstance inst = random_stopping_instance(stages, support, rng);
    const OptimalStopping optimal = backward_induction_policy(inst);
    const ThresholdRule rule = median_threshold(inst);
    const double threshold_value = threshold_rule_value(inst, rule);
    const double prophet = expected_max(inst);
    const double ratio = prophet > 0.0 ? threshold_value / prophet : 1.0;
    ExperimentRecord& r = out.records[t] = base_record(config);
    r.param("instance", std::to_string(t)).param("stages", std::to_string(stages));
    r.stat("optimal_value", optimal.value)
        .stat("threshold_value", threshold_value)
        .stat("expected_max", prophet)
        .stat("ratio", ratio)
        .stat("threshold", rule.threshold)
        .stat("strict_accept", rule.mode == AcceptMode::strictly_greater ? 1.0 : 0.0);
    if (threshold_value < 0.5 * prophet - kExactSlack)
      problems[t] = "instance " + std::to_string(t) + ": threshold value below half of E[max]";
    else if (optimal.value < threshold_value - kExactSlack || optimal.value > prophet + kExactSlack)
      problems[t] = "instance " + std::to_string(t) + ": optimal value outside [threshold value, E[max]]";
  });
  for (auto& p : problems)
    if (!p.empty()) out.violations.push_back(std::move(p));
  return out;
}

ExperimentOutcome run_quicksort(const ExperimentConfig& config, const Params& params) {
  ExperimentOutcome out;
  const std::vector<std::size_t> ns = params.sizes("n");
  if (params.check_only()) return {};
  for (std::size_t idx = 0; idx < ns.size(); ++idx) {
    const std::size_t n = ns[idx];
    std::vector<double> counts(config.trials);
    std::vector<char> sorted_ok(config.trials, 1);
    parallel_for(config.trials, [&](std::size_t t) {
      Rng rng(config.seed, trial_stream(idx, t));
      std::vector<std::int64_t> arr(n);
      for (std::size_t i = 0; i < n; ++i) arr[i] = static_cast<std::int64_t>(i + 1);
      shuffle(std::span<std::int64_t>(arr), rng);
      const SortTrace trace = quicksort_first_pivot(arr);
      counts[t] = static_cast<double>(trace.comparisons);
      sorted_ok[t] = std::is_sorted(trace.sorted.begin(), trace.sorted.end());
    });
    const double mean = mean_of(counts);
    const double exact = expected_comparisons_exact(n);
    ExperimentRecord r = base_record(config);
    r.param("n", std::to_string(n)).param("trials", std::to_string(config.trials));
    r.stat("trial_mean", mean)
        .stat("exact_formula", exact)
        .stat("relative_error", exact > 0.0 ? std::abs(mean - exact) / exact : std::abs(mean));
    out.records.push_back(std::move(r));
    if (std::find(sorted_ok.begin(), sorted_ok.end(), 0) != sorted_ok.end())
      out.violations.push_back("n=" + std::to_string(n) + ": quicksort output not sorted");
  }
  return out;
}

ExperimentOutcome run_probing(const ExperimentConfig& config, const Params& params) {
  const std::size_t capacity = params.size("capacity", 2);
  std::vector<double> alphas = params.reals("alphas", 0.0, 1.0);
  for (double a : alphas)
    if (a >= 1.0) throw std::invalid_argument("invalid value for --alphas: load factors must be below 1");
  std::vector<std::size_t> order(alphas.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return alphas[a] < alphas[b]; });
  if (params.check_only()) return {};

  // insert_cost[t][i], fill_cost[t][i]: per trial, per requested alpha.
  std::vector<std::vector<double>> insert_cost(config.trials, std::vector<double>(alphas.size()));
  std::vector<std::vector<double>> fill_cost(config.trials, std::vector<double>(alphas.size()));
  parallel_for(config.trials, [&](std::size_t t) {
    Rng rng(config.seed, trial_stream(0, t));
    ProbeTable table(capacity);
    std::uint64_t key = 0;
    for (std::size_t i : order) {
      const auto target = static_cast<std::size_t>(std::floor(alphas[i] * static_cast<double>(capacity)));
      while (table.size() < target)
        table.insert(key++, static_cast<std::size_t>(rng.uniform_index(capacity)));
      insert_cost[t][i] = table.expected_insertion_probes();
      const auto log = table.probe_log();
      fill_cost[t][i] = log.empty() ? 0.0
                                    : static_cast<double>(std::accumulate(log.begin(), log.end(), std::size_t{0})) /
                                          static_cast<double>(log.size());
    }
  });

  ExperimentOutcome out;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const double reference = geometric_reference(alphas[i]);
    double insert_sum = 0.0, fill_sum = 0.0;
    std::size_t dominated = 0;
    for (std::size_t t = 0; t < config.trials; ++t) {
      insert_sum += insert_cost[t][i];
      fill_sum += fill_cost[t][i];
      if (insert_cost[t][i] >= reference) ++dominated;
    }
    const double trials = static_cast<double>(config.trials);
    ExperimentRecord r = base_record(config);
    r.param("capacity", std::to_string(capacity)).param("alpha", format_real(alphas[i]));
    r.stat("mean_insert_probes", insert_sum / trials)
        .stat("geometric_reference", reference)
        .stat("mean_fill_probes", fill_sum / trials)
        .stat("dominance_fraction", static_cast<double>(dominated) / trials);
    if (insert_sum / trials < reference)
      out.violations.push_back("alpha=" + format_real(alphas[i]) + ": mean insertion probes below 1/(1-alpha)");
    out.records.push_back(std::move(r));
  }
  return out;
}

ExperimentOutcome run_binpack(const ExperimentConfig& config, const Params& params) {
  const std::size_t n = params.size("n", 1);
  const std::string& algo = params.text("algo");
  if (algo != "ffd" && algo != "tm" && algo != "both")
    throw std::invalid_argument("invalid value for --algo: '" + algo + "' (expected ffd, tm or both)");
  const bool run_ffd = algo != "tm";
  const bool run_tm = algo != "ffd";
  if (params.check_only()) return {};

  ExperimentOutcome out;
  out.records.resize(config.trials);
  std::vector<std::string> problems(config.trials);
  parallel_for(config.trials, [&](std::size_t t) {
    Rng rng(config.seed, trial_stream(0, t));
    const PackingInstance inst = uniform_instance(n, rng);
    const std::size_t lower = size_lower_bound(inst);
    ExperimentRecord& r = out.records[t] = base_record(config);
    r.param("n", std::to_string(n)).param("algo", algo).param("trial", std::to_string(t));
    std::size_t ffd_bins = 0, tm_bins = 0;
    if (run_ffd) {
      const Packing p = ffd(inst);
      ffd_bins = p.bin_count();
      if (!validate_packing(inst, p)) problems[t] = "trial " + std::to_string(t) + ": invalid FFD packing";
      r.stat("ffd_bins", static_cast<double>(ffd_bins));
    }
    if (run_tm) {
      const Packing p = truncate_match(inst);
      tm_bins = p.bin_count();
      if (!validate_packing(inst, p)) problems[t] = "trial " + std::to_string(t) + ": invalid TM packing";
      r.stat("tm_bins", static_cast<double>(tm_bins));
    }
    r.stat("lower_bound", static_cast<double>(lower));
    const std::size_t reported = run_ffd ? ffd_bins : tm_bins;
    r.stat("ratio", lower > 0 ? static_cast<double>(reported) / static_cast<double>(lower) : 1.0);
    if (run_ffd && run_tm && ffd_bins > tm_bins)
      problems[t] = "trial " + std::to_string(t) + ": FFD used more bins than truncate-and-match";
    if (reported < lower) problems[t] = "trial " + std::to_string(t) + ": fewer bins than the size bound";
  });
  for (auto& p : problems)
    if (!p.empty()) out.violations.push_back(std::move(p));
  return out;
}

ExperimentOutcome run_hull(const ExperimentConfig& config, const Params& params) {
  const std::vector<std::size_t> ns = params.sizes("n", 1);
  if (params.check_only()) return {};
  ExperimentOutcome out;
  out.records = hull_size_experiment(ns, config.trials, config.seed);
  for (auto& r : out.records) r.experiment = config.name;
  return out;
}

ExperimentOutcome run_tsp(const ExperimentConfig& config, const Params& params) {
  const std::vector<std::size_t> ns = params.sizes("n", 3);
  const bool oracle = params.flag("oracle");
  for (std::size_t n : ns)
    if (oracle && n > 14) throw std::invalid_argument("invalid value for --n: the oracle needs n <= 14");
  if (params.check_only()) return {};
  ExperimentOutcome out;
  for (std::size_t idx = 0; idx < ns.size(); ++idx) {
    auto records = sqrt_n_lower_bound_experiment(ns[idx], config.trials, config.seed, oracle, idx);
    for (auto& r : records) {
      r.experiment = config.name;
      if (oracle && r.stat("stitch_length") < r.stat("oracle_length") - 1e-9)
        out.violations.push_back("n=" + r.param("n") + " trial " + r.param("trial") +
                                 ": Stitch tour shorter than the optimal tour");
      out.records.push_back(std::move(r));
    }
  }
  return out;
}

ExperimentOutcome run_er_bisection(const ExperimentConfig& config, const Params& params) {
  const std::size_t n = params.size("n", 2);
  if (n % 2 != 0) throw std::invalid_argument("invalid value for --n: must be even");
  const double p = params.real("p", 0.0, 1.0);
  const std::size_t samples = params.size("samples", 1);
  const double expected = p * static_cast<double>(n) * static_cast<double>(n) / 4.0;
  if (params.check_only()) return {};

  std::vector<double> min_ratio(config.trials), max_ratio(config.trials);
  parallel_for(config.trials, [&](std::size_t t) {
    Rng rng(config.seed, trial_stream(0, t));
    const Graph g = gen_er(n, p, rng);
    if (t == 0) maybe_dump(params, g);
    std::size_t lo = SIZE_MAX, hi = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      const std::size_t cut = bisection_cut(g, random_bisection(n, rng));
      lo = std::min(lo, cut);
      hi = std::max(hi, cut);
    }
    min_ratio[t] = expected > 0.0 ? static_cast<double>(lo) / expected : 1.0;
    max_ratio[t] = expected > 0.0 ? static_cast<double>(hi) / expected : 1.0;
  });
  std::size_t inside = 0;
  for (std::size_t t = 0; t < config.trials; ++t)
    if (min_ratio[t] >= 0.95 && max_ratio[t] <= 1.05) ++inside;
  ExperimentOutcome out;
  ExperimentRecord r = base_record(config);
  r.param("n", std::to_string(n)).param("p", format_real(p)).param("samples", std::to_string(samples));
  r.stat("success_rate", static_cast<double>(inside) / static_cast<double>(config.trials))
      .stat("mean_min_cut_ratio", mean_of(min_ratio))
      .stat("mean_max_cut_ratio", mean_of(max_ratio))
      .stat("min_cut_ratio", *std::min_element(min_ratio.begin(), min_ratio.end()))
      .stat("max_cut_ratio", *std::max_element(max_ratio.begin(), max_ratio.end()));
  out.records.push_back(std::move(r));
  return out;
}

ExperimentOutcome run_planted_clique(const ExperimentConfig& config, const Params& params) {
  const std::size_t n = params.size("n", 1);
  std::size_t k = params.size("k");
  if (k == 0) {
    const double nd = static_cast<double>(n);
    k = std::min(n, static_cast<std::size_t>(std::ceil(3.0 * std::sqrt(nd * std::log(std::max(nd, 1.0))))));
    k = std::max<std::size_t>(k, 1);
  }
  if (k > n) throw std::invalid_argument("invalid value for --k: must not exceed --n");
  if (params.check_only()) return {};

  std::vector<double> success(config.trials), clique_min(config.trials), other_max(config.trials);
  parallel_for(config.trials, [&](std::size_t t) {
    Rng rng(config.seed, trial_stream(0, t));
    const Graph g = gen_planted_clique(n, k, rng);
    if (t == 0) maybe_dump(params, g);
    success[t] = top_k_degrees(g, k) == *g.planted_clique ? 1.0 : 0.0;
    std::vector<bool> in_q(n, false);
    for (std::size_t v : *g.planted_clique) in_q[v] = true;
    std::size_t lo = SIZE_MAX, hi = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (in_q[v])
        lo = std::min(lo, g.degree(v));
      else
        hi = std::max(hi, g.degree(v));
    }
    clique_min[t] = static_cast<double>(lo);
    other_max[t] = static_cast<double>(k == n ? 0 : hi);
  });
  ExperimentOutcome out;
  ExperimentRecord r = base_record(config);
  r.param("n", std::to_string(n)).param("k", std::to_string(k));
  r.stat("success_rate", mean_of(success))
      .stat("mean_min_clique_degree", mean_of(clique_min))
      .stat("mean_max_other_degree", mean_of(other_max));
  out.records.push_back(std::move(r));
  return out;
}

ExperimentOutcome run_planted_bisection(const ExperimentConfig& config, const Params& params) {
  const std::size_t n = params.size("n", 4);
  if (n % 2 != 0) throw std::invalid_argument("invalid value for --n: must be even");
  const double p = params.real("p", 0.0, 1.0);
  const double q = params.real("q", 0.0, p);
  if (params.check_only()) return {};

  std::vector<double> success(config.trials), misplaced(config.trials);
  parallel_for(config.trials, [&](std::size_t t) {
    Rng rng(config.seed, trial_stream(0, t));
    const Graph g = gen_planted_bisection(n, p, q, rng);
    if (t == 0) maybe_dump(params, g);
    const Bisection found = common_neighbor_bisection(g);
    const Bisection& truth = *g.planted_bisection;
    success[t] = same_bisection(found, truth) ? 1.0 : 0.0;
    std::vector<std::size_t> overlap;
    std::set_intersection(found.a.begin(), found.a.end(), truth.a.begin(), truth.a.end(),
                          std::back_inserter(overlap));
    misplaced[t] = static_cast<double>(std::min(overlap.size(), n / 2 - overlap.size()));
  });
  ExperimentOutcome out;
  ExperimentRecord r = base_record(config);
  r.param("n", std::to_string(n)).param("p", format_real(p)).param("q", format_real(q));
  r.stat("success_rate", mean_of(success)).stat("mean_misplaced", mean_of(misplaced));
  out.records.push_back(std::move(r));
  return out;
}

ExperimentOutcome run_greedy_clique(const ExperimentConfig& config, const Params& params) {
  const std::size_t n = params.size("n", 1);
  const double p = params.real("p", 0.0, 1.0);
  const double target = std::log2(static_cast<double>(n));
  if (params.check_only()) return {};

  std::vector<double> sizes(config.trials);
  std::vector<char> valid(config.trials, 1);
  parallel_for(config.trials, [&](std::size_t t) {
    Rng rng(config.seed, trial_stream(0, t));
    const Graph g = gen_er(n, p, rng);
    if (t == 0) maybe_dump(params, g);
    const std::vector<std::size_t> clique = greedy_clique(g, rng);
    sizes[t] = static_cast<double>(clique.size());
    valid[t] = is_clique(g, clique);
  });
  std::size_t within = 0;
  for (double s : sizes)
    if (std::abs(s - target) <= 3.0) ++within;
  ExperimentOutcome out;
  ExperimentRecord r = base_record(config);
  r.param("n", std::to_string(n)).param("p", format_real(p));
  r.stat("success_rate", static_cast<double>(within) / static_cast<double>(config.trials))
      .stat("mean_clique_size", mean_of(sizes))
      .stat("min_clique_size", *std::min_element(sizes.begin(), sizes.end()))
      .stat("max_clique_size", *std::max_element(sizes.begin(), sizes.end()))
      .stat("log2_n", target);
  out.records.push_back(std::move(r));
  if (std::find(valid.begin(), valid.end(), 0) != valid.end())
    out.violations.push_back("greedy output is not a clique");
  return out;
}

}  // namespace

std::span<const ExperimentSpec> experiment_catalog() { return catalog(); }

const ExperimentSpec* find_experiment(std::string_view name) {
  for (const ExperimentSpec& spec : catalog())
    if (spec.name == name) return &spec;
  return nullptr;
}

static ExperimentOutcome dispatch(const ExperimentConfig& config, bool check_only) {
  const ExperimentSpec* spec = find_experiment(config.name);
  if (!spec) throw std::invalid_argument("unknown experiment '" + config.name + "'");
  if (config.trials == 0) throw std::invalid_argument("invalid value for --trials: must be at least 1");
  Params params(*spec, config);
  if (check_only) params.set_check_only();

  using Runner = ExperimentOutcome (*)(const ExperimentConfig&, const Params&);
  static const std::map<std::string_view, Runner> runners = {
      {"prophet", run_prophet},
      {"quicksort", run_quicksort},
      {"probing", run_probing},
      {"binpack", run_binpack},
      {"hull", run_hull},
      {"tsp", run_tsp},
      {"graphs.er-bisection", run_er_bisection},
      {"graphs.planted-clique", run_planted_clique},
      {"graphs.planted-bisection", run_planted_bisection},
      {"graphs.greedy-clique", run_greedy_clique},
  };
  return runners.at(spec->name)(config, params);
}

ExperimentOutcome run_experiment(const ExperimentConfig& config) { return dispatch(config, false); }

void validate_experiment(const ExperimentConfig& config) { dispatch(config, true); }

}  // namespace avgcase
