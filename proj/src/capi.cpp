#include "avgcase/avgcase.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <ios>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "avgcase/binpack.hpp"
#include "avgcase/common.hpp"
#include "avgcase/experiments.hpp"
#include "avgcase/geometry.hpp"
#include "avgcase/graphs.hpp"
#include "avgcase/hashing.hpp"
#include "avgcase/records.hpp"
#include "avgcase/sorting.hpp"
#include "avgcase/stopping.hpp"
#include "avgcase/tsp.hpp"

struct avgcase_rng {
  avgcase::Rng rng;
};

struct avgcase_dist {
  avgcase::DiscreteDistribution dist;
};

struct avgcase_probe_table {
  avgcase::ProbeTable table;
};

struct avgcase_packing {
  avgcase::Packing packing;
};

struct avgcase_hull {
  avgcase::Hull hull;
  std::vector<avgcase_point> vertices;
};

struct avgcase_graph {
  avgcase::Graph graph;
};

struct avgcase_params {
  std::vector<std::pair<std::string, std::string>> values;
};

struct avgcase_records {
  std::vector<avgcase::ExperimentRecord> records;
  std::vector<std::string> violations;
};

namespace {

thread_local std::string last_error;

// Exceptions that map to AVGCASE_E_STATE rather than the default code.
struct StateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Fn>
avgcase_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    last_error.clear();
    return AVGCASE_OK;
  } catch (const StateError& e) {
    last_error = e.what();
    return AVGCASE_E_STATE;
  } catch (const std::ios_base::failure& e) {
    last_error = e.what();
    return AVGCASE_E_IO;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return AVGCASE_E_OUT_OF_RANGE;
  } catch (const std::length_error& e) {
    last_error = e.what();
    return AVGCASE_E_OUT_OF_RANGE;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return AVGCASE_E_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return AVGCASE_E_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return AVGCASE_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return AVGCASE_E_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return AVGCASE_E_INTERNAL;
  }
}

template <class T>
T* require(T* ptr, const char* what) {
  if (!ptr) throw std::invalid_argument(std::string(what) + " must not be NULL");
  return ptr;
}

avgcase::StoppingInstance make_instance(const avgcase_dist* const* stages, size_t count) {
  require(stages, "stages");
  std::vector<avgcase::DiscreteDistribution> dists;
  dists.reserve(count);
  for (size_t i = 0; i < count; ++i) dists.push_back(require(stages[i], "stage distribution")->dist);
  return avgcase::StoppingInstance(std::move(dists));
}

avgcase::AcceptMode to_mode(avgcase_accept_mode mode) {
  switch (mode) {
    case AVGCASE_ACCEPT_AT_LEAST:
      return avgcase::AcceptMode::at_least;
    case AVGCASE_ACCEPT_STRICTLY_GREATER:
      return avgcase::AcceptMode::strictly_greater;
  }
  throw std::invalid_argument("unknown accept mode");
}

std::vector<avgcase::Point> to_points(const avgcase_point* points, size_t count) {
  if (count > 0) require(points, "points");
  std::vector<avgcase::Point> out(count);
  for (size_t i = 0; i < count; ++i) out[i] = {points[i].x, points[i].y};
  return out;
}

avgcase_hull* wrap_hull(avgcase::Hull hull) {
  auto* h = new avgcase_hull{std::move(hull), {}};
  for (const avgcase::Point& p : h->hull.vertices()) h->vertices.push_back({p.x, p.y});
  return h;
}

void write_tour(const avgcase::Tour& tour, size_t* order_out, double* length_out) {
  if (order_out) std::copy(tour.order.begin(), tour.order.end(), order_out);
  if (length_out) *length_out = tour.length;
}

avgcase::Bisection read_bisection(const size_t* side_a, const size_t* side_b, size_t half) {
  if (half > 0) {
    require(side_a, "side_a");
    require(side_b, "side_b");
  }
  return avgcase::Bisection{std::vector<size_t>(side_a, side_a + half), std::vector<size_t>(side_b, side_b + half)};
}

void copy_bisection(const avgcase::Bisection& split, size_t* side_a, size_t* side_b) {
  require(side_a, "side_a");
  require(side_b, "side_b");
  std::copy(split.a.begin(), split.a.end(), side_a);
  std::copy(split.b.begin(), split.b.end(), side_b);
}

const avgcase::ParamSpec* param_spec(size_t index, size_t param) {
  const auto catalog = avgcase::experiment_catalog();
  if (index >= catalog.size() || param >= catalog[index].params.size()) return nullptr;
  return &catalog[index].params[param];
}

// Catalog strings are string_views over literals, hence NUL-terminated.
const char* view_cstr(std::string_view v) { return v.data(); }

}  // namespace

extern "C" {

const char* avgcase_last_error(void) { return last_error.c_str(); }

const char* avgcase_version(void) { return "0.1.0"; }

avgcase_status avgcase_rng_create(uint64_t seed, uint64_t stream, avgcase_rng** out) {
  return guarded([&] { *require(out, "out") = new avgcase_rng{avgcase::Rng(seed, stream)}; });
}

void avgcase_rng_destroy(avgcase_rng* rng) { delete rng; }

uint64_t avgcase_rng_next_u64(avgcase_rng* rng) { return rng ? rng->rng.next_u64() : 0; }

double avgcase_rng_uniform(avgcase_rng* rng) { return rng ? rng->rng.uniform() : 0.0; }

avgcase_status avgcase_dist_create(const double* values, const double* probs, size_t count, avgcase_dist** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) {
      require(values, "values");
      require(probs, "probs");
    }
    std::vector<avgcase::Atom> atoms(count);
    for (size_t i = 0; i < count; ++i) atoms[i] = {values[i], probs[i]};
    *out = new avgcase_dist{avgcase::DiscreteDistribution(std::move(atoms))};
  });
}

void avgcase_dist_destroy(avgcase_dist* dist) { delete dist; }

avgcase_status avgcase_dist_sample(const avgcase_dist* dist, avgcase_rng* rng, double* out) {
  return guarded([&] {
    *require(out, "out") = avgcase::sample(require(dist, "dist")->dist, require(rng, "rng")->rng);
  });
}

avgcase_status avgcase_expected_max(const avgcase_dist* const* dists, size_t count, double* out) {
  return guarded([&] {
    require(out, "out");
    require(dists, "dists");
    std::vector<avgcase::DiscreteDistribution> list;
    for (size_t i = 0; i < count; ++i) list.push_back(require(dists[i], "distribution")->dist);
    *out = avgcase::expected_max(list);
  });
}

avgcase_status avgcase_stopping_optimal(const avgcase_dist* const* stages, size_t count, double* thresholds_out,
                                        double* value_out) {
  return guarded([&] {
    const auto result = avgcase::backward_induction_policy(make_instance(stages, count));
    if (thresholds_out)
      std::copy(result.policy.thresholds.begin(), result.policy.thresholds.end(), thresholds_out);
    if (value_out) *value_out = result.value;
  });
}

avgcase_status avgcase_stopping_median_threshold(const avgcase_dist* const* stages, size_t count,
                                                 double* threshold_out, avgcase_accept_mode* mode_out) {
  return guarded([&] {
    const auto rule = avgcase::median_threshold(make_instance(stages, count));
    if (threshold_out) *threshold_out = rule.threshold;
    if (mode_out)
      *mode_out = rule.mode == avgcase::AcceptMode::at_least ? AVGCASE_ACCEPT_AT_LEAST
                                                              : AVGCASE_ACCEPT_STRICTLY_GREATER;
  });
}

avgcase_status avgcase_stopping_threshold_value(const avgcase_dist* const* stages, size_t count, double threshold,
                                                avgcase_accept_mode mode, double* out) {
  return guarded([&] {
    *require(out, "out") =
        avgcase::threshold_rule_value(make_instance(stages, count), {threshold, to_mode(mode)});
  });
}

avgcase_status avgcase_stopping_policy_value(const avgcase_dist* const* stages, size_t count,
                                             const double* thresholds, const avgcase_accept_mode* modes,
                                             double* out) {
  return guarded([&] {
    require(out, "out");
    require(thresholds, "thresholds");
    require(modes, "modes");
    avgcase::Policy policy;
    for (size_t i = 0; i < count; ++i) {
      policy.thresholds.push_back(thresholds[i]);
      policy.modes.push_back(to_mode(modes[i]));
    }
    *out = avgcase::policy_value(make_instance(stages, count), policy);
  });
}

avgcase_status avgcase_quicksort_first_pivot(const int64_t* input, size_t count, int64_t* sorted_out,
                                             uint64_t* comparisons_out) {
  return guarded([&] {
    if (count > 0) require(input, "input");
    const auto trace = avgcase::quicksort_first_pivot(std::span<const int64_t>(input, count));
    if (sorted_out) std::copy(trace.sorted.begin(), trace.sorted.end(), sorted_out);
    if (comparisons_out) *comparisons_out = trace.comparisons;
  });
}

double avgcase_expected_comparisons(size_t n) { return avgcase::expected_comparisons_exact(n); }

avgcase_status avgcase_probe_table_create(size_t capacity, avgcase_probe_table** out) {
  return guarded([&] { *require(out, "out") = new avgcase_probe_table{avgcase::ProbeTable(capacity)}; });
}

void avgcase_probe_table_destroy(avgcase_probe_table* table) { delete table; }

avgcase_status avgcase_probe_table_insert(avgcase_probe_table* table, uint64_t key, size_t hash,
                                          size_t* probes_out) {
  return guarded([&] {
    require(table, "table");
    size_t probes = 0;
    try {
      probes = table->table.insert(key, hash);
    } catch (const std::length_error& e) {
      throw StateError(e.what());
    } catch (const std::invalid_argument& e) {
      throw StateError(e.what());
    }
    if (probes_out) *probes_out = probes;
  });
}

avgcase_status avgcase_probe_table_lookup(const avgcase_probe_table* table, uint64_t key, size_t hash,
                                          int* found_out, size_t* probes_out) {
  return guarded([&] {
    const auto r = require(table, "table")->table.lookup(key, hash);
    if (found_out) *found_out = r.found ? 1 : 0;
    if (probes_out) *probes_out = r.probes;
  });
}

size_t avgcase_probe_table_size(const avgcase_probe_table* table) { return table ? table->table.size() : 0; }

double avgcase_probe_table_load(const avgcase_probe_table* table) { return table ? table->table.load() : 0.0; }

avgcase_status avgcase_probe_table_expected_insertion_probes(const avgcase_probe_table* table, double* out) {
  return guarded([&] {
    try {
      *require(out, "out") = require(table, "table")->table.expected_insertion_probes();
    } catch (const std::length_error& e) {
      throw StateError(e.what());
    }
  });
}

avgcase_status avgcase_geometric_reference(double alpha, double* out) {
  return guarded([&] { *require(out, "out") = avgcase::geometric_reference(alpha); });
}

avgcase_status avgcase_binpack_ffd(const double* sizes, size_t count, avgcase_packing** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(sizes, "sizes");
    const avgcase::PackingInstance inst(std::vector<double>(sizes, sizes + count));
    *out = new avgcase_packing{avgcase::ffd(inst)};
  });
}

avgcase_status avgcase_binpack_truncate_match(const double* sizes, size_t count, avgcase_packing** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(sizes, "sizes");
    const avgcase::PackingInstance inst(std::vector<double>(sizes, sizes + count));
    *out = new avgcase_packing{avgcase::truncate_match(inst)};
  });
}

void avgcase_packing_destroy(avgcase_packing* packing) { delete packing; }

size_t avgcase_packing_bin_count(const avgcase_packing* packing) {
  return packing ? packing->packing.bin_count() : 0;
}

avgcase_status avgcase_packing_bin(const avgcase_packing* packing, size_t bin, const size_t** items_out,
                                   size_t* count_out) {
  return guarded([&] {
    const auto& bins = require(packing, "packing")->packing.bins;
    if (bin >= bins.size()) throw std::out_of_range("bin index out of range");
    if (items_out) *items_out = bins[bin].data();
    if (count_out) *count_out = bins[bin].size();
  });
}

avgcase_status avgcase_packing_validate(const double* sizes, size_t count, const avgcase_packing* packing,
                                        int* valid_out) {
  return guarded([&] {
    require(valid_out, "valid_out");
    if (count > 0) require(sizes, "sizes");
    const avgcase::PackingInstance inst(std::vector<double>(sizes, sizes + count));
    *valid_out = avgcase::validate_packing(inst, require(packing, "packing")->packing) ? 1 : 0;
  });
}

avgcase_status avgcase_binpack_lower_bound(const double* sizes, size_t count, size_t* out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(sizes, "sizes");
    *out = avgcase::size_lower_bound(avgcase::PackingInstance(std::vector<double>(sizes, sizes + count)));
  });
}

avgcase_status avgcase_hull_divide_conquer(const avgcase_point* points, size_t count, avgcase_hull** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap_hull(avgcase::hull_divide_conquer(to_points(points, count)));
  });
}

avgcase_status avgcase_hull_bruteforce(const avgcase_point* points, size_t count, avgcase_hull** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap_hull(avgcase::hull_bruteforce(to_points(points, count)));
  });
}

avgcase_status avgcase_hull_merge(const avgcase_hull* first, const avgcase_hull* second, avgcase_hull** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap_hull(avgcase::merge_hulls(require(first, "first")->hull, require(second, "second")->hull));
  });
}

void avgcase_hull_destroy(avgcase_hull* hull) { delete hull; }

size_t avgcase_hull_size(const avgcase_hull* hull) { return hull ? hull->vertices.size() : 0; }

const avgcase_point* avgcase_hull_vertices(const avgcase_hull* hull) {
  return hull ? hull->vertices.data() : nullptr;
}

avgcase_status avgcase_tsp_held_karp(const avgcase_point* points, size_t count, size_t* order_out,
                                     double* length_out) {
  return guarded([&] { write_tour(avgcase::held_karp(to_points(points, count)), order_out, length_out); });
}

avgcase_status avgcase_tsp_stitch(const avgcase_point* points, size_t count, size_t* order_out,
                                  double* length_out) {
  return guarded([&] { write_tour(avgcase::stitch(to_points(points, count)), order_out, length_out); });
}

avgcase_status avgcase_tour_length(const avgcase_point* points, size_t count, const size_t* order, double* out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(order, "order");
    const auto pts = to_points(points, count);
    *out = avgcase::tour_length(pts, std::span<const size_t>(order, count));
  });
}

avgcase_status avgcase_graph_gen_er(size_t n, double p, avgcase_rng* rng, avgcase_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new avgcase_graph{avgcase::gen_er(n, p, require(rng, "rng")->rng)};
  });
}

avgcase_status avgcase_graph_gen_planted_bisection(size_t n, double p, double q, avgcase_rng* rng,
                                                   avgcase_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new avgcase_graph{avgcase::gen_planted_bisection(n, p, q, require(rng, "rng")->rng)};
  });
}

avgcase_status avgcase_graph_gen_planted_clique(size_t n, size_t k, avgcase_rng* rng, avgcase_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new avgcase_graph{avgcase::gen_planted_clique(n, k, require(rng, "rng")->rng)};
  });
}

avgcase_status avgcase_graph_read_edge_list(const char* path, avgcase_graph** out) {
  return guarded([&] {
    require(out, "out");
    std::ifstream in(require(path, "path"));
    if (!in) throw std::ios_base::failure(std::string("cannot open ") + path);
    *out = new avgcase_graph{avgcase::read_edge_list(in)};
  });
}

avgcase_status avgcase_graph_write_edge_list(const avgcase_graph* graph, const char* path) {
  return guarded([&] {
    require(graph, "graph");
    std::ofstream out(require(path, "path"));
    if (!out) throw std::ios_base::failure(std::string("cannot open ") + path + " for writing");
    avgcase::write_edge_list(graph->graph, out);
    if (!out) throw std::ios_base::failure(std::string("failed writing ") + path);
  });
}

void avgcase_graph_destroy(avgcase_graph* graph) { delete graph; }

size_t avgcase_graph_vertex_count(const avgcase_graph* graph) { return graph ? graph->graph.vertex_count() : 0; }

size_t avgcase_graph_edge_count(const avgcase_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

avgcase_status avgcase_graph_has_edge(const avgcase_graph* graph, size_t u, size_t v, int* out) {
  return guarded([&] { *require(out, "out") = require(graph, "graph")->graph.has_edge(u, v) ? 1 : 0; });
}

avgcase_status avgcase_graph_degree(const avgcase_graph* graph, size_t v, size_t* out) {
  return guarded([&] { *require(out, "out") = require(graph, "graph")->graph.degree(v); });
}

avgcase_status avgcase_graph_planted_clique(const avgcase_graph* graph, const size_t** members_out,
                                            size_t* count_out) {
  return guarded([&] {
    const auto& planted = require(graph, "graph")->graph.planted_clique;
    if (!planted) throw StateError("graph has no planted clique");
    if (members_out) *members_out = planted->data();
    if (count_out) *count_out = planted->size();
  });
}

avgcase_status avgcase_graph_planted_bisection(const avgcase_graph* graph, size_t* side_a, size_t* side_b) {
  return guarded([&] {
    const auto& planted = require(graph, "graph")->graph.planted_bisection;
    if (!planted) throw StateError("graph has no planted bisection");
    copy_bisection(*planted, side_a, side_b);
  });
}

avgcase_status avgcase_top_k_degrees(const avgcase_graph* graph, size_t k, size_t* out) {
  return guarded([&] {
    require(out, "out");
    const auto top = avgcase::top_k_degrees(require(graph, "graph")->graph, k);
    std::copy(top.begin(), top.end(), out);
  });
}

avgcase_status avgcase_greedy_clique(const avgcase_graph* graph, avgcase_rng* rng, size_t* out,
                                     size_t* count_out) {
  return guarded([&] {
    require(out, "out");
    const auto clique = avgcase::greedy_clique(require(graph, "graph")->graph, require(rng, "rng")->rng);
    std::copy(clique.begin(), clique.end(), out);
    if (count_out) *count_out = clique.size();
  });
}

avgcase_status avgcase_common_neighbor_bisection(const avgcase_graph* graph, size_t* side_a, size_t* side_b) {
  return guarded([&] {
    copy_bisection(avgcase::common_neighbor_bisection(require(graph, "graph")->graph), side_a, side_b);
  });
}

avgcase_status avgcase_bisection_cut(const avgcase_graph* graph, const size_t* side_a, const size_t* side_b,
                                     size_t half, size_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = avgcase::bisection_cut(require(graph, "graph")->graph, read_bisection(side_a, side_b, half));
  });
}

avgcase_status avgcase_expected_k_cliques(size_t n, size_t k, double* out) {
  return guarded([&] { *require(out, "out") = avgcase::expected_k_cliques(n, k); });
}

size_t avgcase_experiment_count(void) { return avgcase::experiment_catalog().size(); }

const char* avgcase_experiment_name(size_t index) {
  const auto catalog = avgcase::experiment_catalog();
  return index < catalog.size() ? view_cstr(catalog[index].name) : nullptr;
}

const char* avgcase_experiment_summary(size_t index) {
  const auto catalog = avgcase::experiment_catalog();
  return index < catalog.size() ? view_cstr(catalog[index].summary) : nullptr;
}

size_t avgcase_experiment_param_count(size_t index) {
  const auto catalog = avgcase::experiment_catalog();
  return index < catalog.size() ? catalog[index].params.size() : 0;
}

const char* avgcase_experiment_param_name(size_t index, size_t param) {
  const auto* spec = param_spec(index, param);
  return spec ? view_cstr(spec->name) : nullptr;
}

const char* avgcase_experiment_param_default(size_t index, size_t param) {
  const auto* spec = param_spec(index, param);
  return spec ? view_cstr(spec->default_value) : nullptr;
}

const char* avgcase_experiment_param_help(size_t index, size_t param) {
  const auto* spec = param_spec(index, param);
  return spec ? view_cstr(spec->help) : nullptr;
}

avgcase_status avgcase_params_create(avgcase_params** out) {
  return guarded([&] { *require(out, "out") = new avgcase_params{}; });
}

void avgcase_params_destroy(avgcase_params* params) { delete params; }

avgcase_status avgcase_params_set(avgcase_params* params, const char* name, const char* value) {
  return guarded([&] {
    require(params, "params");
    const std::string key = require(name, "name");
    const std::string text = require(value, "value");
    for (auto& entry : params->values) {
      if (entry.first == key) {
        entry.second = text;
        return;
      }
    }
    params->values.emplace_back(key, text);
  });
}

avgcase_status avgcase_experiment_run(const char* name, const avgcase_params* params, uint64_t seed,
                                      uint32_t trials, avgcase_records** out) {
  std::string first_violation;
  const avgcase_status status = guarded([&] {
    require(out, "out");
    avgcase::ExperimentConfig config;
    config.name = require(name, "name");
    if (params) config.params = params->values;
    config.seed = seed;
    config.trials = trials;
    auto outcome = avgcase::run_experiment(config);
    if (!outcome.violations.empty()) first_violation = outcome.violations.front();
    *out = new avgcase_records{std::move(outcome.records), std::move(outcome.violations)};
  });
  if (status == AVGCASE_OK && !first_violation.empty()) {
    last_error = "property violation: " + first_violation;
    return AVGCASE_E_PROPERTY_VIOLATION;
  }
  return status;
}

avgcase_status avgcase_experiment_validate(const char* name, const avgcase_params* params, uint32_t trials) {
  return guarded([&] {
    avgcase::ExperimentConfig config;
    config.name = require(name, "name");
    if (params) config.params = params->values;
    config.trials = trials;
    avgcase::validate_experiment(config);
  });
}

void avgcase_records_destroy(avgcase_records* records) { delete records; }

size_t avgcase_records_count(const avgcase_records* records) { return records ? records->records.size() : 0; }

avgcase_status avgcase_records_stat(const avgcase_records* records, size_t row, const char* name, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = require(records, "records")->records.at(row).stat(std::string_view(require(name, "name")));
  });
}

avgcase_status avgcase_records_param(const avgcase_records* records, size_t row, const char* name,
                                     const char** out) {
  return guarded([&] {
    require(out, "out");
    *out = require(records, "records")->records.at(row).param(std::string_view(require(name, "name"))).c_str();
  });
}

size_t avgcase_records_violation_count(const avgcase_records* records) {
  return records ? records->violations.size() : 0;
}

const char* avgcase_records_violation(const avgcase_records* records, size_t index) {
  return records && index < records->violations.size() ? records->violations[index].c_str() : nullptr;
}

avgcase_status avgcase_records_serialize(const avgcase_records* records, avgcase_format format, char** text_out,
                                         size_t* length_out) {
  return guarded([&] {
    require(text_out, "text_out");
    const auto fmt = format == AVGCASE_FORMAT_JSON ? avgcase::RecordFormat::json : avgcase::RecordFormat::csv;
    const std::string text = avgcase::format_records(require(records, "records")->records, fmt);
    char* buffer = new char[text.size() + 1];
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *text_out = buffer;
    if (length_out) *length_out = text.size();
  });
}

void avgcase_string_free(char* text) { delete[] text; }

}  // extern "C"
