#include <doctest.h>

#include <set>
#include <stdexcept>

#include "avgcase/experiments.hpp"

using namespace avgcase;

namespace {

ExperimentOutcome run(std::string name, std::vector<std::pair<std::string, std::string>> params,
                      std::size_t trials = 3, std::uint64_t seed = 1) {
  return run_experiment(ExperimentConfig{std::move(name), std::move(params), seed, trials});
}

std::string error_of(const ExperimentConfig& config) {
  try {
    validate_experiment(config);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("catalog lists every experiment once") {
  std::set<std::string_view> names;
  for (const auto& spec : experiment_catalog()) names.insert(spec.name);
  CHECK(names == std::set<std::string_view>{"prophet", "quicksort", "probing", "binpack", "hull", "tsp",
                                            "graphs.er-bisection", "graphs.planted-clique",
                                            "graphs.planted-bisection", "graphs.greedy-clique"});
  CHECK(find_experiment("hull") != nullptr);
  CHECK(find_experiment("nope") == nullptr);
}

TEST_CASE("bad configurations name the offending flag") {
  CHECK(error_of({"quicksort", {{"n", "-5"}}, 0, 1}).find("--n") != std::string::npos);
  CHECK(error_of({"quicksort", {{"bogus", "1"}}, 0, 1}).find("--bogus") != std::string::npos);
  CHECK(error_of({"quicksort", {}, 0, 0}).find("--trials") != std::string::npos);
  CHECK(error_of({"binpack", {{"algo", "best"}}, 0, 1}).find("--algo") != std::string::npos);
  CHECK(error_of({"probing", {{"alphas", "0.5,1"}}, 0, 1}).find("--alphas") != std::string::npos);
  CHECK(error_of({"graphs.planted-bisection", {{"n", "9"}}, 0, 1}).find("--n") != std::string::npos);
  CHECK(error_of({"graphs.planted-bisection", {{"q", "0.9"}}, 0, 1}).find("--q") != std::string::npos);
  CHECK(error_of({"tsp", {{"oracle", "maybe"}}, 0, 1}).find("--oracle") != std::string::npos);
  CHECK(error_of({"tsp", {{"oracle", "true"}, {"n", "100"}}, 0, 1}).find("--n") != std::string::npos);
  CHECK(error_of({"nope", {}, 0, 1}).find("nope") != std::string::npos);
  CHECK(error_of({"hull", {{"n", "10,100"}}, 0, 5}).empty());
}

TEST_CASE("prophet rows satisfy the half-prophet property") {
  const auto out = run("prophet", {}, 10);
  CHECK(out.violations.empty());
  REQUIRE(out.records.size() == 10);
  for (const auto& r : out.records) {
    CHECK(r.stat("ratio") >= 0.5);
    CHECK(r.stat("optimal_value") >= r.stat("threshold_value") - 1e-12);
    CHECK(r.stat("optimal_value") <= r.stat("expected_max") + 1e-12);
  }
}

TEST_CASE("quicksort rows") {
  const auto out = run("quicksort", {{"n", "10,50"}}, 200);
  REQUIRE(out.records.size() == 2);
  CHECK(out.records[0].param("n") == "10");
  CHECK(out.records[1].stat("relative_error") < 0.1);
}

TEST_CASE("probing rows dominate the geometric reference") {
  const auto out = run("probing", {{"capacity", "4096"}, {"alphas", "0.75,0.5"}}, 5);
  CHECK(out.violations.empty());
  REQUIRE(out.records.size() == 2);
  CHECK(out.records[0].param("alpha") == "0.75");
  for (const auto& r : out.records) CHECK(r.stat("mean_insert_probes") >= r.stat("geometric_reference"));
}

TEST_CASE("binpack rows") {
  const auto both = run("binpack", {{"n", "300"}}, 20);
  CHECK(both.violations.empty());
  for (const auto& r : both.records) {
    CHECK(r.stat("tm_bins") >= r.stat("ffd_bins"));
    CHECK(r.stat("ffd_bins") >= r.stat("lower_bound"));
  }
  const auto only_tm = run("binpack", {{"n", "300"}, {"algo", "tm"}}, 2);
  CHECK_FALSE(only_tm.records[0].has_stat("ffd_bins"));
  CHECK(only_tm.records[0].has_stat("tm_bins"));
}

TEST_CASE("hull, tsp and graph experiments produce their columns") {
  CHECK(run("hull", {{"n", "50,500"}}).records.size() == 2);
  const auto tsp = run("tsp", {{"n", "12"}, {"oracle", "true"}});
  CHECK(tsp.violations.empty());
  CHECK(tsp.records.at(0).has_stat("oracle_length"));
  CHECK(run("graphs.er-bisection", {{"n", "40"}, {"samples", "100"}}).records.at(0).has_stat("success_rate"));
  CHECK(run("graphs.planted-clique", {{"n", "200"}}).records.at(0).param("k") == "98");
  CHECK(run("graphs.planted-bisection", {{"n", "40"}}).records.at(0).has_stat("mean_misplaced"));
  const auto greedy = run("graphs.greedy-clique", {{"n", "300"}});
  CHECK(greedy.violations.empty());
  CHECK(greedy.records.at(0).stat("min_clique_size") >= 1.0);
}

TEST_CASE("experiments are deterministic in the seed") {
  for (const auto& spec : experiment_catalog()) {
    std::vector<std::pair<std::string, std::string>> params;
    if (spec.name == "probing") params = {{"capacity", "1024"}};
    if (spec.name == "hull" || spec.name == "tsp") params = {{"n", "200"}};
    if (spec.name.starts_with("graphs.")) params = {{"n", "60"}};
    if (spec.name == "graphs.er-bisection") params.emplace_back("samples", "50");
    const auto a = run(std::string(spec.name), params, 3, 77);
    const auto b = run(std::string(spec.name), params, 3, 77);
    CHECK(a.records == b.records);
    const auto c = run(std::string(spec.name), params, 3, 78);
    if (spec.name != "graphs.planted-clique") CHECK(a.records != c.records);
  }
}
