#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "avgcase/avgcase.h"

namespace avgcase_cli {

namespace {

using RecordsPtr = std::unique_ptr<avgcase_records, decltype(&avgcase_records_destroy)>;
using ParamsPtr = std::unique_ptr<avgcase_params, decltype(&avgcase_params_destroy)>;

struct Experiment {
  std::size_t index;
  std::string name;
  std::string summary;
  std::vector<std::string> param_names;
  std::vector<std::string> param_defaults;
  std::vector<std::string> param_help;
};

std::vector<Experiment> load_catalog() {
  std::vector<Experiment> out;
  for (std::size_t i = 0; i < avgcase_experiment_count(); ++i) {
    Experiment e{i, avgcase_experiment_name(i), avgcase_experiment_summary(i), {}, {}, {}};
    for (std::size_t p = 0; p < avgcase_experiment_param_count(i); ++p) {
      e.param_names.emplace_back(avgcase_experiment_param_name(i, p));
      e.param_defaults.emplace_back(avgcase_experiment_param_default(i, p));
      e.param_help.emplace_back(avgcase_experiment_param_help(i, p));
    }
    out.push_back(std::move(e));
  }
  return out;
}

// Swept parameter and primary statistic for the optional plot.
struct PlotAxes {
  const char* x;
  const char* y;
};

const std::map<std::string, PlotAxes>& plot_axes() {
  static const std::map<std::string, PlotAxes> axes = {
      {"prophet", {"instance", "ratio"}},
      {"quicksort", {"n", "trial_mean"}},
      {"probing", {"alpha", "mean_insert_probes"}},
      {"binpack", {"trial", "ratio"}},
      {"hull", {"n", "mean_hull_size"}},
      {"tsp", {"n", "length_over_sqrt_n"}},
      {"graphs.er-bisection", {"n", "success_rate"}},
      {"graphs.planted-clique", {"n", "success_rate"}},
      {"graphs.planted-bisection", {"n", "success_rate"}},
      {"graphs.greedy-clique", {"n", "success_rate"}},
  };
  return axes;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string render_svg(const std::string& title, const PlotAxes& axes, std::vector<std::pair<double, double>> pts) {
  constexpr double width = 640, height = 400, margin = 60;
  std::sort(pts.begin(), pts.end());
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!pts.empty()) {
    x0 = x1 = pts.front().first;
    y0 = y1 = pts.front().second;
    for (const auto& [x, y] : pts) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  auto sx = [&](double x) { return margin + (x - x0) / (x1 - x0) * (width - 2 * margin); };
  auto sy = [&](double y) { return height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\">" << title << "</text>\n";
  s << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
    << height - margin << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
    << "\" stroke=\"black\"/>\n";
  s << "<text x=\"" << width / 2 << "\" y=\"" << height - 16 << "\" text-anchor=\"middle\">" << axes.x << "</text>\n";
  s << "<text x=\"16\" y=\"" << height / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << height / 2
    << ")\">" << axes.y << "</text>\n";
  s << "<text x=\"" << margin << "\" y=\"" << height - margin + 16 << "\" text-anchor=\"middle\">"
    << format_number(x0) << "</text>\n";
  s << "<text x=\"" << width - margin << "\" y=\"" << height - margin + 16 << "\" text-anchor=\"middle\">"
    << format_number(x1) << "</text>\n";
  s << "<text x=\"" << margin - 6 << "\" y=\"" << height - margin << "\" text-anchor=\"end\">" << format_number(y0)
    << "</text>\n";
  s << "<text x=\"" << margin - 6 << "\" y=\"" << margin + 4 << "\" text-anchor=\"end\">" << format_number(y1)
    << "</text>\n";
  if (!pts.empty()) {
    s << "<polyline fill=\"none\" stroke=\"steelblue\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      s << (i ? " " : "") << format_number(sx(pts[i].first)) << ',' << format_number(sy(pts[i].second));
    s << "\"/>\n";
    for (const auto& [x, y] : pts)
      s << "<circle cx=\"" << format_number(sx(x)) << "\" cy=\"" << format_number(sy(y))
        << "\" r=\"3\" fill=\"steelblue\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::vector<std::pair<double, double>> plot_points(const avgcase_records* records, const PlotAxes& axes) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t row = 0; row < avgcase_records_count(records); ++row) {
    const char* x_text = nullptr;
    double y = 0;
    if (avgcase_records_param(records, row, axes.x, &x_text) != AVGCASE_OK) continue;
    if (avgcase_records_stat(records, row, axes.y, &y) != AVGCASE_OK || !std::isfinite(y)) continue;
    char* end = nullptr;
    const double x = std::strtod(x_text, &end);
    if (end == x_text) continue;
    pts.emplace_back(x, y);
  }
  return pts;
}

nlohmann::ordered_json config_json(const RunConfig& config) {
  nlohmann::ordered_json j;
  j["experiment"] = config.experiment;
  j["seed"] = config.seed;
  j["trials"] = config.trials;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : config.params) params[name] = value;
  j["params"] = params;
  return j;
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream file(path, std::ios::binary);
  if (file) file << text;
  if (!file) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

std::string subcommand_usage() {
  std::ostringstream s;
  s << "usage: avgcase <subcommand> [options]\n\nsubcommands:\n";
  for (const Experiment& e : load_catalog()) {
    std::string command = e.name;
    std::replace(command.begin(), command.end(), '.', ' ');
    s << "  " << command << "\n      " << e.summary << '\n';
  }
  s << "\ncommon options: --seed N --trials N --out PATH --format csv|json --plot PATH.svg\n"
       "see `avgcase <subcommand> --help` for experiment parameters.\n";
  return s.str();
}

}  // namespace

const std::string* RunConfig::param(const std::string& name) const {
  for (const auto& [key, value] : params)
    if (key == name) return &value;
  return nullptr;
}

ParseResult parse_args(const std::vector<std::string>& args) {
  if (args.empty()) return {std::nullopt, kExitUsage, subcommand_usage()};

  const std::vector<Experiment> catalog = load_catalog();
  RunConfig config;
  std::map<std::string, std::map<std::string, std::string>> values;  // experiment -> param -> value
  std::map<std::string, CLI::App*> leaves;

  CLI::App app("Average-case algorithm experiments", "avgcase");
  app.require_subcommand(1);
  app.footer("Graph experiments live under `graphs`. AVGCASE_THREADS caps worker threads (0 or 1 = serial).");
  CLI::App* graphs = nullptr;

  for (const Experiment& e : catalog) {
    CLI::App* parent = &app;
    std::string leaf_name = e.name;
    if (const auto dot = e.name.find('.'); dot != std::string::npos) {
      if (!graphs) {
        graphs = app.add_subcommand("graphs", "random and planted graph experiments");
        graphs->require_subcommand(1);
      }
      parent = graphs;
      leaf_name = e.name.substr(dot + 1);
    }
    CLI::App* leaf = parent->add_subcommand(leaf_name, e.summary);
    leaves[e.name] = leaf;
    leaf->add_option("--seed", config.seed, "master seed")->capture_default_str();
    leaf->add_option("--trials", config.trials, "number of trials")
        ->check(CLI::Range(std::uint32_t{1}, std::numeric_limits<std::uint32_t>::max()))
        ->capture_default_str();
    leaf->add_option("--out", config.out, "output path (stdout when absent)");
    leaf->add_option("--format", config.format, "record format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    leaf->add_option("--plot", config.plot, "write an SVG plot of the primary statistic");
    for (std::size_t p = 0; p < e.param_names.size(); ++p) {
      auto* opt = leaf->add_option("--" + e.param_names[p], values[e.name][e.param_names[p]], e.param_help[p]);
      if (!e.param_defaults[p].empty()) opt->default_str(e.param_defaults[p]);
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    return {std::nullopt, kExitOk, out.str()};
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    return {std::nullopt, kExitOk, out.str()};
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    return {std::nullopt, kExitUsage, err.str()};
  }

  const Experiment* chosen = nullptr;
  for (const Experiment& e : catalog)
    if (leaves[e.name]->parsed()) chosen = &e;
  if (!chosen) return {std::nullopt, kExitUsage, subcommand_usage()};

  config.experiment = chosen->name;
  ParamsPtr params(nullptr, avgcase_params_destroy);
  {
    avgcase_params* raw = nullptr;
    avgcase_params_create(&raw);
    params.reset(raw);
  }
  const CLI::App* leaf = leaves[chosen->name];
  for (std::size_t p = 0; p < chosen->param_names.size(); ++p) {
    const std::string& name = chosen->param_names[p];
    const bool given = leaf->get_option("--" + name)->count() > 0;
    const std::string value = given ? values[chosen->name][name] : chosen->param_defaults[p];
    config.params.emplace_back(name, value);
    if (given) avgcase_params_set(params.get(), name.c_str(), value.c_str());
  }
  if (avgcase_experiment_validate(config.experiment.c_str(), params.get(), config.trials) != AVGCASE_OK)
    return {std::nullopt, kExitUsage, std::string("error: ") + avgcase_last_error() + '\n'};
  return {std::move(config), kExitOk, {}};
}

std::string config_comment(const RunConfig& config) {
  std::ostringstream s;
  s << "# experiment: " << config.experiment << '\n';
  s << "# seed: " << config.seed << '\n';
  s << "# trials: " << config.trials << '\n';
  for (const auto& [name, value] : config.params) s << "# " << name << ": " << value << '\n';
  return s.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  ParamsPtr params(nullptr, avgcase_params_destroy);
  {
    avgcase_params* raw = nullptr;
    if (avgcase_params_create(&raw) != AVGCASE_OK) {
      err << "error: " << avgcase_last_error() << '\n';
      return kExitIo;
    }
    params.reset(raw);
  }
  for (const auto& [name, value] : config.params) avgcase_params_set(params.get(), name.c_str(), value.c_str());

  avgcase_records* raw_records = nullptr;
  const avgcase_status status =
      avgcase_experiment_run(config.experiment.c_str(), params.get(), config.seed, config.trials, &raw_records);
  RecordsPtr records(raw_records, avgcase_records_destroy);
  switch (status) {
    case AVGCASE_OK:
    case AVGCASE_E_PROPERTY_VIOLATION:
      break;
    case AVGCASE_E_INVALID_ARGUMENT:
    case AVGCASE_E_OUT_OF_RANGE:
      err << "error: " << avgcase_last_error() << '\n';
      return kExitUsage;
    default:
      err << "error: " << avgcase_last_error() << '\n';
      return kExitIo;
  }

  const bool json = config.format == "json";
  char* text = nullptr;
  std::size_t length = 0;
  if (avgcase_records_serialize(records.get(), json ? AVGCASE_FORMAT_JSON : AVGCASE_FORMAT_CSV, &text, &length) !=
      AVGCASE_OK) {
    err << "error: " << avgcase_last_error() << '\n';
    return kExitIo;
  }
  std::string body(text, length);
  avgcase_string_free(text);

  std::string document;
  if (json) {
    auto records_json = nlohmann::ordered_json::parse(body);
    nlohmann::ordered_json doc;
    doc["config"] = config_json(config);
    doc["records"] = std::move(records_json);
    document = doc.dump(2) + '\n';
  } else {
    document = config_comment(config) + body;
  }

  if (config.out.empty()) {
    out << document;
    out.flush();
  } else if (!write_file(config.out, document, err)) {
    return kExitIo;
  }

  if (!config.plot.empty()) {
    const auto it = plot_axes().find(config.experiment);
    if (it != plot_axes().end() &&
        !write_file(config.plot, render_svg(config.experiment, it->second, plot_points(records.get(), it->second)),
                    err))
      return kExitIo;
  }

  if (status == AVGCASE_E_PROPERTY_VIOLATION) {
    for (std::size_t i = 0; i < avgcase_records_violation_count(records.get()); ++i)
      err << "property violation: " << avgcase_records_violation(records.get(), i) << '\n';
    return kExitPropertyViolation;
  }
  return kExitOk;
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  ParseResult parsed = parse_args(args);
  if (!parsed.config) {
    (parsed.exit_code == kExitOk ? std::cout : std::cerr) << parsed.message;
    return parsed.exit_code;
  }
  return run(*parsed.config, std::cout, std::cerr);
}

}  // namespace avgcase_cli
