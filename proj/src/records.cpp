#include "avgcase/records.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace avgcase {

ExperimentRecord& ExperimentRecord::param(std::string name, std::string value) {
  params.emplace_back(std::move(name), std::move(value));
  return *this;
}

ExperimentRecord& ExperimentRecord::stat(std::string name, double value) {
  stats.emplace_back(std::move(name), value);
  return *this;
}

double ExperimentRecord::stat(std::string_view name) const {
  for (const auto& [key, value] : stats)
    if (key == name) return value;
  throw std::out_of_range("record has no statistic '" + std::string(name) + "'");
}

const std::string& ExperimentRecord::param(std::string_view name) const {
  for (const auto& [key, value] : params)
    if (key == name) return value;
  throw std::out_of_range("record has no parameter '" + std::string(name) + "'");
}

bool ExperimentRecord::has_stat(std::string_view name) const noexcept {
  for (const auto& entry : stats)
    if (entry.first == name) return true;
  return false;
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

void check_columns(std::span<const ExperimentRecord> records) {
  if (records.empty()) return;
  const ExperimentRecord& first = records.front();
  auto reserved = [](const std::string& name) { return name == "experiment" || name == "seed"; };
  for (const auto& p : first.params)
    if (reserved(p.first)) throw std::invalid_argument("column name '" + p.first + "' is reserved");
  for (const auto& s : first.stats)
    if (reserved(s.first)) throw std::invalid_argument("column name '" + s.first + "' is reserved");

  for (const ExperimentRecord& r : records) {
    if (r.experiment != first.experiment)
      throw std::invalid_argument("records mix experiments '" + first.experiment + "' and '" +
                                  r.experiment + "'");
    bool same = r.params.size() == first.params.size() && r.stats.size() == first.stats.size();
    for (std::size_t i = 0; same && i < r.params.size(); ++i)
      same = r.params[i].first == first.params[i].first;
    for (std::size_t i = 0; same && i < r.stats.size(); ++i)
      same = r.stats[i].first == first.stats[i].first;
    if (!same) throw std::invalid_argument("records have heterogeneous columns");
  }
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string json_string(const std::string& text) { return nlohmann::json(text).dump(); }

std::string json_real(double value) {
  if (!std::isfinite(value)) return "null";
  return format_real(value);
}

void write_csv(std::span<const ExperimentRecord> records, std::ostream& out) {
  out << "experiment,seed";
  if (!records.empty()) {
    for (const auto& p : records.front().params) out << ',' << csv_field(p.first);
    for (const auto& s : records.front().stats) out << ',' << csv_field(s.first);
  }
  out << '\n';
  for (const ExperimentRecord& r : records) {
    out << csv_field(r.experiment) << ',' << r.seed;
    for (const auto& p : r.params) out << ',' << csv_field(p.second);
    for (const auto& s : r.stats) out << ',' << format_real(s.second);
    out << '\n';
  }
}

void write_json(std::span<const ExperimentRecord> records, std::ostream& out) {
  out << '[';
  for (std::size_t i = 0; i < records.size(); ++i) {
    const ExperimentRecord& r = records[i];
    out << (i == 0 ? "\n" : ",\n") << "  {\"experiment\": " << json_string(r.experiment)
        << ", \"seed\": " << r.seed;
    for (const auto& p : r.params) out << ", " << json_string(p.first) << ": " << json_string(p.second);
    for (const auto& s : r.stats) out << ", " << json_string(s.first) << ": " << json_real(s.second);
    out << '}';
  }
  out << (records.empty() ? "]\n" : "\n]\n");
}

}  // namespace

void write_records(std::span<const ExperimentRecord> records, RecordFormat format, std::ostream& out) {
  check_columns(records);
  if (format == RecordFormat::csv)
    write_csv(records, out);
  else
    write_json(records, out);
}

std::string format_records(std::span<const ExperimentRecord> records, RecordFormat format) {
  std::ostringstream out;
  write_records(records, format, out);
  return out.str();
}

std::vector<ExperimentRecord> parse_records_json(std::string_view text) {
  const auto doc = nlohmann::ordered_json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("record JSON must be an array");
  std::vector<ExperimentRecord> records;
  for (const auto& obj : doc) {
    if (!obj.is_object()) throw std::invalid_argument("record JSON entries must be objects");
    ExperimentRecord r;
    for (const auto& [key, value] : obj.items()) {
      if (key == "experiment") {
        r.experiment = value.get<std::string>();
      } else if (key == "seed") {
        r.seed = value.get<std::uint64_t>();
      } else if (value.is_string()) {
        r.param(key, value.get<std::string>());
      } else if (value.is_null()) {
        r.stat(key, std::numeric_limits<double>::quiet_NaN());
      } else if (value.is_number()) {
        r.stat(key, value.get<double>());
      } else {
        throw std::invalid_argument("record field '" + key + "' is neither text nor number");
      }
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace avgcase
