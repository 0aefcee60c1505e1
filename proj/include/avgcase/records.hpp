#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace avgcase {

// One row of experiment output. Parameters are kept as text so that values
// such as `--algo both` survive unchanged; statistics are reals. Column order
// is insertion order.
struct ExperimentRecord {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> params;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> stats;

  ExperimentRecord& param(std::string name, std::string value);
  ExperimentRecord& stat(std::string name, double value);

  // Throws std::out_of_range when the column is absent.
  double stat(std::string_view name) const;
  const std::string& param(std::string_view name) const;
  bool has_stat(std::string_view name) const noexcept;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

enum class RecordFormat { csv, json };

// CSV: header `experiment,seed,<params...>,<stats...>` then one row per
// record. JSON: array of flat objects, params as strings and stats as numbers.
// Reals are printed with 17 significant digits. Throws std::invalid_argument
// when records disagree on experiment name or columns.
void write_records(std::span<const ExperimentRecord> records, RecordFormat format, std::ostream& out);
std::string format_records(std::span<const ExperimentRecord> records, RecordFormat format);

// Inverse of the JSON writer.
std::vector<ExperimentRecord> parse_records_json(std::string_view text);

// "%.17g"
std::string format_real(double value);

}  // namespace avgcase
