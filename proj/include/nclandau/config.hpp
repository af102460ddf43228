#pragma once

// Run configuration loaded from JSON. Rational fields are strings ("p/q" or
// exact decimals such as "0.25"); the document is checked against the schema
// in docs/config.schema.json before any value is used.

#include "nclandau/params.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nclandau {

/// Schema violations, one diagnostic per offending JSON path.
class ConfigError : public std::invalid_argument {
public:
  explicit ConfigError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
  std::vector<std::string> diagnostics_;
};

enum class OutputFormat { json, csv, text };

struct BasisConfig {
  int n_per_mode = 24;
  std::optional<double> length_scale;  // cyclotron length when absent
};

/// Grid values per parameter; an empty list keeps the base value.
struct SweepConfig {
  std::vector<Rational> hbar, theta, e, B, m, r;
  std::vector<int> n_per_mode;
};

struct OutputConfig {
  OutputFormat format = OutputFormat::json;
  std::string path;  // empty: standard output
};

struct RunConfig {
  PlaneParams params;
  int series_order = 2;
  BasisConfig basis;
  SweepConfig sweep;
  OutputConfig output;
};

RunConfig parse_run_config(std::string_view json_text);
RunConfig load_run_config(const std::string& path);
std::string run_config_to_json(const RunConfig& c);

struct SweepPoint {
  PlaneParams params;
  int n_per_mode;
};
/// Cartesian product of the grids in the order hbar, theta, e, B, m, r, nPerMode
/// (last varies fastest).
std::vector<SweepPoint> sweep_points(const RunConfig& c);

OutputFormat parse_output_format(std::string_view s);
const char* output_format_name(OutputFormat f);

}  // namespace nclandau
