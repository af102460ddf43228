#include "nclandau/config.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace nclandau {

namespace {

using nlohmann::json;

const char* const kParamNames[] = {"hbar", "theta", "e", "B", "m", "r"};

Rational* param_slot(PlaneParams& p, std::string_view name) {
  if (name == "hbar") return &p.hbar;
  if (name == "theta") return &p.theta;
  if (name == "e") return &p.e;
  if (name == "B") return &p.B;
  if (name == "m") return &p.m;
  return &p.r;
}

std::vector<Rational>* sweep_slot(SweepConfig& s, std::string_view name) {
  if (name == "hbar") return &s.hbar;
  if (name == "theta") return &s.theta;
  if (name == "e") return &s.e;
  if (name == "B") return &s.B;
  if (name == "m") return &s.m;
  return &s.r;
}

class Checker {
public:
  std::vector<std::string> errors;

  void fail(const std::string& path, const std::string& msg) { errors.push_back(path + ": " + msg); }

  bool object(const json& j, const std::string& path, const std::set<std::string>& allowed) {
    if (!j.is_object()) {
      fail(path, "expected an object");
      return false;
    }
    for (const auto& [k, v] : j.items())
      if (!allowed.count(k)) fail(path + "." + k, "unknown key");
    return true;
  }

  std::optional<Rational> rational(const json& j, const std::string& path) {
    if (!j.is_string()) {
      fail(path, "expected a rational string such as \"3/4\" or \"0.25\"");
      return std::nullopt;
    }
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      fail(path, e.what());
      return std::nullopt;
    }
  }

  std::optional<int> integer(const json& j, const std::string& path, int lo, int hi) {
    if (!j.is_number_integer()) {
      fail(path, "expected an integer");
      return std::nullopt;
    }
    const auto v = j.get<long long>();
    if (v < lo || v > hi) {
      fail(path, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
      return std::nullopt;
    }
    return static_cast<int>(v);
  }
};

}  // namespace

ConfigError::ConfigError(std::vector<std::string> diagnostics)
    : std::invalid_argument([&] {
        std::string s = "invalid config";
        for (const auto& d : diagnostics) s += "\n  " + d;
        return s;
      }()),
      diagnostics_(std::move(diagnostics)) {}

OutputFormat parse_output_format(std::string_view s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "text") return OutputFormat::text;
  throw std::invalid_argument("output format must be json, csv or text");
}

const char* output_format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "?";
}

RunConfig parse_run_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError({std::string("$: ") + e.what()});
  }
  Checker c;
  RunConfig cfg;
  if (!c.object(doc, "$", {"params", "seriesOrder", "basis", "sweep", "output"})) throw ConfigError(c.errors);

  if (!doc.contains("params")) {
    c.fail("$.params", "required");
  } else if (c.object(doc["params"], "$.params", {"hbar", "theta", "e", "B", "m", "r"})) {
    for (const char* name : kParamNames) {
      const auto& obj = doc["params"];
      if (!obj.contains(name)) continue;
      if (auto v = c.rational(obj[name], std::string("$.params.") + name)) *param_slot(cfg.params, name) = *v;
    }
  }
  if (doc.contains("seriesOrder"))
    if (auto v = c.integer(doc["seriesOrder"], "$.seriesOrder", 0, 12)) cfg.series_order = *v;

  if (doc.contains("basis") && c.object(doc["basis"], "$.basis", {"nPerMode", "lengthScale"})) {
    const auto& b = doc["basis"];
    if (b.contains("nPerMode"))
      if (auto v = c.integer(b["nPerMode"], "$.basis.nPerMode", 4, 64)) cfg.basis.n_per_mode = *v;
    if (b.contains("lengthScale")) {
      if (auto v = c.rational(b["lengthScale"], "$.basis.lengthScale")) {
        if (*v <= 0)
          c.fail("$.basis.lengthScale", "must be positive");
        else
          cfg.basis.length_scale = v->convert_to<double>();
      }
    }
  }

  if (doc.contains("sweep") && c.object(doc["sweep"], "$.sweep", {"hbar", "theta", "e", "B", "m", "r", "nPerMode"})) {
    for (const auto& [k, v] : doc["sweep"].items()) {
      const std::string path = "$.sweep." + k;
      if (!v.is_array()) {
        c.fail(path, "expected an array");
        continue;
      }
      for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string ip = path + "[" + std::to_string(i) + "]";
        if (k == "nPerMode") {
          if (auto n = c.integer(v[i], ip, 4, 64)) cfg.sweep.n_per_mode.push_back(*n);
        } else if (auto q = c.rational(v[i], ip)) {
          sweep_slot(cfg.sweep, k)->push_back(*q);
        }
      }
    }
  }

  if (doc.contains("output") && c.object(doc["output"], "$.output", {"format", "path"})) {
    const auto& o = doc["output"];
    if (o.contains("format")) {
      if (!o["format"].is_string())
        c.fail("$.output.format", "expected a string");
      else {
        try {
          cfg.output.format = parse_output_format(o["format"].get<std::string>());
        } catch (const std::exception& e) {
          c.fail("$.output.format", e.what());
        }
      }
    }
    if (o.contains("path")) {
      if (!o["path"].is_string())
        c.fail("$.output.path", "expected a string");
      else
        cfg.output.path = o["path"].get<std::string>();
    }
  }

  if (c.errors.empty()) {
    try {
      validate(cfg.params);
    } catch (const ParameterError& e) {
      c.fail("$.params", std::string(e.what()) + " (quantity " + e.quantity() + ")");
    }
  }
  if (!c.errors.empty()) throw ConfigError(c.errors);
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"$: cannot read config file '" + path + "'"});
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

std::string run_config_to_json(const RunConfig& c) {
  json j;
  PlaneParams p = c.params;
  for (const char* name : kParamNames) j["params"][name] = rational_to_string(*param_slot(p, name));
  j["seriesOrder"] = c.series_order;
  j["basis"]["nPerMode"] = c.basis.n_per_mode;
  if (c.basis.length_scale) j["basis"]["lengthScale"] = std::to_string(*c.basis.length_scale);
  SweepConfig s = c.sweep;
  for (const char* name : kParamNames) {
    const auto& v = *sweep_slot(s, name);
    if (v.empty()) continue;
    for (const auto& q : v) j["sweep"][name].push_back(rational_to_string(q));
  }
  if (!s.n_per_mode.empty()) j["sweep"]["nPerMode"] = s.n_per_mode;
  j["output"]["format"] = output_format_name(c.output.format);
  j["output"]["path"] = c.output.path;
  return j.dump(2);
}

std::vector<SweepPoint> sweep_points(const RunConfig& c) {
  std::vector<SweepPoint> pts{{c.params, c.basis.n_per_mode}};
  SweepConfig s = c.sweep;
  for (const char* name : kParamNames) {
    const auto& grid = *sweep_slot(s, name);
    if (grid.empty()) continue;
    std::vector<SweepPoint> next;
    for (const auto& pt : pts)
      for (const auto& v : grid) {
        SweepPoint q = pt;
        *param_slot(q.params, name) = v;
        next.push_back(q);
      }
    pts = std::move(next);
  }
  if (!s.n_per_mode.empty()) {
    std::vector<SweepPoint> next;
    for (const auto& pt : pts)
      for (int n : s.n_per_mode) next.push_back({pt.params, n});
    pts = std::move(next);
  }
  return pts;
}

}  // namespace nclandau
