#include "sqwva/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <utility>

#include "sqwva/errors.hpp"
#include "sqwva/hg_modes.hpp"

namespace sqwva::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

const std::map<std::string_view, std::map<std::string_view, double>>& unit_tables() {
  static const std::map<std::string_view, std::map<std::string_view, double>> tables{
      {"length", {{"m", 1.0}, {"mm", 1e-3}, {"um", 1e-6}, {"µm", 1e-6}, {"nm", 1e-9}, {"pm", 1e-12}, {"fm", 1e-15}}},
      {"angle",
       {{"rad", 1.0}, {"mrad", 1e-3}, {"urad", 1e-6}, {"µrad", 1e-6}, {"nrad", 1e-9}, {"prad", 1e-12},
        {"deg", std::numbers::pi / 180.0}}},
      {"power", {{"W", 1.0}, {"mW", 1e-3}, {"uW", 1e-6}, {"µW", 1e-6}, {"nW", 1e-9}}},
      {"frequency", {{"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}, {"GHz", 1e9}}},
      {"time", {{"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"µs", 1e-6}, {"ns", 1e-9}}},
      {"decibel", {{"dB", 1.0}}},
      {"fraction", {{"", 1.0}, {"%", 1e-2}}},
  };
  return tables;
}

// Splits "12.5 mW" into (12.5, "mW").
std::pair<double, std::string_view> split_number(std::string_view value) {
  value = trim(value);
  double number = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), number);
  if (ec != std::errc{} || ptr == value.data()) {
    throw ConfigError("expected a number, got '" + std::string(value) + "'");
  }
  if (!std::isfinite(number)) throw ConfigError("non-finite number '" + std::string(value) + "'");
  return {number, trim(value.substr(static_cast<std::size_t>(ptr - value.data())))};
}

double parse_plain(std::string_view value) {
  const auto [number, unit] = split_number(value);
  if (!unit.empty()) throw ConfigError("unexpected unit '" + std::string(unit) + "' on a dimensionless value");
  return number;
}

std::size_t parse_count(std::string_view value) {
  const double v = parse_plain(value);
  if (v < 0.0 || v != std::floor(v)) throw ConfigError("expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

bool parse_bool(std::string_view value) {
  std::string v(trim(value));
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "off" || v == "no" || v == "0") return false;
  throw ConfigError("expected a boolean (true/false/on/off), got '" + v + "'");
}

// "0, 1, 2 dB": items without a unit take the unit of the last item.
std::vector<double> parse_list(std::string_view value, std::string_view kind) {
  std::vector<std::string_view> items;
  std::size_t start = 0;
  while (start <= value.size()) {
    const std::size_t comma = value.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? value.size() : comma;
    items.push_back(trim(value.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (items.empty() || items.back().empty()) throw ConfigError("empty list");
  const std::string_view shared_unit = split_number(items.back()).second;
  std::vector<double> out;
  for (std::string_view item : items) {
    if (item.empty()) throw ConfigError("empty list entry");
    const auto [number, unit] = split_number(item);
    if (unit.empty() && !shared_unit.empty()) {
      out.push_back(parse_quantity(std::string(item) + " " + std::string(shared_unit), kind));
    } else {
      out.push_back(parse_quantity(item, kind));
    }
    (void)number;
  }
  return out;
}

using Setter = std::function<void(ExperimentConfig&, std::string_view)>;

const std::vector<std::pair<std::string_view, Setter>>& setters() {
  static const std::vector<std::pair<std::string_view, Setter>> table{
      {"wavelength", [](ExperimentConfig& c, std::string_view v) {
         c.trace.measurement.geometry.wavelength = parse_quantity(v, "length");
       }},
      {"waist", [](ExperimentConfig& c, std::string_view v) {
         c.trace.measurement.geometry.waist_w0 = parse_quantity(v, "length");
       }},
      {"input_power", [](ExperimentConfig& c, std::string_view v) {
         c.trace.measurement.input_power.watts = parse_quantity(v, "power");
       }},
      {"output_power", [](ExperimentConfig& c, std::string_view v) {
         c.trace.measurement.output_power.watts = parse_quantity(v, "power");
       }},
      {"phi", [](ExperimentConfig& c, std::string_view v) { c.phi = parse_quantity(v, "angle"); }},
      {"psi", [](ExperimentConfig& c, std::string_view v) {
         c.trace.measurement.input_phase_psi = parse_quantity(v, "angle");
       }},
      {"squeeze", [](ExperimentConfig& c, std::string_view v) { c.squeeze_db = parse_quantity(v, "decibel"); }},
      {"squeeze_angle", [](ExperimentConfig& c, std::string_view v) {
         c.trace.measurement.squeeze.squeezed_quadrature_angle = parse_quantity(v, "angle");
       }},
      {"tilt", [](ExperimentConfig& c, std::string_view v) {
         c.trace.measurement.tilt_theta = parse_quantity(v, "angle");
       }},
      {"lever_arm", [](ExperimentConfig& c, std::string_view v) {
         c.trace.measurement.lever_arm_l = parse_quantity(v, "length");
       }},
      {"integration_time", [](ExperimentConfig& c, std::string_view v) {
         c.trace.measurement.integration_time_T = parse_quantity(v, "time");
       }},
      {"efficiency", [](ExperimentConfig& c, std::string_view v) {
         c.trace.measurement.efficiency = parse_plain(v);
       }},
      {"flipped_mode", [](ExperimentConfig& c, std::string_view v) {
         c.trace.measurement.flipped_mode_input = parse_bool(v);
       }},
      {"signal_frequency", [](ExperimentConfig& c, std::string_view v) {
         c.trace.signal_frequency = parse_quantity(v, "frequency");
       }},
      {"sample_rate", [](ExperimentConfig& c, std::string_view v) {
         c.trace.sample_rate = parse_quantity(v, "frequency");
       }},
      {"rbw", [](ExperimentConfig& c, std::string_view v) { c.trace.rbw = parse_quantity(v, "frequency"); }},
      {"duration", [](ExperimentConfig& c, std::string_view v) { c.trace.duration = parse_quantity(v, "time"); }},
      // Resolved after all keys are read, since it depends on rate and rbw.
      {"averages", [](ExperimentConfig&, std::string_view v) { (void)parse_count(v); }},
      {"window", [](ExperimentConfig& c, std::string_view v) {
         const std::string_view w = trim(v);
         if (w == "hann") {
           c.trace.window = spectra::Window::hann;
         } else if (w == "rect") {
           c.trace.window = spectra::Window::rect;
         } else {
           throw ConfigError("window must be hann or rect");
         }
       }},
      {"seed", [](ExperimentConfig& c, std::string_view v) {
         const std::string_view s = trim(v);
         std::uint64_t seed = 0;
         const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
         if (ec != std::errc{} || ptr != s.data() + s.size()) throw ConfigError("seed must be an unsigned integer");
         c.trace.seed = seed;
       }},
      {"noise", [](ExperimentConfig& c, std::string_view v) { c.trace.include_noise = parse_bool(v); }},
      {"signal", [](ExperimentConfig& c, std::string_view v) { c.trace.include_signal = parse_bool(v); }},
      {"sweep", [](ExperimentConfig& c, std::string_view v) {
         const std::string_view s = trim(v);
         if (s == "postselection") {
           c.sweep = SweepKind::postselection;
         } else if (s == "squeezing") {
           c.sweep = SweepKind::squeezing;
         } else {
           throw ConfigError("sweep must be postselection or squeezing");
         }
       }},
      {"probabilities", [](ExperimentConfig& c, std::string_view v) { c.probabilities = parse_list(v, "fraction"); }},
      {"squeeze_levels", [](ExperimentConfig& c, std::string_view v) {
         c.squeeze_levels_db = parse_list(v, "decibel");
       }},
      {"phase_points", [](ExperimentConfig& c, std::string_view v) { c.phase_points = parse_count(v); }},
      {"modes_max", [](ExperimentConfig& c, std::string_view v) { c.modes_max = parse_count(v); }},
  };
  return table;
}

}  // namespace

double parse_quantity(std::string_view value, std::string_view kind) {
  const auto& tables = unit_tables();
  const auto table = tables.find(kind);
  if (table == tables.end()) throw ConfigError("unknown quantity kind '" + std::string(kind) + "'");
  const auto [number, unit] = split_number(value);
  const auto factor = table->second.find(unit);
  if (factor == table->second.end()) {
    if (unit.empty()) throw ConfigError("missing " + std::string(kind) + " unit on '" + std::string(trim(value)) + "'");
    throw ConfigError("unknown " + std::string(kind) + " unit '" + std::string(unit) + "'");
  }
  return number * factor->second;
}

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys = [] {
    std::vector<std::string_view> k;
    for (const auto& [name, setter] : setters()) k.push_back(name);
    return k;
  }();
  return keys;
}

void ExperimentConfig::finalize() {
  ifo::MeasurementConfig& m = trace.measurement;
  try {
    m.squeeze.r = qs::db_to_r(squeeze_db);
    if (phi) {
      m.relative_phase_phi = *phi;
    } else {
      if (!(m.input_power.watts > 0.0)) throw DomainError("input power must be > 0");
      m.relative_phase_phi = ifo::phi_for_probability(m.output_power.watts / m.input_power.watts);
    }
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  for (double p : probabilities) {
    if (!(p > 0.0 && p < 1.0)) throw ConfigError("probabilities must lie in (0, 1)");
  }
  for (double db : squeeze_levels_db) {
    if (!(db >= 0.0)) throw ConfigError("squeeze_levels must be >= 0 dB");
  }
  if (phase_points < 2) throw ConfigError("phase_points must be >= 2");
  if (modes_max > hg::kMaxMode) throw ConfigError("modes_max must be <= 16");
  trace.validate();
}

ExperimentConfig parse_config(std::string_view text, ExperimentConfig base) {
  std::set<std::string, std::less<>> seen;
  std::optional<std::size_t> averages;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string prefix = "line " + std::to_string(line_no) + ": ";
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(prefix + "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto& table = setters();
    const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == key; });
    if (it == table.end()) throw ConfigError(prefix + "unknown key '" + std::string(key) + "'");
    if (!seen.insert(std::string(key)).second) throw ConfigError(prefix + "duplicate key '" + std::string(key) + "'");
    if (value.empty()) throw ConfigError(prefix + "key '" + std::string(key) + "': missing value");
    try {
      it->second(base, value);
      if (key == "averages") averages = parse_count(value);
    } catch (const ConfigError& e) {
      throw ConfigError(prefix + "key '" + std::string(key) + "': " + e.what());
    }
  }
  if (averages) {
    if (seen.contains("duration")) throw ConfigError("set either 'duration' or 'averages', not both");
    try {
      base.trace.duration = spectra::duration_for_averages(base.trace.sample_rate, base.trace.rbw, *averages);
    } catch (const DomainError& e) {
      throw ConfigError(std::string("key 'averages': ") + e.what());
    }
  }
  base.finalize();
  return base;
}

}  // namespace sqwva::cli
