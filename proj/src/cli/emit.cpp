#include "sqwva/cli/emit.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace sqwva::cli {

namespace {

using Json = nlohmann::ordered_json;

Json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return std::strtod(format_number(v).c_str(), nullptr);
}

double number_from(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw IoError("unexpected string '" + s + "' where a number was expected");
  }
  return j.get<double>();
}

Json pairs(const std::vector<std::pair<std::string, double>>& items) {
  Json o = Json::object();
  for (const auto& [k, v] : items) o[k] = number(v);
  return o;
}

std::vector<std::pair<std::string, double>> pairs_from(const Json& o) {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [k, v] : o.items()) out.emplace_back(k, number_from(v));
  return out;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void emit_csv(const RunResult& r, std::ostream& out) {
  if (!r.columns.empty()) {
    for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << r.columns[i];
    out << '\n';
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
      out << '\n';
    }
    return;
  }
  out << "quantity,value\n";
  for (const auto& [k, v] : r.scalars) out << k << ',' << format_number(v) << '\n';
}

void emit_json(const RunResult& r, std::ostream& out) {
  Json j;
  j["subcommand"] = r.subcommand;
  j["preset"] = r.preset;
  j["version"] = r.version;
  j["seed"] = r.seed;
  j["config"] = pairs(r.config);
  j["settings"] = Json::object();
  for (const auto& [k, v] : r.settings) j["settings"][k] = v;
  j["scalars"] = pairs(r.scalars);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr = Json::array();
    for (double v : row) jr.push_back(number(v));
    rows.push_back(std::move(jr));
  }
  j["table"] = {{"columns", r.columns}, {"rows", std::move(rows)}};
  j["warnings"] = r.warnings;
  out << j.dump(2) << '\n';
}

std::string to_csv(const RunResult& r) {
  std::ostringstream os;
  emit_csv(r, os);
  return os.str();
}

std::string to_json(const RunResult& r) {
  std::ostringstream os;
  emit_json(r, os);
  return os.str();
}

RunResult from_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    RunResult r;
    r.subcommand = j.at("subcommand").get<std::string>();
    r.preset = j.at("preset").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.config = pairs_from(j.at("config"));
    for (const auto& [k, v] : j.at("settings").items()) r.settings[k] = v.get<std::string>();
    r.scalars = pairs_from(j.at("scalars"));
    r.columns = j.at("table").at("columns").get<std::vector<std::string>>();
    for (const auto& jr : j.at("table").at("rows")) {
      std::vector<double> row;
      for (const auto& v : jr) row.push_back(number_from(v));
      r.rows.push_back(std::move(row));
    }
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed result document: ") + e.what());
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << contents;
  f.flush();
  if (!f) throw IoError("failed writing '" + path + "'");
}

}  // namespace sqwva::cli
