#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "ferri/errors.hpp"
#include "ferri/sweep.hpp"

namespace ferri {

using nlohmann::json;

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string emit_csv(const SweepResult& result) {
  std::string out = "twice_s,temperature,correlator,negativity,method\n";
  for (const auto& r : result.records) {
    out += std::to_string(r.twice_s);
    out += ',';
    out += format_real(r.temperature);
    out += ',';
    out += format_real(r.correlator);
    out += ',';
    out += format_real(r.negativity);
    out += ',';
    out += to_string(r.method);
    out += '\n';
  }
  return out;
}

namespace {

json config_to_json(const SweepConfig& cfg) {
  json spins = json::array();
  for (auto s : cfg.twice_s_list) spins.push_back(s.twice());
  return {{"twice_s_list", spins},
          {"cells", cfg.cells},
          {"boundary", std::string(to_string(cfg.boundary))},
          {"t_min", cfg.t_min},
          {"t_max", cfg.t_max},
          {"t_steps", cfg.t_steps},
          {"method", std::string(to_string(cfg.method))},
          {"format", std::string(to_string(cfg.format))},
          {"coupling", cfg.coupling}};
}

SweepConfig config_from_json(const json& j) {
  SweepConfig cfg;
  cfg.twice_s_list.clear();
  for (const auto& s : j.at("twice_s_list")) cfg.twice_s_list.emplace_back(s.get<int>());
  cfg.cells = j.at("cells").get<int>();
  cfg.boundary = parse_boundary(j.at("boundary").get<std::string>());
  cfg.t_min = j.at("t_min").get<double>();
  cfg.t_max = j.at("t_max").get<double>();
  cfg.t_steps = j.at("t_steps").get<int>();
  cfg.method = parse_method(j.at("method").get<std::string>());
  cfg.format = parse_format(j.at("format").get<std::string>());
  cfg.coupling = j.at("coupling").get<double>();
  return cfg;
}

}  // namespace

std::string emit_json(const SweepResult& result) {
  const auto& md = result.metadata;
  json meta = {{"config", config_to_json(md.config)},
               {"tool_version", md.tool_version},
               {"wall_time_seconds", md.wall_time_seconds}};
  json thresholds = json::array();
  for (const auto& t : md.thresholds) thresholds.push_back({{"twice_s", t.twice_s}, {"temperature", t.temperature}});
  meta["thresholds"] = thresholds;
  if (md.max_abs_difference) meta["max_abs_difference"] = *md.max_abs_difference;

  json records = json::array();
  for (const auto& r : result.records) {
    json rec = {{"twice_s", r.twice_s},
                {"temperature", r.temperature},
                {"correlator", r.correlator},
                {"negativity", r.negativity},
                {"method", std::string(to_string(r.method))}};
    if (r.abs_difference) rec["abs_difference"] = *r.abs_difference;
    records.push_back(std::move(rec));
  }
  return json{{"metadata", meta}, {"records", records}}.dump(2) + "\n";
}

std::string emit(const SweepResult& result, Format format) {
  return format == Format::csv ? emit_csv(result) : emit_json(result);
}

SweepResult parse_json(std::string_view text) {
  try {
    const auto doc = json::parse(text);
    SweepResult result;
    const auto& meta = doc.at("metadata");
    result.metadata.config = config_from_json(meta.at("config"));
    result.metadata.tool_version = meta.at("tool_version").get<std::string>();
    result.metadata.wall_time_seconds = meta.at("wall_time_seconds").get<double>();
    for (const auto& t : meta.at("thresholds"))
      result.metadata.thresholds.push_back({t.at("twice_s").get<int>(), t.at("temperature").get<double>()});
    if (meta.contains("max_abs_difference"))
      result.metadata.max_abs_difference = meta.at("max_abs_difference").get<double>();
    for (const auto& r : doc.at("records")) {
      Record rec;
      rec.twice_s = r.at("twice_s").get<int>();
      rec.temperature = r.at("temperature").get<double>();
      rec.correlator = r.at("correlator").get<double>();
      rec.negativity = r.at("negativity").get<double>();
      rec.method = parse_method(r.at("method").get<std::string>());
      if (r.contains("abs_difference")) rec.abs_difference = r.at("abs_difference").get<double>();
      result.records.push_back(rec);
    }
    return result;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed sweep JSON: ") + e.what());
  }
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes << std::flush;
    if (!std::cout) throw OutputError("failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot open '" + path + "' for writing");
  out << bytes;
  out.flush();
  if (!out) throw OutputError("failed writing '" + path + "'");
}

}  // namespace ferri
