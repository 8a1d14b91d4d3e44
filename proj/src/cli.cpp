// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#include "cfris/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

namespace cfris {

namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  text = trim(text);
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError(std::string(key) + ": cannot parse '" + std::string(text) + "' as a number");
  }
  return value;
}

template <typename T>
std::vector<T> parse_list(std::string_view key, std::string_view text) {
  std::vector<T> out;
  for (auto part : split(text, ',')) out.push_back(parse_number<T>(key, part));
  return out;
}

std::vector<CdfScenario> parse_scenarios(std::string_view key, std::string_view text) {
  std::vector<CdfScenario> out;
  for (auto entry : split(text, ',')) {
    const auto fields = split(entry, ':');
    if (fields.size() != 3) {
      throw ConfigError(std::string(key) + ": expected kappa:tilt_deg:n_ris, got '" + std::string(entry) + "'");
    }
    out.push_back({parse_number<double>(key, fields[0]), parse_number<double>(key, fields[1]),
                   parse_number<int>(key, fields[2])});
  }
  return out;
}

std::string num(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string fixed(double x, int precision) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, precision);
  return std::string(buf, ptr);
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_integral_v<T>) {
      out += std::to_string(values[i]);
    } else {
      out += num(values[i]);
    }
  }
  return out;
}

std::string join_scenarios(const std::vector<CdfScenario>& scenarios) {
  std::string out;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    if (i) out += ',';
    out += num(scenarios[i].kappa) + ':' + num(scenarios[i].tilt_deg) + ':' + std::to_string(scenarios[i].n_ris);
  }
  return out;
}

std::string mbps(double bps) { return fixed(bps / 1e6, 6); }

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

Json config_json(const ExperimentSpec& spec) {
  const SimConfig& c = spec.base;
  Json j;
  j["M"] = c.M;
  j["U"] = c.U;
  j["N"] = c.N;
  j["area_side"] = c.area_side;
  j["h_ap"] = c.h_ap;
  j["h_ris"] = c.h_ris;
  j["h_gue"] = c.h_gue;
  j["h_uav"] = c.h_uav;
  j["ris_x"] = c.ris_x_resolved();
  j["carrier_freq"] = c.carrier_freq;
  j["bandwidth"] = c.bandwidth;
  j["noise_power_dbm"] = c.noise_power_dbm;
  j["p_d"] = c.p_d;
  j["kappa"] = c.kappa;
  j["tilt_deg"] = c.tilt_deg;
  j["rho_db"] = c.rho_db;
  j["alpha"] = c.alpha;
  j["ant_beamwidth_deg"] = c.ant_beamwidth_deg;
  j["ant_sidelobe_db"] = c.ant_sidelobe_db;
  j["master_seed"] = c.master_seed;
  j["trials"] = c.trials;
  return j;
}

}  // namespace

void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view value) {
  SimConfig& c = spec.base;
  value = trim(value);
  auto as_double = [&] { return parse_number<double>(key, value); };
  auto as_int = [&] { return parse_number<int>(key, value); };

  if (key == "M") c.M = as_int();
  else if (key == "U") c.U = as_int();
  else if (key == "N") c.N = as_int();
  else if (key == "trials") c.trials = as_int();
  else if (key == "master_seed") c.master_seed = parse_number<std::uint64_t>(key, value);
  else if (key == "area_side") c.area_side = as_double();
  else if (key == "h_ap") c.h_ap = as_double();
  else if (key == "h_ris") c.h_ris = as_double();
  else if (key == "h_gue") c.h_gue = as_double();
  else if (key == "h_uav") c.h_uav = as_double();
  else if (key == "ris_x") c.ris_x = value == "center" ? std::nullopt : std::optional<double>(as_double());
  else if (key == "carrier_freq") c.carrier_freq = as_double();
  else if (key == "bandwidth") c.bandwidth = as_double();
  else if (key == "noise_power_dbm") c.noise_power_dbm = as_double();
  else if (key == "p_d") c.p_d = as_double();
  else if (key == "kappa") c.kappa = as_double();
  else if (key == "tilt_deg") c.tilt_deg = as_double();
  else if (key == "rho_db") c.rho_db = as_double();
  else if (key == "alpha") c.alpha = as_double();
  else if (key == "ant_beamwidth_deg") c.ant_beamwidth_deg = as_double();
  else if (key == "ant_sidelobe_db") c.ant_sidelobe_db = as_double();
  else if (key == "experiment") spec.kind = parse_experiment_kind(std::string(value));
  else if (key == "kappa_list") spec.kappas = parse_list<double>(key, value);
  else if (key == "n_list") spec.n_list = parse_list<int>(key, value);
  else if (key == "height_list") spec.heights = parse_list<double>(key, value);
  else if (key == "cdf_scenarios") spec.scenarios = parse_scenarios(key, value);
  else throw ConfigError("unknown key '" + std::string(key) + "'");
}

void apply_config_text(ExperimentSpec& spec, std::string_view text, std::string_view source) {
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = std::string(source) + ":" + std::to_string(line_no) + ": ";
    if (eq == std::string_view::npos) throw ParseError(where + "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError(where + "missing key");
    try {
      apply_setting(spec, key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ParseError(where + e.what());
    }
  }
}

ExperimentSpec load_config(const std::optional<std::filesystem::path>& path, const ConfigOverrides& ov) {
  ExperimentSpec spec;
  if (path) {
    std::ifstream in(*path, std::ios::binary);
    if (!in) throw IoError("cannot read config file " + path->string());
    std::stringstream buf;
    buf << in.rdbuf();
    apply_config_text(spec, buf.str(), path->string());
  }

  if (ov.experiment) spec.kind = parse_experiment_kind(*ov.experiment);
  if (ov.seed) spec.base.master_seed = *ov.seed;
  if (ov.trials) spec.base.trials = *ov.trials;
  if (ov.kappa) {
    spec.kappas = parse_list<double>("kappa", *ov.kappa);
    spec.base.kappa = spec.kappas.front();
  }
  if (ov.n_ris) {
    spec.n_list = parse_list<int>("N", *ov.n_ris);
    spec.base.N = spec.n_list.front();
  }
  if (ov.uav_height) spec.base.h_uav = *ov.uav_height;
  if (ov.heights) spec.heights = parse_list<double>("height_list", *ov.heights);
  if (ov.tilt_deg) spec.base.tilt_deg = *ov.tilt_deg;
  if (ov.scenarios) spec.scenarios = parse_scenarios("cdf_scenarios", *ov.scenarios);
  for (const auto& [key, value] : ov.settings) apply_setting(spec, key, value);

  spec.fill_default_sweeps();
  if (ov.no_ris) {
    if (spec.kind == ExperimentKind::RisGain) throw ConfigError("N: --no-ris cannot be combined with ris-gain");
    spec.base.N = 0;
    spec.n_list = {0};
    for (auto& sc : spec.scenarios) sc.n_ris = 0;
  }
  spec.validate();
  return spec;
}

std::string format_config(const ExperimentSpec& spec) {
  std::string out = "experiment = " + to_string(spec.kind) + "\n";
  const Json cfg = config_json(spec);
  for (const auto& [key, value] : cfg.items()) {
    out += key + " = ";
    out += value.is_number_float() ? num(value.get<double>()) : value.dump();
    out += '\n';
  }
  if (!spec.kappas.empty()) out += "kappa_list = " + join(spec.kappas) + "\n";
  if (!spec.n_list.empty()) out += "n_list = " + join(spec.n_list) + "\n";
  if (!spec.heights.empty()) out += "height_list = " + join(spec.heights) + "\n";
  if (!spec.scenarios.empty()) out += "cdf_scenarios = " + join_scenarios(spec.scenarios) + "\n";
  return out;
}

std::string rate_region_csv(const std::vector<RateRegionRow>& rows) {
  std::string out = "system,kappa,gue_rate_mbps,uav_rate_mbps\n";
  for (const auto& r : rows) {
    out += r.system + ',' + (r.kappa ? num(*r.kappa) : "") + ',' + mbps(r.gue_rate_bps) + ',' +
           (r.uav_rate_bps ? mbps(*r.uav_rate_bps) : "") + '\n';
  }
  return out;
}

std::string rate_cdf_csv(const std::vector<CdfTable>& tables) {
  std::string out = "scenario,kappa,tilt_deg,n_ris,user,rate_mbps,cdf\n";
  for (const auto& t : tables) {
    const std::string prefix = t.scenario.label() + ',' + num(t.scenario.kappa) + ',' + num(t.scenario.tilt_deg) +
                               ',' + std::to_string(t.scenario.n_ris) + ',';
    for (const auto& p : t.uav) out += prefix + "uav," + mbps(p.rate_bps) + ',' + num(p.probability) + '\n';
    for (const auto& p : t.gue) out += prefix + "gue1," + mbps(p.rate_bps) + ',' + num(p.probability) + '\n';
  }
  return out;
}

std::string rate_cdf_summary_csv(const std::vector<CdfTable>& tables) {
  std::string out = "scenario,kappa,tilt_deg,n_ris,user,median_mbps,rate95_mbps\n";
  for (const auto& t : tables) {
    const std::string prefix = t.scenario.label() + ',' + num(t.scenario.kappa) + ',' + num(t.scenario.tilt_deg) +
                               ',' + std::to_string(t.scenario.n_ris) + ',';
    for (const auto& [name, points] : {std::pair{"uav", &t.uav}, std::pair{"gue1", &t.gue}}) {
      std::vector<double> rates;
      for (const auto& p : *points) rates.push_back(p.rate_bps);
      out += prefix + name + ',' + mbps(percentile_nearest_rank(rates, 50.0)) + ',' +
             (rates.size() >= 20 ? mbps(likely_rate_95(rates)) : "") + '\n';
    }
  }
  return out;
}

std::string ris_gain_csv(const std::vector<RisGainRow>& rows) {
  std::string out = "n_ris,uav_height_m,ris_gain_db,samples\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n_ris) + ',' + num(r.uav_height) + ',' + fixed(r.mean_gain_db, 6) + ',' +
           std::to_string(r.samples) + '\n';
  }
  return out;
}

RunReport run_experiment(const ExperimentSpec& spec, const RunSettings& settings) {
  spec.validate();
  std::error_code ec;
  std::filesystem::create_directories(settings.out_dir, ec);
  if (ec || !std::filesystem::is_directory(settings.out_dir)) {
    throw IoError("cannot create output directory " + settings.out_dir.string());
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  std::vector<std::pair<std::string, std::string>> outputs;
  switch (spec.kind) {
    case ExperimentKind::RateRegion: {
      const auto rows = rate_region(spec.base, spec.kappas, spec.n_list, settings.workers, &report.stats);
      outputs.emplace_back("rate_region.csv", rate_region_csv(rows));
      break;
    }
    case ExperimentKind::Cdf: {
      const auto tables = rate_cdf(spec.base, spec.scenarios, settings.workers, &report.stats);
      outputs.emplace_back("rate_cdf.csv", rate_cdf_csv(tables));
      outputs.emplace_back("rate_cdf_summary.csv", rate_cdf_summary_csv(tables));
      break;
    }
    case ExperimentKind::RisGain: {
      const auto rows = ris_gain_sweep(spec.base, spec.n_list, spec.heights, settings.workers, &report.stats);
      outputs.emplace_back("ris_gain.csv", ris_gain_csv(rows));
      break;
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;

  for (const auto& [name, content] : outputs) {
    const auto path = settings.out_dir / name;
    write_file(path, content);
    report.files.push_back(path);
  }

  Json manifest;
  manifest["tool"] = "cfris";
  manifest["version"] = std::string(kToolVersion);
  manifest["experiment"] = to_string(spec.kind);
  manifest["master_seed"] = spec.base.master_seed;
  manifest["config"] = config_json(spec);
  Json sweeps;
  if (!spec.kappas.empty()) sweeps["kappa_list"] = spec.kappas;
  if (!spec.n_list.empty()) sweeps["n_list"] = spec.n_list;
  if (!spec.heights.empty()) sweeps["height_list"] = spec.heights;
  if (!spec.scenarios.empty()) {
    Json list = Json::array();
    for (const auto& sc : spec.scenarios) list.push_back({{"kappa", sc.kappa}, {"tilt_deg", sc.tilt_deg}, {"n_ris", sc.n_ris}});
    sweeps["cdf_scenarios"] = list;
  }
  manifest["sweeps"] = sweeps;
  manifest["config_text"] = format_config(spec);
  manifest["workers"] = settings.workers;
  manifest["trials_run"] = report.stats.trials;
  manifest["rejected_trials"] = report.stats.rejected;
  manifest["duration_s"] = report.elapsed.count();
  Json files = Json::array();
  for (const auto& f : report.files) files.push_back(f.filename().string());
  manifest["outputs"] = files;

  const auto manifest_path = settings.out_dir / "manifest.json";
  write_file(manifest_path, manifest.dump(2) + "\n");
  report.files.push_back(manifest_path);
  return report;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Monte-Carlo downlink simulator for an RIS-assisted cell-free MIMO network serving GUEs and a UAV",
               "cfris"};
  app.set_version_flag("--version", std::string(kToolVersion));

  std::optional<std::string> config_path;
  ConfigOverrides ov;
  RunSettings settings;
  settings.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::string> raw_settings;
  std::string out_dir = settings.out_dir.string();

  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--experiment", ov.experiment, "rate-region | cdf | ris-gain");
  app.add_option("--seed", ov.seed, "master seed");
  app.add_option("--trials", ov.trials, "trials per sweep point");
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--workers", settings.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--kappa", ov.kappa, "UAV power fraction, or a comma list for rate-region");
  app.add_option("--n-ris", ov.n_ris, "RIS element count, or a comma list");
  app.add_option("--uav-height", ov.uav_height, "UAV height [m]");
  app.add_option("--heights", ov.heights, "UAV heights for ris-gain, comma list");
  app.add_option("--tilt-deg", ov.tilt_deg, "AP down-tilt [deg]");
  app.add_option("--scenarios", ov.scenarios, "cdf scenarios as kappa:tilt:n_ris,...");
  app.add_flag("--no-ris", ov.no_ris, "disable the RIS");
  app.add_option("--set", raw_settings, "any config key as key=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    for (const auto& s : raw_settings) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + s + "'");
      ov.settings.emplace_back(std::string(trim(std::string_view(s).substr(0, eq))), s.substr(eq + 1));
    }
    settings.out_dir = out_dir;
    const ExperimentSpec spec =
        load_config(config_path ? std::optional<std::filesystem::path>(*config_path) : std::nullopt, ov);
    const RunReport report = run_experiment(spec, settings);
    for (const auto& f : report.files) std::cout << f.string() << '\n';
    if (report.stats.rejected > 0) std::cerr << "warning: " << report.stats.rejected << " trials redrawn\n";
    return 0;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace cfris
