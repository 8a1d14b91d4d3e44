// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfris/experiments.hpp"

namespace cfris {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Malformed configuration text. The message carries "<source>:<line>:".
class ParseError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Command-line overrides, applied on top of the config file.
struct ConfigOverrides {
  std::optional<std::string> experiment;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::string> kappa;   // one value or a comma list
  std::optional<std::string> n_ris;   // one value or a comma list
  std::optional<double> uav_height;
  std::optional<std::string> heights;
  std::optional<double> tilt_deg;
  std::optional<std::string> scenarios;
  bool no_ris = false;
  std::vector<std::pair<std::string, std::string>> settings;  // --set key=value
};

/// Applies `key = value` lines onto `spec`. Blank lines and '#' comments are
/// ignored; unknown keys and bad values raise ParseError with the line number.
void apply_config_text(ExperimentSpec& spec, std::string_view text, std::string_view source = "<config>");

/// Applies one setting. Throws ConfigError on an unknown key or a bad value.
void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view value);

/// Defaults, then the file (when given), then the flags. The result has its
/// sweeps filled and is validated.
ExperimentSpec load_config(const std::optional<std::filesystem::path>& path, const ConfigOverrides& overrides);

/// Renders every resolved parameter as config text that reloads to the same spec.
std::string format_config(const ExperimentSpec& spec);

struct RunSettings {
  std::filesystem::path out_dir = "results";
  int workers = 1;
};

struct RunReport {
  std::vector<std::filesystem::path> files;
  RunStats stats;
  std::chrono::duration<double> elapsed{};
};

/// Runs the experiment and writes its CSV tables plus manifest.json into
/// `settings.out_dir`. Throws IoError when the directory is not writable.
RunReport run_experiment(const ExperimentSpec& spec, const RunSettings& settings);

// CSV renderers, exposed for tests.
std::string rate_region_csv(const std::vector<RateRegionRow>& rows);
std::string rate_cdf_csv(const std::vector<CdfTable>& tables);
std::string rate_cdf_summary_csv(const std::vector<CdfTable>& tables);
std::string ris_gain_csv(const std::vector<RisGainRow>& rows);

/// Entry point for the `cfris` binary. Exit codes: 0 ok, 1 validation, 2 I/O.
int cli_main(int argc, char** argv);

}  // namespace cfris
