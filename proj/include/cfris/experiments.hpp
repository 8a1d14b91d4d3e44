// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "cfris/channel.hpp"
#include "cfris/config.hpp"

namespace cfris {

/// SINR of every user for one channel realization, with the RIS aligned to the
/// UAV when the channel set carries elements and `use_ris` is set.
Eigen::VectorXd evaluate_realization(const SimConfig& cfg, const LargeScaleParams& ls, const ChannelSet& cs,
                                     bool use_ris);

struct TrialResult {
  std::uint64_t trial_index = 0;
  std::vector<double> rates_bps;
  std::vector<double> sinr;
  // Paired with/without-RIS UAV SINR ratio on the same realization; absent when N = 0.
  std::optional<double> ris_gain_db;
  std::uint32_t redraws = 0;
};

/// Place nodes, draw channels, align the RIS, precode, allocate power and
/// evaluate SINR and rate. Deterministic in (cfg, trial_index).
TrialResult run_trial(const SimConfig& cfg, std::uint64_t trial_index);

/// Runs trials 0..cfg.trials-1 on `workers` threads. Output is ordered by
/// trial index and independent of the worker count.
std::vector<TrialResult> run_trials(const SimConfig& cfg, int workers = 1);

/// Nearest-rank percentile: the ceil(p/100 * n)-th smallest sample.
double percentile_nearest_rank(std::span<const double> samples, double p);

/// 5th-percentile rate (the rate reached with 95 % probability). Needs at least 20 samples.
double likely_rate_95(std::span<const double> samples);

struct RunStats {
  std::uint64_t trials = 0;
  std::uint64_t rejected = 0;
};

// --- rate region -----------------------------------------------------------

struct RateRegionRow {
  std::string system;  // "cf-mimo", "ris-n<N>", "cf-mimo-no-uav"
  std::optional<double> kappa;
  double gue_rate_bps = 0.0;
  std::optional<double> uav_rate_bps;
};

/// 95 %-likely rates of GUE k = 1 and the UAV for each kappa and each system:
/// no RIS, RIS with every N > 0 in `n_list`, plus one no-UAV point where the
/// GUEs share the full AP power.
std::vector<RateRegionRow> rate_region(const SimConfig& cfg, std::span<const double> kappas,
                                       std::span<const int> n_list, int workers = 1, RunStats* stats = nullptr);

// --- rate CDF --------------------------------------------------------------

struct CdfScenario {
  double kappa = 0.1;
  double tilt_deg = 15.0;
  int n_ris = 0;

  std::string label() const;
};

struct CdfPoint {
  double rate_bps;
  double probability;
};

std::vector<CdfPoint> empirical_cdf(std::vector<double> samples);

struct CdfTable {
  CdfScenario scenario;
  std::vector<CdfPoint> uav;
  std::vector<CdfPoint> gue;  // GUE k = 1
};

std::vector<CdfTable> rate_cdf(const SimConfig& cfg, std::span<const CdfScenario> scenarios, int workers = 1,
                               RunStats* stats = nullptr);

// --- RIS gain --------------------------------------------------------------

struct RisGainRow {
  int n_ris = 0;
  double uav_height = 0.0;
  double mean_gain_db = 0.0;
  std::uint64_t samples = 0;
};

/// Mean paired UAV SINR gain in dB for every (N, H0) in the cross product.
std::vector<RisGainRow> ris_gain_sweep(const SimConfig& cfg, std::span<const int> n_list,
                                       std::span<const double> heights, int workers = 1, RunStats* stats = nullptr);

// --- experiment description ------------------------------------------------

enum class ExperimentKind { RateRegion, Cdf, RisGain };

std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string& name);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::RateRegion;
  SimConfig base;
  std::vector<double> kappas;
  std::vector<int> n_list;
  std::vector<double> heights;
  std::vector<CdfScenario> scenarios;

  /// Fills every empty sweep list with the reference sweep for `kind`.
  void fill_default_sweeps();
  void validate() const;
};

}  // namespace cfris
