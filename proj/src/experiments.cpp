// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#include "cfris/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "cfris/beamforming.hpp"
#include "cfris/geometry.hpp"
#include "cfris/link.hpp"

namespace cfris {

namespace {

constexpr std::uint32_t kMaxAttempts = 16;

std::vector<double> user_rates(const std::vector<TrialResult>& results, std::size_t k) {
  std::vector<double> out;
  out.reserve(results.size());
  for (const auto& r : results) out.push_back(r.rates_bps.at(k));
  return out;
}

void accumulate(RunStats* stats, const std::vector<TrialResult>& results) {
  if (stats == nullptr) return;
  stats->trials += results.size();
  for (const auto& r : results) stats->rejected += r.redraws;
}

}  // namespace

Eigen::VectorXd evaluate_realization(const SimConfig& cfg, const LargeScaleParams& ls, const ChannelSet& cs,
                                     bool use_ris) {
  RisConfig ris = RisConfig::none();
  if (use_ris && ls.num_elements() > 0) ris = ris_align_uav(cs.h_ris, cs.h_ris_user.col(0), cs.h_direct.col(0));

  const MatrixXcd g = aggregate_channel(cs, ris);
  const MatrixXcd w = cb_precoders(g);
  const MatrixXd gamma = gamma_analytic(ls, ris);
  const PowerAllocation pa = ppa_allocate(gamma, cfg.kappa, cfg.p_d);
  return sinr_all(g, w, pa.eta, cfg.noise_power_w());
}

TrialResult run_trial(const SimConfig& cfg, std::uint64_t trial_index) {
  TrialResult result;
  result.trial_index = trial_index;
  for (std::uint32_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng = trial_stream(cfg.master_seed, trial_index, attempt);
    const NetworkLayout layout = place_nodes(cfg, rng);
    const LargeScaleParams ls = large_scale(layout, cfg);
    const ChannelSet cs = draw_channels(ls, rng);
    try {
      const Eigen::VectorXd sinr = evaluate_realization(cfg, ls, cs, true);
      const LinkMetrics lm = link_metrics(sinr, cfg.bandwidth);
      result.sinr.assign(lm.sinr.begin(), lm.sinr.end());
      result.rates_bps.assign(lm.rate_bps.begin(), lm.rate_bps.end());
      if (cfg.N > 0) {
        const Eigen::VectorXd baseline = evaluate_realization(cfg, ls, cs, false);
        result.ris_gain_db = ris_gain_db(sinr(0), baseline(0));
      }
      return result;
    } catch (const DegenerateGeometry&) {
      ++result.redraws;
    }
  }
  throw DegenerateGeometry("trial " + std::to_string(trial_index) + ": no valid geometry after " +
                           std::to_string(kMaxAttempts) + " draws");
}

std::vector<TrialResult> run_trials(const SimConfig& cfg, int workers) {
  cfg.validate();
  const auto n = static_cast<std::uint64_t>(cfg.trials);
  std::vector<TrialResult> results(n);
  const auto threads = static_cast<std::uint64_t>(std::clamp<std::int64_t>(workers, 1, static_cast<std::int64_t>(n)));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::uint64_t i = next++; i < n; i = next++) {
      try {
        results[i] = run_trial(cfg, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };

  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::uint64_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

double percentile_nearest_rank(std::span<const double> samples, double p) {
  if (samples.empty()) throw ConfigError("percentile: no samples");
  if (!(p > 0.0 && p <= 100.0)) throw ConfigError("percentile: p must lie in (0, 100]");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  // Nudge down before ceil so exact products such as 0.05 * 40 stay at 2.
  auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * n - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

double likely_rate_95(std::span<const double> samples) {
  if (samples.size() < 20) throw ConfigError("likely_rate_95: need at least 20 samples");
  return percentile_nearest_rank(samples, 5.0);
}

std::vector<RateRegionRow> rate_region(const SimConfig& cfg, std::span<const double> kappas,
                                       std::span<const int> n_list, int workers, RunStats* stats) {
  std::vector<int> systems{0};
  for (int n : n_list) {
    if (n > 0) systems.push_back(n);
  }

  std::vector<RateRegionRow> rows;
  for (int n : systems) {
    for (double kappa : kappas) {
      SimConfig c = cfg;
      c.kappa = kappa;
      c.N = n;
      const auto results = run_trials(c, workers);
      accumulate(stats, results);
      rows.push_back({n == 0 ? "cf-mimo" : "ris-n" + std::to_string(n), kappa,
                      likely_rate_95(user_rates(results, 1)), likely_rate_95(user_rates(results, 0))});
    }
  }

  // No UAV: kappa = 0 leaves the UAV stream silent, so GUEs share all of p_d.
  SimConfig c = cfg;
  c.kappa = 0.0;
  c.N = 0;
  const auto results = run_trials(c, workers);
  accumulate(stats, results);
  rows.push_back({"cf-mimo-no-uav", std::nullopt, likely_rate_95(user_rates(results, 1)), std::nullopt});
  return rows;
}

std::string CdfScenario::label() const {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << "kappa=" << kappa << ";tilt=" << tilt_deg << ";n_ris=" << n_ris;
  return os.str();
}

std::vector<CdfPoint> empirical_cdf(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const auto n = static_cast<double>(samples.size());
  std::vector<CdfPoint> out;
  out.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) out.push_back({samples[i], static_cast<double>(i + 1) / n});
  return out;
}

std::vector<CdfTable> rate_cdf(const SimConfig& cfg, std::span<const CdfScenario> scenarios, int workers,
                               RunStats* stats) {
  std::vector<CdfTable> tables;
  for (const auto& sc : scenarios) {
    SimConfig c = cfg;
    c.kappa = sc.kappa;
    c.tilt_deg = sc.tilt_deg;
    c.N = sc.n_ris;
    const auto results = run_trials(c, workers);
    accumulate(stats, results);
    tables.push_back({sc, empirical_cdf(user_rates(results, 0)), empirical_cdf(user_rates(results, 1))});
  }
  return tables;
}

std::vector<RisGainRow> ris_gain_sweep(const SimConfig& cfg, std::span<const int> n_list,
                                       std::span<const double> heights, int workers, RunStats* stats) {
  std::vector<RisGainRow> rows;
  for (double h : heights) {
    for (int n : n_list) {
      if (n <= 0) throw ConfigError("n_list: the RIS gain needs N >= 1");
      SimConfig c = cfg;
      c.h_uav = h;
      c.N = n;
      const auto results = run_trials(c, workers);
      accumulate(stats, results);
      RisGainRow row{n, h, 0.0, 0};
      for (const auto& r : results) {
        if (!r.ris_gain_db) continue;
        row.mean_gain_db += *r.ris_gain_db;
        ++row.samples;
      }
      row.mean_gain_db = row.samples > 0 ? row.mean_gain_db / static_cast<double>(row.samples) : std::nan("");
      rows.push_back(row);
    }
  }
  return rows;
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::RateRegion:
      return "rate-region";
    case ExperimentKind::Cdf:
      return "cdf";
    case ExperimentKind::RisGain:
      return "ris-gain";
  }
  return "unknown";
}

ExperimentKind parse_experiment_kind(const std::string& name) {
  if (name == "rate-region") return ExperimentKind::RateRegion;
  if (name == "cdf") return ExperimentKind::Cdf;
  if (name == "ris-gain") return ExperimentKind::RisGain;
  throw ConfigError("experiment: expected rate-region, cdf or ris-gain, got '" + name + "'");
}

void ExperimentSpec::fill_default_sweeps() {
  switch (kind) {
    case ExperimentKind::RateRegion:
      if (kappas.empty()) kappas = {0.02, 0.05, 0.1, 0.15};
      if (n_list.empty()) n_list = {15, 30};
      break;
    case ExperimentKind::Cdf:
      if (scenarios.empty()) scenarios = {{0.1, 15.0, 0}, {0.33, -5.0, 0}, {0.1, 15.0, 20}};
      break;
    case ExperimentKind::RisGain:
      if (n_list.empty()) n_list = {20, 30, 40, 50, 60};
      if (heights.empty()) heights = {16.0, 100.0, 300.0};
      break;
  }
}

void ExperimentSpec::validate() const {
  base.validate();
  auto check = [this](SimConfig c) { c.validate(); };
  switch (kind) {
    case ExperimentKind::RateRegion:
      if (kappas.empty()) throw ConfigError("kappa_list: must not be empty");
      if (n_list.empty()) throw ConfigError("n_list: must not be empty");
      for (double k : kappas) {
        if (!(k >= 0.0 && k <= 1.0)) throw ConfigError("kappa_list: every kappa must lie in [0, 1]");
      }
      for (int n : n_list) {
        if (n < 0) throw ConfigError("n_list: N must be >= 0");
      }
      if (base.trials < 20) throw ConfigError("trials: the 95%-likely rate needs at least 20 trials");
      break;
    case ExperimentKind::Cdf:
      if (scenarios.empty()) throw ConfigError("cdf_scenarios: must not be empty");
      for (const auto& sc : scenarios) {
        SimConfig c = base;
        c.kappa = sc.kappa;
        c.tilt_deg = sc.tilt_deg;
        c.N = sc.n_ris;
        try {
          check(c);
        } catch (const ConfigError& e) {
          throw ConfigError(std::string("cdf_scenarios: ") + e.what());
        }
      }
      break;
    case ExperimentKind::RisGain:
      if (n_list.empty()) throw ConfigError("n_list: must not be empty");
      if (heights.empty()) throw ConfigError("height_list: must not be empty");
      for (int n : n_list) {
        if (n < 1) throw ConfigError("n_list: the RIS gain needs N >= 1");
      }
      for (double h : heights) {
        if (!(std::isfinite(h) && h >= 0.0)) throw ConfigError("height_list: heights must be >= 0");
      }
      break;
  }
}

}  // namespace cfris
