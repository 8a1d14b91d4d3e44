// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../oracles.hpp"
#include "cfris/beamforming.hpp"
#include "cfris/cli.hpp"
#include "cfris/experiments.hpp"
#include "cfris/geometry.hpp"
#include "cfris/link.hpp"
#include "cfris/random.hpp"

using namespace cfris;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

MatrixXcd gaussian(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  MatrixXcd out(rows, cols);
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = circular_normal(rng);
  return out;
}

int workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

// 1. PPA meets the per-AP budget with equality.
Outcome power_conservation() {
  Rng meta(1001);
  std::uniform_int_distribution<int> m_dist(1, 40), u_dist(1, 8), n_dist(0, 64);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    SimConfig cfg;
    cfg.M = m_dist(meta);
    cfg.U = u_dist(meta);
    cfg.N = n_dist(meta);
    cfg.kappa = unit(meta);
    cfg.p_d = 0.01 + 10.0 * unit(meta);
    cfg.h_uav = 20.0 + 280.0 * unit(meta);
    cfg.tilt_deg = -10.0 + 30.0 * unit(meta);
    cfg.area_side = 20.0 + 200.0 * unit(meta);
    Rng rng = trial_stream(77, static_cast<std::uint64_t>(i));
    const LargeScaleParams ls = large_scale(place_nodes(cfg, rng), cfg);
    const ChannelSet cs = draw_channels(ls, rng);
    const RisConfig ris =
        cfg.N > 0 ? ris_align_uav(cs.h_ris, cs.h_ris_user.col(0), cs.h_direct.col(0)) : RisConfig::none();
    const MatrixXd gamma = gamma_analytic(ls, ris);
    const PowerAllocation pa = ppa_allocate(gamma, cfg.kappa, cfg.p_d);
    for (int m = 0; m < cfg.M; ++m) {
      worst = std::max(worst, std::abs(pa.p_dl.row(m).sum() - cfg.p_d) / cfg.p_d);
      worst = std::max(worst, std::abs((pa.eta.row(m).array() * gamma.row(m).array()).sum() - cfg.p_d) / cfg.p_d);
    }
  }
  return {worst <= 1e-12, "worst relative budget error " + fmt("%.2e", worst)};
}

// 2. Alignment is exact and optimal with one AP.
Outcome alignment_m1() {
  Rng rng(2002);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + i % 64;
    const MatrixXcd h_ris = gaussian(rng, 1, n);
    const VectorXcd h_ris_uav = gaussian(rng, n, 1);
    const VectorXcd h_uav = gaussian(rng, 1, 1);
    const MatrixXcd r = cascade_matrix(h_ris, h_ris_uav);
    const std::complex<double> g = h_uav(0) + (r * ris_align_uav(h_ris, h_ris_uav, h_uav).v)(0);
    const double expect = std::abs(h_uav(0)) + r.cwiseAbs().sum();
    worst = std::max(worst, std::abs(std::abs(g) - expect) / expect);
  }

  const int n = 16;
  const MatrixXcd h_ris = gaussian(rng, 1, n);
  const VectorXcd h_ris_uav = gaussian(rng, n, 1);
  const VectorXcd h_uav = gaussian(rng, 1, 1);
  const MatrixXcd r = cascade_matrix(h_ris, h_ris_uav);
  const RisConfig ris = ris_align_uav(h_ris, h_ris_uav, h_uav);
  const VectorXcd g = h_uav + r * ris.v;
  const double aligned = uav_received_power(r, ris, h_uav, g.conjugate());
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  double best_random = 0.0;
  VectorXcd v(n);
  for (int i = 0; i < 100000; ++i) {
    for (int k = 0; k < n; ++k) v(k) = std::polar(1.0, phase(rng));
    best_random = std::max(best_random, oracle::cb_power(r, v, h_uav));
  }
  const bool pass = worst <= 1e-9 && best_random <= aligned * (1.0 + 1e-9);
  return {pass, "worst |g0| error " + fmt("%.2e", worst) + ", best random / aligned " +
                    fmt("%.6f", best_random / aligned)};
}

// 3. Analytic gamma vs sampled E|g|^2.
Outcome gamma_vs_monte_carlo() {
  SimConfig cfg;
  cfg.M = 3;
  cfg.U = 2;
  cfg.N = 8;
  Rng rng = trial_stream(3003, 0);
  const LargeScaleParams ls = large_scale(place_nodes(cfg, rng), cfg);
  const ChannelSet cs = draw_channels(ls, rng);
  const RisConfig ris = ris_align_uav(cs.h_ris, cs.h_ris_user.col(0), cs.h_direct.col(0));
  const MatrixXd gamma = gamma_analytic(ls, ris);
  const MatrixXd mc = oracle::gamma_monte_carlo(ls, ris.v, 100000, 3004);
  const double worst = ((gamma - mc).cwiseAbs().cwiseQuotient(gamma)).maxCoeff();
  return {worst < 0.02, "worst relative error " + fmt("%.4f", worst)};
}

// 4. SINR formula vs transmitted symbols.
Outcome sinr_vs_symbols() {
  using cd = std::complex<double>;
  MatrixXcd g(2, 2);
  g << cd(0.8, -0.6), cd(0.3, 0.4), cd(-0.2, 0.9), cd(1.2, -0.1);
  MatrixXd eta(2, 2);
  eta << 0.5, 0.4, 0.3, 0.6;
  const double noise = 0.08;
  const MatrixXcd w = cb_precoders(g);
  const VectorXd analytic = sinr_all(g, w, eta, noise);
  const VectorXd measured = oracle::symbol_level_sinr(g, w, eta, noise, 1000000, 4004);
  const double worst = ((analytic - measured).cwiseAbs().cwiseQuotient(analytic)).maxCoeff();
  return {worst < 0.05, "SINR " + fmt("%.4f", analytic(0)) + "/" + fmt("%.4f", analytic(1)) + " vs symbols " +
                            fmt("%.4f", measured(0)) + "/" + fmt("%.4f", measured(1)) + ", worst " +
                            fmt("%.4f", worst)};
}

// 5. RIS gain vs N and UAV height.
Outcome ris_gain_trend() {
  SimConfig cfg;
  cfg.kappa = 0.1;
  const std::vector<int> n_list{20, 30, 40, 50, 60};
  const std::vector<double> heights{16, 100, 300};
  const auto rows = ris_gain_sweep(cfg, n_list, heights, workers());
  std::map<std::pair<double, int>, double> gain;
  std::ostringstream table;
  for (const auto& r : rows) {
    gain[{r.uav_height, r.n_ris}] = r.mean_gain_db;
    table << " H" << r.uav_height << "/N" << r.n_ris << "=" << fmt("%.2f", r.mean_gain_db);
  }
  bool monotone = true, ordered = true;
  for (double h : heights) {
    for (std::size_t i = 1; i < n_list.size(); ++i) monotone &= gain[{h, n_list[i]}] >= gain[{h, n_list[i - 1]}];
  }
  for (int n : n_list) ordered &= gain[{300.0, n}] > gain[{100.0, n}] && gain[{100.0, n}] > gain[{16.0, n}];
  const double a1 = gain[{100.0, 20}], a2 = gain[{300.0, 60}];
  const bool anchors = std::abs(a1 - 5.64) <= 3.0 && std::abs(a2 - 17.6) <= 3.0;
  return {monotone && ordered && anchors, std::string("monotone in N ") + (monotone ? "yes" : "no") +
                                              ", height order " + (ordered ? "yes" : "no") + ", anchors " +
                                              fmt("%.2f", a1) + " (5.64) " + fmt("%.2f", a2) + " (17.6) dB;" +
                                              table.str()};
}

// 6. Rate region trends.
Outcome rate_region_trend() {
  const SimConfig cfg;
  const std::vector<double> kappas{0.02, 0.05, 0.1, 0.15};
  const std::vector<int> n_list{15, 30};
  const auto rows = rate_region(cfg, kappas, n_list, workers());
  std::map<std::string, std::vector<const RateRegionRow*>> by_system;
  for (const auto& r : rows) by_system[r.system].push_back(&r);

  std::ostringstream table;
  bool kappa_trend = true;
  for (const char* sys : {"cf-mimo", "ris-n15", "ris-n30"}) {
    const auto& v = by_system[sys];
    table << " " << sys << ":";
    for (std::size_t i = 0; i < v.size(); ++i) {
      table << " (" << fmt("%.2f", v[i]->gue_rate_bps / 1e6) << "," << fmt("%.2f", *v[i]->uav_rate_bps / 1e6) << ")";
      if (i > 0) {
        kappa_trend &= *v[i]->uav_rate_bps > *v[i - 1]->uav_rate_bps;
        kappa_trend &= v[i]->gue_rate_bps < v[i - 1]->gue_rate_bps;
      }
    }
  }
  bool ordering = true;
  for (std::size_t i = 0; i < kappas.size(); ++i) {
    ordering &= *by_system["ris-n30"][i]->uav_rate_bps > *by_system["ris-n15"][i]->uav_rate_bps;
    ordering &= *by_system["ris-n15"][i]->uav_rate_bps > *by_system["cf-mimo"][i]->uav_rate_bps;
  }
  const double ris_gue = by_system["ris-n30"][0]->gue_rate_bps / 1e6;
  const double no_uav = by_system["cf-mimo-no-uav"][0]->gue_rate_bps / 1e6;
  table << " no-uav GUE " << fmt("%.2f", no_uav);
  const bool baseline = ris_gue > no_uav && std::abs(ris_gue - 7.46) <= 0.35 * 7.46 &&
                        std::abs(no_uav - 6.28) <= 0.35 * 6.28;
  return {kappa_trend && ordering && baseline,
          std::string("kappa trends ") + (kappa_trend ? "yes" : "no") + ", UAV N30>N15>none " +
              (ordering ? "yes" : "no") + ", kappa=0.02 RIS-30 GUE " + fmt("%.2f", ris_gue) + " vs no-UAV " +
              fmt("%.2f", no_uav) + " Mbps (target 7.46 vs 6.28, +-35%) " + (baseline ? "yes" : "no") +
              "; (GUE,UAV) Mbps:" + table.str()};
}

// 7. CDF dominance.
Outcome cdf_dominance() {
  const SimConfig cfg;
  const std::vector<CdfScenario> sc{{0.1, 15.0, 0}, {0.33, -5.0, 0}, {0.1, 15.0, 20}};
  const auto tables = rate_cdf(cfg, sc, workers());
  auto median = [](const std::vector<CdfPoint>& cdf) {
    std::vector<double> r;
    for (const auto& p : cdf) r.push_back(p.rate_bps);
    return percentile_nearest_rank(r, 50.0) / 1e6;
  };
  const double uav_base = median(tables[0].uav), uav_ris = median(tables[2].uav);
  const double gue_base = median(tables[0].gue), gue_up = median(tables[1].gue);
  const bool pass = uav_ris > uav_base && gue_up < gue_base;
  return {pass, "UAV median RIS " + fmt("%.2f", uav_ris) + " vs none " + fmt("%.2f", uav_base) +
                    " Mbps; GUE median uptilt " + fmt("%.2f", gue_up) + " vs 15deg " + fmt("%.2f", gue_base) +
                    " Mbps"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// 8. Byte-identical output across worker counts.
Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "cfris_acceptance_determinism";
  fs::remove_all(root);
  bool same = true;
  std::size_t compared = 0;
  for (const char* kind : {"rate-region", "cdf", "ris-gain"}) {
    ExperimentSpec spec;
    spec.kind = parse_experiment_kind(kind);
    spec.base.master_seed = 8008;
    spec.base.trials = spec.kind == ExperimentKind::Cdf ? 2000 : 200;
    spec.fill_default_sweeps();
    for (int w : {1, 8}) run_experiment(spec, {root / (std::string(kind) + "_" + std::to_string(w)), w});
    for (const auto& entry : fs::directory_iterator(root / (std::string(kind) + "_1"))) {
      if (entry.path().extension() != ".csv") continue;
      const auto other = root / (std::string(kind) + "_8") / entry.path().filename();
      same &= slurp(entry.path()) == slurp(other);
      ++compared;
    }
  }
  fs::remove_all(root);
  return {same && compared == 4, std::to_string(compared) + " CSV files compared, 1 vs 8 workers " +
                                     (same ? "identical" : "DIFFER")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "power conservation", 5, power_conservation},
      {2, "RIS alignment at M=1", 30, alignment_m1},
      {3, "gamma vs Monte Carlo", 60, gamma_vs_monte_carlo},
      {4, "SINR vs symbol-level oracle", 60, sinr_vs_symbols},
      {5, "RIS gain vs N and height", 300, ris_gain_trend},
      {6, "rate region trends", 300, rate_region_trend},
      {7, "rate CDF dominance", 180, cdf_dominance},
      {8, "determinism across workers", 120, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("criterion %d: %s  %s  [%.1fs / %.0fs%s]  %s\n", c.id, pass ? "PASS" : "FAIL", c.name, secs,
                c.limit_s, in_time ? "" : " over time", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
