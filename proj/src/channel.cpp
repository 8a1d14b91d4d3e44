// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#include "cfris/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cfris/beamforming.hpp"

namespace cfris {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Breakpoints of the three-slope model, km.
constexpr double kHataD0 = 0.010;
constexpr double kHataD1 = 0.050;

struct RicianSplit {
  double los;   // sqrt(K / (K + 1))
  double nlos;  // sqrt(1 / (K + 1))
};

RicianSplit rician_split(double k) {
  if (std::isinf(k)) return {1.0, 0.0};
  return {std::sqrt(k / (k + 1.0)), std::sqrt(1.0 / (k + 1.0))};
}

cd los_phase(double d, double wavelength) { return std::polar(1.0, -2.0 * kPi * d / wavelength); }

double pattern_linear(double theta_deg, const SimConfig& cfg) {
  return std::pow(10.0, antenna_gain_db(theta_deg, cfg.tilt_deg, cfg.ant_beamwidth_deg, cfg.ant_sidelobe_db) / 10.0);
}

}  // namespace

double antenna_gain_db(double theta_deg, double tilt_deg, double beamwidth_deg, double sidelobe_db) {
  const double x = (theta_deg - tilt_deg) / beamwidth_deg;
  return -std::min(12.0 * x * x, sidelobe_db);
}

double pathloss_gue_db(double d, const SimConfig& cfg) {
  const double f_mhz = cfg.carrier_freq / 1e6;
  const double lf = std::log10(f_mhz);
  const double l = 46.3 + 33.9 * lf - 13.82 * std::log10(cfg.h_ap) - (1.1 * lf - 0.7) * cfg.h_gue +
                   (1.56 * lf - 0.8);
  const double d_km = std::max(d, 1.0) / 1000.0;
  if (d_km > kHataD1) return l + 35.0 * std::log10(d_km);
  if (d_km > kHataD0) return l + 15.0 * std::log10(kHataD1) + 20.0 * std::log10(d_km);
  return l + 15.0 * std::log10(kHataD1) + 20.0 * std::log10(kHataD0);
}

double pathloss_simple_linear(double d, const SimConfig& cfg) {
  return std::pow(10.0, cfg.rho_db / 10.0) * std::pow(std::max(d, 1.0), -cfg.alpha);
}

double rician_k_linear(double d) { return std::pow(10.0, (13.0 - 0.03 * d) / 10.0); }

VectorXcd array_response(int n_elems, const Point3& direction, double d_ref, double wavelength) {
  const double cos_phi = direction.x() / direction.norm();
  const cd common = los_phase(d_ref, wavelength);
  VectorXcd a(n_elems);
  // Spacing lambda / 2: inter-element phase pi cos(phi).
  for (int n = 0; n < n_elems; ++n) a(n) = common * std::polar(1.0, -kPi * n * cos_phi);
  return a;
}

LargeScaleParams large_scale(const NetworkLayout& layout, const SimConfig& cfg) {
  const int m_count = static_cast<int>(layout.ap_pos.size());
  const int k_count = static_cast<int>(layout.num_users());
  const int n_count = cfg.N;
  const double lambda = cfg.wavelength();

  LargeScaleParams ls;
  ls.beta_direct.resize(m_count, k_count);
  ls.rician_direct.resize(m_count, k_count);
  ls.los_direct.resize(m_count, k_count);
  for (int m = 0; m < m_count; ++m) {
    const Point3& ap = layout.ap_pos[m];
    for (int k = 0; k < k_count; ++k) {
      const Point3& user = layout.user(k);
      const double d = distance(ap, user);
      const double xi = k == 0 ? pathloss_simple_linear(d, cfg) : std::pow(10.0, -pathloss_gue_db(d, cfg) / 10.0);
      ls.beta_direct(m, k) = std::sqrt(pattern_linear(elevation_angle_deg(ap, user), cfg) * xi);
      ls.rician_direct(m, k) = rician_k_linear(d);
      ls.los_direct(m, k) = los_phase(d, lambda);
    }
  }

  ls.h_ap_ris.resize(m_count, n_count);
  for (int m = 0; m < m_count; ++m) {
    const Point3& ap = layout.ap_pos[m];
    const double d = distance(ap, layout.ris_pos);
    const double amp = std::sqrt(pattern_linear(elevation_angle_deg(ap, layout.ris_pos), cfg) *
                                 pathloss_simple_linear(d, cfg));
    ls.h_ap_ris.row(m) = amp * array_response(n_count, ap - layout.ris_pos, d, lambda).transpose();
  }

  ls.beta_ris_user.resize(k_count);
  ls.rician_ris_user.resize(k_count);
  ls.los_ris_user.resize(n_count, k_count);
  for (int k = 0; k < k_count; ++k) {
    const Point3& user = layout.user(k);
    const double d = distance(layout.ris_pos, user);
    ls.beta_ris_user(k) = std::sqrt(pathloss_simple_linear(d, cfg));
    ls.rician_ris_user(k) = k == 0 ? std::numeric_limits<double>::infinity() : rician_k_linear(d);
    ls.los_ris_user.col(k) = array_response(n_count, user - layout.ris_pos, d, lambda);
  }
  return ls;
}

ChannelSet draw_channels(const LargeScaleParams& ls, Rng& rng) {
  const int m_count = ls.num_aps();
  const int k_count = ls.num_users();
  const int n_count = ls.num_elements();

  ChannelSet cs;
  cs.h_direct.resize(m_count, k_count);
  for (int k = 0; k < k_count; ++k) {
    for (int m = 0; m < m_count; ++m) {
      const RicianSplit s = rician_split(ls.rician_direct(m, k));
      cs.h_direct(m, k) = ls.beta_direct(m, k) * (s.los * ls.los_direct(m, k) + s.nlos * circular_normal(rng));
    }
  }

  cs.h_ris = ls.h_ap_ris;

  cs.h_ris_user.resize(n_count, k_count);
  for (int k = 0; k < k_count; ++k) {
    const RicianSplit s = rician_split(ls.rician_ris_user(k));
    for (int n = 0; n < n_count; ++n) {
      cd value = s.los * ls.los_ris_user(n, k);
      if (s.nlos > 0.0) value += s.nlos * circular_normal(rng);
      cs.h_ris_user(n, k) = ls.beta_ris_user(k) * value;
    }
  }
  return cs;
}

MatrixXcd aggregate_channel(const ChannelSet& cs, const RisConfig& ris) {
  if (ris.size() == 0) return cs.h_direct;
  const auto m_count = cs.h_direct.rows();
  const auto k_count = cs.h_direct.cols();
  if (cs.h_ris.rows() != m_count || cs.h_ris.cols() != ris.size() || cs.h_ris_user.rows() != ris.size() ||
      cs.h_ris_user.cols() != k_count) {
    throw ConfigError("aggregate_channel: RIS dimensions do not match the channel set");
  }
  return cs.h_direct + cs.h_ris * ris.v.asDiagonal() * cs.h_ris_user;
}

}  // namespace cfris
