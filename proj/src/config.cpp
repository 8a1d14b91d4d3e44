// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#include "cfris/config.hpp"

#include <cmath>

namespace cfris {

namespace {

constexpr double kSpeedOfLight = 299792458.0;

void require(bool ok, const char* key, const char* what) {
  if (!ok) throw ConfigError(std::string(key) + ": " + what);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

void SimConfig::validate() const {
  require(M >= 1, "M", "must be >= 1");
  require(U >= 1, "U", "must be >= 1");
  require(N >= 0, "N", "must be >= 0");
  require(finite(area_side) && area_side > 0, "area_side", "must be > 0");
  require(finite(h_ap) && h_ap >= 0, "h_ap", "must be >= 0");
  require(finite(h_ris) && h_ris >= 0, "h_ris", "must be >= 0");
  require(finite(h_gue) && h_gue >= 0, "h_gue", "must be >= 0");
  require(finite(h_uav) && h_uav >= 0, "h_uav", "must be >= 0");
  if (ris_x) {
    require(finite(*ris_x) && *ris_x >= 0 && *ris_x <= area_side, "ris_x", "must lie in [0, area_side]");
  }
  require(finite(carrier_freq) && carrier_freq > 0, "carrier_freq", "must be > 0");
  require(finite(bandwidth) && bandwidth > 0, "bandwidth", "must be > 0");
  require(finite(noise_power_dbm), "noise_power_dbm", "must be finite");
  require(finite(p_d) && p_d > 0, "p_d", "must be > 0");
  require(kappa >= 0 && kappa <= 1, "kappa", "must lie in [0, 1]");
  require(finite(tilt_deg) && std::abs(tilt_deg) < 90, "tilt_deg", "must lie in (-90, 90)");
  require(finite(rho_db), "rho_db", "must be finite");
  require(finite(alpha) && alpha > 0, "alpha", "must be > 0");
  require(finite(ant_beamwidth_deg) && ant_beamwidth_deg > 0, "ant_beamwidth_deg", "must be > 0");
  require(finite(ant_sidelobe_db) && ant_sidelobe_db >= 0, "ant_sidelobe_db", "must be >= 0");
  require(trials >= 1, "trials", "must be >= 1");
}

double SimConfig::wavelength() const { return kSpeedOfLight / carrier_freq; }

double SimConfig::noise_power_w() const { return std::pow(10.0, (noise_power_dbm - 30.0) / 10.0); }

}  // namespace cfris
