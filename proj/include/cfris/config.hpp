// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cfris {

/// Raised for invalid parameters or inconsistent dimensions.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A realization that cannot be evaluated, e.g. an AP whose GUE gains all
/// underflow to zero. Trials catch it and redraw.
class DegenerateGeometry : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Scenario parameters. Defaults are the reference deployment: 20 APs and
/// 4 GUEs in a 40 m x 40 m square, UAV at 100 m, 1.9 GHz / 20 MHz.
struct SimConfig {
  int M = 20;  // access points
  int U = 4;   // ground users
  int N = 20;  // RIS elements, 0 disables the surface

  double area_side = 40.0;  // m
  double h_ap = 15.0;       // m
  double h_ris = 12.0;      // m
  double h_gue = 1.65;      // m
  double h_uav = 100.0;     // m
  // RIS sits at (ris_x, 0, h_ris); unset means the middle of the y = 0 edge.
  std::optional<double> ris_x;

  double carrier_freq = 1.9e9;   // Hz
  double bandwidth = 20e6;       // Hz
  double noise_power_dbm = -62;  // dBm
  double p_d = 1.0;              // W per AP
  double kappa = 0.1;            // UAV power fraction
  double tilt_deg = 15.0;        // positive = down-tilt
  double rho_db = -30.0;         // pathloss at 1 m
  double alpha = 2.4;            // pathloss exponent

  // Elevation pattern A(theta) = -min(12 ((theta - tilt) / beamwidth)^2, sidelobe).
  double ant_beamwidth_deg = 10.0;
  double ant_sidelobe_db = 20.0;

  std::uint64_t master_seed = 1;
  int trials = 2000;

  /// Throws ConfigError naming the first offending key.
  void validate() const;

  double ris_x_resolved() const { return ris_x.value_or(area_side / 2.0); }
  double wavelength() const;
  double noise_power_w() const;
  int num_users() const { return U + 1; }
};

}  // namespace cfris
