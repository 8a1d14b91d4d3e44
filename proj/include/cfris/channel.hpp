// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "cfris/config.hpp"
#include "cfris/geometry.hpp"
#include "cfris/random.hpp"

namespace cfris {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

// Elevation antenna pattern in dB, in [-sidelobe_db, 0].
double antenna_gain_db(double theta_deg, double tilt_deg, double beamwidth_deg = 10.0,
                       double sidelobe_db = 20.0);

// Three-slope COST-231 Hata loss for AP -> GUE links in dB (positive = loss).
// Flat below 10 m, 20 dB/decade to 50 m, 35 dB/decade beyond.
double pathloss_gue_db(double d, const SimConfig& cfg);

// rho * d^-alpha, linear power gain. Used for the UAV and all RIS hops.
double pathloss_simple_linear(double d, const SimConfig& cfg);

// Rician factor 13 - 0.03 d read in dB, returned linear. Not floored.
double rician_k_linear(double d);

// Half-wavelength ULA along the x-axis. `direction` is the unit vector from
// the array towards the remote node; `d_ref` the centre-to-centre distance
// that fixes the common phase.
VectorXcd array_response(int n_elems, const Point3& direction, double d_ref, double wavelength);

struct LargeScaleParams {
  MatrixXd beta_direct;      // M x K amplitudes sqrt(zeta_{m,k})
  MatrixXd rician_direct;    // M x K, linear
  MatrixXcd los_direct;      // M x K unit-modulus exp(-j 2 pi d / lambda)
  VectorXd beta_ris_user;    // K
  VectorXd rician_ris_user;  // K, +inf for the UAV
  MatrixXcd los_ris_user;    // N x K array responses (unit modulus)
  MatrixXcd h_ap_ris;        // M x N deterministic AP -> RIS channel (rows h_{m,ris}^T)

  int num_aps() const { return static_cast<int>(beta_direct.rows()); }
  int num_users() const { return static_cast<int>(beta_direct.cols()); }
  int num_elements() const { return static_cast<int>(h_ap_ris.cols()); }
};

LargeScaleParams large_scale(const NetworkLayout& layout, const SimConfig& cfg);

/// One realization of every channel in the network. Column k = 0 is the UAV.
struct ChannelSet {
  MatrixXcd h_direct;    // M x K
  MatrixXcd h_ris;       // M x N
  MatrixXcd h_ris_user;  // N x K
};

/// Direct fading is drawn before the RIS fading, so the direct channels of a
/// trial do not depend on N.
ChannelSet draw_channels(const LargeScaleParams& ls, Rng& rng);

struct RisConfig;

/// G = h_direct + H_ris diag(v) h_ris_user.
MatrixXcd aggregate_channel(const ChannelSet& cs, const RisConfig& ris);

}  // namespace cfris
