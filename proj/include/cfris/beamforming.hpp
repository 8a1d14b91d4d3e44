// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "cfris/channel.hpp"

namespace cfris {

/// Reflection coefficients v_n = exp(j theta_n), unit modulus.
struct RisConfig {
  VectorXcd v;

  static RisConfig none() { return RisConfig{VectorXcd(0)}; }
  int size() const { return static_cast<int>(v.size()); }
};

struct PowerAllocation {
  MatrixXd p_dl;  // M x K transmit powers, W
  MatrixXd eta;   // M x K power-control coefficients p_dl / gamma
};

/// Co-phases the reflected paths with the direct UAV channel:
/// v_n = exp(-j arg([R^T h_uav^*]_n)) with R = H_ris diag(h_ris_uav).
/// A zero coefficient yields v_n = 1.
RisConfig ris_align_uav(const MatrixXcd& h_ris, const VectorXcd& h_ris_uav, const VectorXcd& h_uav);

/// Conjugate beamforming: W = conj(G).
MatrixXcd cb_precoders(const MatrixXcd& g);

/// E[|w_{m,k}|^2] under conjugate beamforming, from the LoS/NLoS split of the
/// direct and reflected channels. The UAV reflected hop is pure LoS.
MatrixXd gamma_analytic(const LargeScaleParams& ls, const RisConfig& ris);

/// Proportional power allocation. Every AP spends kappa * p_d on the UAV and
/// splits the rest across GUEs in proportion to gamma.
PowerAllocation ppa_allocate(const MatrixXd& gamma, double kappa, double p_d);

/// |(R v + h_uav)^T w_uav|^2.
double uav_received_power(const MatrixXcd& r, const RisConfig& ris, const VectorXcd& h_uav,
                          const VectorXcd& w_uav);

/// R = H_ris diag(h_ris_uav), the per-element reflected UAV paths.
MatrixXcd cascade_matrix(const MatrixXcd& h_ris, const VectorXcd& h_ris_uav);

}  // namespace cfris
