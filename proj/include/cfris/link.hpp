// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include <Eigen/Core>

namespace cfris {

struct LinkMetrics {
  Eigen::VectorXd sinr;      // linear, per user
  Eigen::VectorXd rate_bps;  // bandwidth * log2(1 + sinr)
};

/// Per-user SINR for linear precoding with power coefficients `eta`.
/// Signal: |sum_m sqrt(eta_mk) g_mk w_mk|^2. Interference: the same sum for
/// every other stream k', seen through user k's channel.
Eigen::VectorXd sinr_all(const Eigen::MatrixXcd& g, const Eigen::MatrixXcd& w,
                         const Eigen::MatrixXd& eta, double noise_power_w);

double rate_bps(double sinr, double bandwidth_hz);

LinkMetrics link_metrics(const Eigen::VectorXd& sinr, double bandwidth_hz);

/// 10 log10(with / without); empty when the reference SINR is zero.
std::optional<double> ris_gain_db(double sinr_with, double sinr_without);

}  // namespace cfris
