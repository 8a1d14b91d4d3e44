// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#include "cfris/link.hpp"

#include <cmath>

#include "cfris/config.hpp"

namespace cfris {

Eigen::VectorXd sinr_all(const Eigen::MatrixXcd& g, const Eigen::MatrixXcd& w, const Eigen::MatrixXd& eta,
                         double noise_power_w) {
  if (g.rows() != w.rows() || g.cols() != w.cols() || g.rows() != eta.rows() || g.cols() != eta.cols()) {
    throw ConfigError("sinr_all: G, W and eta must have identical shapes");
  }
  if (!(noise_power_w > 0.0)) throw ConfigError("sinr_all: noise power must be > 0");
  if ((eta.array() < 0.0).any()) throw ConfigError("sinr_all: eta must be >= 0");

  // s(k, j) = sum_m sqrt(eta_mj) g_mk w_mj: stream j as received by user k.
  const Eigen::MatrixXcd weighted = eta.cwiseSqrt().cast<std::complex<double>>().cwiseProduct(w);
  const Eigen::MatrixXcd s = g.transpose() * weighted;

  const auto k_count = g.cols();
  Eigen::VectorXd sinr(k_count);
  for (Eigen::Index k = 0; k < k_count; ++k) {
    double interference = 0.0;
    for (Eigen::Index j = 0; j < k_count; ++j) {
      if (j != k) interference += std::norm(s(k, j));
    }
    sinr(k) = std::norm(s(k, k)) / (interference + noise_power_w);
  }
  return sinr;
}

double rate_bps(double sinr, double bandwidth_hz) { return bandwidth_hz * std::log2(1.0 + sinr); }

LinkMetrics link_metrics(const Eigen::VectorXd& sinr, double bandwidth_hz) {
  LinkMetrics out{sinr, Eigen::VectorXd(sinr.size())};
  for (Eigen::Index k = 0; k < sinr.size(); ++k) out.rate_bps(k) = rate_bps(sinr(k), bandwidth_hz);
  return out;
}

std::optional<double> ris_gain_db(double sinr_with, double sinr_without) {
  if (!(sinr_without > 0.0) || !(sinr_with > 0.0)) return std::nullopt;
  return 10.0 * std::log10(sinr_with / sinr_without);
}

}  // namespace cfris
