// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#include "cfris/beamforming.hpp"

#include <cmath>
#include <string>

namespace cfris {

namespace {

using cd = std::complex<double>;

double los_weight(double k) { return std::isinf(k) ? 1.0 : std::sqrt(k / (k + 1.0)); }
double nlos_power(double k) { return std::isinf(k) ? 0.0 : 1.0 / (k + 1.0); }

}  // namespace

MatrixXcd cascade_matrix(const MatrixXcd& h_ris, const VectorXcd& h_ris_uav) {
  if (h_ris.cols() != h_ris_uav.size()) throw ConfigError("cascade_matrix: H_ris has " + std::to_string(h_ris.cols()) +
                                                          " columns but h_ris_uav has " +
                                                          std::to_string(h_ris_uav.size()) + " entries");
  return h_ris * h_ris_uav.asDiagonal();
}

RisConfig ris_align_uav(const MatrixXcd& h_ris, const VectorXcd& h_ris_uav, const VectorXcd& h_uav) {
  if (h_ris.cols() == 0) throw ConfigError("ris_align_uav: the surface has no elements");
  if (h_ris.rows() != h_uav.size()) throw ConfigError("ris_align_uav: H_ris rows do not match h_uav");
  const MatrixXcd r = cascade_matrix(h_ris, h_ris_uav);
  const VectorXcd c = r.transpose() * h_uav.conjugate();

  RisConfig ris{VectorXcd(c.size())};
  for (Eigen::Index n = 0; n < c.size(); ++n) {
    ris.v(n) = c(n) == cd(0.0, 0.0) ? cd(1.0, 0.0) : std::polar(1.0, -std::arg(c(n)));
  }
  return ris;
}

MatrixXcd cb_precoders(const MatrixXcd& g) { return g.conjugate(); }

MatrixXd gamma_analytic(const LargeScaleParams& ls, const RisConfig& ris) {
  const int m_count = ls.num_aps();
  const int k_count = ls.num_users();
  const bool with_ris = ris.size() > 0;
  if (with_ris && ris.size() != ls.num_elements()) {
    throw ConfigError("gamma_analytic: RisConfig has " + std::to_string(ris.size()) + " elements, channel has " +
                      std::to_string(ls.num_elements()));
  }

  MatrixXd gamma(m_count, k_count);
  MatrixXcd reflected_los;  // M x K: h_{m,ris}^T Theta hbar_{ris,k}
  VectorXd reflected_power;  // M: h_{m,ris}^T Theta Theta^H conj(h_{m,ris})
  if (with_ris) {
    reflected_los = ls.h_ap_ris * ris.v.asDiagonal() * ls.los_ris_user;
    reflected_power = (ls.h_ap_ris.cwiseAbs2() * ris.v.cwiseAbs2());
  }

  for (int k = 0; k < k_count; ++k) {
    for (int m = 0; m < m_count; ++m) {
      const double beta = ls.beta_direct(m, k);
      const double kd = ls.rician_direct(m, k);
      cd mu = los_weight(kd) * beta * ls.los_direct(m, k);
      double var = beta * beta * nlos_power(kd);
      if (with_ris) {
        const double beta_r = ls.beta_ris_user(k);
        const double kr = ls.rician_ris_user(k);
        mu += los_weight(kr) * beta_r * reflected_los(m, k);
        var += beta_r * beta_r * nlos_power(kr) * reflected_power(m);
      }
      gamma(m, k) = std::norm(mu) + var;
    }
  }
  return gamma;
}

PowerAllocation ppa_allocate(const MatrixXd& gamma, double kappa, double p_d) {
  if (!(kappa >= 0.0 && kappa <= 1.0)) throw ConfigError("kappa: must lie in [0, 1]");
  if (!(p_d > 0.0)) throw ConfigError("p_d: must be > 0");
  if (gamma.cols() < 2) throw ConfigError("ppa_allocate: need the UAV column and at least one GUE");

  const auto m_count = gamma.rows();
  const auto k_count = gamma.cols();
  PowerAllocation pa{MatrixXd::Zero(m_count, k_count), MatrixXd::Zero(m_count, k_count)};
  for (Eigen::Index m = 0; m < m_count; ++m) {
    const double gue_sum = gamma.row(m).tail(k_count - 1).sum();
    if (!(gue_sum > 0.0) || !std::isfinite(gue_sum)) {
      throw DegenerateGeometry("ppa_allocate: AP " + std::to_string(m) + " has no usable GUE channel");
    }
    pa.p_dl(m, 0) = kappa * p_d;
    for (Eigen::Index k = 1; k < k_count; ++k) pa.p_dl(m, k) = (1.0 - kappa) * p_d * gamma(m, k) / gue_sum;

    for (Eigen::Index k = 0; k < k_count; ++k) {
      if (pa.p_dl(m, k) == 0.0) continue;
      if (!(gamma(m, k) > 0.0)) {
        throw DegenerateGeometry("ppa_allocate: AP " + std::to_string(m) + " allocates power to user " +
                                 std::to_string(k) + " with zero channel strength");
      }
      pa.eta(m, k) = pa.p_dl(m, k) / gamma(m, k);
    }
  }
  return pa;
}

double uav_received_power(const MatrixXcd& r, const RisConfig& ris, const VectorXcd& h_uav, const VectorXcd& w_uav) {
  if (h_uav.size() != w_uav.size() || r.rows() != h_uav.size()) {
    throw ConfigError("uav_received_power: dimension mismatch");
  }
  VectorXcd g = h_uav;
  if (ris.size() > 0) {
    if (r.cols() != ris.size()) throw ConfigError("uav_received_power: R and v disagree on N");
    g += r * ris.v;
  }
  return std::norm(g.cwiseProduct(w_uav).sum());
}

}  // namespace cfris
