// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#include "cfris/geometry.hpp"

#include <cmath>
#include <numbers>

namespace cfris {

NetworkLayout place_nodes(const SimConfig& cfg, Rng& rng) {
  std::uniform_real_distribution<double> coord(0.0, cfg.area_side);
  auto draw = [&](double height) {
    const double x = coord(rng);
    const double y = coord(rng);
    return Point3(x, y, height);
  };

  NetworkLayout layout;
  layout.ap_pos.reserve(cfg.M);
  for (int m = 0; m < cfg.M; ++m) layout.ap_pos.push_back(draw(cfg.h_ap));
  layout.uav_pos = draw(cfg.h_uav);
  layout.gue_pos.reserve(cfg.U);
  for (int k = 0; k < cfg.U; ++k) layout.gue_pos.push_back(draw(cfg.h_gue));
  layout.ris_pos = Point3(cfg.ris_x_resolved(), 0.0, cfg.h_ris);
  return layout;
}

double distance(const Point3& a, const Point3& b) { return (a - b).norm(); }

double horizontal_distance(const Point3& a, const Point3& b) { return std::hypot(a.x() - b.x(), a.y() - b.y()); }

double elevation_angle_deg(const Point3& ap, const Point3& node) {
  const double dh = ap.z() - node.z();
  const double horiz = horizontal_distance(ap, node);
  if (horiz == 0.0) return dh >= 0.0 ? 90.0 : -90.0;
  return std::atan2(dh, horiz) * 180.0 / std::numbers::pi;
}

}  // namespace cfris
