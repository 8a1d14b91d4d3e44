// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "cfris/config.hpp"
#include "cfris/random.hpp"

namespace cfris {

using Point3 = Eigen::Vector3d;

/// Node placement for one trial. User index k = 0 is the UAV, k = 1..U are GUEs.
struct NetworkLayout {
  std::vector<Point3> ap_pos;
  std::vector<Point3> gue_pos;
  Point3 uav_pos = Point3::Zero();
  Point3 ris_pos = Point3::Zero();

  std::size_t num_users() const { return gue_pos.size() + 1; }
  const Point3& user(std::size_t k) const { return k == 0 ? uav_pos : gue_pos.at(k - 1); }
};

/// Draws AP, GUE and UAV horizontal positions i.i.d. uniform on [0, D]^2 at
/// their configured heights. The RIS is fixed at (ris_x, 0, h_ris).
NetworkLayout place_nodes(const SimConfig& cfg, Rng& rng);

double distance(const Point3& a, const Point3& b);

double horizontal_distance(const Point3& a, const Point3& b);

/// Depression angle of `node` seen from `ap`, in degrees: positive below the
/// AP, negative above. Zero horizontal offset gives +-90.
double elevation_angle_deg(const Point3& ap, const Point3& node);

}  // namespace cfris
