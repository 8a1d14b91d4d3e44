// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#include "cfris/random.hpp"

#include <cmath>

namespace cfris {

Rng trial_stream(std::uint64_t master_seed, std::uint64_t trial_index, std::uint32_t attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(trial_index), static_cast<std::uint32_t>(trial_index >> 32),
                    attempt, 0x63667269u};
  return Rng(seq);
}

std::complex<double> circular_normal(Rng& rng) {
  std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
  const double re = nd(rng);
  const double im = nd(rng);
  return {re, im};
}

}  // namespace cfris
