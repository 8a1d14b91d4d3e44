// Copyright 2026 The cfris Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace cfris {

using Rng = std::mt19937_64;

/// Independent stream for one trial. Each (master_seed, trial_index, attempt)
/// triple maps to its own seed sequence, so results never depend on which
/// worker ran the trial.
Rng trial_stream(std::uint64_t master_seed, std::uint64_t trial_index, std::uint32_t attempt = 0);

/// Draw from CN(0, 1).
std::complex<double> circular_normal(Rng& rng);

}  // namespace cfris
