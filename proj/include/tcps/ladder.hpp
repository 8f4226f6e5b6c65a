// Copyright 2026 The tcps-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "tcps/budget.hpp"
#include "tcps/encoding.hpp"
#include "tcps/pauli.hpp"
#include "tcps/qee.hpp"

namespace tcps {

struct LadderConfig {
    std::size_t alpha = 3;
    std::size_t gamma = 1;
    std::size_t depth = 1;    // d_L
    double base_scale = 0.0;  // eps~_0; level l runs at scale 2^l eps~_0
    /// M_l for l = 1..d_L, counted per readout frame.
    std::vector<std::size_t> repetitions;

    double scale(std::size_t level) const;
    std::size_t total_repetitions() const;  // 2 sum_l M_l
};

/// d_L = ceil(log2(1/eta)), M_l = alpha + gamma (d_L + 1 - l).
/// Requires alpha >= 3, gamma >= 1, eta in (0,1), base_scale > 0.
LadderConfig make_ladder_config(double eta, double base_scale, std::size_t alpha = 3, std::size_t gamma = 1);

class LadderWindowError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct LadderLevel {
    std::size_t level = 0;
    double scale = 0.0;
    std::size_t repetitions = 0;  // per frame
    double phase_hat = 0.0;       // memory readout in (-pi, pi]
    double estimate = 0.0;        // P_sum^(l)
    double window_low = 0.0;
    double window_high = 0.0;
    bool resampled = false;
    bool indeterminate = false;
};

struct LadderResult {
    double estimate = 0.0;
    double predicted_variance = 0.0;
    std::vector<LadderLevel> levels;
};

/// Multi-scale readout of P_sum = sum over encodable terms of a_j <P_j>.
/// Level l dresses every encodable term with eps_l = (s_l / 2)^2 so the term
/// contributes s_l a_j <P_j> to first order; the arcsine residue is removed
/// with `correction_means` before the window update. The level-1 window is
/// centered on the classical estimate from `correction_means`.
/// A level whose selected value lies in the outer quarter of its window is
/// re-sampled once; a second flag throws LadderWindowError.
LadderResult ladder_estimate(const PreparationCircuit &prep, const Observable &obs,
                             const ProjectiveSampler &sampler, std::span<const RoughEstimate> rough,
                             std::span<const double> correction_means, const LadderConfig &ladder,
                             const BudgetPlan &plan, MemoryMode mode, Rng &rng,
                             ResourceLedger *ledger = nullptr);

}  // namespace tcps
