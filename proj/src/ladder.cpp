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

#include "tcps/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tcps/estimators.hpp"

namespace tcps {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFlagFraction = 0.75;

}  // namespace

double LadderConfig::scale(std::size_t level) const {
    return std::ldexp(base_scale, static_cast<int>(level));
}

std::size_t LadderConfig::total_repetitions() const {
    std::size_t total = 0;
    for (auto m : repetitions) {
        total += 2 * m;
    }
    return total;
}

LadderConfig make_ladder_config(double eta, double base_scale, std::size_t alpha, std::size_t gamma) {
    if (!(eta > 0.0 && eta < 1.0)) {
        throw std::invalid_argument("make_ladder_config: eta must lie in (0, 1)");
    }
    if (alpha < 3 || gamma < 1) {
        throw std::invalid_argument("make_ladder_config: need alpha >= 3 and gamma >= 1");
    }
    if (!(base_scale > 0.0)) {
        throw std::invalid_argument("make_ladder_config: base scale must be positive");
    }
    LadderConfig c;
    c.alpha = alpha;
    c.gamma = gamma;
    c.base_scale = base_scale;
    c.depth = static_cast<std::size_t>(std::max(1.0, std::ceil(std::log2(1.0 / eta) - 1e-12)));
    for (std::size_t l = 1; l <= c.depth; ++l) {
        c.repetitions.push_back(alpha + gamma * (c.depth + 1 - l));
    }
    return c;
}

LadderResult ladder_estimate(const PreparationCircuit &prep, const Observable &obs,
                             const ProjectiveSampler &sampler, std::span<const RoughEstimate> rough,
                             std::span<const double> correction_means, const LadderConfig &ladder,
                             const BudgetPlan &plan, MemoryMode mode, Rng &rng, ResourceLedger *ledger) {
    if (correction_means.size() != obs.size()) {
        throw std::invalid_argument("ladder_estimate: one correction mean per term required");
    }
    if (ladder.repetitions.size() != ladder.depth || ladder.depth == 0) {
        throw std::invalid_argument("ladder_estimate: malformed ladder configuration");
    }
    std::vector<double> weights, means;
    double abs_sum = 0.0;
    double max_abs = 0.0;
    double reference = 0.0;
    for (const auto &r : rough) {
        if (r.classification != TermClass::kEncodable) {
            continue;
        }
        const double a = obs[r.term].coefficient;
        weights.push_back(a);
        means.push_back(correction_means[r.term]);
        abs_sum += std::abs(a);
        max_abs = std::max(max_abs, std::abs(a));
        reference += a * correction_means[r.term];
    }
    if (weights.empty()) {
        throw std::invalid_argument("ladder_estimate: no encodable terms");
    }
    if (!(ladder.base_scale * abs_sum < 2.0 * kPi)) {
        throw std::invalid_argument("ladder_estimate: base scale times sum |a_j| must stay below 2 pi");
    }
    if (ladder.scale(ladder.depth) * max_abs > 1.0) {
        throw std::invalid_argument("ladder_estimate: finest scale violates s_L |a_j| <= 1");
    }

    LadderResult result;
    double current = reference;
    for (std::size_t l = 1; l <= ladder.depth; ++l) {
        const double s = ladder.scale(l);
        const double eps = 0.25 * s * s;
        const EncodingSetup setup =
            make_encoding_setup(prep, obs, sampler, rough, eps, plan.n_qpe, mode);
        const std::size_t m_l = ladder.repetitions[l - 1];
        double residue = 0.0;
        for (std::size_t k = 0; k < weights.size(); ++k) {
            const double x = std::clamp(s * weights[k] * means[k], -1.0 + 1e-12, 1.0 - 1e-12);
            residue += std::asin(x) - x;
        }

        LadderLevel level;
        level.level = l;
        level.scale = s;
        level.repetitions = m_l;
        level.window_low = current - kPi / s;
        level.window_high = current + kPi / s;
        for (int attempt = 0; attempt < 2; ++attempt) {
            const RoundOutcomes out = run_encoding_rounds(setup, 2 * m_l, rng, ledger);
            double theta;
            try {
                level.phase_hat = kitaev_readout(out.x, out.y);
                level.indeterminate = false;
                // Phi = N pi/2 - sum asin(x_j), so sum asin(x_j) = N pi/2 - Phi.
                theta = static_cast<double>(setup.terms.size()) * kPi / 2.0 - level.phase_hat - residue;
            } catch (const IndeterminatePhaseError &) {
                level.indeterminate = true;
                theta = s * current;
            }
            const double offset = wrap_phase(theta - s * current);
            level.estimate = current + offset / s;
            if (std::abs(offset) <= kFlagFraction * kPi) {
                break;
            }
            if (attempt == 1) {
                throw LadderWindowError("ladder_estimate: level " + std::to_string(l) +
                                        " inconsistent with the previous window after re-sampling");
            }
            level.resampled = true;
        }
        current = level.estimate;
        result.levels.push_back(level);
    }

    const LadderLevel &last = result.levels.back();
    const double s = last.scale;
    const double m = static_cast<double>(last.repetitions);
    result.estimate = current;
    result.predicted_variance = phase_variance_delta(last.phase_hat, m, m) / (s * s) +
                                correction_variance_delta(weights, means, 0.25 * s * s,
                                                          plan.correction_shots);
    return result;
}

}  // namespace tcps
