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

#include "tcps/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tcps {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

std::vector<RoughEstimate> boundary_check(const ProjectiveSampler &sampler, std::size_t n_1, double delta,
                                          Rng &rng, ResourceLedger *ledger) {
    if (n_1 == 0) {
        throw std::invalid_argument("boundary_check: n_1 must be >= 1");
    }
    if (!(delta > 0.0 && delta < 0.5)) {
        throw std::invalid_argument("boundary_check: delta must lie in (0, 1/2)");
    }
    std::vector<RoughEstimate> out;
    out.reserve(sampler.size());
    for (std::size_t j = 0; j < sampler.size(); ++j) {
        out.push_back(classify_mean(j, sampler.sample_mean(j, n_1, rng), n_1, delta));
    }
    if (ledger) {
        ledger->boundary_preparations += sampler.size() * n_1;
        ledger->projective_measurements += sampler.size() * n_1;
    }
    return out;
}

std::vector<RoughEstimate> boundary_check(const PreparationCircuit &prep, const Observable &obs,
                                          std::size_t n_1, double delta, Rng &rng, ResourceLedger *ledger) {
    return boundary_check(ProjectiveSampler(prep, obs), n_1, delta, rng, ledger);
}

EstimateReport tcps_estimate(const PreparationCircuit &prep, const Observable &obs,
                             const ProjectiveSampler &sampler, const BudgetPlan &plan, Rng &rng,
                             const TcpsOptions &options) {
    if (sampler.size() != obs.size() || plan.n_terms != obs.size()) {
        throw std::invalid_argument("tcps_estimate: plan, sampler and observable disagree on N");
    }
    EstimateReport report;
    report.method = "tcps";
    for (std::size_t j = 0; j < obs.size(); ++j) {
        report.exact_value += obs[j].coefficient * sampler.exact_mean(j);
    }

    const auto rough = boundary_check(sampler, plan.n_1, plan.delta, rng, &report.ledger);

    const std::size_t n_cor = plan.correction_shots;
    std::vector<double> cor_means(obs.size());
    for (std::size_t j = 0; j < obs.size(); ++j) {
        cor_means[j] = sampler.sample_mean(j, n_cor, rng);
    }
    report.ledger.correction_preparations += obs.size() * n_cor;
    report.ledger.projective_measurements += obs.size() * n_cor;

    std::vector<double> all_weights(obs.size());
    for (std::size_t j = 0; j < obs.size(); ++j) {
        all_weights[j] = obs[j].coefficient;
    }
    report.error_floor = error_floor(all_weights, cor_means, plan.eta1, plan.eta3);

    double classical = 0.0;
    double classical_var = 0.0;
    std::vector<double> weights, means;
    for (const auto &r : rough) {
        const double a = obs[r.term].coefficient;
        const double m = cor_means[r.term];
        if (r.classification == TermClass::kEncodable) {
            weights.push_back(a);
            means.push_back(m);
        } else {
            classical += a * m;
            classical_var += a * a * std::max(0.0, 1.0 - m * m) / static_cast<double>(n_cor);
            ++report.classical_terms;
        }
    }
    report.encoded_terms = weights.size();
    if (weights.empty()) {
        report.estimate = classical;
        report.predicted_variance = classical_var;
        return report;
    }

    if (options.ladder) {
        const LadderResult lr = ladder_estimate(prep, obs, sampler, rough, cor_means, *options.ladder,
                                                plan, options.mode, rng, &report.ledger);
        report.estimate = lr.estimate + classical;
        report.predicted_variance = lr.predicted_variance + classical_var;
        report.raw_estimate = lr.estimate;
        report.phase_hat = lr.levels.back().phase_hat;
        report.epsilon = 0.25 * lr.levels.back().scale * lr.levels.back().scale;
        return report;
    }

    if (plan.repetitions < 2) {
        throw std::invalid_argument("tcps_estimate: M_q must be >= 2 to fill both readout frames");
    }
    double max_abs = 0.0;
    for (double a : weights) {
        max_abs = std::max(max_abs, std::abs(a));
    }
    const double bound = 1.0 / (4.0 * max_abs * max_abs);
    if (plan.epsilon) {
        if (*plan.epsilon > bound * (1.0 + 1e-12)) {
            throw std::invalid_argument("tcps_estimate: plan epsilon exceeds the feasibility bound");
        }
        report.epsilon = *plan.epsilon;
    } else {
        const EpsilonChoice choice = optimal_epsilon(obs.size() * n_cor, plan.repetitions, weights,
                                                     means, std::min(bound, 1.0 - 1e-12));
        report.epsilon = choice.epsilon;
        report.epsilon_clamped = choice.clamped;
    }
    const double eps = report.epsilon;

    const EncodingSetup setup =
        make_encoding_setup(prep, obs, sampler, rough, eps, plan.n_qpe, options.mode);
    const RoundOutcomes out = run_encoding_rounds(setup, plan.repetitions, rng, &report.ledger);

    double predicted_phase = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        const double x = std::clamp(encoding_argument(weights[k], means[k], eps), -1.0, 1.0);
        predicted_phase += kPi / 2.0 - std::asin(x);
    }
    try {
        report.phase_hat = kitaev_readout(out.x, out.y);
        report.phase_unwrapped = unwrap_near(report.phase_hat, predicted_phase);
    } catch (const IndeterminatePhaseError &) {
        report.readout_indeterminate = true;
        report.phase_unwrapped = predicted_phase;
    }
    report.raw_estimate = taylor_invert(report.phase_unwrapped, weights.size(), eps);
    std::vector<double> clamped(means);
    for (std::size_t k = 0; k < clamped.size(); ++k) {
        const double lim = (1.0 - 1e-12) / std::abs(2.0 * std::sqrt(eps) * weights[k]);
        clamped[k] = std::clamp(clamped[k], -lim, lim);
    }
    report.correction = taylor_correction(weights, clamped, eps, options.correction);
    report.estimate = report.raw_estimate - report.correction + classical;

    const double phase_var = phase_variance_delta(predicted_phase, static_cast<double>(out.x.total()),
                                                  static_cast<double>(out.y.total()));
    report.predicted_variance = phase_var / (4.0 * eps) +
                                correction_variance_delta(weights, clamped, eps, n_cor) + classical_var;
    return report;
}

EstimateReport tcps_estimate(const PreparationCircuit &prep, const Observable &obs,
                             const BudgetPlan &plan, Rng &rng, const TcpsOptions &options) {
    return tcps_estimate(prep, obs, ProjectiveSampler(prep, obs), plan, rng, options);
}

}  // namespace tcps
