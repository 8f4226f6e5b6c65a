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
#include <cstdint>
#include <vector>

#include "tcps/harness/config.hpp"
#include "tcps/harness/report.hpp"
#include "tcps/pipeline.hpp"

namespace tcps::harness {

// RNG streams under the master seed. Trial t of a stream uses
// make_rng(derive_seed(master, stream), t).
inline constexpr std::uint64_t kQeeStream = 1;
inline constexpr std::uint64_t kTcpsStream = 2;
inline constexpr std::uint64_t kSweepStreamBase = 1000;

struct TrialSummary {
    /// estimate, predicted variance and error floor are trial means; the
    /// ledger is summed over trials.
    EstimateReport report;
    std::vector<double> estimates;
    double epsilon_mean = 0.0;
    std::size_t clamped_trials = 0;
    double encoded_terms_mean = 0.0;
    double classical_terms_mean = 0.0;
    std::size_t indeterminate_readouts = 0;
};

TrialSummary run_qee_trials(const LoadedInstance &instance, const ProjectiveSampler &sampler, std::size_t n_c,
                            std::size_t trials, std::uint64_t stream_seed, std::size_t workers);
TrialSummary run_tcps_trials(const LoadedInstance &instance, const ProjectiveSampler &sampler,
                             const BudgetPlan &plan, const TcpsOptions &options, std::size_t trials,
                             std::uint64_t stream_seed, std::size_t workers);

struct MatchedComparison {
    BudgetPlan plan;
    std::size_t qee_shots_per_term = 0;
    std::uint64_t budget_qee = 0;   // N n_c
    std::uint64_t budget_tcps = 0;  // M_T
    TrialSummary qee;
    TrialSummary tcps;
    double ratio = 0.0;            // empirical Var_TCPS / Var_QEE
    double predicted_ratio = 0.0;  // from the mean predicted variances
};

/// Plans the TCPS budget M_T, gives QEE n_c = M_T / N shots per term, and
/// runs both over `trials` with streams derived from `master_seed`.
/// Throws std::invalid_argument when any planned count is below 1.
MatchedComparison compare_matched(const LoadedInstance &instance, const BudgetTargets &targets,
                                  const TcpsOptions &options, std::size_t trials, std::uint64_t master_seed,
                                  std::size_t workers);

/// Memory mode, correction mode and, when enabled, the ladder. An automatic
/// base scale is the largest with s_L max|a_j| <= 1.
TcpsOptions make_tcps_options(const ExperimentConfig &config, const Observable &obs);

Table run_exact(const ExperimentConfig &config);
Table run_qee(const ExperimentConfig &config);
Table run_tcps(const ExperimentConfig &config);
Table run_compare(const ExperimentConfig &config);
Table run_sweep(const ExperimentConfig &config);
Table run_resources(const ExperimentConfig &config);
Table run_budget(const ExperimentConfig &config);

/// validate() then dispatch on config.mode.
Table run_experiment(const ExperimentConfig &config);

}  // namespace tcps::harness
