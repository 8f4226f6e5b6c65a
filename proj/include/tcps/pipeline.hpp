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
#include <optional>
#include <string>
#include <vector>

#include "tcps/budget.hpp"
#include "tcps/encoding.hpp"
#include "tcps/estimators.hpp"
#include "tcps/ladder.hpp"
#include "tcps/pauli.hpp"
#include "tcps/qee.hpp"
#include "tcps/resources.hpp"

namespace tcps {

/// n_1 projective shots per term, then classification against [delta, 1-delta].
std::vector<RoughEstimate> boundary_check(const ProjectiveSampler &sampler, std::size_t n_1, double delta,
                                          Rng &rng, ResourceLedger *ledger = nullptr);
std::vector<RoughEstimate> boundary_check(const PreparationCircuit &prep, const Observable &obs,
                                          std::size_t n_1, double delta, Rng &rng,
                                          ResourceLedger *ledger = nullptr);

struct EstimateReport {
    std::string method;
    double estimate = 0.0;
    double exact_value = 0.0;
    double predicted_variance = 0.0;
    /// Present iff the report aggregates at least two trials.
    std::optional<double> empirical_variance;
    double error_floor = 0.0;
    ResourceLedger ledger;
    std::size_t trials = 1;

    // TCPS diagnostics; zero for QEE.
    double epsilon = 0.0;
    bool epsilon_clamped = false;
    std::size_t encoded_terms = 0;
    std::size_t classical_terms = 0;
    double phase_hat = 0.0;
    double phase_unwrapped = 0.0;
    double raw_estimate = 0.0;
    double correction = 0.0;
    bool readout_indeterminate = false;
};

struct TcpsOptions {
    MemoryMode mode = MemoryMode::kFastScalar;
    CorrectionMode correction = CorrectionMode::kClosedForm;
    std::optional<LadderConfig> ladder;
};

/// Boundary check, correction shots, sign-resolved sequential encoding over
/// M_q repetitions (or the ladder), Kitaev readout unwrapped to the branch
/// nearest the correction-shot prediction, Taylor inversion minus the
/// arcsine correction, plus classical contributions of non-encodable terms.
EstimateReport tcps_estimate(const PreparationCircuit &prep, const Observable &obs,
                             const ProjectiveSampler &sampler, const BudgetPlan &plan, Rng &rng,
                             const TcpsOptions &options = {});
EstimateReport tcps_estimate(const PreparationCircuit &prep, const Observable &obs,
                             const BudgetPlan &plan, Rng &rng, const TcpsOptions &options = {});

}  // namespace tcps
