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

namespace tcps {

struct BudgetTargets {
    double eta = 0.05;   // target variance used by the ladder depth
    double eta0 = 0.05;  // Hadamard-test failure probability
    double eta1 = 0.05;  // boundary-check failure probability
    double eta3 = 0.05;  // sign-resolution failure probability
    double delta = 0.2;  // boundary margin
    double g1 = 0.1;     // boundary-check Hoeffding gap
    double eps_tan = 1.0 / 16.0;
    double m = 1.0;

    std::size_t repetitions = 100;  // M_q
    /// n_c^cor. Defaults to (1 + n_QPE) M_q, the matched split.
    std::optional<std::size_t> correction_shots;
    /// Encoding strength. Chosen from rough means when absent.
    std::optional<double> epsilon;
    std::optional<std::size_t> n_qpe_override;
};

struct BudgetPlan {
    std::size_t n_terms = 0;

    std::size_t n_1 = 0;
    double g1 = 0.0;
    double eta1 = 0.0;
    double delta = 0.0;

    /// P(Y=0 | phi) interval for encodable terms at the worst-case phase
    /// phi = 2 arccos(delta).
    double p0_min = 0.0;
    double p0_max = 0.0;
    double g3 = 0.0;
    double eta3 = 0.0;
    std::size_t n_qpe = 0;

    std::size_t repetitions = 0;       // M_q
    std::size_t correction_shots = 0;  // n_c^cor
    std::optional<double> epsilon;

    /// Hadamard-test accuracy eps_0 from eps_tan (not the ladder base scale).
    double test_accuracy = 0.0;
    double eps_tan = 0.0;
    double eta0 = 0.0;
    double m = 0.0;

    std::size_t total_boundary = 0;    // M_1 = N n_1
    std::size_t total_qpe = 0;         // M_QPE = N n_QPE
    std::size_t total_kitaev = 0;      // M_K
    std::size_t total_correction = 0;  // M_c^cor = N n_c^cor
    /// M_T = M_1 + N (1 + n_QPE) M_q + M_c^cor, in state preparations.
    std::size_t total_preparations = 0;
};

/// Errors: std::invalid_argument for probabilities outside (0,1), delta
/// outside (0, 1/2), N = 0 or M_q = 0; std::domain_error when g_3 <= 0.
BudgetPlan plan_budget(const BudgetTargets &targets, std::size_t n_terms);

/// ceil(ln(2/eta) / (2 g^2)).
std::size_t hoeffding_shots(double eta, double gap);

}  // namespace tcps
