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

#include "tcps/budget.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tcps {

namespace {

void check_probability(double p, const char *name) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument(std::string("plan_budget: ") + name + " must lie in (0, 1)");
    }
}

// P(Y=0 | phi) = (1 - sin phi)/2 at phi = 2 arccos(x).
double p_zero_at_overlap(double x) { return 0.5 * (1.0 - std::sin(2.0 * std::acos(x))); }

}  // namespace

std::size_t hoeffding_shots(double eta, double gap) {
    if (!(eta > 0.0 && eta < 1.0) || !(gap > 0.0)) {
        throw std::invalid_argument("hoeffding_shots: need eta in (0,1) and gap > 0");
    }
    return static_cast<std::size_t>(std::ceil(std::log(2.0 / eta) / (2.0 * gap * gap)));
}

BudgetPlan plan_budget(const BudgetTargets &t, std::size_t n_terms) {
    check_probability(t.eta, "eta");
    check_probability(t.eta0, "eta0");
    check_probability(t.eta1, "eta1");
    check_probability(t.eta3, "eta3");
    if (!(t.delta > 0.0 && t.delta < 0.5)) {
        throw std::invalid_argument("plan_budget: delta must lie in (0, 1/2)");
    }
    if (!(t.g1 > 0.0) || !(t.eps_tan > 0.0 && std::tan(t.eps_tan) < 1.0) || !(t.m > 0.0)) {
        throw std::invalid_argument("plan_budget: g1, eps_tan and m must be positive (tan eps_tan < 1)");
    }
    if (n_terms == 0 || t.repetitions == 0) {
        throw std::invalid_argument("plan_budget: N and M_q must be >= 1");
    }
    if (t.epsilon && !(*t.epsilon > 0.0 && *t.epsilon < 1.0)) {
        throw std::invalid_argument("plan_budget: epsilon must lie in (0, 1)");
    }

    BudgetPlan p;
    p.n_terms = n_terms;
    p.g1 = t.g1;
    p.eta1 = t.eta1;
    p.delta = t.delta;
    p.n_1 = hoeffding_shots(t.eta1, t.g1);

    // Endpoints of the encodable band |<P>| in [delta, 1 - delta].
    const double p_low = p_zero_at_overlap(1.0 - t.delta);
    const double p_high = p_zero_at_overlap(t.delta);
    p.p0_min = std::min(p_low, p_high);
    p.p0_max = std::max(p_low, p_high);
    p.g3 = 0.5 - p.p0_max;
    if (!(p.g3 > 0.0)) {
        throw std::domain_error("plan_budget: g3 <= 0, delta too large for sign separation");
    }
    p.eta3 = t.eta3;
    p.n_qpe = t.n_qpe_override ? *t.n_qpe_override : hoeffding_shots(t.eta3, p.g3);
    if (p.n_qpe == 0) {
        throw std::invalid_argument("plan_budget: n_QPE must be >= 1");
    }

    p.repetitions = t.repetitions;
    p.correction_shots = t.correction_shots ? *t.correction_shots : (1 + p.n_qpe) * t.repetitions;
    if (p.correction_shots == 0) {
        throw std::invalid_argument("plan_budget: correction shots must be >= 1");
    }
    p.epsilon = t.epsilon;

    p.eps_tan = t.eps_tan;
    p.eta0 = t.eta0;
    p.m = t.m;
    const double tn = std::tan(t.eps_tan);
    p.test_accuracy = tn / (2.0 * (1.0 + tn));
    p.total_kitaev = static_cast<std::size_t>(
        std::ceil(t.m * std::log(2.0 / t.eta0) / (p.test_accuracy * p.test_accuracy)));

    p.total_boundary = n_terms * p.n_1;
    p.total_qpe = n_terms * p.n_qpe;
    p.total_correction = n_terms * p.correction_shots;
    p.total_preparations =
        p.total_boundary + n_terms * (1 + p.n_qpe) * p.repetitions + p.total_correction;
    return p;
}

}  // namespace tcps
