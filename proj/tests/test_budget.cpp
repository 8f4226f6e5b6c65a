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

#include <gtest/gtest.h>

#include "tcps/budget.hpp"

using namespace tcps;

TEST(HoeffdingShots, DefaultBoundaryCount) {
    EXPECT_EQ(hoeffding_shots(0.05, 0.1), 185u);
    EXPECT_THROW(hoeffding_shots(0.0, 0.1), std::invalid_argument);
    EXPECT_THROW(hoeffding_shots(0.05, 0.0), std::invalid_argument);
}

TEST(PlanBudget, DefaultTargets) {
    const BudgetPlan p = plan_budget(BudgetTargets{}, 16);
    EXPECT_EQ(p.n_1, 185u);
    EXPECT_EQ(p.n_qpe, 49u);
    EXPECT_NEAR(p.p0_min, 0.02, 0.005);
    EXPECT_NEAR(p.p0_max, 0.304, 0.001);
    EXPECT_NEAR(p.g3, 0.5 - p.p0_max, 1e-15);
    EXPECT_EQ(p.correction_shots, 50u * 100u);
    EXPECT_EQ(p.total_boundary, 16u * 185u);
    EXPECT_EQ(p.total_qpe, 16u * 49u);
    EXPECT_EQ(p.total_correction, 16u * 5000u);
    EXPECT_EQ(p.total_preparations, 16u * (185u + 50u * 100u + 5000u));
    EXPECT_FALSE(p.epsilon.has_value());
}

TEST(PlanBudget, Overrides) {
    BudgetTargets t;
    t.correction_shots = 7;
    t.epsilon = 0.01;
    t.n_qpe_override = 48;
    const BudgetPlan p = plan_budget(t, 4);
    EXPECT_EQ(p.n_qpe, 48u);
    EXPECT_EQ(p.correction_shots, 7u);
    EXPECT_EQ(*p.epsilon, 0.01);
    EXPECT_EQ(p.total_preparations, 4u * (185u + 49u * 100u + 7u));
}

TEST(PlanBudget, MonotoneInFailureProbabilitiesAndMargins) {
    std::size_t last_n1 = SIZE_MAX, last_qpe = SIZE_MAX, last_k = SIZE_MAX;
    for (double eta : {0.01, 0.02, 0.05, 0.1, 0.2, 0.4}) {
        BudgetTargets t;
        t.eta1 = eta;
        t.eta3 = eta;
        t.eta0 = eta;
        const BudgetPlan p = plan_budget(t, 4);
        EXPECT_LE(p.n_1, last_n1);
        EXPECT_LE(p.n_qpe, last_qpe);
        EXPECT_LE(p.total_kitaev, last_k);
        last_n1 = p.n_1;
        last_qpe = p.n_qpe;
        last_k = p.total_kitaev;
    }
    last_n1 = SIZE_MAX;
    for (double g : {0.02, 0.05, 0.1, 0.2, 0.3}) {
        BudgetTargets t;
        t.g1 = g;
        const std::size_t n1 = plan_budget(t, 4).n_1;
        EXPECT_LE(n1, last_n1);
        last_n1 = n1;
    }
    last_qpe = SIZE_MAX;
    for (double d : {0.05, 0.1, 0.2, 0.3, 0.4, 0.45}) {
        BudgetTargets t;
        t.delta = d;
        const std::size_t q = plan_budget(t, 4).n_qpe;
        EXPECT_LE(q, last_qpe);
        last_qpe = q;
    }
    last_k = SIZE_MAX;
    for (double e : {0.01, 0.03, 0.0625, 0.2}) {
        BudgetTargets t;
        t.eps_tan = e;
        const std::size_t k = plan_budget(t, 4).total_kitaev;
        EXPECT_LE(k, last_k);
        last_k = k;
    }
}

TEST(PlanBudget, Errors) {
    BudgetTargets t;
    EXPECT_THROW(plan_budget(t, 0), std::invalid_argument);
    t.eta1 = 1.0;
    EXPECT_THROW(plan_budget(t, 4), std::invalid_argument);
    t = {};
    t.delta = 0.5;
    EXPECT_THROW(plan_budget(t, 4), std::invalid_argument);
    t = {};
    t.repetitions = 0;
    EXPECT_THROW(plan_budget(t, 4), std::invalid_argument);
    t = {};
    t.epsilon = 1.5;
    EXPECT_THROW(plan_budget(t, 4), std::invalid_argument);
}
