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

#include <cmath>
#include <vector>

#include "tcps/harness/stats.hpp"
#include "tcps/qee.hpp"

using namespace tcps;

namespace {

PreparationCircuit zero_state(std::size_t n) { return PreparationCircuit{n, {}, 0}; }

}  // namespace

TEST(SamplePauliMean, DeterministicCases) {
    Rng rng(1);
    const PreparationCircuit v = random_preparation(3, 3, 1);
    EXPECT_EQ(sample_pauli_mean(v, {1.0, PauliString::from_letters("III")}, 17, rng), 1.0);
    EXPECT_EQ(sample_pauli_mean(zero_state(1), {1.0, PauliString::from_letters("Z")}, 17, rng), 1.0);
    EXPECT_THROW(sample_pauli_mean(v, {1.0, PauliString::from_letters("III")}, 0, rng), std::invalid_argument);
}

TEST(SamplePauliMean, WithinBinomialErrorBar) {
    Rng rng(2);
    const PreparationCircuit v = random_preparation(3, 4, 2);
    const StateVector psi = prepare(v);
    for (const char *s : {"XZY", "ZZI", "YIX"}) {
        const PauliTerm t{1.0, PauliString::from_letters(s)};
        const double exact = exact_expectation(psi, t.pauli);
        const std::size_t shots = 100000;
        const double m = sample_pauli_mean(v, t, shots, rng);
        EXPECT_NEAR(m, exact, 4.0 * std::sqrt((1.0 - exact * exact) / shots) + 1e-12) << s;
    }
}

TEST(ParityProbability, MatchesExactExpectation) {
    const StateVector psi = prepare(random_preparation(4, 4, 3));
    for (std::uint64_t x = 0; x < 16; ++x) {
        for (std::uint64_t z = 0; z < 16; ++z) {
            const PauliString p(4, x, z);
            EXPECT_NEAR(2.0 * parity_probability_plus(psi, p) - 1.0, exact_expectation(psi, p), 1e-12);
        }
    }
}

TEST(QeeEstimate, DeterministicSingleTerm) {
    Rng rng(4);
    const Observable obs = parse_observable("1\n1.0 Z");
    const QeeResult r = qee_estimate(zero_state(1), obs, 50, rng);
    EXPECT_EQ(r.estimate, 1.0);
    EXPECT_EQ(r.total_shots, 50u);
    EXPECT_EQ(r.ledger.qee_preparations, 50u);
    EXPECT_EQ(r.ledger.nisq_memory_interactions, 0u);
}

TEST(QeeEstimate, SymmetricObservableIsUnbiased) {
    // <X> = <Y> = 0 on |0>.
    const Observable obs = parse_observable("1\n1.0 X\n0.5 Y");
    const ProjectiveSampler sampler(zero_state(1), obs);
    std::vector<double> est;
    for (std::uint64_t t = 0; t < 1000; ++t) {
        Rng rng = make_rng(5, t);
        est.push_back(qee_estimate(sampler, obs, 20, rng).estimate);
    }
    const double se = std::sqrt(harness::sample_variance(est) / est.size());
    EXPECT_NEAR(harness::mean(est), 0.0, 4.0 * se);
}

TEST(QeeEstimate, RandomInstanceBiasWithinPredictedSigma) {
    const ObservableInstance inst = random_observable(3, 5, GeneratorSettings{}, 6);
    const ProjectiveSampler sampler(inst.preparation, inst.observable);
    double exact = 0.0;
    for (std::size_t j = 0; j < inst.observable.size(); ++j) {
        exact += inst.observable[j].coefficient * sampler.exact_mean(j);
    }
    Rng rng(6);
    const QeeResult r = qee_estimate(inst.preparation, inst.observable, 10000, rng);
    EXPECT_LT(std::abs(r.estimate - exact), 4.0 * std::sqrt(r.predicted_variance));
    EXPECT_EQ(r.total_shots, 5u * 10000u);
    EXPECT_EQ(r.ledger.state_preparations(), 50000u);
}

TEST(QeeVariancePrediction, ClosedFormCases) {
    const Observable one = parse_observable("1\n1.0 X");
    const std::vector<double> zero{0.0};
    EXPECT_DOUBLE_EQ(qee_variance_prediction(one, zero, 100), 0.01);
    const std::vector<double> extremal{1.0};
    EXPECT_DOUBLE_EQ(qee_variance_prediction(one, extremal, 100), 0.0);
    EXPECT_THROW(qee_variance_prediction(one, zero, 0), std::invalid_argument);
}

TEST(QeeVariancePrediction, EqualWeightSixteenTermsMatchesMonteCarlo) {
    GeneratorSettings g;
    g.mode = GeneratorMode::kEqualMean;
    g.target_mean = 0.5;
    const ObservableInstance inst = random_observable(8, 16, g, 7);
    const ProjectiveSampler sampler(inst.preparation, inst.observable);
    std::vector<double> means(16, 0.5);
    EXPECT_NEAR(qee_variance_prediction(inst.observable, means, 1000), 0.012, 1e-15);

    std::vector<double> exact_means(16);
    for (std::size_t j = 0; j < 16; ++j) {
        exact_means[j] = sampler.exact_mean(j);
    }
    const double predicted = qee_variance_prediction(inst.observable, exact_means, 1000);
    std::vector<double> est;
    for (std::uint64_t t = 0; t < 10000; ++t) {
        Rng rng = make_rng(7, t);
        est.push_back(qee_estimate(sampler, inst.observable, 1000, rng).estimate);
    }
    EXPECT_NEAR(harness::sample_variance(est) / predicted, 1.0, 0.10);
}
