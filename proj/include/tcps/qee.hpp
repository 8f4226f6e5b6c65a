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
#include <vector>

#include "tcps/pauli.hpp"
#include "tcps/resources.hpp"
#include "tcps/statevector.hpp"

namespace tcps {

/// Measurement statistics of |Psi0> = V|0> for every term of an observable.
/// The Born probability of the +1 eigenvalue is computed once per term by
/// rotating into the string's eigenbasis (H for X, S^dagger then H for Y) and
/// summing even-parity weight on its support; shots are then drawn from it.
class ProjectiveSampler {
   public:
    ProjectiveSampler(const PreparationCircuit &prep, const Observable &obs);

    std::size_t size() const noexcept { return p_plus_.size(); }
    double probability_plus(std::size_t term) const { return p_plus_.at(term); }
    /// Exact <P_j> from the same probabilities: 2 p_plus - 1.
    double exact_mean(std::size_t term) const { return 2.0 * p_plus_.at(term) - 1.0; }
    /// (n_plus - n_minus) / shots.
    double sample_mean(std::size_t term, std::size_t shots, Rng &rng) const;

   private:
    std::vector<double> p_plus_;
};

/// Born probability of eigenvalue +1 for `pauli` on `state`, via basis
/// rotation and parity.
double parity_probability_plus(const StateVector &state, const PauliString &pauli);

double sample_pauli_mean(const PreparationCircuit &prep, const PauliTerm &term, std::size_t shots,
                         Rng &rng);

struct QeeResult {
    double estimate = 0.0;
    std::vector<double> means;
    std::size_t shots_per_term = 0;
    std::size_t total_shots = 0;
    /// Plug-in prediction from the sampled means.
    double predicted_variance = 0.0;
    ResourceLedger ledger;
};

QeeResult qee_estimate(const ProjectiveSampler &sampler, const Observable &obs, std::size_t n_c,
                       Rng &rng);
QeeResult qee_estimate(const PreparationCircuit &prep, const Observable &obs, std::size_t n_c, Rng &rng);

/// sum_j a_j^2 (1 - <P_j>^2) / n_c.
double qee_variance_prediction(const Observable &obs, std::span<const double> means, std::size_t n_c);

}  // namespace tcps
