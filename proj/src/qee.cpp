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

#include "tcps/qee.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace tcps {

double parity_probability_plus(const StateVector &state, const PauliString &pauli) {
    if (pauli.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("parity_probability_plus: qubit count mismatch");
    }
    StateVector rotated = state;
    for (Qubit q = 0; q < pauli.num_qubits(); ++q) {
        switch (pauli.letter(q)) {
            case 'X':
                apply_gate(rotated, Gate::unitary(gates::hadamard(), q));
                break;
            case 'Y':
                apply_gate(rotated, Gate::unitary(gates::phase_s_dagger(), q));
                apply_gate(rotated, Gate::unitary(gates::hadamard(), q));
                break;
            default:
                break;
        }
    }
    const QubitMask support = pauli.support();
    double even = 0.0;
    const auto amp = rotated.amplitudes();
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if ((std::popcount(i & support) & 1) == 0) {
            even += std::norm(amp[i]);
        }
    }
    return std::clamp(even, 0.0, 1.0);
}

ProjectiveSampler::ProjectiveSampler(const PreparationCircuit &prep, const Observable &obs) {
    if (prep.n_qubits != obs.num_qubits()) {
        throw std::invalid_argument("ProjectiveSampler: preparation and observable qubit counts differ");
    }
    const StateVector psi0 = prepare(prep);
    p_plus_.reserve(obs.size());
    for (const auto &t : obs) {
        p_plus_.push_back(parity_probability_plus(psi0, t.pauli));
    }
}

double ProjectiveSampler::sample_mean(std::size_t term, std::size_t shots, Rng &rng) const {
    if (shots == 0) {
        throw std::invalid_argument("sample_mean: shots must be >= 1");
    }
    const double p = p_plus_.at(term);
    std::binomial_distribution<std::size_t> draw(shots, p);
    const auto n_plus = static_cast<double>(draw(rng));
    return (2.0 * n_plus - static_cast<double>(shots)) / static_cast<double>(shots);
}

double sample_pauli_mean(const PreparationCircuit &prep, const PauliTerm &term, std::size_t shots,
                         Rng &rng) {
    if (shots == 0) {
        throw std::invalid_argument("sample_pauli_mean: shots must be >= 1");
    }
    const double p = parity_probability_plus(prepare(prep), term.pauli);
    std::binomial_distribution<std::size_t> draw(shots, p);
    const auto n_plus = static_cast<double>(draw(rng));
    return (2.0 * n_plus - static_cast<double>(shots)) / static_cast<double>(shots);
}

QeeResult qee_estimate(const ProjectiveSampler &sampler, const Observable &obs, std::size_t n_c,
                       Rng &rng) {
    if (n_c == 0) {
        throw std::invalid_argument("qee_estimate: n_c must be >= 1");
    }
    if (sampler.size() != obs.size()) {
        throw std::invalid_argument("qee_estimate: sampler does not match observable");
    }
    QeeResult r;
    r.shots_per_term = n_c;
    r.total_shots = n_c * obs.size();
    r.means.reserve(obs.size());
    for (std::size_t j = 0; j < obs.size(); ++j) {
        const double m = sampler.sample_mean(j, n_c, rng);
        r.means.push_back(m);
        r.estimate += obs[j].coefficient * m;
    }
    r.predicted_variance = qee_variance_prediction(obs, r.means, n_c);
    r.ledger.qee_preparations = r.total_shots;
    r.ledger.projective_measurements = r.total_shots;
    return r;
}

QeeResult qee_estimate(const PreparationCircuit &prep, const Observable &obs, std::size_t n_c, Rng &rng) {
    return qee_estimate(ProjectiveSampler(prep, obs), obs, n_c, rng);
}

double qee_variance_prediction(const Observable &obs, std::span<const double> means, std::size_t n_c) {
    if (means.size() != obs.size()) {
        throw std::invalid_argument("qee_variance_prediction: one mean per term required");
    }
    if (n_c == 0) {
        throw std::invalid_argument("qee_variance_prediction: n_c must be >= 1");
    }
    double v = 0.0;
    for (std::size_t j = 0; j < obs.size(); ++j) {
        const double a = obs[j].coefficient;
        v += a * a * std::max(0.0, 1.0 - means[j] * means[j]);
    }
    return v / static_cast<double>(n_c);
}

}  // namespace tcps
