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

namespace tcps::harness {

/// One analytic resource row with every O(.) constant set to 1, so only
/// the N and eta dependence is meaningful.
struct AnalyticRow {
    std::string method;
    std::string state_preparations_formula;
    double state_preparations = 0.0;
    /// Processing-qubit coherence in units of t_prep.
    double nisq_coherence = 0.0;
    /// Memory coherence in units of t_prep; absent for QEE.
    std::optional<double> memory_coherence;
    /// NISQ <-> memory interactions; absent for QEE.
    std::optional<double> memory_interactions;
    std::string memory_interactions_formula;
};

/// L = log(N / sqrt(eta)).
double log_term(std::size_t n_terms, double eta);

/// N^2 / eta; coherence t_prep; no memory.
AnalyticRow qee_row(std::size_t n_terms, double eta);
/// (N^{4/3} / eta) L; coherence L; memory N; interactions N.
AnalyticRow tcps_row(std::size_t n_terms, double eta);
/// (N / eta) L / log L; coherence L; memory N; interactions N L / log L.
/// The L / log L factor is NaN when log L <= 0.
AnalyticRow cps_row(std::size_t n_terms, double eta);

}  // namespace tcps::harness
