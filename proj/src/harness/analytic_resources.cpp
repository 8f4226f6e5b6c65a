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

#include "tcps/harness/analytic_resources.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tcps::harness {

namespace {

void check(std::size_t n, double eta) {
    if (n == 0 || !(eta > 0.0)) {
        throw std::invalid_argument("analytic rows need N >= 1 and eta > 0");
    }
}

double l_over_log_l(double l) {
    const double ll = l > 0.0 ? std::log(l) : 0.0;
    return ll > 0.0 ? l / ll : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

double log_term(std::size_t n_terms, double eta) {
    check(n_terms, eta);
    return std::log(static_cast<double>(n_terms) / std::sqrt(eta));
}

AnalyticRow qee_row(std::size_t n_terms, double eta) {
    check(n_terms, eta);
    const double n = static_cast<double>(n_terms);
    AnalyticRow r;
    r.method = "qee";
    r.state_preparations_formula = "N^2/eta";
    r.state_preparations = n * n / eta;
    r.nisq_coherence = 1.0;
    r.memory_interactions_formula = "";
    return r;
}

AnalyticRow tcps_row(std::size_t n_terms, double eta) {
    const double l = log_term(n_terms, eta);
    const double n = static_cast<double>(n_terms);
    AnalyticRow r;
    r.method = "tcps";
    r.state_preparations_formula = "(N^(4/3)/eta)*log(N/sqrt(eta))";
    r.state_preparations = std::pow(n, 4.0 / 3.0) / eta * l;
    r.nisq_coherence = l;
    r.memory_coherence = n;
    r.memory_interactions = n;
    r.memory_interactions_formula = "N";
    return r;
}

AnalyticRow cps_row(std::size_t n_terms, double eta) {
    const double l = log_term(n_terms, eta);
    const double n = static_cast<double>(n_terms);
    const double f = l_over_log_l(l);
    AnalyticRow r;
    r.method = "cps";
    r.state_preparations_formula = "(N/eta)*L/log(L), L=log(N/sqrt(eta))";
    r.state_preparations = n / eta * f;
    r.nisq_coherence = l;
    r.memory_coherence = n;
    r.memory_interactions = n * f;
    r.memory_interactions_formula = "N*L/log(L)";
    return r;
}

}  // namespace tcps::harness
