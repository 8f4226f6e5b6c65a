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

#include "tcps/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tcps/special_functions.hpp"

namespace tcps {

namespace {

constexpr double kPi = std::numbers::pi;

void check_epsilon(double epsilon, const char *who) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument(std::string(who) + ": epsilon must lie in (0, 1)");
    }
}

void check_sizes(std::span<const double> w, std::span<const double> m, const char *who) {
    if (w.size() != m.size()) {
        throw std::invalid_argument(std::string(who) + ": weights and means differ in length");
    }
}

}  // namespace

double OutcomeCounts::frequency_zero() const {
    if (total() == 0) {
        throw std::invalid_argument("OutcomeCounts: no outcomes recorded");
    }
    return static_cast<double>(zeros) / static_cast<double>(total());
}

double kitaev_readout_frequencies(double nu_x0, double nu_y0) {
    const double c = 2.0 * nu_x0 - 1.0;
    const double s = kYFrameSign * (1.0 - 2.0 * nu_y0);
    if (std::abs(c) < 1e-12 && std::abs(s) < 1e-12) {
        throw IndeterminatePhaseError("kitaev_readout: both quadratures vanish");
    }
    return std::atan2(s, c);
}

double kitaev_readout(const OutcomeCounts &x_frame, const OutcomeCounts &y_frame) {
    if (x_frame.total() == 0 || y_frame.total() == 0) {
        throw std::invalid_argument("kitaev_readout: both frames need outcomes");
    }
    return kitaev_readout_frequencies(x_frame.frequency_zero(), y_frame.frequency_zero());
}

double readout_variance_prediction(double phase, std::size_t m_q) {
    if (m_q == 0) {
        throw std::invalid_argument("readout_variance_prediction: M_q must be >= 1");
    }
    return (3.0 + std::cos(8.0 * phase)) / (4.0 * static_cast<double>(m_q));
}

double phase_variance_delta(double phase, double n_x, double n_y) {
    if (!(n_x > 0.0 && n_y > 0.0)) {
        throw std::invalid_argument("phase_variance_delta: shot counts must be positive");
    }
    const double s2 = std::sin(phase) * std::sin(phase);
    const double c2 = std::cos(phase) * std::cos(phase);
    return s2 * s2 / n_x + c2 * c2 / n_y;
}

double taylor_invert(double phase_hat, std::size_t n_encoded, double epsilon) {
    check_epsilon(epsilon, "taylor_invert");
    return (static_cast<double>(n_encoded) * kPi - 2.0 * phase_hat) / (4.0 * std::sqrt(epsilon));
}

double encoding_argument(double coefficient, double mean, double epsilon) {
    return 2.0 * std::sqrt(epsilon) * coefficient * mean;
}

double wrap_phase(double phase) {
    double w = std::remainder(phase, 2.0 * kPi);
    if (w <= -kPi) {
        w += 2.0 * kPi;
    }
    return w;
}

double unwrap_near(double phase, double reference) {
    return reference + wrap_phase(phase - reference);
}

double taylor_correction(std::span<const double> weights, std::span<const double> means,
                         double epsilon, CorrectionMode mode, std::size_t max_order) {
    check_sizes(weights, means, "taylor_correction");
    check_epsilon(epsilon, "taylor_correction");
    const double root = std::sqrt(epsilon);
    std::vector<double> x(weights.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = encoding_argument(weights[j], means[j], epsilon);
        if (!(std::abs(x[j]) < 1.0)) {
            throw std::domain_error("taylor_correction: |2 sqrt(eps) a_j <P_j>| >= 1 for term " +
                                    std::to_string(j));
        }
    }
    if (mode == CorrectionMode::kClosedForm) {
        double total = 0.0;
        for (double xj : x) {
            total += std::asin(xj) - xj;
        }
        return total / (2.0 * root);
    }
    // asin(x) - x = sum_{n>=1} b_n x^{2n+1} / (2n+1), b_n = (2n)! / (4^n (n!)^2).
    std::vector<double> power(x);
    std::vector<double> x2(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        x2[j] = x[j] * x[j];
    }
    double b = 1.0;
    double total = 0.0;
    double magnitude = 0.0;
    for (std::size_t n = 1; n <= max_order; ++n) {
        b *= (2.0 * n - 1.0) / (2.0 * n);
        double signed_sum = 0.0;
        double abs_sum = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            power[j] *= x2[j];
            signed_sum += power[j];
            abs_sum += std::abs(power[j]);
        }
        const double c = b / (2.0 * n + 1.0);
        total += c * signed_sum;
        magnitude += c * abs_sum;
        if (c * abs_sum <= 1e-14 * magnitude) {
            break;
        }
    }
    return total / (2.0 * root);
}

CorrectedVariance corrected_variance_prediction(std::span<const double> weights,
                                                std::span<const double> means, double epsilon,
                                                std::size_t m_q, std::size_t n_cor) {
    check_sizes(weights, means, "corrected_variance_prediction");
    check_epsilon(epsilon, "corrected_variance_prediction");
    if (m_q == 0 || n_cor == 0) {
        throw std::invalid_argument("corrected_variance_prediction: M_q and n_cor must be >= 1");
    }
    const double encoding = 1.0 / (epsilon * static_cast<double>(m_q));
    double elliptic = 0.0;
    double simplified = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        const double a = weights[j];
        const double p = means[j];
        if (!(epsilon * 4.0 * a * a * p * p < 1.0)) {
            throw std::domain_error("corrected_variance_prediction: eps >= 1/(4 a^2 P^2) for term " +
                                    std::to_string(j));
        }
        const double a2p2 = a * a * p * p;
        const double t = 16.0 * epsilon * epsilon * a2p2 * a2p2;
        const double spread = a * a * (1.0 - p * p);
        elliptic += (2.0 / kPi * elliptic_K(t) - 1.0) * spread;
        simplified += a2p2 * a2p2 * spread;
    }
    const double n = static_cast<double>(n_cor);
    return {encoding + elliptic / n, encoding + epsilon * epsilon * simplified / n};
}

double correction_variance_delta(std::span<const double> weights, std::span<const double> means,
                                 double epsilon, std::size_t n_cor) {
    check_sizes(weights, means, "correction_variance_delta");
    check_epsilon(epsilon, "correction_variance_delta");
    if (n_cor == 0) {
        throw std::invalid_argument("correction_variance_delta: n_cor must be >= 1");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        const double x = encoding_argument(weights[j], means[j], epsilon);
        if (!(std::abs(x) < 1.0)) {
            throw std::domain_error("correction_variance_delta: |x_j| >= 1");
        }
        const double g = 1.0 / std::sqrt(1.0 - x * x) - 1.0;
        total += weights[j] * weights[j] * g * g * (1.0 - means[j] * means[j]);
    }
    return total / static_cast<double>(n_cor);
}

EpsilonChoice optimal_epsilon(std::size_t correction_total, std::size_t m_q,
                              std::span<const double> weights, std::span<const double> means,
                              double upper_bound, std::optional<std::size_t> ladder_depth) {
    check_sizes(weights, means, "optimal_epsilon");
    if (correction_total == 0 || m_q == 0 || weights.empty() || !(upper_bound > 0.0)) {
        throw std::invalid_argument("optimal_epsilon: inputs must be positive");
    }
    double s = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        const double a2 = weights[j] * weights[j];
        const double p2 = means[j] * means[j];
        s += a2 * a2 * a2 * p2 * p2 * (1.0 - p2);
    }
    if (!(s > 0.0)) {
        throw NoEncodingNeededError("optimal_epsilon: sum a^6 P^4 (1-P^2) vanishes");
    }
    const double n_cor = static_cast<double>(correction_total) / static_cast<double>(weights.size());
    double ratio = n_cor / (static_cast<double>(m_q) * s);
    if (ladder_depth) {
        ratio /= std::ldexp(1.0, static_cast<int>(2 * (*ladder_depth + 1)));
    }
    EpsilonChoice choice;
    choice.unclamped = std::cbrt(ratio);
    choice.clamped = choice.unclamped > upper_bound;
    choice.epsilon = std::min(choice.unclamped, upper_bound);
    return choice;
}

double optimal_epsilon_reduced(double correction_total, double m_q, std::size_t n_terms) {
    if (!(correction_total > 0.0 && m_q > 0.0) || n_terms == 0) {
        throw std::invalid_argument("optimal_epsilon_reduced: inputs must be positive");
    }
    return std::cbrt(correction_total / m_q) * std::pow(static_cast<double>(n_terms), -2.0 / 3.0);
}

double error_floor(std::span<const double> weights, std::span<const double> means, double eta1,
                   double eta3) {
    check_sizes(weights, means, "error_floor");
    double total = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        total += 2.0 * std::abs(weights[j] * means[j]);
    }
    return total * ((1.0 - eta1) * eta3 + eta1 / 2.0);
}

}  // namespace tcps
