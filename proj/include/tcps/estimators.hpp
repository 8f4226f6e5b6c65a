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
#include <span>
#include <stdexcept>
#include <vector>

namespace tcps {

/// Final frame applied to a Hadamard-test or memory qubit before H:
/// kX is S = I, kY is S = R_z(pi/2).
enum class Frame { kX, kY };

/// Sign sigma in s_hat = sigma (1 - 2 nu_{Y=0}). The simulated circuit gives
/// P(Y=0 | phi) = (1 - sin phi)/2, hence +1; unit tests pin this against the
/// exact circuit.
inline constexpr int kYFrameSign = +1;

struct OutcomeCounts {
    std::size_t zeros = 0;
    std::size_t ones = 0;

    std::size_t total() const noexcept { return zeros + ones; }
    double frequency_zero() const;
    OutcomeCounts &operator+=(const OutcomeCounts &o) noexcept {
        zeros += o.zeros;
        ones += o.ones;
        return *this;
    }
    friend bool operator==(const OutcomeCounts &, const OutcomeCounts &) = default;
};

class IndeterminatePhaseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class NoEncodingNeededError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// atan2(s_hat, c_hat) in (-pi, pi] with c_hat = 2 nu_X0 - 1 and
/// s_hat = kYFrameSign (1 - 2 nu_Y0).
double kitaev_readout(const OutcomeCounts &x_frame, const OutcomeCounts &y_frame);
double kitaev_readout_frequencies(double nu_x0, double nu_y0);

/// (3 + cos 8 Phi) / (4 M_q), as stated for the Q-hat readout.
double readout_variance_prediction(double phase, std::size_t m_q);

/// Delta-method variance of atan2 readout with n_x X-frame and n_y Y-frame
/// shots: sin^4(Phi)/n_x + cos^4(Phi)/n_y.
double phase_variance_delta(double phase, double n_x, double n_y);

/// (N_encoded pi - 2 Phi_hat) / (4 sqrt(eps)).
double taylor_invert(double phase_hat, std::size_t n_encoded, double epsilon);

/// x = 2 sqrt(eps) a <P>; the signed argument each term contributes.
double encoding_argument(double coefficient, double mean, double epsilon);

/// Wraps an angle into (-pi, pi].
double wrap_phase(double phase);

/// Shifts `phase` by a multiple of 2 pi so it lies within pi of `reference`.
double unwrap_near(double phase, double reference);

enum class CorrectionMode { kSeries, kClosedForm };

/// (1/(2 sqrt eps)) sum_j [asin(x_j) - x_j], x_j = 2 sqrt(eps) a_j <P_j>.
/// The series mode sums the Taylor expansion of asin term by term (signed odd
/// powers) until the relative increment is below 1e-14 or max_order terms.
/// Subtract the result from taylor_invert's output.
double taylor_correction(std::span<const double> weights, std::span<const double> means,
                         double epsilon, CorrectionMode mode = CorrectionMode::kClosedForm,
                         std::size_t max_order = 60);

struct CorrectedVariance {
    /// 1/(eps M_q) + (1/n_cor) sum_j [(2/pi) K(16 eps^2 a^4 P^4) - 1] a^2 (1-P^2)
    double elliptic = 0.0;
    /// 1/(eps M_q) + (eps^2/n_cor) sum_j a^6 P^4 (1-P^2)
    double simplified = 0.0;
};

CorrectedVariance corrected_variance_prediction(std::span<const double> weights,
                                                std::span<const double> means, double epsilon,
                                                std::size_t m_q, std::size_t n_cor);

/// Delta-method variance of the correction residue driven by the correction
/// shots: sum_j a_j^2 (1/sqrt(1-x_j^2) - 1)^2 (1 - P_j^2) / n_cor.
double correction_variance_delta(std::span<const double> weights, std::span<const double> means,
                                 double epsilon, std::size_t n_cor);

struct EpsilonChoice {
    double epsilon = 0.0;
    double unclamped = 0.0;
    bool clamped = false;
};

/// (n_cor / (M_q sum_j a^6 P^4 (1-P^2)))^{1/3} with n_cor = M_c^cor / N,
/// clamped to `upper_bound`. With ladder_depth, the ratio inside the cube
/// root is divided by 2^{2(d_L+1)}. Throws NoEncodingNeededError when the
/// sum vanishes.
EpsilonChoice optimal_epsilon(std::size_t correction_total, std::size_t m_q,
                              std::span<const double> weights, std::span<const double> means,
                              double upper_bound, std::optional<std::size_t> ladder_depth = std::nullopt);

/// (M_c^cor / M_q)^{1/3} N^{-2/3}: the equal-weight reduced form.
double optimal_epsilon_reduced(double correction_total, double m_q, std::size_t n_terms);

/// sum_j 2 |a_j P_j| ((1 - eta_1) eta_3 + eta_1 / 2).
double error_floor(std::span<const double> weights, std::span<const double> means, double eta1,
                   double eta3);

}  // namespace tcps
