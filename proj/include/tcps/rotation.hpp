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
#include <vector>

#include "tcps/pauli.hpp"
#include "tcps/statevector.hpp"

namespace tcps {

struct Dressing {
    double coefficient = 1.0;
    double epsilon = 0.0;
    /// s_j: the dressing uses s_j P_j so the encoded cosine is non-negative
    /// when s_j matches the sign of <P_j>.
    int orientation = +1;
};

/// Smaller root of sqrt(eps'(1 - eps')) = |a| sqrt(eps), in (0, 1/2].
double dressing_epsilon_prime(double coefficient, double epsilon);

/// Rotation operator as a gate sequence on a local register.
///
/// Undressed (qubits 0..n-1 = system):
///   U = -V Pi0 V^dagger P,           cos(phi) = <P>.
/// Dressed (qubit 0 = processing ancilla p, qubits 1..n = system):
///   Vt = cP_p (R_y(theta) (x) V),    sin(theta/2) = sqrt(eps'),
///   U  = -Vt Pi0 Vt^dagger X_p,      cos(phi) = 2 sqrt(eps) |a| s <P>.
/// The global -1 is an explicit phase gate, which turns into Z on the
/// control qubit when the operator is applied controlled. Pi0 reflects about
/// all-zeros of the whole local register.
class RotationOperator {
   public:
    RotationOperator(const PreparationCircuit &prep, const PauliTerm &term,
                     std::optional<Dressing> dressing = std::nullopt);

    std::size_t num_qubits() const noexcept { return n_system_ + (dressed() ? 1 : 0); }
    std::size_t system_qubits() const noexcept { return n_system_; }
    std::size_t system_offset() const noexcept { return dressed() ? 1 : 0; }
    bool dressed() const noexcept { return dressing_.has_value(); }
    const std::optional<Dressing> &dressing() const noexcept { return dressing_; }
    double epsilon_prime() const noexcept { return epsilon_prime_; }
    const PauliTerm &term() const noexcept { return term_; }

    /// V (undressed) or Vt (dressed) in local indices.
    const std::vector<Gate> &reference_preparation() const noexcept { return reference_; }
    std::vector<Gate> forward(std::size_t offset = 0) const;
    std::vector<Gate> adjoint(std::size_t offset = 0) const;
    /// V|0> or Vt|0> on the local register.
    StateVector reference_state() const;
    /// Cosine of the eigenphase implied by the exact mean <P>.
    double predicted_cos(double mean) const noexcept;

   private:
    std::size_t n_system_;
    PauliTerm term_;
    std::optional<Dressing> dressing_;
    double epsilon_prime_ = 0.0;
    std::vector<Gate> reference_;
    std::vector<Gate> forward_;
};

RotationOperator build_rotation_operator(const PreparationCircuit &prep, const PauliTerm &term,
                                         std::optional<Dressing> dressing = std::nullopt);

struct EigenphasePair {
    /// phi in [0, pi]; the eigenvalues on the reference subspace are e^{+-i phi}.
    /// Convention: cos(phi) = <P> undressed, 2 sqrt(eps) |a| s <P> dressed.
    double phase = 0.0;
    /// Reference-state weight on the e^{+i phi} and e^{-i phi} eigenspaces.
    double weight_plus = 0.0;
    double weight_minus = 0.0;
};

/// Dense eigendecomposition of the full operator matrix (dimension up to
/// 2^9), keeping eigenspaces with reference weight above 1e-6. Dimensions up
/// to 2^14 fall back to the 2-D Krylov compression of the reference state.
/// Throws std::length_error beyond 2^14.
EigenphasePair eigenphase_oracle(const RotationOperator &op);

struct EigenBasis {
    double phase = 0.0;
    /// Normalized projections of the reference state onto the e^{+i phi} and
    /// e^{-i phi} eigenvectors (local register). When the reference is itself
    /// an eigenvector, minus equals plus and weight_minus is 0.
    StateVector plus;
    StateVector minus;
    double weight_plus = 0.0;
    double weight_minus = 0.0;
};

/// Eigenvectors within span{psi, U psi}, psi the reference state.
EigenBasis rotation_eigenstates(const RotationOperator &op);

}  // namespace tcps
