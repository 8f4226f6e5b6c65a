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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "tcps/rng.hpp"

namespace tcps {

using Complex = std::complex<double>;
using Qubit = std::size_t;
using QubitMask = std::uint64_t;

// Qubit q is bit q of the amplitude index (little-endian).
inline constexpr std::size_t kMaxQubits = 24;

inline constexpr QubitMask bit(Qubit q) noexcept { return QubitMask{1} << q; }

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

namespace gates {
Matrix2 identity();
Matrix2 hadamard();
Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();
/// diag(1, i); equals R_z(pi/2) up to global phase.
Matrix2 phase_s();
Matrix2 phase_s_dagger();
Matrix2 rz(double theta);
Matrix2 ry(double theta);
Matrix2 adjoint(const Matrix2 &m);
Matrix2 multiply(const Matrix2 &a, const Matrix2 &b);
bool is_unitary(const Matrix2 &m, double tol = 1e-12);
}  // namespace gates

struct UnitaryOp {
    Matrix2 matrix;
    Qubit target;
};

/// phase * i^{|x&z|} * X^x Z^z, so that x=z=1 on one qubit is exactly Y.
struct PauliOp {
    QubitMask x_mask = 0;
    QubitMask z_mask = 0;
    Complex phase{1.0, 0.0};
};

/// I - 2|0..0><0..0| on the qubits of `support`, identity elsewhere.
struct ReflectionOp {
    QubitMask support = 0;
};

class Gate {
   public:
    using Op = std::variant<UnitaryOp, PauliOp, ReflectionOp>;

    static Gate unitary(const Matrix2 &matrix, Qubit target);
    static Gate pauli(QubitMask x_mask, QubitMask z_mask, Complex phase = 1.0);
    static Gate global_phase(Complex phase);
    static Gate reflection(QubitMask support);
    static Gate cnot(Qubit control, Qubit target);

    /// Adds a control qubit. Throws if it overlaps the targets.
    Gate controlled_by(Qubit control) const;
    Gate adjoint() const;
    /// Relocates every qubit index by +offset.
    Gate shifted(std::size_t offset) const;

    const Op &op() const noexcept { return op_; }
    QubitMask controls() const noexcept { return controls_; }
    QubitMask targets() const noexcept;
    /// Highest qubit index touched plus one (0 for a pure global phase).
    std::size_t span() const noexcept;

   private:
    explicit Gate(Op op) : op_(std::move(op)) {}
    Op op_;
    QubitMask controls_ = 0;
};

class StateVector {
   public:
    /// |0...0> on n qubits.
    explicit StateVector(std::size_t n_qubits);
    /// Validates length 2^n and unit norm (1e-10).
    StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);

    static StateVector basis_state(std::size_t n_qubits, std::uint64_t index);

    std::size_t num_qubits() const noexcept { return n_qubits_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }
    double norm_squared() const noexcept;

    // Kernel access. Callers are responsible for keeping the norm.
    std::span<Complex> data() noexcept { return amplitudes_; }

   private:
    std::size_t n_qubits_;
    std::vector<Complex> amplitudes_;
};

class ImpossibleBranchError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

void apply_gate(StateVector &state, const Gate &gate);
void apply_gates(StateVector &state, std::span<const Gate> gates);
/// Applies every gate of `unitary` with `control` added to its control set.
void apply_controlled(StateVector &state, Qubit control, std::span<const Gate> unitary);

double probability_of_one(const StateVector &state, Qubit q);
/// Projective Z measurement with collapse. Throws ImpossibleBranchError when
/// the selected branch has probability below 1e-15.
int measure_qubit(StateVector &state, Qubit q, Rng &rng);
/// Same, with the uniform draw u in [0, 1) supplied: outcome 1 iff u < p(1).
int measure_qubit_with_draw(StateVector &state, Qubit q, double u);
/// Measure, then flip back to |0> if the outcome was 1.
int measure_and_reset(StateVector &state, Qubit q, Rng &rng);

Complex inner_product(const StateVector &a, const StateVector &b);

struct PreparationCircuit {
    std::size_t n_qubits = 0;
    std::vector<Gate> gates;
    std::uint64_t seed = 0;

    PreparationCircuit inverse() const;
    std::vector<Gate> shifted_gates(std::size_t offset) const;
};

StateVector prepare(const PreparationCircuit &circuit);

Matrix2 haar_unitary(Rng &rng);

/// `depth` layers of Haar single-qubit gates, each followed by a CNOT brick
/// (even pairs on even layers, odd pairs on odd layers).
PreparationCircuit random_preparation(std::size_t n_qubits, std::size_t depth, std::uint64_t seed);

}  // namespace tcps
