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

#include "tcps/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace tcps {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex i_power(int k) {
    switch (k & 3) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
    }
}

void check_mask(const StateVector &state, QubitMask mask, const char *what) {
    if (state.num_qubits() < 64 && (mask >> state.num_qubits()) != 0) {
        throw std::out_of_range(std::string(what) + " qubit index out of range for " +
                                std::to_string(state.num_qubits()) + "-qubit state");
    }
}

void apply_unitary(StateVector &state, const UnitaryOp &op, QubitMask controls) {
    auto amp = state.data();
    const auto &m = op.matrix;
    const std::size_t stride = std::size_t{1} << op.target;
    const std::size_t dim = amp.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & stride) || (i & controls) != controls) {
            continue;
        }
        const Complex a = amp[i];
        const Complex b = amp[i | stride];
        amp[i] = m[0] * a + m[1] * b;
        amp[i | stride] = m[2] * a + m[3] * b;
    }
}

void apply_pauli(StateVector &state, const PauliOp &op, QubitMask controls) {
    auto amp = state.data();
    const std::size_t dim = amp.size();
    const Complex base = op.phase * i_power(std::popcount(op.x_mask & op.z_mask));
    auto coefficient = [&](std::size_t b) {
        return (std::popcount(b & op.z_mask) & 1) ? -base : base;
    };
    if (op.x_mask == 0) {
        for (std::size_t b = 0; b < dim; ++b) {
            if ((b & controls) == controls) {
                amp[b] *= coefficient(b);
            }
        }
        return;
    }
    const QubitMask pivot = op.x_mask & (~op.x_mask + 1);
    for (std::size_t b = 0; b < dim; ++b) {
        if ((b & pivot) || (b & controls) != controls) {
            continue;
        }
        const std::size_t c = b ^ op.x_mask;
        const Complex ab = amp[b];
        const Complex ac = amp[c];
        amp[c] = coefficient(b) * ab;
        amp[b] = coefficient(c) * ac;
    }
}

void apply_reflection(StateVector &state, const ReflectionOp &op, QubitMask controls) {
    auto amp = state.data();
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if ((i & op.support) == 0 && (i & controls) == controls) {
            amp[i] = -amp[i];
        }
    }
}

}  // namespace

namespace gates {

Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

Matrix2 hadamard() {
    const double h = std::numbers::sqrt2 / 2.0;
    return {h, h, h, -h};
}

Matrix2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Matrix2 pauli_y() { return {0.0, -kI, kI, 0.0}; }
Matrix2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }
Matrix2 phase_s() { return {1.0, 0.0, 0.0, kI}; }
Matrix2 phase_s_dagger() { return {1.0, 0.0, 0.0, -kI}; }

Matrix2 rz(double theta) {
    return {std::polar(1.0, -theta / 2.0), 0.0, 0.0, std::polar(1.0, theta / 2.0)};
}

Matrix2 ry(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {c, -s, s, c};
}

Matrix2 adjoint(const Matrix2 &m) {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

Matrix2 multiply(const Matrix2 &a, const Matrix2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

bool is_unitary(const Matrix2 &m, double tol) {
    const Matrix2 p = multiply(adjoint(m), m);
    return std::abs(p[0] - 1.0) <= tol && std::abs(p[1]) <= tol && std::abs(p[2]) <= tol &&
           std::abs(p[3] - 1.0) <= tol;
}

}  // namespace gates

Gate Gate::unitary(const Matrix2 &matrix, Qubit target) {
    if (!gates::is_unitary(matrix)) {
        throw std::invalid_argument("Gate::unitary: matrix is not unitary within 1e-12");
    }
    if (target >= 64) {
        throw std::out_of_range("Gate::unitary: target index out of range");
    }
    return Gate(UnitaryOp{matrix, target});
}

Gate Gate::pauli(QubitMask x_mask, QubitMask z_mask, Complex phase) {
    if (std::abs(std::abs(phase) - 1.0) > 1e-12) {
        throw std::invalid_argument("Gate::pauli: phase must have unit modulus");
    }
    return Gate(PauliOp{x_mask, z_mask, phase});
}

Gate Gate::global_phase(Complex phase) { return pauli(0, 0, phase); }

Gate Gate::reflection(QubitMask support) {
    if (support == 0) {
        throw std::invalid_argument("Gate::reflection: empty support");
    }
    return Gate(ReflectionOp{support});
}

Gate Gate::cnot(Qubit control, Qubit target) {
    return unitary(gates::pauli_x(), target).controlled_by(control);
}

QubitMask Gate::targets() const noexcept {
    return std::visit(
        [](const auto &op) -> QubitMask {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, UnitaryOp>) {
                return bit(op.target);
            } else if constexpr (std::is_same_v<T, PauliOp>) {
                return op.x_mask | op.z_mask;
            } else {
                return op.support;
            }
        },
        op_);
}

std::size_t Gate::span() const noexcept {
    const QubitMask all = targets() | controls_;
    return all == 0 ? 0 : static_cast<std::size_t>(std::bit_width(all));
}

Gate Gate::controlled_by(Qubit control) const {
    if (control >= 64) {
        throw std::out_of_range("Gate::controlled_by: control index out of range");
    }
    if (targets() & bit(control)) {
        throw std::invalid_argument("Gate::controlled_by: control qubit " + std::to_string(control) +
                                    " overlaps the gate targets");
    }
    Gate g = *this;
    g.controls_ |= bit(control);
    return g;
}

Gate Gate::adjoint() const {
    Gate g = *this;
    std::visit(
        [](auto &op) {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, UnitaryOp>) {
                op.matrix = gates::adjoint(op.matrix);
            } else if constexpr (std::is_same_v<T, PauliOp>) {
                // i^{|x&z|} X^x Z^z is Hermitian, only the explicit phase conjugates.
                op.phase = std::conj(op.phase);
            }
        },
        g.op_);
    return g;
}

Gate Gate::shifted(std::size_t offset) const {
    if (span() + offset > 64) {
        throw std::out_of_range("Gate::shifted: offset moves qubits past index 63");
    }
    Gate g = *this;
    g.controls_ <<= offset;
    std::visit(
        [offset](auto &op) {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, UnitaryOp>) {
                op.target += offset;
            } else if constexpr (std::is_same_v<T, PauliOp>) {
                op.x_mask <<= offset;
                op.z_mask <<= offset;
            } else {
                op.support <<= offset;
            }
        },
        g.op_);
    return g;
}

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits > kMaxQubits) {
        throw std::invalid_argument("StateVector: at most " + std::to_string(kMaxQubits) +
                                    " qubits supported");
    }
    amplitudes_.assign(std::size_t{1} << n_qubits, Complex{});
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits > kMaxQubits) {
        throw std::invalid_argument("StateVector: too many qubits");
    }
    if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("StateVector: amplitude count must be 2^n_qubits");
    }
    if (std::abs(norm_squared() - 1.0) > 1e-10) {
        throw std::invalid_argument("StateVector: amplitudes are not normalized");
    }
}

StateVector StateVector::basis_state(std::size_t n_qubits, std::uint64_t index) {
    StateVector s(n_qubits);
    if (index >= s.dimension()) {
        throw std::out_of_range("StateVector::basis_state: index out of range");
    }
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void apply_gate(StateVector &state, const Gate &gate) {
    check_mask(state, gate.targets(), "target");
    check_mask(state, gate.controls(), "control");
    std::visit(
        [&](const auto &op) {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, UnitaryOp>) {
                if (!gates::is_unitary(op.matrix)) {
                    throw std::invalid_argument("apply_gate: non-unitary matrix");
                }
                apply_unitary(state, op, gate.controls());
            } else if constexpr (std::is_same_v<T, PauliOp>) {
                apply_pauli(state, op, gate.controls());
            } else {
                apply_reflection(state, op, gate.controls());
            }
        },
        gate.op());
}

void apply_gates(StateVector &state, std::span<const Gate> gates) {
    for (const auto &g : gates) {
        apply_gate(state, g);
    }
}

void apply_controlled(StateVector &state, Qubit control, std::span<const Gate> unitary) {
    if (control >= state.num_qubits()) {
        throw std::out_of_range("apply_controlled: control index out of range");
    }
    for (const auto &g : unitary) {
        apply_gate(state, g.controlled_by(control));
    }
}

double probability_of_one(const StateVector &state, Qubit q) {
    if (q >= state.num_qubits()) {
        throw std::out_of_range("probability_of_one: qubit index out of range");
    }
    const std::size_t mask = std::size_t{1} << q;
    double p = 0.0;
    const auto amp = state.amplitudes();
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if (i & mask) {
            p += std::norm(amp[i]);
        }
    }
    return p;
}

int measure_qubit(StateVector &state, Qubit q, Rng &rng) { return measure_qubit_with_draw(state, q, uniform01(rng)); }

int measure_qubit_with_draw(StateVector &state, Qubit q, double u) {
    const double p1 = std::clamp(probability_of_one(state, q), 0.0, 1.0);
    const int outcome = u < p1 ? 1 : 0;
    const double p = outcome ? p1 : 1.0 - p1;
    if (p < 1e-15) {
        throw ImpossibleBranchError("measure_qubit: selected branch has probability " +
                                    std::to_string(p));
    }
    const std::size_t mask = std::size_t{1} << q;
    const double scale = 1.0 / std::sqrt(p);
    auto amp = state.data();
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if (static_cast<int>((i & mask) != 0) == outcome) {
            amp[i] *= scale;
        } else {
            amp[i] = 0.0;
        }
    }
    return outcome;
}

int measure_and_reset(StateVector &state, Qubit q, Rng &rng) {
    const int outcome = measure_qubit(state, q, rng);
    if (outcome == 1) {
        apply_gate(state, Gate::unitary(gates::pauli_x(), q));
    }
    return outcome;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    Complex total{};
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

PreparationCircuit PreparationCircuit::inverse() const {
    PreparationCircuit inv{n_qubits, {}, seed};
    inv.gates.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        inv.gates.push_back(it->adjoint());
    }
    return inv;
}

std::vector<Gate> PreparationCircuit::shifted_gates(std::size_t offset) const {
    std::vector<Gate> out;
    out.reserve(gates.size());
    for (const auto &g : gates) {
        out.push_back(g.shifted(offset));
    }
    return out;
}

StateVector prepare(const PreparationCircuit &circuit) {
    StateVector s(circuit.n_qubits);
    apply_gates(s, circuit.gates);
    return s;
}

Matrix2 haar_unitary(Rng &rng) {
    // Gram-Schmidt on a complex Ginibre matrix, with the phases of R's
    // diagonal absorbed so the result is Haar distributed.
    std::normal_distribution<double> g(0.0, 1.0);
    Complex a0{g(rng), g(rng)}, a1{g(rng), g(rng)};
    Complex b0{g(rng), g(rng)}, b1{g(rng), g(rng)};
    const double na = std::sqrt(std::norm(a0) + std::norm(a1));
    a0 /= na;
    a1 /= na;
    const Complex proj = std::conj(a0) * b0 + std::conj(a1) * b1;
    b0 -= proj * a0;
    b1 -= proj * a1;
    const double nb = std::sqrt(std::norm(b0) + std::norm(b1));
    b0 /= nb;
    b1 /= nb;
    return {a0, b0, a1, b1};
}

PreparationCircuit random_preparation(std::size_t n_qubits, std::size_t depth, std::uint64_t seed) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("random_preparation: qubit count out of range");
    }
    PreparationCircuit c{n_qubits, {}, seed};
    Rng rng(seed);
    for (std::size_t layer = 0; layer < depth; ++layer) {
        for (Qubit q = 0; q < n_qubits; ++q) {
            c.gates.push_back(Gate::unitary(haar_unitary(rng), q));
        }
        for (Qubit q = layer % 2; q + 1 < n_qubits; q += 2) {
            c.gates.push_back(Gate::cnot(q, q + 1));
        }
    }
    return c;
}

}  // namespace tcps
