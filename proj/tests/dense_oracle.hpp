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

// Dense-matrix oracles for tests. Qubit 0 is the least significant index
// bit, so an n-qubit product is kron(op_{n-1}, ..., op_0).

#include <Eigen/Dense>

#include "tcps/pauli.hpp"
#include "tcps/statevector.hpp"

namespace tcps::oracle {

using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

inline DenseMatrix letter_matrix(char c) {
    DenseMatrix m(2, 2);
    const Complex i{0.0, 1.0};
    switch (c) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, -i, i, 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("letter_matrix");
    }
    return m;
}

inline DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

inline DenseMatrix pauli_matrix(const PauliString &p) {
    DenseMatrix m = DenseMatrix::Identity(1, 1);
    for (std::size_t q = p.num_qubits(); q-- > 0;) {
        m = kron(m, letter_matrix(p.letter(q)));
    }
    return m;
}

inline DenseVector to_dense(const StateVector &s) {
    DenseVector v(static_cast<Eigen::Index>(s.dimension()));
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s[i];
    }
    return v;
}

/// Matrix of a gate sequence, built column by column from basis states.
inline DenseMatrix circuit_matrix(std::size_t n_qubits, const std::vector<Gate> &gates) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    DenseMatrix m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        StateVector s = StateVector::basis_state(n_qubits, col);
        apply_gates(s, gates);
        m.col(static_cast<Eigen::Index>(col)) = to_dense(s);
    }
    return m;
}

inline StateVector random_state(std::size_t n_qubits, Rng &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    double norm = 0.0;
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return StateVector(n_qubits, std::move(amps));
}

}  // namespace tcps::oracle
