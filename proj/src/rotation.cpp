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

#include "tcps/rotation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tcps {

namespace {

constexpr std::size_t kDenseLimitQubits = 9;
constexpr std::size_t kOracleLimitQubits = 14;

QubitMask low_mask(std::size_t n) { return n == 0 ? 0 : (bit(n) - 1); }

std::vector<Gate> adjoint_sequence(const std::vector<Gate> &gates) {
    std::vector<Gate> out;
    out.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        out.push_back(it->adjoint());
    }
    return out;
}

std::vector<Gate> shifted(const std::vector<Gate> &gates, std::size_t offset) {
    if (offset == 0) {
        return gates;
    }
    std::vector<Gate> out;
    out.reserve(gates.size());
    for (const auto &g : gates) {
        out.push_back(g.shifted(offset));
    }
    return out;
}

StateVector apply_forward(const RotationOperator &op, const StateVector &psi) {
    StateVector out = psi;
    apply_gates(out, op.forward());
    return out;
}

}  // namespace

double dressing_epsilon_prime(double coefficient, double epsilon) {
    const double target = 4.0 * coefficient * coefficient * epsilon;
    if (!(epsilon > 0.0) || target > 1.0 + 1e-15) {
        throw std::invalid_argument("dressing: |a| sqrt(eps) = " +
                                    std::to_string(std::abs(coefficient) * std::sqrt(epsilon)) +
                                    " exceeds 1/2");
    }
    return 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - target)));
}

RotationOperator::RotationOperator(const PreparationCircuit &prep, const PauliTerm &term,
                                   std::optional<Dressing> dressing)
    : n_system_(prep.n_qubits), term_(term), dressing_(dressing) {
    if (term.pauli.num_qubits() != prep.n_qubits) {
        throw std::invalid_argument("RotationOperator: Pauli string and preparation sizes differ");
    }
    if (n_system_ + 1 > 64) {
        throw std::invalid_argument("RotationOperator: register too large");
    }
    if (!dressing_) {
        reference_ = prep.gates;
        forward_.push_back(term.pauli.as_gate());
        const auto v_dag = adjoint_sequence(reference_);
        forward_.insert(forward_.end(), v_dag.begin(), v_dag.end());
        forward_.push_back(Gate::reflection(low_mask(n_system_)));
        forward_.insert(forward_.end(), reference_.begin(), reference_.end());
        forward_.push_back(Gate::global_phase(-1.0));
        return;
    }
    if (dressing_->orientation != 1 && dressing_->orientation != -1) {
        throw std::invalid_argument("RotationOperator: orientation must be +1 or -1");
    }
    epsilon_prime_ = dressing_epsilon_prime(dressing_->coefficient, dressing_->epsilon);
    const double theta = 2.0 * std::asin(std::sqrt(epsilon_prime_));
    reference_.push_back(Gate::unitary(gates::ry(theta), 0));
    for (const auto &g : prep.gates) {
        reference_.push_back(g.shifted(1));
    }
    reference_.push_back(
        term.pauli.as_gate(1, static_cast<double>(dressing_->orientation)).controlled_by(0));
    forward_.push_back(Gate::pauli(bit(0), 0));
    const auto vt_dag = adjoint_sequence(reference_);
    forward_.insert(forward_.end(), vt_dag.begin(), vt_dag.end());
    forward_.push_back(Gate::reflection(low_mask(n_system_ + 1)));
    forward_.insert(forward_.end(), reference_.begin(), reference_.end());
    forward_.push_back(Gate::global_phase(-1.0));
}

std::vector<Gate> RotationOperator::forward(std::size_t offset) const { return shifted(forward_, offset); }

std::vector<Gate> RotationOperator::adjoint(std::size_t offset) const {
    return shifted(adjoint_sequence(forward_), offset);
}

StateVector RotationOperator::reference_state() const {
    StateVector s(num_qubits());
    apply_gates(s, reference_);
    return s;
}

double RotationOperator::predicted_cos(double mean) const noexcept {
    if (!dressing_) {
        return mean;
    }
    return 2.0 * std::sqrt(dressing_->epsilon) * std::abs(dressing_->coefficient) *
           static_cast<double>(dressing_->orientation) * mean;
}

RotationOperator build_rotation_operator(const PreparationCircuit &prep, const PauliTerm &term,
                                         std::optional<Dressing> dressing) {
    return RotationOperator(prep, term, dressing);
}

EigenBasis rotation_eigenstates(const RotationOperator &op) {
    const StateVector psi = op.reference_state();
    const StateVector u_psi = apply_forward(op, psi);
    const Complex alpha = inner_product(psi, u_psi);
    const std::size_t dim = psi.dimension();

    std::vector<Complex> r(dim);
    double r_norm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        r[i] = u_psi[i] - alpha * psi[i];
        r_norm += std::norm(r[i]);
    }
    r_norm = std::sqrt(r_norm);
    if (r_norm < 1e-10) {
        const double arg = std::arg(alpha);
        EigenBasis basis{std::abs(arg), psi, psi, 0.0, 0.0};
        (arg >= 0.0 ? basis.weight_plus : basis.weight_minus) = 1.0;
        return basis;
    }
    for (auto &v : r) {
        v /= r_norm;
    }
    const StateVector e1(op.num_qubits(), r);
    const StateVector u_e1 = apply_forward(op, e1);

    Eigen::Matrix2cd m;
    m(0, 0) = alpha;
    m(0, 1) = inner_product(psi, u_e1);
    m(1, 0) = inner_product(e1, u_psi);
    m(1, 1) = inner_product(e1, u_e1);
    Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(m);
    const auto &values = solver.eigenvalues();
    const int ip = std::arg(values(0)) >= std::arg(values(1)) ? 0 : 1;
    const int im = 1 - ip;

    auto lift = [&](int k) {
        const Eigen::Vector2cd v = solver.eigenvectors().col(k).normalized();
        std::vector<Complex> amp(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            amp[i] = v(0) * psi[i] + v(1) * e1[i];
        }
        double norm = 0.0;
        for (const auto &a : amp) {
            norm += std::norm(a);
        }
        for (auto &a : amp) {
            a /= std::sqrt(norm);
        }
        return StateVector(op.num_qubits(), std::move(amp));
    };
    EigenBasis basis{std::abs(std::arg(values(ip))), lift(ip), lift(im), 0.0, 0.0};
    basis.weight_plus = std::norm(inner_product(basis.plus, psi));
    basis.weight_minus = std::norm(inner_product(basis.minus, psi));
    return basis;
}

EigenphasePair eigenphase_oracle(const RotationOperator &op) {
    const std::size_t n = op.num_qubits();
    if (n > kOracleLimitQubits) {
        throw std::length_error("eigenphase_oracle: dimension 2^" + std::to_string(n) +
                                " exceeds 2^14");
    }
    if (n > kDenseLimitQubits) {
        const EigenBasis b = rotation_eigenstates(op);
        return {b.phase, b.weight_plus, b.weight_minus};
    }

    const std::size_t dim = std::size_t{1} << n;
    const auto forward = op.forward();
    Eigen::MatrixXcd u(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        StateVector col = StateVector::basis_state(n, k);
        apply_gates(col, forward);
        for (std::size_t i = 0; i < dim; ++i) {
            u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = col[i];
        }
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(u);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigenphase_oracle: eigensolver failed");
    }
    const StateVector ref = op.reference_state();
    Eigen::VectorXcd psi(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        psi(static_cast<Eigen::Index>(i)) = ref[i];
    }

    const auto &values = solver.eigenvalues();
    std::vector<bool> used(dim, false);
    struct Cluster {
        double arg;
        double weight;
    };
    std::vector<Cluster> significant;
    for (std::size_t i = 0; i < dim; ++i) {
        if (used[i]) {
            continue;
        }
        std::vector<Eigen::Index> members;
        for (std::size_t k = i; k < dim; ++k) {
            if (!used[k] && std::abs(values(static_cast<Eigen::Index>(k)) -
                                     values(static_cast<Eigen::Index>(i))) < 1e-7) {
                used[k] = true;
                members.push_back(static_cast<Eigen::Index>(k));
            }
        }
        Eigen::MatrixXcd block(dim, static_cast<Eigen::Index>(members.size()));
        for (std::size_t c = 0; c < members.size(); ++c) {
            block.col(static_cast<Eigen::Index>(c)) = solver.eigenvectors().col(members[c]);
        }
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(block);
        const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(block.rows(), block.cols());
        const double weight = (q.adjoint() * psi).squaredNorm();
        if (weight > 1e-6) {
            significant.push_back({std::arg(values(static_cast<Eigen::Index>(i))), weight});
        }
    }
    if (significant.empty() || significant.size() > 2) {
        throw std::logic_error("eigenphase_oracle: reference state spans " +
                               std::to_string(significant.size()) + " eigenspaces");
    }
    EigenphasePair pair;
    pair.phase = std::abs(significant[0].arg);
    for (const auto &c : significant) {
        (c.arg >= 0.0 ? pair.weight_plus : pair.weight_minus) += c.weight;
    }
    if (significant.size() == 2 &&
        std::abs(std::abs(significant[0].arg) - std::abs(significant[1].arg)) > 1e-6) {
        throw std::logic_error("eigenphase_oracle: eigenphases are not a +-phi pair");
    }
    return pair;
}

}  // namespace tcps
