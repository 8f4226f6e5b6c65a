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

#include "tcps/encoding.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace tcps {

namespace {

constexpr double kPi = std::numbers::pi;

void apply_1q(StateVector &s, const Matrix2 &m, Qubit q) { apply_gate(s, Gate::unitary(m, q)); }

}  // namespace

double hadamard_probability_zero(double phase, Frame frame) {
    if (frame == Frame::kX) {
        return 0.5 * (1.0 + std::cos(phase));
    }
    return 0.5 * (1.0 - kYFrameSign * std::sin(phase));
}

ProtocolRegister::ProtocolRegister(std::size_t system_qubits)
    : n_(system_qubits), state_(system_qubits + 4) {
    if (system_qubits == 0) {
        throw std::invalid_argument("ProtocolRegister: need at least one system qubit");
    }
    reset_memory();
}

std::size_t ProtocolRegister::operator_offset(const RotationOperator &op) const {
    if (op.system_qubits() != n_) {
        throw std::invalid_argument("ProtocolRegister: operator acts on " +
                                    std::to_string(op.system_qubits()) + " system qubits, register has " +
                                    std::to_string(n_));
    }
    return op.dressed() ? 0 : 1;
}

void ProtocolRegister::require_clean(const char *who) const {
    if (!clean_) {
        throw std::logic_error(std::string(who) + ": register still holds a previous term");
    }
}

void ProtocolRegister::prepare_reference(const RotationOperator &op) {
    require_clean("prepare_reference");
    const std::size_t offset = operator_offset(op);
    for (const auto &g : op.reference_preparation()) {
        apply_gate(state_, g.shifted(offset));
    }
    clean_ = false;
}

void ProtocolRegister::load_register(const StateVector &reg) {
    require_clean("load_register");
    if (reg.num_qubits() != n_ + 1) {
        throw std::invalid_argument("load_register: expected an (n+1)-qubit register state");
    }
    const std::size_t reg_dim = reg.dimension();
    const std::size_t low = std::size_t{1} << (n_ + 2);  // p, system and aux
    auto amp = state_.data();
    std::vector<Complex> next(amp.size(), Complex{});
    for (std::size_t i = 0; i < amp.size(); i += low) {
        if (amp[i] == Complex{}) {
            continue;
        }
        for (std::size_t r = 0; r < reg_dim; ++r) {
            next[i | r] = amp[i] * reg[r];
        }
    }
    std::copy(next.begin(), next.end(), amp.begin());
    clean_ = false;
}

std::array<Complex, 4> ProtocolRegister::memory_density() const {
    const std::size_t mbit = std::size_t{1} << memory();
    const auto amp = state_.amplitudes();
    Complex r00{}, r01{}, r11{};
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if (i & mbit) {
            continue;
        }
        const Complex a0 = amp[i];
        const Complex a1 = amp[i | mbit];
        r00 += std::norm(a0);
        r11 += std::norm(a1);
        r01 += a0 * std::conj(a1);
    }
    return {r00, r01, std::conj(r01), r11};
}

void ProtocolRegister::discard_register() {
    const auto rho = memory_density();
    Eigen::Matrix2cd m;
    m << rho[0], rho[1], rho[2], rho[3];
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(m);
    auto amp = state_.data();
    std::fill(amp.begin(), amp.end(), Complex{});
    const std::size_t mbit = std::size_t{1} << memory();
    const std::size_t ebit = std::size_t{1} << environment();
    for (int k = 0; k < 2; ++k) {
        const double lambda = std::max(0.0, solver.eigenvalues()(k));
        const double w = std::sqrt(lambda);
        const auto v = solver.eigenvectors().col(k);
        const std::size_t e = k ? ebit : 0;
        amp[e] += w * v(0);
        amp[e | mbit] += w * v(1);
    }
    double norm = state_.norm_squared();
    for (auto &a : amp) {
        a /= std::sqrt(norm);
    }
    clean_ = true;
}

void ProtocolRegister::reset_memory() {
    auto amp = state_.data();
    std::fill(amp.begin(), amp.end(), Complex{});
    amp[0] = 1.0;
    apply_1q(state_, gates::hadamard(), memory());
    clean_ = true;
}

OutcomeCounts hadamard_test(ProtocolRegister &reg, const RotationOperator &op, Frame frame,
                            std::size_t repetitions, Rng &rng, ResourceLedger *ledger) {
    if (repetitions == 0) {
        throw std::invalid_argument("hadamard_test: repetitions must be >= 1");
    }
    const Qubit aux = reg.aux();
    std::vector<Gate> controlled;
    for (const auto &g : op.forward(reg.operator_offset(op))) {
        controlled.push_back(g.controlled_by(aux));
    }
    const Gate h = Gate::unitary(gates::hadamard(), aux);
    const Gate s = Gate::unitary(gates::phase_s(), aux);
    OutcomeCounts counts;
    auto &state = reg.state();
    for (std::size_t r = 0; r < repetitions; ++r) {
        apply_gate(state, h);
        apply_gates(state, controlled);
        if (frame == Frame::kY) {
            apply_gate(state, s);
        }
        apply_gate(state, h);
        if (measure_and_reset(state, aux, rng) == 0) {
            ++counts.zeros;
        } else {
            ++counts.ones;
        }
    }
    if (ledger) {
        ledger->projective_measurements += repetitions;
    }
    return counts;
}

SignLabel sign_resolve(ProtocolRegister &reg, const RotationOperator &op, std::size_t n_qpe, Rng &rng,
                       ResourceLedger *ledger) {
    const OutcomeCounts c = hadamard_test(reg, op, Frame::kY, n_qpe, rng, ledger);
    if (ledger) {
        ledger->sign_resolution_preparations += n_qpe;
    }
    return 2 * c.zeros <= n_qpe ? SignLabel::kPlus : SignLabel::kMinus;
}

FastResolution sign_resolve_fast(double phase, std::size_t n_qpe, Rng &rng, ResourceLedger *ledger) {
    if (n_qpe == 0) {
        throw std::invalid_argument("sign_resolve_fast: n_QPE must be >= 1");
    }
    FastResolution r;
    r.collapsed.phase = phase;
    r.collapsed.branch = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
    const double p0 = hadamard_probability_zero(r.collapsed.branch * phase, Frame::kY);
    const std::size_t zeros = std::binomial_distribution<std::size_t>(n_qpe, std::clamp(p0, 0.0, 1.0))(rng);
    r.label = 2 * zeros <= n_qpe ? SignLabel::kPlus : SignLabel::kMinus;
    if (ledger) {
        ledger->sign_resolution_preparations += n_qpe;
        ledger->projective_measurements += n_qpe;
    }
    return r;
}

MemoryAccumulator MemoryAccumulator::fast() { return MemoryAccumulator(); }

MemoryAccumulator MemoryAccumulator::exact(std::size_t system_qubits) {
    MemoryAccumulator m;
    m.mode_ = MemoryMode::kExactState;
    m.joint_.emplace(system_qubits);
    return m;
}

ProtocolRegister &MemoryAccumulator::joint() {
    if (!joint_) {
        throw MemoryModeError("MemoryAccumulator: joint state requested in fast mode");
    }
    return *joint_;
}

const ProtocolRegister &MemoryAccumulator::joint() const {
    if (!joint_) {
        throw MemoryModeError("MemoryAccumulator: joint state requested in fast mode");
    }
    return *joint_;
}

double MemoryAccumulator::phase() const {
    if (mode_ == MemoryMode::kFastScalar) {
        return phase_;
    }
    return std::arg(joint_->memory_density()[2]);
}

double MemoryAccumulator::coherence() const {
    if (mode_ == MemoryMode::kFastScalar) {
        return 1.0;
    }
    return 2.0 * std::abs(joint_->memory_density()[2]);
}

double MemoryAccumulator::probability_zero(Frame frame) const {
    if (mode_ == MemoryMode::kFastScalar) {
        return hadamard_probability_zero(phase_, frame);
    }
    const Complex rho10 = joint_->memory_density()[2];
    return frame == Frame::kX ? 0.5 + rho10.real() : 0.5 - rho10.imag();
}

int MemoryAccumulator::measure(Frame frame, Rng &rng) {
    if (mode_ == MemoryMode::kFastScalar) {
        return uniform01(rng) < probability_zero(frame) ? 0 : 1;
    }
    auto &state = joint_->state();
    const Qubit m = joint_->memory();
    if (frame == Frame::kY) {
        apply_1q(state, gates::phase_s(), m);
    }
    apply_1q(state, gates::hadamard(), m);
    return measure_qubit(state, m, rng);
}

void MemoryAccumulator::reset() {
    phase_ = 0.0;
    encoded_ = 0;
    if (joint_) {
        joint_->reset_memory();
    }
}

void encode_phase(MemoryAccumulator &memory, const RotationOperator &op, SignLabel label, int sign,
                  ResourceLedger *ledger) {
    if (memory.mode_ != MemoryMode::kExactState) {
        throw MemoryModeError("encode_phase: operator form requires exact-state memory");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("encode_phase: sign must be +1 or -1");
    }
    ProtocolRegister &reg = *memory.joint_;
    const std::size_t offset = reg.operator_offset(op);
    const auto gates_list = label_sign(label) * sign > 0 ? op.forward(offset) : op.adjoint(offset);
    apply_controlled(reg.state(), reg.memory(), gates_list);
    if (sign < 0) {
        apply_1q(reg.state(), gates::pauli_z(), reg.memory());
    }
    ++memory.encoded_;
    if (ledger) {
        ++ledger->nisq_memory_interactions;
    }
}

void encode_phase(MemoryAccumulator &memory, const FastBranch &collapsed, SignLabel label, int sign,
                  ResourceLedger *ledger) {
    if (memory.mode_ != MemoryMode::kFastScalar) {
        throw MemoryModeError("encode_phase: scalar form requires fast-scalar memory");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("encode_phase: sign must be +1 or -1");
    }
    memory.phase_ += collapsed.branch * label_sign(label) * sign * collapsed.phase;
    if (sign < 0) {
        memory.phase_ += kPi;
    }
    ++memory.encoded_;
    if (ledger) {
        ++ledger->nisq_memory_interactions;
    }
}

EncodingSetup make_encoding_setup(const PreparationCircuit &prep, const Observable &obs,
                                  const ProjectiveSampler &sampler, std::span<const RoughEstimate> rough,
                                  double epsilon, std::size_t n_qpe, MemoryMode mode) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("make_encoding_setup: epsilon must lie in (0, 1)");
    }
    if (n_qpe == 0) {
        throw std::invalid_argument("make_encoding_setup: n_QPE must be >= 1");
    }
    EncodingSetup setup;
    setup.system_qubits = prep.n_qubits;
    setup.epsilon = epsilon;
    setup.n_qpe = n_qpe;
    setup.mode = mode;
    const double root = std::sqrt(epsilon);
    for (const auto &r : rough) {
        if (r.classification != TermClass::kEncodable) {
            continue;
        }
        const PauliTerm &term = obs[r.term];
        if (std::abs(term.coefficient) * root > 0.5 + 1e-15) {
            throw std::invalid_argument("make_encoding_setup: term " + std::to_string(r.term) +
                                        " is not encodable at this epsilon");
        }
        EncodedTerm e;
        e.index = r.term;
        e.coefficient = term.coefficient;
        e.orientation = r.sign;
        e.sign = (term.coefficient >= 0.0 ? 1 : -1) * r.sign;
        const double c = 2.0 * root * std::abs(term.coefficient) * r.sign * sampler.exact_mean(r.term);
        e.phase = std::acos(std::clamp(c, -1.0, 1.0));
        if (mode == MemoryMode::kExactState) {
            e.op.emplace(prep, term, Dressing{term.coefficient, epsilon, r.sign});
        }
        setup.terms.push_back(std::move(e));
    }
    return setup;
}

int run_encoding_round(const EncodingSetup &setup, MemoryAccumulator &memory, Frame frame, Rng &rng,
                       ResourceLedger *ledger, std::span<const SignLabel> forced_labels) {
    if (memory.mode() != setup.mode) {
        throw MemoryModeError("run_encoding_round: memory mode does not match the setup");
    }
    if (!forced_labels.empty() && forced_labels.size() != setup.terms.size()) {
        throw std::invalid_argument("run_encoding_round: one forced label per encoded term required");
    }
    const bool forced = !forced_labels.empty();
    memory.reset();
    for (std::size_t k = 0; k < setup.terms.size(); ++k) {
        const EncodedTerm &t = setup.terms[k];
        if (setup.mode == MemoryMode::kFastScalar) {
            FastResolution res;
            if (forced) {
                res.collapsed = {t.phase, std::bernoulli_distribution(0.5)(rng) ? 1 : -1};
                res.label = forced_labels[k];
            } else {
                res = sign_resolve_fast(t.phase, setup.n_qpe, rng, ledger);
            }
            encode_phase(memory, res.collapsed, res.label, t.sign, ledger);
        } else {
            ProtocolRegister &reg = memory.joint();
            reg.prepare_reference(*t.op);
            const SignLabel label =
                forced ? forced_labels[k] : sign_resolve(reg, *t.op, setup.n_qpe, rng, ledger);
            encode_phase(memory, *t.op, label, t.sign, ledger);
            reg.discard_register();
        }
    }
    const int outcome = memory.measure(frame, rng);
    if (ledger) {
        ledger->encoding_preparations += setup.terms.size();
        ledger->projective_measurements += 1;
        ledger->encoding_repetitions += 1;
        const std::uint64_t span = setup.terms.size() * (1 + (forced ? 0 : setup.n_qpe));
        ledger->memory_coherence_proxy = std::max(ledger->memory_coherence_proxy, span);
    }
    return outcome;
}

RoundOutcomes run_encoding_rounds(const EncodingSetup &setup, std::size_t repetitions, Rng &rng,
                                  ResourceLedger *ledger) {
    MemoryAccumulator memory = setup.mode == MemoryMode::kFastScalar
                                   ? MemoryAccumulator::fast()
                                   : MemoryAccumulator::exact(setup.system_qubits);
    RoundOutcomes out;
    for (std::size_t r = 0; r < repetitions; ++r) {
        const Frame frame = (r % 2 == 0) ? Frame::kX : Frame::kY;
        const int bit = run_encoding_round(setup, memory, frame, rng, ledger);
        OutcomeCounts &c = frame == Frame::kX ? out.x : out.y;
        (bit == 0 ? c.zeros : c.ones) += 1;
    }
    return out;
}

}  // namespace tcps
