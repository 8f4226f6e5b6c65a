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
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tcps/estimators.hpp"
#include "tcps/pauli.hpp"
#include "tcps/qee.hpp"
#include "tcps/resources.hpp"
#include "tcps/rotation.hpp"
#include "tcps/statevector.hpp"

namespace tcps {

/// plus <-> eigenvalue e^{+i phi}, minus <-> e^{-i phi}, phi in [0, pi].
enum class SignLabel { kPlus, kMinus };

constexpr int label_sign(SignLabel l) noexcept { return l == SignLabel::kPlus ? 1 : -1; }

/// Single-round Hadamard-test probability of outcome 0 on an eigenstate
/// with eigenphase `phase`.
double hadamard_probability_zero(double phase, Frame frame);

/// Joint register for exact-state simulation.
///   qubit 0          processing ancilla p
///   qubits 1..n      system
///   qubit n+1        sign-resolution ancilla
///   qubit n+2        memory
///   qubit n+3        environment (purifies the memory after discards)
class ProtocolRegister {
   public:
    explicit ProtocolRegister(std::size_t system_qubits);

    std::size_t system_qubits() const noexcept { return n_; }
    Qubit aux() const noexcept { return n_ + 1; }
    Qubit memory() const noexcept { return n_ + 2; }
    Qubit environment() const noexcept { return n_ + 3; }
    /// Where qubit 0 of `op`'s local register sits.
    std::size_t operator_offset(const RotationOperator &op) const;

    StateVector &state() noexcept { return state_; }
    const StateVector &state() const noexcept { return state_; }

    /// Register (p, system) := reference state of `op`. Requires a clean register.
    void prepare_reference(const RotationOperator &op);
    /// Register (p, system) := `reg`, a state on n+1 qubits. Requires a clean register.
    void load_register(const StateVector &reg);
    /// Traces out p, system and aux exactly, re-purifies the memory with the
    /// environment qubit and leaves the register in |0..0>.
    void discard_register();
    /// Whole state := |0..0> with the memory in |+>.
    void reset_memory();
    /// rho_m as {rho00, rho01, rho10, rho11}.
    std::array<Complex, 4> memory_density() const;

   private:
    void require_clean(const char *who) const;

    std::size_t n_;
    StateVector state_;
    bool clean_ = true;
};

/// Runs `repetitions` rounds of: aux H, controlled-U, S (Y frame), H,
/// measure-and-reset aux. Back-action on the register carries over.
OutcomeCounts hadamard_test(ProtocolRegister &reg, const RotationOperator &op, Frame frame,
                            std::size_t repetitions, Rng &rng, ResourceLedger *ledger = nullptr);

/// n_QPE Y-frame rounds; plus iff nu_{Y=0} <= 1/2 (ties go to plus).
SignLabel sign_resolve(ProtocolRegister &reg, const RotationOperator &op, std::size_t n_qpe, Rng &rng,
                       ResourceLedger *ledger = nullptr);

/// Fast-mode stand-in for a register after sign resolution: the eigenphase
/// and the branch (+1 / -1) the register actually collapsed to.
struct FastBranch {
    double phase = 0.0;
    int branch = +1;
};

struct FastResolution {
    FastBranch collapsed;
    SignLabel label = SignLabel::kPlus;
};

/// Samples the branch uniformly (the reference state is an equal-weight
/// superposition), then the n_QPE Y-frame outcomes as a binomial.
FastResolution sign_resolve_fast(double phase, std::size_t n_qpe, Rng &rng,
                                 ResourceLedger *ledger = nullptr);

enum class MemoryMode { kFastScalar, kExactState };

class MemoryModeError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

class MemoryAccumulator {
   public:
    static MemoryAccumulator fast();
    static MemoryAccumulator exact(std::size_t system_qubits);

    MemoryMode mode() const noexcept { return mode_; }
    std::size_t encoded() const noexcept { return encoded_; }
    /// Fast: accumulated (unwrapped) phase. Exact: arg(rho_10).
    double phase() const;
    /// 2 |rho_10|; 1 for a pure equatorial memory.
    double coherence() const;
    double probability_zero(Frame frame) const;
    /// Final readout: S for the Y frame, H, measure.
    int measure(Frame frame, Rng &rng);
    /// Memory back to |+>, phase 0, encoded count 0.
    void reset();

    ProtocolRegister &joint();
    const ProtocolRegister &joint() const;

   private:
    friend void encode_phase(MemoryAccumulator &, const RotationOperator &, SignLabel, int,
                             ResourceLedger *);
    friend void encode_phase(MemoryAccumulator &, const FastBranch &, SignLabel, int, ResourceLedger *);

    MemoryMode mode_ = MemoryMode::kFastScalar;
    double phase_ = 0.0;
    std::size_t encoded_ = 0;
    std::optional<ProtocolRegister> joint_;
};

/// Exact mode: applies controlled-U (direction +1) or controlled-U^dagger
/// (direction -1), direction = label * sign, with the memory as control; a
/// negative sign adds a local Z on the memory. One interaction.
void encode_phase(MemoryAccumulator &memory, const RotationOperator &op, SignLabel label, int sign,
                  ResourceLedger *ledger = nullptr);

/// Fast mode: adds branch * label * sign * phase, plus pi when sign < 0.
void encode_phase(MemoryAccumulator &memory, const FastBranch &collapsed, SignLabel label, int sign,
                  ResourceLedger *ledger = nullptr);

struct EncodedTerm {
    std::size_t index = 0;
    double coefficient = 0.0;
    int orientation = +1;  // s_j from the rough estimate
    int sign = +1;         // t_j = sign(a_j) s_j
    double phase = 0.0;    // eigenphase of the dressed operator
    std::optional<RotationOperator> op;  // exact mode only
};

struct EncodingSetup {
    std::size_t system_qubits = 0;
    double epsilon = 0.0;
    std::size_t n_qpe = 0;
    MemoryMode mode = MemoryMode::kFastScalar;
    std::vector<EncodedTerm> terms;
};

/// Builds the dressed operators for the encodable rough estimates. Fast-mode
/// eigenphases come from the exact means held by `sampler`.
EncodingSetup make_encoding_setup(const PreparationCircuit &prep, const Observable &obs,
                                  const ProjectiveSampler &sampler, std::span<const RoughEstimate> rough,
                                  double epsilon, std::size_t n_qpe, MemoryMode mode);

/// One repetition: per term sign resolution then encoding, then the memory
/// readout in `frame`. With `forced_labels`, sign resolution is skipped and
/// the given labels are used on the unresolved register.
int run_encoding_round(const EncodingSetup &setup, MemoryAccumulator &memory, Frame frame, Rng &rng,
                       ResourceLedger *ledger = nullptr,
                       std::span<const SignLabel> forced_labels = {});

struct RoundOutcomes {
    OutcomeCounts x;
    OutcomeCounts y;
};

/// `repetitions` rounds; even-indexed rounds use the X frame, odd the Y frame.
RoundOutcomes run_encoding_rounds(const EncodingSetup &setup, std::size_t repetitions, Rng &rng,
                                  ResourceLedger *ledger = nullptr);

}  // namespace tcps
