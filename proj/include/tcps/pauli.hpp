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

#include <compare>
#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tcps/statevector.hpp"

namespace tcps {

/// Pauli string as symplectic masks; letter q lives at bit q.
/// I=(0,0), X=(1,0), Z=(0,1), Y=(1,1).
class PauliString {
   public:
    PauliString() = default;
    PauliString(std::size_t n_qubits, QubitMask x_mask, QubitMask z_mask);

    /// Leftmost letter is qubit 0.
    static PauliString from_letters(std::string_view letters);

    std::size_t num_qubits() const noexcept { return n_qubits_; }
    QubitMask x_mask() const noexcept { return x_; }
    QubitMask z_mask() const noexcept { return z_; }
    QubitMask support() const noexcept { return x_ | z_; }
    std::size_t weight() const noexcept;
    bool is_identity() const noexcept { return (x_ | z_) == 0; }
    char letter(Qubit q) const;
    std::string to_string() const;

    /// The Hermitian operator phase * P acting on qubits [offset, offset+n).
    Gate as_gate(std::size_t offset = 0, Complex phase = 1.0) const;

    friend auto operator<=>(const PauliString &, const PauliString &) = default;

   private:
    std::size_t n_qubits_ = 0;
    QubitMask x_ = 0;
    QubitMask z_ = 0;
};

struct PauliTerm {
    double coefficient = 0.0;
    PauliString pauli;
};

class ObservableParseError : public std::runtime_error {
   public:
    ObservableParseError(std::size_t line, const std::string &message);
    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

class Observable {
   public:
    /// Merges duplicate strings (first occurrence keeps its position) and
    /// drops terms whose merged coefficient is zero. Warnings go to
    /// `warnings` when given, otherwise to stderr.
    Observable(std::size_t n_qubits, const std::vector<PauliTerm> &terms,
               std::vector<std::string> *warnings = nullptr);

    std::size_t num_qubits() const noexcept { return n_qubits_; }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<PauliTerm> &terms() const noexcept { return terms_; }
    const PauliTerm &operator[](std::size_t j) const { return terms_.at(j); }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }
    double max_abs_coefficient() const noexcept;

    friend bool operator==(const Observable &a, const Observable &b);

   private:
    std::size_t n_qubits_;
    std::vector<PauliTerm> terms_;
};

Observable parse_observable(std::string_view text, std::vector<std::string> *warnings = nullptr);
Observable load_observable(const std::filesystem::path &path,
                           std::vector<std::string> *warnings = nullptr);
std::string serialize_observable(const Observable &obs);

/// <psi| P |psi> for P placed at qubits [offset, offset + P.num_qubits()).
double exact_expectation(const StateVector &state, const PauliString &pauli, std::size_t offset = 0);
double exact_observable_value(const StateVector &state, const Observable &obs);

enum class GeneratorMode {
    /// Z-type strings of a fixed support size on a product state R_y(theta)^n,
    /// theta chosen so every <P_j> equals target_mean.
    kEqualMean,
    /// Distinct uniformly random non-identity strings, coefficients uniform in
    /// +-[0.05, 1] * coefficient_scale, on a random preparation circuit.
    kUniform,
};

struct GeneratorSettings {
    GeneratorMode mode = GeneratorMode::kUniform;
    double coefficient = 1.0;     // equal-mean mode: common weight
    double target_mean = 0.5;     // equal-mean mode: common <P_j>, in (0, 1]
    double mean_tolerance = 0.05; // equal-mean mode: allowed spread of <P_j>
    double coefficient_scale = 1.0;
    std::size_t depth = 4;        // uniform mode: preparation depth
};

struct ObservableInstance {
    Observable observable;
    PreparationCircuit preparation;
};

ObservableInstance random_observable(std::size_t n_qubits, std::size_t n_terms,
                                     const GeneratorSettings &settings, std::uint64_t seed);

enum class TermClass { kEncodable, kNearZero, kNearExtremal };

const char *to_string(TermClass c) noexcept;

/// Rough projective estimate of one term. Encodable iff |mean| in [delta, 1-delta].
struct RoughEstimate {
    std::size_t term = 0;
    double mean = 0.0;
    std::size_t shots = 0;
    TermClass classification = TermClass::kEncodable;
    int sign = +1;
};

RoughEstimate classify_mean(std::size_t term, double mean, std::size_t shots, double delta);

struct EncodabilityReport {
    bool feasible = true;
    /// 1 / (4 max a_j^2): largest eps with |a_j| sqrt(eps) <= 1/2 for all j.
    double max_feasible_epsilon = 0.0;
    std::vector<std::size_t> violating_terms;
};

EncodabilityReport validate_encodable(const Observable &obs, double epsilon);

}  // namespace tcps
