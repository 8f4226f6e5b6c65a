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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tcps/budget.hpp"
#include "tcps/encoding.hpp"
#include "tcps/estimators.hpp"
#include "tcps/pauli.hpp"

namespace tcps::harness {

/// Bad configuration or command line. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class Mode { kExact, kQee, kTcps, kCompare, kSweep, kResources, kBudget };
const char *to_string(Mode m) noexcept;
Mode parse_mode(std::string_view s);

enum class ReportFormat { kCsv, kJson };
const char *to_string(ReportFormat f) noexcept;
ReportFormat parse_format(std::string_view s);

enum class SweepMethod { kCompare, kQee };

struct ExperimentConfig {
    std::optional<Mode> mode;

    // Observable source: a file, or the generator.
    std::optional<std::filesystem::path> observable_file;
    bool use_generator = false;
    std::size_t qubits = 8;
    std::size_t terms = 16;
    GeneratorSettings generator;
    std::uint64_t observable_seed = 1;
    // Preparation circuit for file observables.
    std::uint64_t preparation_seed = 1;
    std::size_t preparation_depth = 4;

    BudgetTargets budget;

    std::size_t trials = 100;
    std::uint64_t master_seed = 1;
    std::size_t workers = 1;
    std::optional<std::filesystem::path> output_path;
    ReportFormat format = ReportFormat::kCsv;

    MemoryMode memory = MemoryMode::kFastScalar;
    CorrectionMode correction = CorrectionMode::kClosedForm;

    bool ladder = false;
    std::size_t ladder_alpha = 3;
    std::size_t ladder_gamma = 1;
    std::optional<double> ladder_eta;         // defaults to budget.eta
    std::optional<double> ladder_base_scale;  // defaults to the largest feasible

    std::vector<std::size_t> sweep_terms;
    SweepMethod sweep_method = SweepMethod::kCompare;
    std::size_t sweep_budget = 131072;  // QEE-only sweep: total preparations

    bool resources_simulate = true;
};

/// Flat key=value lines; '#' starts a comment; blank lines are skipped.
/// Throws ConfigError on malformed lines, duplicate keys and unknown keys.
std::map<std::string, std::string> parse_key_values(std::string_view text);

/// Applies one key. Throws ConfigError for unknown keys or bad values.
void apply_setting(ExperimentConfig &config, const std::string &key, const std::string &value);

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path &path);

/// Every key with its resolved value, formatted so that parse_config
/// reproduces the same configuration. Doubles use 17 significant digits.
std::map<std::string, std::string> config_echo(const ExperimentConfig &config);

/// Throws ConfigError when the mode or the observable source is missing, or
/// a mode-specific requirement is not met.
void validate(const ExperimentConfig &config);

struct LoadedInstance {
    Observable observable;
    PreparationCircuit preparation;
};

/// Observable and preparation circuit for `config`, with `terms` overriding
/// the generator term count when given.
LoadedInstance load_instance(const ExperimentConfig &config, std::optional<std::size_t> terms = std::nullopt);

}  // namespace tcps::harness
