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

#include "tcps/harness/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tcps::harness {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::uint64_t to_uint(const std::string &key, const std::string &value) {
    std::uint64_t out = 0;
    const char *end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(key + ": expected a non-negative integer, got '" + value + "'");
    }
    return out;
}

double to_double(const std::string &key, const std::string &value) {
    double out = 0.0;
    const char *end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end || !std::isfinite(out)) {
        throw ConfigError(key + ": expected a finite number, got '" + value + "'");
    }
    return out;
}

bool to_bool(const std::string &key, const std::string &value) {
    if (value == "true" || value == "1") {
        return true;
    }
    if (value == "false" || value == "0") {
        return false;
    }
    throw ConfigError(key + ": expected true or false, got '" + value + "'");
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

const char *to_string(Mode m) noexcept {
    switch (m) {
        case Mode::kExact: return "exact";
        case Mode::kQee: return "qee";
        case Mode::kTcps: return "tcps";
        case Mode::kCompare: return "compare";
        case Mode::kSweep: return "sweep";
        case Mode::kResources: return "resources";
        case Mode::kBudget: return "budget";
    }
    return "?";
}

Mode parse_mode(std::string_view s) {
    for (Mode m : {Mode::kExact, Mode::kQee, Mode::kTcps, Mode::kCompare, Mode::kSweep, Mode::kResources,
                   Mode::kBudget}) {
        if (s == to_string(m)) {
            return m;
        }
    }
    throw ConfigError("unknown mode '" + std::string(s) + "'");
}

const char *to_string(ReportFormat f) noexcept { return f == ReportFormat::kCsv ? "csv" : "json"; }

ReportFormat parse_format(std::string_view s) {
    if (s == "csv") {
        return ReportFormat::kCsv;
    }
    if (s == "json") {
        return ReportFormat::kJson;
    }
    throw ConfigError("unknown format '" + std::string(s) + "' (expected csv or json)");
}

std::map<std::string, std::string> parse_key_values(std::string_view text) {
    std::map<std::string, std::string> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        }
        if (!out.emplace(key, value).second) {
            throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
    }
    return out;
}

void apply_setting(ExperimentConfig &c, const std::string &key, const std::string &value) {
    auto &b = c.budget;
    auto &g = c.generator;
    if (key == "mode") {
        c.mode = parse_mode(value);
    } else if (key == "observable.file") {
        c.observable_file = value;
    } else if (key == "observable.generator") {
        if (value == "uniform") {
            g.mode = GeneratorMode::kUniform;
        } else if (value == "equal_mean") {
            g.mode = GeneratorMode::kEqualMean;
        } else {
            throw ConfigError("observable.generator: expected uniform or equal_mean, got '" + value + "'");
        }
        c.use_generator = true;
    } else if (key == "observable.qubits") {
        c.qubits = to_uint(key, value);
    } else if (key == "observable.terms") {
        c.terms = to_uint(key, value);
    } else if (key == "observable.seed") {
        c.observable_seed = to_uint(key, value);
    } else if (key == "observable.coefficient") {
        g.coefficient = to_double(key, value);
    } else if (key == "observable.mean") {
        g.target_mean = to_double(key, value);
    } else if (key == "observable.mean_tolerance") {
        g.mean_tolerance = to_double(key, value);
    } else if (key == "observable.scale") {
        g.coefficient_scale = to_double(key, value);
    } else if (key == "observable.depth") {
        g.depth = to_uint(key, value);
    } else if (key == "preparation.seed") {
        c.preparation_seed = to_uint(key, value);
    } else if (key == "preparation.depth") {
        c.preparation_depth = to_uint(key, value);
    } else if (key == "budget.eta") {
        b.eta = to_double(key, value);
    } else if (key == "budget.eta0") {
        b.eta0 = to_double(key, value);
    } else if (key == "budget.eta1") {
        b.eta1 = to_double(key, value);
    } else if (key == "budget.eta3") {
        b.eta3 = to_double(key, value);
    } else if (key == "budget.delta") {
        b.delta = to_double(key, value);
    } else if (key == "budget.g1") {
        b.g1 = to_double(key, value);
    } else if (key == "budget.eps_tan") {
        b.eps_tan = to_double(key, value);
    } else if (key == "budget.m") {
        b.m = to_double(key, value);
    } else if (key == "budget.repetitions") {
        b.repetitions = to_uint(key, value);
    } else if (key == "budget.correction_shots") {
        if (value == "auto") {
            b.correction_shots.reset();
        } else {
            b.correction_shots = to_uint(key, value);
        }
    } else if (key == "budget.epsilon") {
        if (value == "auto") {
            b.epsilon.reset();
        } else {
            b.epsilon = to_double(key, value);
        }
    } else if (key == "budget.n_qpe") {
        if (value == "auto") {
            b.n_qpe_override.reset();
        } else {
            b.n_qpe_override = to_uint(key, value);
        }
    } else if (key == "trials") {
        c.trials = to_uint(key, value);
    } else if (key == "seed") {
        c.master_seed = to_uint(key, value);
    } else if (key == "workers") {
        c.workers = to_uint(key, value);
    } else if (key == "output.path") {
        if (value.empty() || value == "-") {
            c.output_path.reset();
        } else {
            c.output_path = value;
        }
    } else if (key == "output.format") {
        c.format = parse_format(value);
    } else if (key == "memory.mode") {
        if (value == "fast") {
            c.memory = MemoryMode::kFastScalar;
        } else if (value == "exact") {
            c.memory = MemoryMode::kExactState;
        } else {
            throw ConfigError("memory.mode: expected fast or exact, got '" + value + "'");
        }
    } else if (key == "correction.mode") {
        if (value == "closed_form") {
            c.correction = CorrectionMode::kClosedForm;
        } else if (value == "series") {
            c.correction = CorrectionMode::kSeries;
        } else {
            throw ConfigError("correction.mode: expected closed_form or series, got '" + value + "'");
        }
    } else if (key == "ladder.enabled") {
        c.ladder = to_bool(key, value);
    } else if (key == "ladder.alpha") {
        c.ladder_alpha = to_uint(key, value);
    } else if (key == "ladder.gamma") {
        c.ladder_gamma = to_uint(key, value);
    } else if (key == "ladder.eta") {
        if (value == "auto") {
            c.ladder_eta.reset();
        } else {
            c.ladder_eta = to_double(key, value);
        }
    } else if (key == "ladder.base_scale") {
        if (value == "auto") {
            c.ladder_base_scale.reset();
        } else {
            c.ladder_base_scale = to_double(key, value);
        }
    } else if (key == "sweep.terms") {
        c.sweep_terms.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            c.sweep_terms.push_back(to_uint(key, std::string(trim(item))));
        }
    } else if (key == "sweep.method") {
        if (value == "compare") {
            c.sweep_method = SweepMethod::kCompare;
        } else if (value == "qee") {
            c.sweep_method = SweepMethod::kQee;
        } else {
            throw ConfigError("sweep.method: expected compare or qee, got '" + value + "'");
        }
    } else if (key == "sweep.budget") {
        c.sweep_budget = to_uint(key, value);
    } else if (key == "resources.simulate") {
        c.resources_simulate = to_bool(key, value);
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig c;
    for (const auto &[k, v] : parse_key_values(text)) {
        apply_setting(c, k, v);
    }
    return c;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::map<std::string, std::string> config_echo(const ExperimentConfig &c) {
    std::map<std::string, std::string> e;
    const auto &b = c.budget;
    const auto &g = c.generator;
    if (c.mode) {
        e["mode"] = to_string(*c.mode);
    }
    if (c.observable_file) {
        e["observable.file"] = c.observable_file->string();
        e["preparation.seed"] = std::to_string(c.preparation_seed);
        e["preparation.depth"] = std::to_string(c.preparation_depth);
    }
    if (c.use_generator) {
        e["observable.generator"] = g.mode == GeneratorMode::kUniform ? "uniform" : "equal_mean";
        e["observable.qubits"] = std::to_string(c.qubits);
        e["observable.terms"] = std::to_string(c.terms);
        e["observable.seed"] = std::to_string(c.observable_seed);
        e["observable.coefficient"] = fmt(g.coefficient);
        e["observable.mean"] = fmt(g.target_mean);
        e["observable.mean_tolerance"] = fmt(g.mean_tolerance);
        e["observable.scale"] = fmt(g.coefficient_scale);
        e["observable.depth"] = std::to_string(g.depth);
    }
    e["budget.eta"] = fmt(b.eta);
    e["budget.eta0"] = fmt(b.eta0);
    e["budget.eta1"] = fmt(b.eta1);
    e["budget.eta3"] = fmt(b.eta3);
    e["budget.delta"] = fmt(b.delta);
    e["budget.g1"] = fmt(b.g1);
    e["budget.eps_tan"] = fmt(b.eps_tan);
    e["budget.m"] = fmt(b.m);
    e["budget.repetitions"] = std::to_string(b.repetitions);
    e["budget.correction_shots"] = b.correction_shots ? std::to_string(*b.correction_shots) : "auto";
    e["budget.epsilon"] = b.epsilon ? fmt(*b.epsilon) : "auto";
    e["budget.n_qpe"] = b.n_qpe_override ? std::to_string(*b.n_qpe_override) : "auto";
    e["trials"] = std::to_string(c.trials);
    e["seed"] = std::to_string(c.master_seed);
    e["output.format"] = to_string(c.format);
    e["memory.mode"] = c.memory == MemoryMode::kFastScalar ? "fast" : "exact";
    e["correction.mode"] = c.correction == CorrectionMode::kClosedForm ? "closed_form" : "series";
    e["ladder.enabled"] = c.ladder ? "true" : "false";
    e["ladder.alpha"] = std::to_string(c.ladder_alpha);
    e["ladder.gamma"] = std::to_string(c.ladder_gamma);
    e["ladder.eta"] = c.ladder_eta ? fmt(*c.ladder_eta) : "auto";
    e["ladder.base_scale"] = c.ladder_base_scale ? fmt(*c.ladder_base_scale) : "auto";
    std::string terms;
    for (std::size_t i = 0; i < c.sweep_terms.size(); ++i) {
        terms += (i ? "," : "") + std::to_string(c.sweep_terms[i]);
    }
    e["sweep.terms"] = terms;
    e["sweep.method"] = c.sweep_method == SweepMethod::kCompare ? "compare" : "qee";
    e["sweep.budget"] = std::to_string(c.sweep_budget);
    e["resources.simulate"] = c.resources_simulate ? "true" : "false";
    // workers and output.path are deliberately absent: they must not change
    // the bytes of the report.
    return e;
}

void validate(const ExperimentConfig &c) {
    if (!c.mode) {
        throw ConfigError("no mode given");
    }
    if (c.observable_file && c.use_generator) {
        throw ConfigError("give either observable.file or observable.generator, not both");
    }
    if (!c.observable_file && !c.use_generator) {
        throw ConfigError("no observable source: set observable.file or observable.generator");
    }
    const bool trial_mode = *c.mode == Mode::kQee || *c.mode == Mode::kTcps || *c.mode == Mode::kCompare ||
                            *c.mode == Mode::kSweep;
    if (trial_mode && c.trials == 0) {
        throw ConfigError("trials must be >= 1");
    }
    if (*c.mode == Mode::kSweep) {
        if (!c.use_generator) {
            throw ConfigError("sweep needs observable.generator");
        }
        if (c.sweep_terms.size() < 3) {
            throw ConfigError("sweep needs at least 3 points in sweep.terms");
        }
        for (auto n : c.sweep_terms) {
            if (n == 0) {
                throw ConfigError("sweep.terms entries must be >= 1");
            }
        }
        if (c.sweep_method == SweepMethod::kCompare && c.trials < 2) {
            throw ConfigError("sweep needs trials >= 2 for empirical variances");
        }
    }
    if (*c.mode == Mode::kCompare && c.trials < 2) {
        throw ConfigError("compare needs trials >= 2 for empirical variances");
    }
}

LoadedInstance load_instance(const ExperimentConfig &c, std::optional<std::size_t> terms) {
    if (c.observable_file) {
        std::vector<std::string> warnings;
        Observable obs = load_observable(*c.observable_file, &warnings);
        for (const auto &w : warnings) {
            std::fprintf(stderr, "tcps: warning: %s\n", w.c_str());
        }
        PreparationCircuit prep = random_preparation(obs.num_qubits(), c.preparation_depth, c.preparation_seed);
        return {std::move(obs), std::move(prep)};
    }
    ObservableInstance inst = random_observable(c.qubits, terms.value_or(c.terms), c.generator, c.observable_seed);
    return {std::move(inst.observable), std::move(inst.preparation)};
}

}  // namespace tcps::harness
