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

// tcps: run QEE and TCPS estimation experiments and emit CSV/JSON reports.
//
// Exit codes: 0 success, 1 runtime or protocol error, 2 usage error.

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tcps/harness/config.hpp"
#include "tcps/harness/report.hpp"
#include "tcps/harness/runners.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
    std::string config;
    std::string obs;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> workers;
    std::string out;
    std::string format;
    std::string mode;
};

void add_common(CLI::App &app, CommonFlags &f) {
    app.add_option("--config", f.config, "key=value configuration file");
    app.add_option("--obs", f.obs, "observable file (overrides observable.file)");
    app.add_option("--seed", f.seed, "master seed");
    app.add_option("--trials", f.trials, "number of trials");
    app.add_option("--workers", f.workers, "worker threads (0 = hardware concurrency)");
    app.add_option("--out", f.out, "output path (default: stdout)");
    app.add_option("--format", f.format, "csv or json");
    app.add_option("--mode", f.mode, "memory simulation path: fast or exact");
}

}  // namespace

int main(int argc, char **argv) {
    using namespace tcps::harness;

    CLI::App app{"Coherent Pauli summation versus projective expectation estimation"};
    app.require_subcommand(1, 1);
    CommonFlags flags;
    const std::pair<const char *, const char *> commands[] = {
        {"exact", "exact expectation value of every term"},
        {"qee", "projective estimation, term by term"},
        {"tcps", "coherent summation on a single memory qubit"},
        {"compare", "QEE and TCPS at matched state-preparation budgets"},
        {"sweep", "matched comparison (or QEE alone) over several term counts, with a log-log fit"},
        {"resources", "measured counters next to the analytic resource rows"},
        {"budget", "planned shot counts"},
    };
    for (const auto &[name, help] : commands) {
        add_common(*app.add_subcommand(name, help), flags);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    ExperimentConfig config;
    try {
        if (!flags.config.empty()) {
            config = load_config(flags.config);
        }
        config.mode = parse_mode(app.get_subcommands().front()->get_name());
        if (!flags.obs.empty()) {
            config.observable_file = flags.obs;
            config.use_generator = false;
        }
        if (flags.seed) {
            config.master_seed = *flags.seed;
        }
        if (flags.trials) {
            config.trials = *flags.trials;
        }
        if (flags.workers) {
            config.workers = *flags.workers;
        }
        if (!flags.out.empty()) {
            apply_setting(config, "output.path", flags.out);
        }
        if (!flags.format.empty()) {
            config.format = parse_format(flags.format);
        }
        if (!flags.mode.empty()) {
            apply_setting(config, "memory.mode", flags.mode);
        }
        validate(config);
    } catch (const ConfigError &e) {
        std::cerr << "tcps: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const Table table = run_experiment(config);
        emit_report(table, config.output_path.value_or(std::filesystem::path{}), config.format);
    } catch (const ConfigError &e) {
        std::cerr << "tcps: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "tcps: error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
