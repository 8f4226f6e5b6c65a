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

#include "tcps/harness/runners.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tcps/harness/parallel.hpp"
#include "tcps/harness/stats.hpp"
#include "tcps/harness/analytic_resources.hpp"

namespace tcps::harness {

namespace {

using I = std::int64_t;

I to_i(std::uint64_t v) { return static_cast<I>(v); }

Table new_table(const ExperimentConfig &config, const char *kind) {
    Table t;
    t.kind = kind;
    t.master_seed = config.master_seed;
    t.config = config_echo(config);
    return t;
}

TrialSummary summarize(std::vector<EstimateReport> reports, const char *method) {
    TrialSummary s;
    s.report.method = method;
    s.report.trials = reports.size();
    const double n = static_cast<double>(reports.size());
    for (const auto &r : reports) {
        s.estimates.push_back(r.estimate);
        s.report.estimate += r.estimate;
        s.report.predicted_variance += r.predicted_variance;
        s.report.error_floor += r.error_floor;
        s.report.ledger += r.ledger;
        s.epsilon_mean += r.epsilon;
        s.clamped_trials += r.epsilon_clamped ? 1 : 0;
        s.encoded_terms_mean += static_cast<double>(r.encoded_terms);
        s.classical_terms_mean += static_cast<double>(r.classical_terms);
        s.indeterminate_readouts += r.readout_indeterminate ? 1 : 0;
    }
    s.report.estimate /= n;
    s.report.predicted_variance /= n;
    s.report.error_floor /= n;
    s.epsilon_mean /= n;
    s.encoded_terms_mean /= n;
    s.classical_terms_mean /= n;
    if (!reports.empty()) {
        s.report.exact_value = reports.front().exact_value;
    }
    if (reports.size() >= 2) {
        s.report.empirical_variance = sample_variance(s.estimates);
    }
    return s;
}

std::size_t qee_shots_for(const BudgetPlan &plan) {
    if (plan.total_preparations % plan.n_terms != 0) {
        throw std::logic_error("matched budget: M_T is not a multiple of N");
    }
    return plan.total_preparations / plan.n_terms;
}

void check_plan(const BudgetPlan &plan) {
    if (plan.n_1 < 1 || plan.n_qpe < 1 || plan.repetitions < 1 || plan.correction_shots < 1) {
        throw std::invalid_argument("infeasible budget: every planned count must be >= 1");
    }
}

const std::vector<std::string> kEstimateColumns = {
    "method",
    "trials",
    "estimate",
    "exact_value",
    "bias",
    "predicted_variance",
    "empirical_variance",
    "error_floor",
    "budget_per_trial",
    "epsilon",
    "clamped_trials",
    "encoded_terms",
    "classical_terms",
    "indeterminate_readouts",
    "state_preparations",
    "boundary_preparations",
    "sign_resolution_preparations",
    "encoding_preparations",
    "correction_preparations",
    "qee_preparations",
    "projective_measurements",
    "nisq_memory_interactions",
    "encoding_repetitions",
    "memory_coherence_proxy",
};

std::vector<Cell> estimate_row(const TrialSummary &s, std::uint64_t budget, bool tcps) {
    const auto &r = s.report;
    const auto &l = r.ledger;
    std::vector<Cell> row;
    row.emplace_back(r.method);
    row.emplace_back(to_i(r.trials));
    row.emplace_back(r.estimate);
    row.emplace_back(r.exact_value);
    row.emplace_back(r.estimate - r.exact_value);
    row.emplace_back(r.predicted_variance);
    if (r.empirical_variance) {
        row.emplace_back(*r.empirical_variance);
    } else {
        row.emplace_back(std::monostate{});
    }
    row.emplace_back(r.error_floor);
    row.emplace_back(to_i(budget));
    if (tcps) {
        row.emplace_back(s.epsilon_mean);
        row.emplace_back(to_i(s.clamped_trials));
        row.emplace_back(s.encoded_terms_mean);
        row.emplace_back(s.classical_terms_mean);
        row.emplace_back(to_i(s.indeterminate_readouts));
    } else {
        for (int i = 0; i < 5; ++i) {
            row.emplace_back(std::monostate{});
        }
    }
    row.emplace_back(to_i(l.state_preparations()));
    row.emplace_back(to_i(l.boundary_preparations));
    row.emplace_back(to_i(l.sign_resolution_preparations));
    row.emplace_back(to_i(l.encoding_preparations));
    row.emplace_back(to_i(l.correction_preparations));
    row.emplace_back(to_i(l.qee_preparations));
    row.emplace_back(to_i(l.projective_measurements));
    row.emplace_back(to_i(l.nisq_memory_interactions));
    row.emplace_back(to_i(l.encoding_repetitions));
    row.emplace_back(to_i(l.memory_coherence_proxy));
    return row;
}

}  // namespace

TrialSummary run_qee_trials(const LoadedInstance &instance, const ProjectiveSampler &sampler, std::size_t n_c,
                            std::size_t trials, std::uint64_t stream_seed, std::size_t workers) {
    auto reports = parallel_map(trials, workers, [&](std::size_t t) {
        Rng rng = make_rng(stream_seed, t);
        const QeeResult q = qee_estimate(sampler, instance.observable, n_c, rng);
        EstimateReport r;
        r.method = "qee";
        r.estimate = q.estimate;
        r.predicted_variance = q.predicted_variance;
        r.ledger = q.ledger;
        for (std::size_t j = 0; j < instance.observable.size(); ++j) {
            r.exact_value += instance.observable[j].coefficient * sampler.exact_mean(j);
        }
        return r;
    });
    return summarize(std::move(reports), "qee");
}

TrialSummary run_tcps_trials(const LoadedInstance &instance, const ProjectiveSampler &sampler,
                             const BudgetPlan &plan, const TcpsOptions &options, std::size_t trials,
                             std::uint64_t stream_seed, std::size_t workers) {
    auto reports = parallel_map(trials, workers, [&](std::size_t t) {
        Rng rng = make_rng(stream_seed, t);
        return tcps_estimate(instance.preparation, instance.observable, sampler, plan, rng, options);
    });
    return summarize(std::move(reports), "tcps");
}

MatchedComparison compare_matched(const LoadedInstance &instance, const BudgetTargets &targets,
                                  const TcpsOptions &options, std::size_t trials, std::uint64_t master_seed,
                                  std::size_t workers) {
    if (options.ladder) {
        throw std::invalid_argument("compare_matched: the ladder has its own repetition schedule; disable it");
    }
    MatchedComparison c;
    c.plan = plan_budget(targets, instance.observable.size());
    check_plan(c.plan);
    c.qee_shots_per_term = qee_shots_for(c.plan);
    c.budget_tcps = c.plan.total_preparations;
    c.budget_qee = static_cast<std::uint64_t>(c.qee_shots_per_term) * c.plan.n_terms;
    const ProjectiveSampler sampler(instance.preparation, instance.observable);
    c.qee = run_qee_trials(instance, sampler, c.qee_shots_per_term, trials, derive_seed(master_seed, kQeeStream),
                           workers);
    c.tcps = run_tcps_trials(instance, sampler, c.plan, options, trials, derive_seed(master_seed, kTcpsStream),
                             workers);
    if (c.qee.report.empirical_variance && c.tcps.report.empirical_variance) {
        c.ratio = *c.tcps.report.empirical_variance / *c.qee.report.empirical_variance;
    } else {
        c.ratio = std::numeric_limits<double>::quiet_NaN();
    }
    c.predicted_ratio = c.tcps.report.predicted_variance / c.qee.report.predicted_variance;
    return c;
}

TcpsOptions make_tcps_options(const ExperimentConfig &config, const Observable &obs) {
    TcpsOptions o;
    o.mode = config.memory;
    o.correction = config.correction;
    if (config.ladder) {
        const double eta = config.ladder_eta.value_or(config.budget.eta);
        double base = 1.0;
        if (config.ladder_base_scale) {
            base = *config.ladder_base_scale;
        } else {
            const LadderConfig probe = make_ladder_config(eta, 1.0, config.ladder_alpha, config.ladder_gamma);
            base = std::ldexp(1.0 / obs.max_abs_coefficient(), -static_cast<int>(probe.depth));
        }
        o.ladder = make_ladder_config(eta, base, config.ladder_alpha, config.ladder_gamma);
    }
    return o;
}

Table run_exact(const ExperimentConfig &config) {
    const LoadedInstance inst = load_instance(config);
    const StateVector psi = prepare(inst.preparation);
    Table t = new_table(config, "exact");
    t.columns = {"term", "pauli", "coefficient", "exact_mean", "contribution"};
    double total = 0.0;
    for (std::size_t j = 0; j < inst.observable.size(); ++j) {
        const auto &term = inst.observable[j];
        const double m = exact_expectation(psi, term.pauli);
        total += term.coefficient * m;
        t.add_row({to_i(j), term.pauli.to_string(), term.coefficient, m, term.coefficient * m});
    }
    t.add_row({std::monostate{}, std::string("total"), std::monostate{}, std::monostate{}, total});
    return t;
}

Table run_qee(const ExperimentConfig &config) {
    const LoadedInstance inst = load_instance(config);
    const BudgetPlan plan = plan_budget(config.budget, inst.observable.size());
    check_plan(plan);
    const std::size_t n_c = qee_shots_for(plan);
    const ProjectiveSampler sampler(inst.preparation, inst.observable);
    const TrialSummary s = run_qee_trials(inst, sampler, n_c, config.trials,
                                          derive_seed(config.master_seed, kQeeStream), config.workers);
    Table t = new_table(config, "qee");
    t.columns = kEstimateColumns;
    t.add_row(estimate_row(s, static_cast<std::uint64_t>(n_c) * plan.n_terms, false));
    return t;
}

Table run_tcps(const ExperimentConfig &config) {
    const LoadedInstance inst = load_instance(config);
    const BudgetPlan plan = plan_budget(config.budget, inst.observable.size());
    check_plan(plan);
    const TcpsOptions options = make_tcps_options(config, inst.observable);
    const ProjectiveSampler sampler(inst.preparation, inst.observable);
    const TrialSummary s = run_tcps_trials(inst, sampler, plan, options, config.trials,
                                           derive_seed(config.master_seed, kTcpsStream), config.workers);
    Table t = new_table(config, "tcps");
    t.columns = kEstimateColumns;
    std::uint64_t budget = plan.total_preparations;
    if (options.ladder) {
        // Ladder runs replace the M_q encoding block.
        budget = s.report.ledger.state_preparations() / s.report.trials;
    }
    t.add_row(estimate_row(s, budget, true));
    return t;
}

Table run_compare(const ExperimentConfig &config) {
    const LoadedInstance inst = load_instance(config);
    TcpsOptions options = make_tcps_options(config, inst.observable);
    if (options.ladder) {
        throw ConfigError("compare runs the single-scale protocol; set ladder.enabled=false");
    }
    const MatchedComparison c =
        compare_matched(inst, config.budget, options, config.trials, config.master_seed, config.workers);
    Table t = new_table(config, "compare");
    t.columns = kEstimateColumns;
    t.add_row(estimate_row(c.qee, c.budget_qee, false));
    t.add_row(estimate_row(c.tcps, c.budget_tcps, true));
    std::vector<Cell> ratio(t.columns.size(), std::monostate{});
    ratio[t.column("method")] = std::string("tcps/qee");
    ratio[t.column("trials")] = to_i(config.trials);
    ratio[t.column("predicted_variance")] = c.predicted_ratio;
    ratio[t.column("empirical_variance")] = c.ratio;
    ratio[t.column("budget_per_trial")] = static_cast<I>(c.budget_tcps) - static_cast<I>(c.budget_qee);
    t.add_row(std::move(ratio));
    return t;
}

Table run_sweep(const ExperimentConfig &config) {
    Table t = new_table(config, "sweep");
    t.columns = {"row",     "n_terms",    "budget",        "qee_shots_per_term", "var_qee",
                 "var_tcps", "ratio",     "predicted_ratio", "epsilon",          "clamped_trials",
                 "slope",   "slope_se",   "r_squared"};
    std::vector<double> ns, ys;
    for (std::size_t i = 0; i < config.sweep_terms.size(); ++i) {
        const std::size_t n = config.sweep_terms[i];
        const std::uint64_t seed = derive_seed(config.master_seed, kSweepStreamBase + i);
        const LoadedInstance inst = load_instance(config, n);
        std::vector<Cell> row(t.columns.size(), std::monostate{});
        row[0] = std::string("point");
        row[1] = to_i(n);
        if (config.sweep_method == SweepMethod::kQee) {
            const std::size_t n_c = config.sweep_budget / n;
            if (n_c < 1) {
                throw std::invalid_argument("infeasible budget: sweep.budget gives fewer than 1 shot per term");
            }
            const ProjectiveSampler sampler(inst.preparation, inst.observable);
            const TrialSummary s =
                run_qee_trials(inst, sampler, n_c, config.trials, derive_seed(seed, kQeeStream), config.workers);
            const double v = s.report.empirical_variance.value_or(std::numeric_limits<double>::quiet_NaN());
            row[2] = to_i(static_cast<std::uint64_t>(n_c) * n);
            row[3] = to_i(n_c);
            row[4] = v;
            ys.push_back(v);
        } else {
            const TcpsOptions options = make_tcps_options(config, inst.observable);
            if (options.ladder) {
                throw ConfigError("sweep runs the single-scale protocol; set ladder.enabled=false");
            }
            const MatchedComparison c =
                compare_matched(inst, config.budget, options, config.trials, seed, config.workers);
            row[2] = to_i(c.budget_tcps);
            row[3] = to_i(c.qee_shots_per_term);
            row[4] = *c.qee.report.empirical_variance;
            row[5] = *c.tcps.report.empirical_variance;
            row[6] = c.ratio;
            row[7] = c.predicted_ratio;
            row[8] = c.tcps.epsilon_mean;
            row[9] = to_i(c.tcps.clamped_trials);
            ys.push_back(c.ratio);
        }
        ns.push_back(static_cast<double>(n));
        t.add_row(std::move(row));
    }
    const LinearFit fit = fit_loglog(ns, ys);
    std::vector<Cell> row(t.columns.size(), std::monostate{});
    row[0] = std::string("fit");
    row[10] = fit.slope;
    row[11] = fit.slope_se;
    row[12] = fit.r_squared;
    t.add_row(std::move(row));
    return t;
}

Table run_resources(const ExperimentConfig &config) {
    const LoadedInstance inst = load_instance(config);
    const std::size_t n = inst.observable.size();
    const BudgetPlan plan = plan_budget(config.budget, n);
    check_plan(plan);
    const double eta = config.budget.eta;

    Table t = new_table(config, "resources");
    t.columns = {"source",
                 "method",
                 "n_terms",
                 "encoded_terms",
                 "repetitions",
                 "state_preparations",
                 "boundary_preparations",
                 "sign_resolution_preparations",
                 "encoding_preparations",
                 "correction_preparations",
                 "qee_preparations",
                 "projective_measurements",
                 "nisq_memory_interactions",
                 "interactions_per_repetition",
                 "memory_coherence_proxy",
                 "nisq_coherence",
                 "state_preparations_formula",
                 "interactions_formula"};
    const auto ledger_row = [&](const char *source, const char *method, const ResourceLedger &l,
                                Cell encoded, Cell reps, Cell per_rep) {
        std::vector<Cell> row{std::string(source),
                              std::string(method),
                              to_i(n),
                              std::move(encoded),
                              std::move(reps),
                              to_i(l.state_preparations()),
                              to_i(l.boundary_preparations),
                              to_i(l.sign_resolution_preparations),
                              to_i(l.encoding_preparations),
                              to_i(l.correction_preparations),
                              to_i(l.qee_preparations),
                              to_i(l.projective_measurements),
                              to_i(l.nisq_memory_interactions),
                              std::move(per_rep),
                              to_i(l.memory_coherence_proxy),
                              std::monostate{},
                              std::monostate{},
                              std::monostate{}};
        t.add_row(std::move(row));
    };

    if (config.resources_simulate) {
        const ProjectiveSampler sampler(inst.preparation, inst.observable);
        const std::size_t n_c = qee_shots_for(plan);
        Rng qrng = make_rng(derive_seed(config.master_seed, kQeeStream), 0);
        const QeeResult q = qee_estimate(sampler, inst.observable, n_c, qrng);
        if (q.ledger.nisq_memory_interactions != 0) {
            throw std::logic_error("resource check: QEE recorded memory interactions");
        }
        ledger_row("measured", "qee", q.ledger, std::monostate{}, std::monostate{}, std::monostate{});

        TcpsOptions options;
        options.mode = config.memory;
        options.correction = config.correction;
        Rng trng = make_rng(derive_seed(config.master_seed, kTcpsStream), 0);
        const EstimateReport r =
            tcps_estimate(inst.preparation, inst.observable, sampler, plan, trng, options);
        const auto &l = r.ledger;
        if (r.encoded_terms > 0) {
            if (l.encoding_repetitions != plan.repetitions ||
                l.nisq_memory_interactions != r.encoded_terms * plan.repetitions) {
                throw std::logic_error("resource check: TCPS interactions differ from N_enc * M_q");
            }
        }
        if (l.state_preparations() != l.boundary_preparations + l.sign_resolution_preparations +
                                          l.encoding_preparations + l.correction_preparations +
                                          l.qee_preparations) {
            throw std::logic_error("resource check: ledger buckets do not add up");
        }
        const Cell per_rep = l.encoding_repetitions
                                 ? Cell{to_i(l.nisq_memory_interactions / l.encoding_repetitions)}
                                 : Cell{std::monostate{}};
        ledger_row("measured", "tcps", l, to_i(r.encoded_terms), to_i(l.encoding_repetitions), per_rep);
    }

    ResourceLedger planned;
    planned.boundary_preparations = plan.total_boundary;
    planned.sign_resolution_preparations = static_cast<std::uint64_t>(n) * plan.n_qpe * plan.repetitions;
    planned.encoding_preparations = static_cast<std::uint64_t>(n) * plan.repetitions;
    planned.correction_preparations = plan.total_correction;
    planned.projective_measurements = plan.total_boundary + planned.sign_resolution_preparations +
                                      plan.repetitions + plan.total_correction;
    planned.nisq_memory_interactions = static_cast<std::uint64_t>(n) * plan.repetitions;
    planned.encoding_repetitions = plan.repetitions;
    planned.memory_coherence_proxy = static_cast<std::uint64_t>(n) * (1 + plan.n_qpe);
    ledger_row("planned", "tcps", planned, to_i(n), to_i(plan.repetitions), to_i(n));

    for (const AnalyticRow &a : {qee_row(n, eta), tcps_row(n, eta), cps_row(n, eta)}) {
        std::vector<Cell> row(t.columns.size(), std::monostate{});
        row[t.column("source")] = std::string("analytic");
        row[t.column("method")] = a.method;
        row[t.column("n_terms")] = to_i(n);
        row[t.column("state_preparations")] = a.state_preparations;
        if (a.memory_interactions) {
            row[t.column("nisq_memory_interactions")] = *a.memory_interactions;
        }
        if (a.memory_coherence) {
            row[t.column("memory_coherence_proxy")] = *a.memory_coherence;
        }
        row[t.column("nisq_coherence")] = a.nisq_coherence;
        row[t.column("state_preparations_formula")] = a.state_preparations_formula;
        row[t.column("interactions_formula")] = a.memory_interactions_formula;
        t.add_row(std::move(row));
    }
    return t;
}

Table run_budget(const ExperimentConfig &config) {
    const LoadedInstance inst = load_instance(config);
    const BudgetPlan p = plan_budget(config.budget, inst.observable.size());
    Table t = new_table(config, "budget");
    t.columns = {"quantity", "value"};
    const auto add = [&](const char *name, Cell v) { t.add_row({std::string(name), std::move(v)}); };
    add("n_terms", to_i(p.n_terms));
    add("n_1", to_i(p.n_1));
    add("g1", p.g1);
    add("eta1", p.eta1);
    add("delta", p.delta);
    add("p0_min", p.p0_min);
    add("p0_max", p.p0_max);
    add("g3", p.g3);
    add("eta3", p.eta3);
    add("n_qpe", to_i(p.n_qpe));
    add("repetitions", to_i(p.repetitions));
    add("correction_shots", to_i(p.correction_shots));
    add("epsilon", p.epsilon ? Cell{*p.epsilon} : Cell{std::monostate{}});
    add("test_accuracy", p.test_accuracy);
    add("eps_tan", p.eps_tan);
    add("eta0", p.eta0);
    add("m", p.m);
    add("total_boundary", to_i(p.total_boundary));
    add("total_qpe", to_i(p.total_qpe));
    add("total_kitaev", to_i(p.total_kitaev));
    add("total_correction", to_i(p.total_correction));
    add("total_preparations", to_i(p.total_preparations));
    add("qee_shots_per_term", to_i(p.total_preparations / p.n_terms));
    return t;
}

Table run_experiment(const ExperimentConfig &config) {
    validate(config);
    switch (*config.mode) {
        case Mode::kExact: return run_exact(config);
        case Mode::kQee: return run_qee(config);
        case Mode::kTcps: return run_tcps(config);
        case Mode::kCompare: return run_compare(config);
        case Mode::kSweep: return run_sweep(config);
        case Mode::kResources: return run_resources(config);
        case Mode::kBudget: return run_budget(config);
    }
    throw std::logic_error("run_experiment: unhandled mode");
}

}  // namespace tcps::harness
