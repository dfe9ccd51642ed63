#include "fisherwit/cli.hpp"

#include "fisherwit/error.hpp"
#include "fisherwit/scenario.hpp"
#include "fisherwit/states.hpp"
#include "fisherwit/sweeps.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace fisherwit {

namespace {

struct CommonFlags {
    std::string out;
    std::optional<int> cutoff;
    std::optional<std::uint64_t> seed;
    std::optional<double> threshold;
    unsigned jobs = 0;
};

struct GridFlags {
    double start = 0.0;
    double stop = 1.0;
    double step = 0.05;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("-o,--out", f.out, "Write CSV to this file instead of stdout");
    cmd->add_option("--cutoff", f.cutoff, "Fock cutoff per mode")->check(CLI::Range(2, 4096));
    cmd->add_option("--seed", f.seed, "Seed for the optimizer and random states");
    cmd->add_option("--threshold", f.threshold, "Detection threshold on lambda_max")->check(CLI::NonNegativeNumber);
    cmd->add_option("-j,--jobs", f.jobs, "Worker threads for sweeps (0 = all cores)");
}

void add_grid(CLI::App* cmd, GridFlags& g, const std::string& name, double step) {
    g.step = step;
    cmd->add_option("--" + name + "-start", g.start, "First " + name + " value")->capture_default_str();
    cmd->add_option("--" + name + "-stop", g.stop, "Last " + name + " value")->capture_default_str();
    cmd->add_option("--" + name + "-step", g.step, name + " increment")->capture_default_str();
}

SweepOptions sweep_options(const CommonFlags& f) {
    SweepOptions o;
    if (f.threshold) o.threshold = *f.threshold;
    if (f.seed) o.seed = *f.seed;
    o.jobs = f.jobs;
    return o;
}

void emit(const Table& table, const CommonFlags& f, std::ostream& out) {
    const std::string csv = to_csv(table);
    if (f.out.empty() || f.out == "-") {
        out << csv;
        return;
    }
    std::ofstream file(f.out, std::ios::binary | std::ios::trunc);
    if (!file) throw ValidationError("cannot open output file '" + f.out + "'");
    file << csv;
    if (!file) throw Error("failed writing '" + f.out + "'");
}

Table fig1_table(const std::vector<double>& alphas, const GridFlags& g, const CommonFlags& f) {
    if (alphas.empty()) throw ValidationError("--alpha: at least one value required");
    for (double a : alphas) {
        if (!(a > 0.0)) throw ValidationError("--alpha: values must be > 0");
    }
    if (g.start < 0.0 || g.stop > 1.0) throw ValidationError("--s-start/--s-stop: s must lie in [0, 1]");
    const std::vector<double> s_grid = grid_points(g.start, g.stop, g.step);
    const int cutoff = f.cutoff ? *f.cutoff : default_cutoff(*std::max_element(alphas.begin(), alphas.end()));

    Table t;
    t.headers = {"alpha", "s", "witness_p", "witness_x", "lambda_max"};
    for (double a : alphas) {
        for (const SweepRow& row : run_fig1(a, s_grid, cutoff, sweep_options(f))) {
            std::vector<double> cells{a, row.sweep_value};
            for (const auto& [name, value] : row.columns) cells.push_back(value);
            t.rows.push_back(std::move(cells));
        }
    }
    return t;
}

Table hybrid_table(const std::vector<int>& ns, const CommonFlags& f) {
    if (ns.empty()) throw ValidationError("--n: at least one value required");
    std::vector<SweepRow> rows;
    for (int n : ns) {
        if (n < 0) throw ValidationError("--n: values must be >= 0");
        rows.push_back(run_hybrid(n, f.cutoff ? *f.cutoff : n + 8, sweep_options(f)));
    }
    return to_table("n", rows);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entanglement witnesses from quantum Fisher information and local variances", "fisherwit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "fisherwit 0.1.0");

    CommonFlags common;

    std::vector<double> alphas{1.0};
    GridFlags s_grid;
    auto* fig1 = app.add_subcommand("fig1", "Dephased two-mode cat: witness along p1-p2, x1+x2 and the optimum vs s");
    fig1->add_option("-a,--alpha", alphas, "Coherent amplitude(s), comma separated")->delimiter(',')->capture_default_str();
    add_grid(fig1, s_grid, "s", 0.05);
    add_common(fig1, common);

    int qubits = 3;
    GridFlags q_grid;
    auto* fig2 = app.add_subcommand("fig2", "Weighted GHZ state: optimized witness and constrained Fisher maximum vs q");
    fig2->add_option("-N,--qubits", qubits, "Number of qubits")->check(CLI::Range(2, 12))->capture_default_str();
    add_grid(fig2, q_grid, "q", 0.01);
    add_common(fig2, common);

    std::vector<int> ns{0};
    auto* hybrid = app.add_subcommand("hybrid", "Qubit-oscillator state (|0,n> + |1,n+1>)/sqrt(2)");
    hybrid->add_option("-n,--n", ns, "Excitation number(s), comma separated")->delimiter(',')->capture_default_str();
    add_common(hybrid, common);

    std::string scenario_path;
    auto* run = app.add_subcommand("run", "Evaluate a JSON scenario file");
    run->add_option("scenario", scenario_path, "Scenario file")->required();
    add_common(run, common);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        Table table;
        if (*fig1) {
            table = fig1_table(alphas, s_grid, common);
        } else if (*fig2) {
            table = to_table("q", run_fig2(qubits, grid_points(q_grid.start, q_grid.stop, q_grid.step),
                                           sweep_options(common)));
        } else if (*hybrid) {
            table = hybrid_table(ns, common);
        } else {
            Scenario sc = load_scenario(scenario_path);
            apply_overrides(sc, ScenarioOverrides{common.cutoff, common.seed, common.threshold, common.jobs});
            table = evaluate_scenario(sc, common.jobs);
        }
        emit(table, common, out);
        return kExitOk;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace fisherwit
