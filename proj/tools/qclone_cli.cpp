#include "qclone/analysis.hpp"
#include "qclone/oracle.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace qclone;

struct CliConfig {
    std::string machine;
    std::string pipeline;
    double beta = 0.0;
    int grid = 201;
    double tol = 1e-8;
    std::string out;  // empty = standard output
};

MachineFamily parse_machine(const std::string& s) {
    return s == "ouqc" ? MachineFamily::Ouqc : MachineFamily::Pc;
}

Pipeline parse_pipeline(const std::string& s) {
    return s == "c2d" ? Pipeline::CloneThenDelete : Pipeline::DeleteThenClone;
}

std::string fmt9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

// Routes output to --out or stdout.
int with_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(std::cout);
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 1;
    }
    body(f);
    return 0;
}

int run_sweep(const CliConfig& cfg) {
    const auto rows = sweep(parse_pipeline(cfg.pipeline), parse_machine(cfg.machine), cfg.grid);
    return with_output(cfg.out, [&](std::ostream& os) { emit_csv(rows, os); });
}

int run_thresholds(const CliConfig& cfg) {
    const auto [lo, hi] =
        consumption_interval(parse_pipeline(cfg.pipeline), parse_machine(cfg.machine), cfg.tol);
    return with_output(cfg.out,
                       [&](std::ostream& os) { os << fmt9(lo) << " " << fmt9(hi) << "\n"; });
}

int run_verify(const CliConfig& cfg) {
    const ClonerSpec spec =
        parse_machine(cfg.machine) == MachineFamily::Ouqc ? ouqc_spec() : pc_spec();
    std::vector<double> betas;
    betas.reserve(static_cast<std::size_t>(cfg.grid));
    for (int k = 0; k < cfg.grid; ++k) betas.push_back(static_cast<double>(k) / (cfg.grid - 1));
    const VerificationReport report = verify_all(spec, betas, cfg.tol);
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open output file: " << cfg.out << "\n";
            return 1;
        }
        report.write_csv(f);
    }
    std::cout << "max_deviation = " << fmt9(report.max_deviation()) << "\n";
    return report.all_pass() ? 0 : 2;
}

int run_report(const CliConfig& cfg) {
    const ClonerSpec spec =
        parse_machine(cfg.machine) == MachineFamily::Ouqc ? ouqc_spec() : pc_spec();
    const Pipeline pipeline = parse_pipeline(cfg.pipeline);
    const PipelineReport rep = pipeline == Pipeline::CloneThenDelete
                                   ? run_clone_then_delete(spec, cfg.beta)
                                   : run_delete_then_clone(spec, cfg.beta);
    return with_output(cfg.out, [&](std::ostream& os) {
        os << "pipeline = " << pipeline_name(rep.pipeline) << "\n";
        os << "machine = " << rep.machine << "\n";
        os << "beta = " << fmt9(rep.beta) << "\n";
        for (const StageReport& st : rep.stages) {
            os << "stage." << st.label << ".global = " << fmt9(st.coherence.global) << "\n";
            os << "stage." << st.label << ".local_a = " << fmt9(st.coherence.local_a) << "\n";
            os << "stage." << st.label << ".local_b = " << fmt9(st.coherence.local_b) << "\n";
            os << "stage." << st.label << ".residual = " << fmt9(st.coherence.residual) << "\n";
        }
        os << "delta_c = " << fmt9(rep.delta_c) << "\n";
        os << "delta_residual = " << fmt9(rep.delta_residual) << "\n";
        os << "fidelity = " << fmt9(rep.fidelity) << "\n";
        os << "fidelity_closed_form = " << fmt9(rep.fidelity_closed_form) << "\n";
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum cloning/deleting pipelines: sweeps, thresholds, verification"};
    app.require_subcommand(1);

    CliConfig cfg;
    const auto machine_check = CLI::IsMember({"ouqc", "pc"});
    const auto pipeline_check = CLI::IsMember({"c2d", "d2c"});

    auto add_common = [&](CLI::App* sub, bool needs_pipeline) {
        sub->add_option("--machine", cfg.machine, "Cloning machine")
            ->required()
            ->check(machine_check);
        if (needs_pipeline)
            sub->add_option("--pipeline", cfg.pipeline, "Process direction")
                ->required()
                ->check(pipeline_check);
        sub->add_option("--tol", cfg.tol, "Numerical tolerance")->capture_default_str();
        sub->add_option("--out", cfg.out, "Output path (default: standard output)");
    };

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Write a beta-sweep CSV");
    add_common(sweep_cmd, true);
    sweep_cmd->add_option("--grid", cfg.grid, "Number of beta grid points")
        ->capture_default_str();

    CLI::App* thresholds_cmd =
        app.add_subcommand("thresholds", "Find the coherence-consumption interval");
    add_common(thresholds_cmd, true);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Check closed-form tables against brute-force simulation");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--grid", cfg.grid, "Number of beta grid points")
        ->capture_default_str();

    CLI::App* report_cmd = app.add_subcommand("report", "Print one pipeline report");
    add_common(report_cmd, true);
    report_cmd->add_option("--beta", cfg.beta, "Input-state beta")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (cfg.grid < 2) {
        std::cerr << "grid must be ≥ 2\n";
        return 1;
    }
    if (cfg.tol <= 0.0) {
        std::cerr << "tol must be positive\n";
        return 1;
    }
    if (cfg.beta < 0.0 || cfg.beta > 1.0) {
        std::cerr << "beta must lie in [0,1]\n";
        return 1;
    }

    try {
        if (sweep_cmd->parsed()) return run_sweep(cfg);
        if (thresholds_cmd->parsed()) return run_thresholds(cfg);
        if (verify_cmd->parsed()) return run_verify(cfg);
        return run_report(cfg);
    } catch (const IsometryViolation& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const NoRoot& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
