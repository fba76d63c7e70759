#include "qclone/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace qclone {

namespace {

ClonerSpec spec_for(MachineFamily machine) {
    switch (machine) {
        case MachineFamily::Ouqc: return ouqc_spec();
        case MachineFamily::Pc: return pc_spec();
        case MachineFamily::General: break;
    }
    throw StateError("analysis routines need a named machine");
}

PipelineReport run(Pipeline pipeline, const ClonerSpec& spec, double beta) {
    return pipeline == Pipeline::CloneThenDelete ? run_clone_then_delete(spec, beta)
                                                 : run_delete_then_clone(spec, beta);
}

}  // namespace

std::vector<SweepRow> sweep(Pipeline pipeline, MachineFamily machine, int n_points) {
    if (n_points < 2) throw StateError("grid must be >= 2");
    const ClonerSpec spec = spec_for(machine);
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(n_points));
    for (int k = 0; k < n_points; ++k) {
        const double beta = static_cast<double>(k) / (n_points - 1);
        const PipelineReport rep = run(pipeline, spec, beta);
        const CoherenceReport& in = rep.stages[0].coherence;
        const CoherenceReport& mid = rep.stages[1].coherence;
        const CoherenceReport& out = rep.stages[2].coherence;
        rows.push_back({beta, beta * std::sqrt(1.0 - beta * beta), in.global, in.local_a,
                        in.local_b, mid.global, out.global, out.residual, rep.delta_c,
                        rep.delta_residual, rep.fidelity});
    }
    return rows;
}

std::pair<double, double> consumption_interval(Pipeline pipeline, MachineFamily machine,
                                               double tol) {
    if (tol <= 0.0) throw StateError("tolerance must be positive");
    const ClonerSpec spec = spec_for(machine);
    auto delta_c = [&](double beta) { return run(pipeline, spec, beta).delta_c; };

    constexpr int kScan = 10000;
    std::vector<std::pair<double, double>> brackets;
    double prev_beta = 0.0;
    double prev_val = delta_c(0.0);
    for (int k = 1; k <= kScan; ++k) {
        const double beta = static_cast<double>(k) / kScan;
        const double val = delta_c(beta);
        if ((prev_val < 0.0) != (val < 0.0)) brackets.emplace_back(prev_beta, beta);
        prev_beta = beta;
        prev_val = val;
    }
    if (brackets.size() < 2) throw NoRoot("delta_C does not change sign twice on (0,1)");

    auto bisect = [&](double lo, double hi) {
        double flo = delta_c(lo);
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fmid = delta_c(mid);
            if (std::abs(fmid) < tol) return mid;
            if ((flo < 0.0) == (fmid < 0.0)) {
                lo = mid;
                flo = fmid;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };
    return {bisect(brackets.front().first, brackets.front().second),
            bisect(brackets.back().first, brackets.back().second)};
}

FidelityExtrema fidelity_extrema(Pipeline pipeline, MachineFamily machine) {
    auto f = [&](double beta) { return closed_form_fidelity(pipeline, machine, beta); };

    constexpr int kGrid = 4096;
    int k_min = 0, k_max = 0;
    double f_min = f(0.0), f_max = f_min;
    for (int k = 1; k <= kGrid; ++k) {
        const double val = f(static_cast<double>(k) / kGrid);
        if (val < f_min) {
            f_min = val;
            k_min = k;
        }
        if (val > f_max) {
            f_max = val;
            k_max = k;
        }
    }

    // Golden-section refinement on the bracketing grid cells.
    auto refine = [&](int k_best, double sign) {
        double lo = std::max(0.0, static_cast<double>(k_best - 1) / kGrid);
        double hi = std::min(1.0, static_cast<double>(k_best + 1) / kGrid);
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = hi - gr * (hi - lo);
        double x2 = lo + gr * (hi - lo);
        double f1 = sign * f(x1), f2 = sign * f(x2);
        while (hi - lo > 1e-10) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - gr * (hi - lo);
                f1 = sign * f(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + gr * (hi - lo);
                f2 = sign * f(x2);
            }
        }
        return 0.5 * (lo + hi);
    };

    FidelityExtrema ext;
    ext.beta_argmin = refine(k_min, +1.0);
    ext.beta_argmax = refine(k_max, -1.0);
    // The endpoints beat any interior refinement when they hold the extremum.
    if (f(ext.beta_argmin) > f_min) ext.beta_argmin = static_cast<double>(k_min) / kGrid;
    if (f(ext.beta_argmax) < f_max) ext.beta_argmax = static_cast<double>(k_max) / kGrid;
    ext.f_min = f(ext.beta_argmin);
    ext.f_max = f(ext.beta_argmax);
    return ext;
}

std::size_t emit_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "beta,alpha_beta,c_global_in,c_local_a_in,c_local_b_in,c_global_mid,c_global_out,"
           "residual_out,delta_c,delta_residual,fidelity\n";
    char line[512];
    for (const SweepRow& r : rows) {
        std::snprintf(line, sizeof(line),
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      r.beta, r.alpha_beta, r.c_global_in, r.c_local_a_in, r.c_local_b_in,
                      r.c_global_mid, r.c_global_out, r.residual_out, r.delta_c, r.delta_residual,
                      r.fidelity);
        out << line;
    }
    return rows.size();
}

}  // namespace qclone
