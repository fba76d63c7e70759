#pragma once

#include "qclone/pipelines.hpp"

#include <iosfwd>
#include <utility>

namespace qclone {

/// Thrown when a bracketing scan finds no sign change.
struct NoRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One row of a parameter sweep; column order is the CSV contract.
struct SweepRow {
    double beta;
    double alpha_beta;  // |alpha beta|
    double c_global_in;
    double c_local_a_in;
    double c_local_b_in;
    double c_global_mid;
    double c_global_out;
    double residual_out;
    double delta_c;
    double delta_residual;
    double fidelity;
};

/// Rows at beta = k/(n_points-1), k = 0..n_points-1.
std::vector<SweepRow> sweep(Pipeline pipeline, MachineFamily machine, int n_points);

/// The two roots of delta_C(beta) = 0 in (0,1): coherence is consumed
/// strictly between them. Coarse 10^4-point bracketing followed by
/// bisection to |delta_C| < tol. Throws NoRoot if delta_C never changes
/// sign.
std::pair<double, double> consumption_interval(Pipeline pipeline, MachineFamily machine,
                                               double tol);

struct FidelityExtrema {
    double f_min;
    double beta_argmin;
    double f_max;
    double beta_argmax;
};

/// Extrema of the closed-form fidelity over beta in [0,1] (dense grid plus
/// golden-section refinement to 1e-10 in beta).
FidelityExtrema fidelity_extrema(Pipeline pipeline, MachineFamily machine);

/// Header plus one line per row, full double precision. Returns row count.
std::size_t emit_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace qclone
