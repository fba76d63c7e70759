#include "qclone/pipelines.hpp"

#include <cmath>
#include <limits>

namespace qclone {

const char* pipeline_name(Pipeline p) {
    return p == Pipeline::CloneThenDelete ? "c2d" : "d2c";
}

double closed_form_fidelity(Pipeline pipeline, MachineFamily family, double beta) {
    if (beta < 0.0 || beta > 1.0) throw StateError("beta must lie in [0,1]");
    const double g = (1.0 - beta * beta) * beta * beta;  // |alpha beta|^2
    const double s2 = std::sqrt(2.0);
    switch (family) {
        case MachineFamily::Ouqc:
            if (pipeline == Pipeline::CloneThenDelete)
                return (2.0 / 3.0) * (1.0 - 2.0 * g) + beta * beta / 6.0;
            return (2.0 / 3.0) * (1.0 - 2.0 * g);
        case MachineFamily::Pc:
            if (pipeline == Pipeline::CloneThenDelete) return (4.0 + 3.0 * s2 - 16.0 * g) / (8.0 * s2);
            return (3.0 * s2 + 4.0 - (16.0 - 2.0 * s2) * g) / (8.0 * s2);
        case MachineFamily::General:
            break;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

PipelineReport run_clone_then_delete(const ClonerSpec& spec, double beta) {
    const Ket psi = Ket::input_state(beta);
    const DensityMatrix rho_in = DensityMatrix::pure(tensor(psi, Ket::basis(2, 0)));
    const DensityMatrix rho_mid = cloned_state(spec, beta);
    const DensityMatrix rho_out = deleted_after_clone_state(spec, beta);

    PipelineReport rep;
    rep.pipeline = Pipeline::CloneThenDelete;
    rep.machine = family_name(spec.family);
    rep.beta = beta;
    rep.stages = {{"input", coherence_report(rho_in)},
                  {"cloned", coherence_report(rho_mid)},
                  {"deleted", coherence_report(rho_out)}};
    rep.delta_c = rep.stages.back().coherence.global - rep.stages.front().coherence.global;
    rep.delta_residual =
        rep.stages.back().coherence.residual - rep.stages.front().coherence.residual;
    rep.fidelity = overlap(rho_out, rho_in);
    rep.fidelity_closed_form = closed_form_fidelity(rep.pipeline, spec.family, beta);
    return rep;
}

PipelineReport run_delete_then_clone(const ClonerSpec& spec, double beta, Branch branch) {
    const Ket psi = Ket::input_state(beta);
    const DensityMatrix rho_in = DensityMatrix::pure(tensor(psi, psi));
    const DensityMatrix rho_mid = two_copy_deleted_state(beta);
    const CoefficientTable table =
        branch == Branch::A ? reclone_m_table(spec, beta) : reclone_n_table(spec, beta);
    const DensityMatrix rho_out = assemble(table);

    PipelineReport rep;
    rep.pipeline = Pipeline::DeleteThenClone;
    rep.machine = family_name(spec.family);
    rep.beta = beta;
    rep.stages = {{"input", coherence_report(rho_in)},
                  {"deleted", coherence_report(rho_mid)},
                  {"recloned", coherence_report(rho_out)}};
    rep.delta_c = rep.stages.back().coherence.global - rep.stages.front().coherence.global;
    rep.delta_residual =
        rep.stages.back().coherence.residual - rep.stages.front().coherence.residual;
    rep.fidelity = overlap(rho_out, rho_in);
    rep.fidelity_closed_form = closed_form_fidelity(rep.pipeline, spec.family, beta);
    return rep;
}

}  // namespace qclone
