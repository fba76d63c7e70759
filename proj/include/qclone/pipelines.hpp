#pragma once

#include "qclone/coherence.hpp"
#include "qclone/machines.hpp"

#include <string>
#include <vector>

namespace qclone {

enum class Pipeline { CloneThenDelete, DeleteThenClone };

const char* pipeline_name(Pipeline p);

enum class Branch { A, B };

struct StageReport {
    std::string label;  // "input", "cloned", "deleted", "recloned"
    CoherenceReport coherence;
};

/// Full record of one process run. `fidelity` is the numerically computed
/// overlap with the process reference state; `fidelity_closed_form`
/// evaluates the machine-specific closed-form expression (NaN for general
/// machines). The two agree for the optimal universal cloner; for the
/// phase-covariant cloner the published closed forms deviate from the
/// simulated overlap (see the pipeline tests for the exact relation).
struct PipelineReport {
    Pipeline pipeline;
    std::string machine;
    double beta = 0.0;
    std::vector<StageReport> stages;
    double delta_c = 0.0;
    double delta_residual = 0.0;
    double fidelity = 0.0;
    double fidelity_closed_form = 0.0;
};

/// Clone |psi>|0>, then delete the second copy. Stages: input, cloned,
/// deleted. Fidelity reference: the input state |psi><psi| (x) |0><0|.
PipelineReport run_clone_then_delete(const ClonerSpec& spec, double beta);

/// Delete one of two copies |psi>|psi>, then re-clone the kept branch.
/// Stages: input, deleted, recloned. Fidelity reference: the ideal restored
/// two copies |psi><psi| (x) |psi><psi|. Coherence differences are taken
/// against the two-copy input on the a-branch output.
PipelineReport run_delete_then_clone(const ClonerSpec& spec, double beta,
                                     Branch branch = Branch::A);

/// Machine-specific closed-form process fidelity; NaN for General.
double closed_form_fidelity(Pipeline pipeline, MachineFamily family, double beta);

}  // namespace qclone
