#pragma once

#include "qclone/qstate.hpp"

#include <optional>

namespace qclone {

/// l1 coherence of a two-qubit state and of its reductions.
struct CoherenceReport {
    double global = 0.0;
    double local_a = 0.0;
    double local_b = 0.0;
    double residual = 0.0;  // global - local_a - local_b
};

/// Sum of off-diagonal magnitudes in the computational basis.
double l1_coherence(const DensityMatrix& rho);

CoherenceReport coherence_report(const DensityMatrix& rho_ab);

bool is_incoherent(const DensityMatrix& rho, double tol);

/// Closed-form global l1 coherence from the Bloch coefficients of a
/// two-qubit state. The expression involves six square roots whose
/// radicands are not guaranteed nonnegative for generic states; returns
/// nullopt when any radicand drops below -1e-12 (outside the expression's
/// domain). Diagnostic cross-check only; l1_coherence is authoritative.
std::optional<double> bloch_form_global_coherence(const BlochDecomposition& b);

}  // namespace qclone
