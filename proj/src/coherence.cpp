#include "qclone/coherence.hpp"

#include <cmath>

namespace qclone {

double l1_coherence(const DensityMatrix& rho) {
    double sum = 0.0;
    for (int i = 0; i < rho.dim(); ++i)
        for (int j = 0; j < rho.dim(); ++j)
            if (i != j) sum += std::abs(rho(i, j));
    return sum;
}

CoherenceReport coherence_report(const DensityMatrix& rho_ab) {
    if (rho_ab.dim() != 4) throw DimensionError("coherence_report expects a two-qubit state");
    CoherenceReport r;
    r.global = l1_coherence(rho_ab);
    r.local_a = l1_coherence(partial_trace(rho_ab, 0, {2, 2}));
    r.local_b = l1_coherence(partial_trace(rho_ab, 1, {2, 2}));
    r.residual = r.global - r.local_a - r.local_b;
    return r;
}

bool is_incoherent(const DensityMatrix& rho, double tol) {
    if (tol <= 0.0) throw StateError("tolerance must be positive");
    for (int i = 0; i < rho.dim(); ++i)
        for (int j = 0; j < rho.dim(); ++j)
            if (i != j && std::abs(rho(i, j)) >= tol) return false;
    return true;
}

std::optional<double> bloch_form_global_coherence(const BlochDecomposition& b) {
    const auto& x = b.x;
    const auto& y = b.y;
    const auto& t = b.t;
    const double radicands[6] = {
        (y(0) * y(0) + t(2, 0) * t(2, 0)) + (y(1) * y(1) + t(2, 1) * t(2, 1)),
        (y(0) * y(0) - t(2, 0) * t(2, 0)) + (y(1) * y(1) - t(2, 1) * t(2, 1)),
        (x(0) * x(0) + t(0, 2) * t(0, 2)) + (x(1) * x(1) + t(1, 2) * t(1, 2)),
        (x(0) * x(0) - t(0, 2) * t(0, 2)) + (x(1) * x(1) - t(1, 2) * t(1, 2)),
        (t(0, 0) * t(0, 0) + t(1, 1) * t(1, 1)) + (t(0, 1) * t(0, 1) - t(1, 0) * t(1, 0)),
        (t(0, 0) * t(0, 0) - t(1, 1) * t(1, 1)) + (t(0, 1) * t(0, 1) + t(1, 0) * t(1, 0)),
    };
    double sum = 0.0;
    for (double r : radicands) {
        if (r < -1e-12) return std::nullopt;
        sum += std::sqrt(std::max(r, 0.0));
    }
    return 0.5 * sum;
}

}  // namespace qclone
