#pragma once

#include "qclone/machines.hpp"
#include "qclone/qstate.hpp"

#include <cmath>
#include <random>

// Deterministic random generators shared by the test suites.
namespace test_helpers {

using qclone::Complex;
using qclone::Mat;
using qclone::Vec;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Vec random_unit(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    return v / v.norm();
}

/// Haar-uniform qubit state parameters (beta, phase).
inline std::pair<double, double> random_bloch_input(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    // cos(theta) uniform on [-1,1] gives the Haar marginal for beta^2.
    const double c = 2.0 * unif(rng) - 1.0;
    const double beta = std::sqrt(0.5 * (1.0 - c));
    const double phase = 2.0 * M_PI * unif(rng);
    return {beta, phase};
}

/// Real-amplitude ("equatorial") input: beta uniform, phase zero.
inline double random_equatorial_beta(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    return unif(rng);
}

/// Full-rank random two-qubit state via purification with a 4-dim
/// environment.
inline qclone::DensityMatrix random_two_qubit_mixed(std::mt19937_64& rng) {
    const Vec psi = random_unit(rng, 16);
    const qclone::Ket purified{psi};
    return qclone::partial_trace(qclone::DensityMatrix::pure(purified), {0, 1}, {2, 2, 4});
}

/// Unit vector orthogonal to `against`, drawn from a random direction.
inline Vec random_orthogonal_unit(std::mt19937_64& rng, const Vec& against) {
    while (true) {
        Vec v = random_unit(rng, static_cast<int>(against.size()));
        v -= against * against.dot(v);
        const double n = v.norm();
        if (n > 1e-6) return v / n;
    }
}

/// Random valid general cloner: Haar-random ancillas with each row-2 ket
/// orthogonalized against its row-1 partner, which is exactly the condition
/// for the two cloner images to be orthonormal.
inline qclone::ClonerSpec random_general_spec(std::mt19937_64& rng, int anc_dim = 3) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    qclone::ClonerSpec s;
    Eigen::Vector4d mags;
    for (int i = 0; i < 4; ++i) mags(i) = unif(rng) + 0.05;
    mags /= mags.norm();
    s.mag_a = mags(0);
    s.mag_b1 = mags(1);
    s.mag_b2 = mags(2);
    s.mag_c = mags(3);
    double* phases[8] = {&s.phase_a, &s.phase_b1, &s.phase_b2, &s.phase_c,
                         &s.phase_at, &s.phase_b1t, &s.phase_b2t, &s.phase_ct};
    for (double* p : phases) *p = 2.0 * M_PI * unif(rng);
    s.anc_A = random_unit(rng, anc_dim);
    s.anc_B1 = random_unit(rng, anc_dim);
    s.anc_B2 = random_unit(rng, anc_dim);
    s.anc_C = random_unit(rng, anc_dim);
    s.anc_Ct = random_orthogonal_unit(rng, s.anc_A);
    s.anc_B2t = random_orthogonal_unit(rng, s.anc_B1);
    s.anc_B1t = random_orthogonal_unit(rng, s.anc_B2);
    s.anc_At = random_orthogonal_unit(rng, s.anc_C);
    s.family = qclone::MachineFamily::General;
    s.validate();
    return s;
}

}  // namespace test_helpers
