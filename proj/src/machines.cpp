#include "qclone/machines.hpp"

#include <Eigen/QR>

#include <cmath>

namespace qclone {

namespace {

constexpr double kMatchTol = 1e-12;
constexpr double kDomainTol = 1e-10;

Vec basis4(int i) {
    Vec v = Vec::Zero(4);
    v(i) = 1.0;
    return v;
}

Vec unit(int dim, int i) {
    Vec v = Vec::Zero(dim);
    v(i) = 1.0;
    return v;
}

// Head-embeds a vector into a larger ancilla space.
Vec embed_head(const Vec& v, int dim) {
    Vec out = Vec::Zero(dim);
    out.head(v.size()) = v;
    return out;
}

}  // namespace

const char* family_name(MachineFamily f) {
    switch (f) {
        case MachineFamily::Ouqc: return "ouqc";
        case MachineFamily::Pc: return "pc";
        case MachineFamily::General: return "general";
    }
    return "unknown";
}

void ClonerSpec::validate() const {
    const double mags[4] = {mag_a, mag_b1, mag_b2, mag_c};
    for (double m : mags)
        if (m < 0.0) throw StateError("cloner magnitudes must be non-negative");
    const double norm2 = mag_a * mag_a + mag_b1 * mag_b1 + mag_b2 * mag_b2 + mag_c * mag_c;
    if (std::abs(norm2 - 1.0) > kNormTol)
        throw StateError("cloner magnitudes are not normalized");
    const Vec* ancs[8] = {&anc_A, &anc_B1, &anc_B2, &anc_C, &anc_At, &anc_B1t, &anc_B2t, &anc_Ct};
    const int x = ancilla_dim();
    if (x < 1) throw StateError("ancilla dimension must be at least 1");
    for (const Vec* v : ancs) {
        if (v->size() != x) throw StateError("ancilla kets must share one dimension");
        if (std::abs(v->squaredNorm() - 1.0) > kNormTol)
            throw StateError("ancilla kets must be normalized");
    }
}

Complex ClonerSpec::coef_a() const { return std::polar(mag_a, phase_a); }
Complex ClonerSpec::coef_b1() const { return std::polar(mag_b1, phase_b1); }
Complex ClonerSpec::coef_b2() const { return std::polar(mag_b2, phase_b2); }
Complex ClonerSpec::coef_c() const { return std::polar(mag_c, phase_c); }
Complex ClonerSpec::coef_at() const { return std::polar(mag_a, phase_at); }
Complex ClonerSpec::coef_b1t() const { return std::polar(mag_b1, phase_b1t); }
Complex ClonerSpec::coef_b2t() const { return std::polar(mag_b2, phase_b2t); }
Complex ClonerSpec::coef_ct() const { return std::polar(mag_c, phase_ct); }

std::array<Vec, 4> ClonerSpec::row1_outputs() const {
    return {coef_a() * anc_A, coef_b1() * anc_B1, coef_b2() * anc_B2, coef_c() * anc_C};
}

std::array<Vec, 4> ClonerSpec::row2_outputs() const {
    return {coef_ct() * anc_Ct, coef_b2t() * anc_B2t, coef_b1t() * anc_B1t, coef_at() * anc_At};
}

ClonerSpec ouqc_spec() {
    ClonerSpec s;
    s.mag_a = std::sqrt(2.0 / 3.0);
    s.mag_b1 = s.mag_b2 = std::sqrt(1.0 / 6.0);
    s.mag_c = 0.0;
    s.anc_A = unit(2, 0);
    s.anc_B1 = s.anc_B2 = unit(2, 1);
    s.anc_C = unit(2, 0);
    s.anc_At = unit(2, 1);
    s.anc_B1t = s.anc_B2t = unit(2, 0);
    s.anc_Ct = unit(2, 1);
    s.family = MachineFamily::Ouqc;
    s.validate();
    return s;
}

ClonerSpec pc_spec() {
    ClonerSpec s;
    s.mag_a = 0.5 + std::sqrt(0.125);
    s.mag_b1 = s.mag_b2 = std::sqrt(0.125);
    s.mag_c = 0.5 - std::sqrt(0.125);
    s.anc_A = s.anc_C = unit(2, 0);
    s.anc_B1 = s.anc_B2 = unit(2, 1);
    s.anc_At = s.anc_Ct = unit(2, 1);
    s.anc_B1t = s.anc_B2t = unit(2, 0);
    s.family = MachineFamily::Pc;
    s.validate();
    return s;
}

double reduction_factor(const ClonerSpec& spec) {
    return spec.mag_a * spec.mag_a - spec.mag_c * spec.mag_c;
}

double cloner_fidelity(const ClonerSpec& spec) { return 0.5 * (1.0 + reduction_factor(spec)); }

DensityMatrix assemble(const CoefficientTable& table) {
    return DensityMatrix(Mat(table.entries));
}

namespace {

// Ancilla vectors attached to the |00>,|01>,|10>,|11> slots after cloning
// alpha|0> + beta e^{i phase}|1>.
std::array<Vec, 4> clone_slot_ancillas(const ClonerSpec& spec, double beta, double phase) {
    if (beta < 0.0 || beta > 1.0) throw StateError("beta must lie in [0,1]");
    spec.validate();
    const double alpha = std::sqrt(1.0 - beta * beta);
    const Complex betap = std::polar(beta, phase);
    const auto r1 = spec.row1_outputs();
    const auto r2 = spec.row2_outputs();
    std::array<Vec, 4> w;
    for (int s = 0; s < 4; ++s) w[s] = alpha * r1[s] + betap * r2[s];
    return w;
}

Eigen::Matrix4cd gram(const std::array<Vec, 4>& w) {
    Eigen::Matrix4cd g;
    for (int ij = 0; ij < 4; ++ij)
        for (int kl = 0; kl < 4; ++kl) g(ij, kl) = w[kl].dot(w[ij]);
    return g;
}

}  // namespace

CoefficientTable clone_p_table(const ClonerSpec& spec, double beta, double phase) {
    return CoefficientTable{TableKind::P, gram(clone_slot_ancillas(spec, beta, phase))};
}

DensityMatrix cloned_state(const ClonerSpec& spec, double beta, double phase) {
    return assemble(clone_p_table(spec, beta, phase));
}

DeleterSpec imperfect_copy_deleter(const ClonerSpec& spec) {
    spec.validate();
    const int x = spec.ancilla_dim();
    const int y = x + 4;  // cloner ancilla plus four fresh directions
    DeleterSpec d;
    d.kind = DeleterKind::ImperfectCopy;
    d.anc_in_dim = x;
    d.anc_out_dim = y;

    auto add = [&](const Vec& sys_in, const Vec& anc_in, const Vec& sys_out, const Vec& anc_out) {
        for (const RewriteRule& r : d.rules) {
            if ((r.sys_in - sys_in).norm() < kMatchTol && (r.anc_in - anc_in).norm() < kMatchTol) {
                // Degenerate spec: two nominal rules share an input. Keep the
                // first if they agree on the system side, otherwise the map is
                // ill-defined.
                if ((r.sys_out - sys_out).norm() < kMatchTol) return;
                throw IsometryViolation("conflicting deleter rules for one input");
            }
        }
        d.rules.push_back({sys_in, anc_in, sys_out, anc_out});
    };

    add(basis4(0), spec.anc_A, basis4(0), unit(y, x + 0));
    add(basis4(0), spec.anc_Ct, basis4(0), unit(y, x + 1));
    add(basis4(3), spec.anc_At, basis4(2), unit(y, x + 2));
    add(basis4(3), spec.anc_C, basis4(2), unit(y, x + 3));
    for (int k = 0; k < x; ++k) {
        add(basis4(1), unit(x, k), basis4(1), embed_head(unit(x, k), y));
        add(basis4(2), unit(x, k), basis4(2), embed_head(unit(x, k), y));
    }
    return d;
}

DeleterSpec two_copy_deleter() {
    DeleterSpec d;
    d.kind = DeleterKind::TwoCopy;
    d.anc_in_dim = 1;
    d.anc_out_dim = 3;
    const Vec anc = Vec::Ones(1);
    Vec psi_plus = Vec::Zero(4);
    psi_plus(1) = psi_plus(2) = 1.0 / std::sqrt(2.0);
    d.rules.push_back({basis4(0), anc, basis4(0), unit(3, 1)});
    d.rules.push_back({basis4(3), anc, basis4(2), unit(3, 2)});
    d.rules.push_back({psi_plus, anc, psi_plus, unit(3, 0)});
    return d;
}

namespace {

// Linear extension of the rewrite rules applied to a system (x) ancilla
// vector; throws if the vector leaves the span of the rule inputs.
Vec rewrite(const DeleterSpec& d, const Vec& state) {
    const int din = 4 * d.anc_in_dim;
    const int dout = 4 * d.anc_out_dim;
    if (state.size() != din) throw DimensionError("state does not match deleter input space");
    const auto n = static_cast<Eigen::Index>(d.rules.size());
    Mat in(din, n), out(dout, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        in.col(k) = kron(d.rules[k].sys_in, d.rules[k].anc_in);
        out.col(k) = kron(d.rules[k].sys_out, d.rules[k].anc_out);
    }
    const Vec coeffs = in.colPivHouseholderQr().solve(state);
    if ((in * coeffs - state).norm() > kDomainTol)
        throw IsometryViolation("state has support outside the deleter domain");
    return out * coeffs;
}

}  // namespace

CoefficientTable deleted_after_clone_r_table(const ClonerSpec& spec, double beta, double phase) {
    const int x = spec.ancilla_dim();
    const auto w = clone_slot_ancillas(spec, beta, phase);
    Vec post_clone = Vec::Zero(4 * x);
    for (int s = 0; s < 4; ++s) post_clone.segment(s * x, x) = w[s];

    const DeleterSpec d = imperfect_copy_deleter(spec);
    const Vec deleted = rewrite(d, post_clone);
    std::array<Vec, 4> blocks;
    for (int s = 0; s < 4; ++s) blocks[s] = deleted.segment(s * d.anc_out_dim, d.anc_out_dim);
    return CoefficientTable{TableKind::R, gram(blocks)};
}

DensityMatrix deleted_after_clone_state(const ClonerSpec& spec, double beta, double phase) {
    return assemble(deleted_after_clone_r_table(spec, beta, phase));
}

DensityMatrix two_copy_deleted_state(double beta, double phase) {
    if (beta < 0.0 || beta > 1.0) throw StateError("beta must lie in [0,1]");
    (void)phase;  // the output is phase-independent
    const double a2 = 1.0 - beta * beta;
    const double b2 = beta * beta;
    Mat rho = Mat::Zero(4, 4);
    rho(0, 0) = a2 * a2;
    rho(2, 2) = b2 * b2;
    // 2 a^2 b^2 |psi+><psi+| with |psi+> = (|01>+|10>)/sqrt(2)
    rho(1, 1) = rho(1, 2) = rho(2, 1) = a2 * b2;
    rho(2, 2) += a2 * b2;
    return DensityMatrix(std::move(rho));
}

double two_copy_deletion_fidelity(double beta) {
    if (beta < 0.0 || beta > 1.0) throw StateError("beta must lie in [0,1]");
    return 1.0 - (1.0 - beta * beta) * beta * beta;
}

namespace {

CoefficientTable reclone_mixture_table(const ClonerSpec& spec, double w0, double w1,
                                       TableKind kind) {
    spec.validate();
    const Eigen::Matrix4cd g1 = gram(spec.row1_outputs());
    const Eigen::Matrix4cd g2 = gram(spec.row2_outputs());
    return CoefficientTable{kind, w0 * g1 + w1 * g2};
}

}  // namespace

CoefficientTable reclone_m_table(const ClonerSpec& spec, double beta) {
    if (beta < 0.0 || beta > 1.0) throw StateError("beta must lie in [0,1]");
    const double b2 = beta * beta;
    return reclone_mixture_table(spec, 1.0 - b2, b2, TableKind::M);
}

CoefficientTable reclone_n_table(const ClonerSpec& spec, double beta) {
    if (beta < 0.0 || beta > 1.0) throw StateError("beta must lie in [0,1]");
    const double g = (1.0 - beta * beta) * beta * beta;
    return reclone_mixture_table(spec, 1.0 - g, g, TableKind::N);
}

}  // namespace qclone
