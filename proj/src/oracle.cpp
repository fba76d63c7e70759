#include "qclone/oracle.hpp"

#include <Eigen/QR>

#include <ostream>

namespace qclone {

namespace {

constexpr double kIsometryTol = 1e-10;

Mat identity(int d) { return Mat::Identity(d, d); }

}  // namespace

Vec apply_isometry(const IsometryMatrix& iso, const Vec& state) {
    if (state.size() != iso.ambient_in())
        throw DimensionError("state does not match the isometry input space");
    const Vec coords = iso.domain.adjoint() * state;
    if ((state - iso.domain * coords).norm() > kIsometryTol)
        throw StateError("state has support outside the isometry domain");
    return iso.map * coords;
}

IsometryMatrix embed(const IsometryMatrix& iso, int left_dim, int right_dim) {
    if (left_dim < 1 || right_dim < 1) throw DimensionError("embedding dims must be positive");
    IsometryMatrix out;
    out.domain = kron(identity(left_dim), kron(iso.domain, identity(right_dim)));
    out.map = kron(identity(left_dim), kron(iso.map, identity(right_dim)));
    return out;
}

IsometryMatrix cloner_isometry(const ClonerSpec& spec) {
    spec.validate();
    const int x = spec.ancilla_dim();
    const auto r1 = spec.row1_outputs();
    const auto r2 = spec.row2_outputs();
    Mat map = Mat::Zero(4 * x, 2);
    for (int s = 0; s < 4; ++s) {
        map.col(0).segment(s * x, x) = r1[s];
        map.col(1).segment(s * x, x) = r2[s];
    }
    if (((map.adjoint() * map) - identity(2)).cwiseAbs().maxCoeff() > kIsometryTol)
        throw IsometryViolation("cloner images are not orthonormal");
    IsometryMatrix iso;
    iso.map = std::move(map);
    iso.domain = identity(2);
    return iso;
}

IsometryMatrix deleter_isometry(const DeleterSpec& d) {
    const auto n = static_cast<Eigen::Index>(d.rules.size());
    if (n == 0) throw IsometryViolation("deleter has no rules");
    const int din = 4 * d.anc_in_dim;
    const int dout = 4 * d.anc_out_dim;
    Mat in(din, n), out(dout, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const RewriteRule& r = d.rules[k];
        if (r.sys_in.size() != 4 || r.sys_out.size() != 4 || r.anc_in.size() != d.anc_in_dim ||
            r.anc_out.size() != d.anc_out_dim)
            throw DimensionError("rule kets do not match the deleter spaces");
        in.col(k) = kron(r.sys_in, r.anc_in);
        out.col(k) = kron(r.sys_out, r.anc_out);
    }
    const Mat gram_in = in.adjoint() * in;
    if ((gram_in - out.adjoint() * out).cwiseAbs().maxCoeff() > kIsometryTol)
        throw IsometryViolation("deleter rules do not preserve inner products");

    IsometryMatrix iso;
    if ((gram_in - identity(static_cast<int>(n))).cwiseAbs().maxCoeff() < kIsometryTol) {
        iso.domain = std::move(in);
        iso.map = std::move(out);
        return iso;
    }
    // Non-orthonormal rule inputs: orthonormalize and push the change of
    // basis through to the outputs.
    Eigen::ColPivHouseholderQR<Mat> qr(in);
    if (qr.rank() < n) throw IsometryViolation("deleter rule inputs are linearly dependent");
    const Mat q = Mat(qr.householderQ()).leftCols(n);
    const Mat r = qr.matrixR().topLeftCorner(n, n).triangularView<Eigen::Upper>();
    const Mat perm = qr.colsPermutation().toDenseMatrix().cast<Complex>();
    // in * perm = q * r, so the j-th domain column q_j equals in * perm * r^{-1} e_j.
    const Mat coeffs = perm * r.inverse();
    iso.domain = q;
    iso.map = out * coeffs;
    if (((iso.map.adjoint() * iso.map) - identity(static_cast<int>(n))).cwiseAbs().maxCoeff() >
        kIsometryTol)
        throw IsometryViolation("deleter rules do not extend to an isometry");
    return iso;
}

DensityMatrix simulate(const std::vector<IsometryMatrix>& chain, const Ket& input,
                       const std::vector<int>& dims, const std::vector<int>& keep) {
    Vec v = input.amplitudes();
    for (const IsometryMatrix& iso : chain) v = qclone::apply_isometry(iso, v);
    return partial_trace(DensityMatrix::pure(Ket(std::move(v))), keep, dims);
}

DensityMatrix oracle_cloned_state(const ClonerSpec& spec, double beta, double phase) {
    const int x = spec.ancilla_dim();
    return simulate({cloner_isometry(spec)}, Ket::input_state(beta, phase), {2, 2, x}, {0, 1});
}

DensityMatrix oracle_deleted_after_clone_state(const ClonerSpec& spec, double beta,
                                               double phase) {
    const int x = spec.ancilla_dim();
    return simulate({cloner_isometry(spec), deleter_isometry(imperfect_copy_deleter(spec))},
                    Ket::input_state(beta, phase), {2, 2, x + 4}, {0, 1});
}

DensityMatrix oracle_two_copy_deleted_state(double beta, double phase) {
    const Ket psi = Ket::input_state(beta, phase);
    return simulate({deleter_isometry(two_copy_deleter())}, tensor(psi, psi), {2, 2, 3}, {0, 1});
}

DensityMatrix oracle_recloned_state(const ClonerSpec& spec, double beta, RecloneBranch branch,
                                    double phase) {
    const int x = spec.ancilla_dim();
    const Ket psi = Ket::input_state(beta, phase);
    const Ket two_copies = tensor(psi, psi);
    const IsometryMatrix del = deleter_isometry(two_copy_deleter());
    const IsometryMatrix cloner = cloner_isometry(spec);
    if (branch == RecloneBranch::A) {
        // Re-clone the kept a qubit: spaces a1 a2 anc_x b anc_3.
        return simulate({del, embed(cloner, 1, 6)}, two_copies, {2, 2, x, 2, 3}, {0, 1});
    }
    // Re-clone the blank-side b qubit: spaces a b1 b2 anc_x anc_3.
    return simulate({del, embed(cloner, 2, 3)}, two_copies, {2, 2, 2, x, 3}, {1, 2});
}

bool VerificationReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

double VerificationReport::max_deviation() const {
    double m = 0.0;
    for (const auto& e : entries) m = std::max(m, e.max_dev);
    return m;
}

void VerificationReport::write_csv(std::ostream& out) const {
    out << "table,beta,max_dev,pass\n";
    char line[128];
    for (const auto& e : entries) {
        std::snprintf(line, sizeof(line), "%s,%.17g,%.17g,%d\n", e.table.c_str(), e.beta,
                      e.max_dev, e.pass ? 1 : 0);
        out << line;
    }
}

VerificationReport verify_all(const ClonerSpec& spec, const std::vector<double>& betas,
                              double tol) {
    if (tol <= 0.0) throw StateError("tolerance must be positive");
    VerificationReport report;
    report.tol = tol;
    auto record = [&](const char* table, double beta, const DensityMatrix& closed,
                      const DensityMatrix& oracle) {
        const double dev = (closed.entries() - oracle.entries()).cwiseAbs().maxCoeff();
        report.entries.push_back({table, beta, dev, dev < tol});
    };
    for (double beta : betas) {
        record("p", beta, cloned_state(spec, beta), oracle_cloned_state(spec, beta));
        record("r", beta, deleted_after_clone_state(spec, beta),
               oracle_deleted_after_clone_state(spec, beta));
        record("two_copy", beta, two_copy_deleted_state(beta),
               oracle_two_copy_deleted_state(beta));
        record("m", beta, assemble(reclone_m_table(spec, beta)),
               oracle_recloned_state(spec, beta, RecloneBranch::A));
        record("n", beta, assemble(reclone_n_table(spec, beta)),
               oracle_recloned_state(spec, beta, RecloneBranch::B));
    }
    return report;
}

}  // namespace qclone
