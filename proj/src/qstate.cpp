#include "qclone/qstate.hpp"

#include <Eigen/Eigenvalues>

#include <numeric>

namespace qclone {

namespace {

int product(const std::vector<int>& dims) {
    int p = 1;
    for (int d : dims) {
        if (d <= 0) throw DimensionError("subsystem dimensions must be positive");
        p *= d;
    }
    return p;
}

// Digits of `index` in the mixed radix given by dims, leftmost most
// significant.
void decompose(int index, const std::vector<int>& dims, std::vector<int>& digits) {
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        digits[k] = index % dims[k];
        index /= dims[k];
    }
}

}  // namespace

Vec kron(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Ket::Ket(Vec amplitudes) : amp_(std::move(amplitudes)) {
    if (amp_.size() == 0) throw DimensionError("empty ket");
    if (std::abs(amp_.squaredNorm() - 1.0) > kNormTol) throw StateError("ket is not normalized");
}

Ket Ket::basis(int dim, int index) {
    if (index < 0 || index >= dim) throw DimensionError("basis index out of range");
    Vec v = Vec::Zero(dim);
    v(index) = 1.0;
    return Ket(std::move(v));
}

Ket Ket::input_state(double beta, double phase) {
    if (beta < 0.0 || beta > 1.0) throw StateError("beta must lie in [0,1]");
    Vec v(2);
    v(0) = std::sqrt(1.0 - beta * beta);
    v(1) = std::polar(beta, phase);
    return Ket(std::move(v));
}

DensityMatrix::DensityMatrix(Mat entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) throw DimensionError("density matrix must be square");
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
        throw StateError("density matrix is not Hermitian");
    if (std::abs(m_.trace() - Complex(1.0)) > kTraceTol)
        throw StateError("density matrix does not have unit trace");
    // Eigenvalues of the Hermitized matrix; the tolerance absorbs roundoff.
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m_ + m_.adjoint()), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol)
        throw StateError("density matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::pure(const Ket& psi) {
    return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

Ket tensor(const Ket& a, const Ket& b) { return Ket(kron(a.amplitudes(), b.amplitudes())); }

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(kron(a.entries(), b.entries()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep,
                            const std::vector<int>& dims) {
    const int n = static_cast<int>(dims.size());
    if (product(dims) != rho.dim()) throw DimensionError("subsystem dims do not factor the state");
    std::vector<bool> kept(n, false);
    int dkeep = 1;
    int prev = -1;
    for (int k : keep) {
        if (k < 0 || k >= n || k <= prev) throw DimensionError("bad keep indices");
        kept[k] = true;
        dkeep *= dims[k];
        prev = k;
    }

    auto keep_index = [&](const std::vector<int>& digits) {
        int idx = 0;
        for (int s = 0; s < n; ++s)
            if (kept[s]) idx = idx * dims[s] + digits[s];
        return idx;
    };

    Mat out = Mat::Zero(dkeep, dkeep);
    std::vector<int> di(n), dj(n);
    const int d = rho.dim();
    for (int i = 0; i < d; ++i) {
        decompose(i, dims, di);
        for (int j = 0; j < d; ++j) {
            decompose(j, dims, dj);
            bool diagonal_on_traced = true;
            for (int s = 0; s < n && diagonal_on_traced; ++s)
                if (!kept[s] && di[s] != dj[s]) diagonal_on_traced = false;
            if (diagonal_on_traced) out(keep_index(di), keep_index(dj)) += rho(i, j);
        }
    }
    return DensityMatrix(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, int keep, const std::vector<int>& dims) {
    return partial_trace(rho, std::vector<int>{keep}, dims);
}

double overlap(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) throw DimensionError("overlap operands differ in dimension");
    Complex tr = (rho.entries() * sigma.entries()).trace();
    if (std::abs(tr.imag()) > 1e-12) throw StateError("overlap has a nonreal trace");
    return tr.real();
}

namespace {

const Mat& pauli(int i) {
    static const Mat sx = (Mat(2, 2) << 0, 1, 1, 0).finished();
    static const Mat sy = (Mat(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
    static const Mat sz = (Mat(2, 2) << 1, 0, 0, -1).finished();
    static const Mat* p[3] = {&sx, &sy, &sz};
    return *p[i];
}

}  // namespace

Eigen::Vector3d bloch_vector(const DensityMatrix& rho) {
    if (rho.dim() != 2) throw DimensionError("bloch_vector expects a qubit state");
    Eigen::Vector3d s;
    for (int i = 0; i < 3; ++i) s(i) = (rho.entries() * pauli(i)).trace().real();
    return s;
}

BlochDecomposition bloch_decompose(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw DimensionError("bloch_decompose expects a two-qubit state");
    const Mat id = Mat::Identity(2, 2);
    BlochDecomposition b;
    for (int i = 0; i < 3; ++i) {
        b.x(i) = (rho.entries() * kron(pauli(i), id)).trace().real();
        b.y(i) = (rho.entries() * kron(id, pauli(i))).trace().real();
        for (int j = 0; j < 3; ++j)
            b.t(i, j) = (rho.entries() * kron(pauli(i), pauli(j))).trace().real();
    }
    return b;
}

Mat bloch_reconstruct(const BlochDecomposition& b) {
    const Mat id = Mat::Identity(2, 2);
    Mat m = kron(id, id);
    for (int i = 0; i < 3; ++i) {
        m += b.x(i) * kron(pauli(i), id);
        m += b.y(i) * kron(id, pauli(i));
        for (int j = 0; j < 3; ++j) m += b.t(i, j) * kron(pauli(i), pauli(j));
    }
    return 0.25 * m;
}

}  // namespace qclone
