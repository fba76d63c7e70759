#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qclone {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Thrown when operand dimensions do not line up.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a value fails its state invariants (normalization,
/// hermiticity, positivity, ...).
struct StateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Tolerances shared across the library.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

Vec kron(const Vec& a, const Vec& b);
Mat kron(const Mat& a, const Mat& b);

/// Normalized pure state vector. Amplitudes are stored with the left
/// tensor factor most significant, so |ij> sits at row 2i+j.
class Ket {
  public:
    explicit Ket(Vec amplitudes);

    static Ket basis(int dim, int index);

    /// alpha|0> + beta e^{i phase}|1> with alpha = sqrt(1-beta^2) >= 0.
    static Ket input_state(double beta, double phase = 0.0);

    int dim() const { return static_cast<int>(amp_.size()); }
    const Vec& amplitudes() const { return amp_; }
    Complex operator[](int i) const { return amp_(i); }

  private:
    Vec amp_;
};

/// Hermitian, unit-trace, positive-semidefinite complex matrix.
/// Invariants are checked at construction.
class DensityMatrix {
  public:
    explicit DensityMatrix(Mat entries);

    static DensityMatrix pure(const Ket& psi);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Mat& entries() const { return m_; }
    Complex operator()(int i, int j) const { return m_(i, j); }

  private:
    Mat m_;
};

/// Pauli coefficients of a two-qubit state:
/// rho = 1/4 (I x I + sum_i x_i s_i x I + sum_i y_i I x s_i
///            + sum_ij t_ij s_i x s_j).
struct BlochDecomposition {
    Eigen::Vector3d x;
    Eigen::Vector3d y;
    Eigen::Matrix3d t;
};

Ket tensor(const Ket& a, const Ket& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on the subsystems listed in `keep` (ascending indices into
/// `dims`, left factor most significant).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep,
                            const std::vector<int>& dims);
DensityMatrix partial_trace(const DensityMatrix& rho, int keep, const std::vector<int>& dims);

/// Tr(rho sigma), real up to roundoff.
double overlap(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Single-qubit Bloch vector (Tr(rho s_i)).
Eigen::Vector3d bloch_vector(const DensityMatrix& rho);

BlochDecomposition bloch_decompose(const DensityMatrix& rho);
Mat bloch_reconstruct(const BlochDecomposition& b);

}  // namespace qclone
