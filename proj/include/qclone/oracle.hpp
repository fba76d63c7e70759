#pragma once

#include "qclone/machines.hpp"

#include <iosfwd>

namespace qclone {

/// Explicit matrix of an inner-product preserving linear map. `domain`
/// carries an orthonormal basis of the subspace the map is defined on
/// (columns live in the ambient input space); `map` sends domain
/// coordinates to the output space, with map^dagger map = I.
struct IsometryMatrix {
    Mat map;
    Mat domain;

    int d_in() const { return static_cast<int>(domain.cols()); }
    int d_out() const { return static_cast<int>(map.rows()); }
    int ambient_in() const { return static_cast<int>(domain.rows()); }
};

/// Applies the isometry to a vector in the ambient input space; throws
/// StateError if the vector has support outside the domain.
Vec apply_isometry(const IsometryMatrix& iso, const Vec& state);

/// I_left (x) iso (x) I_right.
IsometryMatrix embed(const IsometryMatrix& iso, int left_dim, int right_dim);

/// Columns are the images of |0>_a|0>_b|X> and |1>_a|0>_b|X> in the
/// 4x-dimensional clones (x) ancilla space. Throws IsometryViolation if the
/// two images are not orthonormal.
IsometryMatrix cloner_isometry(const ClonerSpec& spec);

/// Linear extension of the rewrite rules on the span of their inputs.
/// Throws IsometryViolation if the output Gram matrix differs from the
/// input one.
IsometryMatrix deleter_isometry(const DeleterSpec& d);

/// Applies the chain to `input`, forms the pure projector and reduces to
/// the kept subsystems of the final space factored as `dims`.
DensityMatrix simulate(const std::vector<IsometryMatrix>& chain, const Ket& input,
                       const std::vector<int>& dims, const std::vector<int>& keep);

// Brute-force counterparts of the closed-form evaluators.
DensityMatrix oracle_cloned_state(const ClonerSpec& spec, double beta, double phase = 0.0);
DensityMatrix oracle_deleted_after_clone_state(const ClonerSpec& spec, double beta,
                                               double phase = 0.0);
DensityMatrix oracle_two_copy_deleted_state(double beta, double phase = 0.0);
enum class RecloneBranch { A, B };
DensityMatrix oracle_recloned_state(const ClonerSpec& spec, double beta, RecloneBranch branch,
                                    double phase = 0.0);

struct VerificationEntry {
    std::string table;  // "p", "r", "two_copy", "m", "n"
    double beta;
    double max_dev;
    bool pass;
};

struct VerificationReport {
    double tol = 0.0;
    std::vector<VerificationEntry> entries;

    bool all_pass() const;
    double max_deviation() const;
    void write_csv(std::ostream& out) const;
};

/// Compares every closed-form table against brute-force simulation on the
/// given beta grid. Failures are report entries, not exceptions.
VerificationReport verify_all(const ClonerSpec& spec, const std::vector<double>& betas,
                              double tol);

}  // namespace qclone
