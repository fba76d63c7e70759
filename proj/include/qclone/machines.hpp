#pragma once

#include "qclone/qstate.hpp"

#include <array>
#include <utility>
#include <vector>

namespace qclone {

/// Thrown when a machine spec cannot be extended to an inner-product
/// preserving linear map.
struct IsometryViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class MachineFamily { Ouqc, Pc, General };

const char* family_name(MachineFamily f);

/// Coefficients and ancilla kets of the general symmetric cloning
/// transformation
///   U|0>|0>|X> = a|00>|A> + b1|01>|B1> + b2|10>|B2> + c|11>|C>
///   U|1>|0>|X> = ct|00>|Ct> + b2t|01>|B2t> + b1t|10>|B1t> + at|11>|At>
/// with |at|=|a|, |bit|=|bi|, |ct|=|c|. The second row attaches the tilde
/// coefficients to the bit-flipped output slots; this is the ordering the
/// output-state coefficient formulas are written in, and the one for which
/// the equal-magnitude constraint is consistent with the two concrete
/// machines below.
struct ClonerSpec {
    double mag_a = 0, mag_b1 = 0, mag_b2 = 0, mag_c = 0;
    double phase_a = 0, phase_b1 = 0, phase_b2 = 0, phase_c = 0;
    double phase_at = 0, phase_b1t = 0, phase_b2t = 0, phase_ct = 0;
    Vec anc_A, anc_B1, anc_B2, anc_C;
    Vec anc_At, anc_B1t, anc_B2t, anc_Ct;
    MachineFamily family = MachineFamily::General;

    int ancilla_dim() const { return static_cast<int>(anc_A.size()); }
    void validate() const;  // throws StateError on broken invariants

    Complex coef_a() const;
    Complex coef_b1() const;
    Complex coef_b2() const;
    Complex coef_c() const;
    Complex coef_at() const;
    Complex coef_b1t() const;
    Complex coef_b2t() const;
    Complex coef_ct() const;

    /// Ancilla output vectors (coefficient times ancilla ket) for the
    /// |00>,|01>,|10>,|11> slots of each input row.
    std::array<Vec, 4> row1_outputs() const;
    std::array<Vec, 4> row2_outputs() const;
};

/// Optimal universal cloner: reduction factor 2/3, fidelity 5/6.
ClonerSpec ouqc_spec();

/// Phase-covariant cloner, optimal for real-amplitude (equatorial) inputs:
/// reduction factor 1/sqrt(2).
ClonerSpec pc_spec();

/// eta = |a|^2 - |c|^2.
double reduction_factor(const ClonerSpec& spec);

/// F = (1 + eta) / 2.
double cloner_fidelity(const ClonerSpec& spec);

enum class TableKind { P, R, M, N };

/// 4x4 Hermitian coefficient table c_{ij,kl} of a two-qubit output state,
/// indexed by the basis pair (2i+j, 2k+l).
struct CoefficientTable {
    TableKind kind;
    Eigen::Matrix4cd entries;

    Complex operator()(int ij, int kl) const { return entries(ij, kl); }
};

/// Assembles sum c_{ij,kl}|ij><kl| and checks the density-matrix invariants.
DensityMatrix assemble(const CoefficientTable& table);

/// Cloned-state coefficients p_{ij,kl} for input sqrt(1-beta^2)|0> +
/// beta e^{i phase}|1>.
CoefficientTable clone_p_table(const ClonerSpec& spec, double beta, double phase = 0.0);

DensityMatrix cloned_state(const ClonerSpec& spec, double beta, double phase = 0.0);

enum class DeleterKind { ImperfectCopy, TwoCopy };

/// One basis rewrite of the deleting machine: system ket (x) ancilla ket
/// on the left maps to system ket (x) enlarged-ancilla ket on the right.
struct RewriteRule {
    Vec sys_in;   // dim 4
    Vec anc_in;   // dim anc_in_dim
    Vec sys_out;  // dim 4
    Vec anc_out;  // dim anc_out_dim
};

struct DeleterSpec {
    DeleterKind kind;
    std::vector<RewriteRule> rules;
    int anc_in_dim = 0;
    int anc_out_dim = 0;
};

/// Deleter acting on the imperfect clones, defined relative to the
/// cloner's ancilla states:
///   |00>|A>  -> |00>|A0>,  |00>|Ct> -> |00>|A1>,
///   |11>|At> -> |10>|A2>,  |11>|C>  -> |10>|A3>,
/// identity on the B sector. A0..A3 are fresh orthonormal directions
/// orthogonal to the whole cloner ancilla space (anc_out_dim = x + 4).
/// Rules whose inputs coincide for the concrete spec are merged; throws
/// IsometryViolation if the rules do not extend to an isometry.
DeleterSpec imperfect_copy_deleter(const ClonerSpec& spec);

/// State-dependent deleter for two identical copies:
///   |00>|A> -> |00>|Q0>,  |11>|A> -> |10>|Q1>,
///   (|01>+|10>)|A> -> (|01>+|10>)|A>.
DeleterSpec two_copy_deleter();

/// Coefficients r_{ij,kl} of the clone-then-delete output; no |11> support.
CoefficientTable deleted_after_clone_r_table(const ClonerSpec& spec, double beta,
                                             double phase = 0.0);

DensityMatrix deleted_after_clone_state(const ClonerSpec& spec, double beta, double phase = 0.0);

/// Output of the two-copy deleter on |psi>|psi>:
/// a^4|00><00| + b^4|10><10| + 2 a^2 b^2 |psi+><psi+|.
DensityMatrix two_copy_deleted_state(double beta, double phase = 0.0);

/// Blank-side overlap of the deleted copies with |0>: F1 = 1 - |ab|^2.
double two_copy_deletion_fidelity(double beta);

/// Coefficients of the state obtained by re-cloning the diagonal mixture
/// left on branch a (m) or branch b (n) after two-copy deletion.
CoefficientTable reclone_m_table(const ClonerSpec& spec, double beta);
CoefficientTable reclone_n_table(const ClonerSpec& spec, double beta);

}  // namespace qclone
