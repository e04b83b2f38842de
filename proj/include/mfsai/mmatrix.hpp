#ifndef MFSAI_MMATRIX_HPP
#define MFSAI_MMATRIX_HPP

#include <optional>

#include "mfsai/sparse.hpp"

namespace mfsai {

enum class MVerdict { NonsingularM, SingularIrreducibleM, NotM };

const char* to_string(MVerdict v);

struct MMatrixReport {
    bool is_z = false;
    bool is_irreducible = false;
    bool has_positive_null_vector = false;
    std::optional<Vector> null_vector;
    MVerdict verdict = MVerdict::NotM;
};

/// Residual norms of the four Penrose conditions for a candidate
/// generalized inverse X of A:
///   ax1 = ||A X A - A||_F    ax2 = ||X A X - X||_F
///   ax3 = ||(A X)^T - A X||_F    ax4 = ||(X A)^T - X A||_F
/// ax1 and ax2 vanish for a (1,2)-inverse; all four vanish only for the
/// Moore-Penrose inverse.
struct InverseAxiomReport {
    double ax1;
    double ax2;
    double ax3;
    double ax4;
};

/// True iff every stored off-diagonal entry is <= 0.
bool is_z_matrix(const SparseMatrix& A);

/// True iff the directed graph with an edge i -> j for every stored
/// off-diagonal nonzero is strongly connected. Order 1 counts as
/// irreducible.
bool is_irreducible(const SparseMatrix& A);

/// Classifies A as a nonsingular M-matrix, a singular irreducible M-matrix,
/// or neither. The singular verdict requires a positive null vector with
/// residual below tol * ||A||_inf. Classification densifies A internally and
/// is meant for desk-scale orders.
MMatrixReport classify(const SparseMatrix& A, double tol = 1e-10);

/// The entrywise positive null vector of a singular irreducible M-matrix,
/// normalized to unit 1-norm. Computed by inverse iteration on A + sigma*I
/// with sigma = 1e-8 * ||A||_inf, started from `start` (all ones when
/// empty). Throws NotSingularIrreducible if the residual cannot be driven
/// below tol * ||A||_inf within 100 steps or the limit is not positive.
Vector positive_null_vector(const SparseMatrix& A, double tol = 1e-10, const Vector& start = {});

InverseAxiomReport penrose_residuals(const SparseMatrix& A, const SparseMatrix& X);

}  // namespace mfsai

#endif
