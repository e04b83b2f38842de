#ifndef MFSAI_FSAI_HPP
#define MFSAI_FSAI_HPP

#include "mfsai/pattern.hpp"
#include "mfsai/sparse.hpp"

namespace mfsai {

/// Factorized sparse approximate inverse of a singular irreducible
/// M-matrix A: triangular factors L and U with
///
///   (L A)_{ij} = delta_{ij} on the lower pattern,
///   (A U)_{ij} = delta_{ij} on the upper pattern,
///
/// the diagonal d = diag(L A U), and the scaling d^{-1/2} that forms the
/// split preconditioner pair G1 = D^{-1/2} L and G2 = U D^{-1/2}.
///
/// For valid patterns both factors are entrywise nonnegative with positive
/// diagonals, and every d_i is positive.
struct FsaiPreconditioner {
    SparseMatrix L;
    SparseMatrix U;
    Vector d;
    Vector g_scale;  // d_i^{-1/2}

    int n() const { return L.n(); }
};

/// Lower triangular factor on pattern S_L: row i solves
/// (A[J,J])^T l = e_p with J the row support and p the position of i in J.
/// Rows are independent and may be computed concurrently; the result is
/// identical for any thread count.
SparseMatrix build_lower_factor(const SparseMatrix& A, const TriangularPattern& S_L,
                                int num_threads = 0);

/// Upper triangular factor on pattern S_U: column j solves
/// A[K,K] u = e_p with K the column support and p the position of j in K.
SparseMatrix build_upper_factor(const SparseMatrix& A, const TriangularPattern& S_U,
                                int num_threads = 0);

FsaiPreconditioner build_preconditioner(const SparseMatrix& A, const TriangularPattern& S_L,
                                        const TriangularPattern& S_U, int num_threads = 0);

/// Dense L*A*U for property checking; desk-scale only.
DenseMatrix preconditioned_matrix_dense(const FsaiPreconditioner& P, const SparseMatrix& A);

/// G1 x = D^{-1/2} (L x).
Vector apply_left(const FsaiPreconditioner& P, const Vector& x);

/// G2 x = U (D^{-1/2} x).
Vector apply_right(const FsaiPreconditioner& P, const Vector& x);

/// Factored (1,2)-inverse of a singular irreducible M-matrix built from the
/// complete triangular patterns: U * D^- * L with
/// D^- = diag(1/d_0, ..., 1/d_{n-2}, 0). The product L*A*U is diagonal
/// except for one trailing coupling pair b = (L A U)_{j, n-1} and
/// c = (L A U)_{n-1, j}, where j is the excluded column, and satisfies
/// d_j * d_{n-1} = c * b.
struct GeneralizedInverse {
    SparseMatrix L;
    SparseMatrix U;
    Vector d;        // diag(L A U), all positive
    Vector d_minus;  // 1/d_i for i < n-1, final entry exactly 0
    double arrow_b;
    double arrow_c;
    int excluded_col;

    int n() const { return L.n(); }

    /// U * diag(d_minus) * L.
    SparseMatrix realize_sparse() const;
    DenseMatrix realize_dense() const;
};

/// Builds the complete-pattern (1,2)-inverse. excluded_col = -1 selects the
/// default trailing exclusion n-2; any other column < n-1 may be excluded
/// instead.
GeneralizedInverse build_one_two_inverse(const SparseMatrix& A, int excluded_col = -1,
                                         int num_threads = 0);

}  // namespace mfsai

#endif
