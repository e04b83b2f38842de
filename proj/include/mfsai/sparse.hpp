#ifndef MFSAI_SPARSE_HPP
#define MFSAI_SPARSE_HPP

#include <vector>

#include "mfsai/errors.hpp"

namespace mfsai {

using Vector = std::vector<double>;

struct Triplet {
    int row;
    int col;
    double value;
};

/// Immutable square sparse matrix in compressed-row form.
///
/// Invariants: column indices are strictly increasing within each row and no
/// numerically zero value is ever stored, so the stored structure is exactly
/// the structural nonzero pattern.
class SparseMatrix {
public:
    /// Empty 0x0 placeholder; every real matrix comes from a factory.
    SparseMatrix() = default;

    /// Builds an n-by-n matrix from (row, col, value) entries. Duplicates are
    /// summed; entries that sum to exactly zero are dropped.
    static SparseMatrix from_triplets(const std::vector<Triplet>& entries, int n);

    static SparseMatrix identity(int n);

    int n() const { return n_; }
    int nnz() const { return static_cast<int>(values_.size()); }

    const std::vector<int>& row_starts() const { return row_starts_; }
    const std::vector<int>& col_indices() const { return col_indices_; }
    const std::vector<double>& values() const { return values_; }

    /// Entry lookup; returns 0 for entries outside the stored pattern.
    double at(int i, int j) const;

private:
    int n_ = 0;
    std::vector<int> row_starts_;   // size n+1
    std::vector<int> col_indices_;  // size nnz, sorted per row
    std::vector<double> values_;    // size nnz
};

/// Dense row-major matrix; carrier for gathered principal submatrices and
/// small diagnostic products.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;  // row-major, rows*cols entries

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

std::vector<Triplet> to_triplets(const SparseMatrix& A);
DenseMatrix to_dense(const SparseMatrix& A);

/// y = A*x.
Vector spmv(const SparseMatrix& A, const Vector& x);

SparseMatrix transpose(const SparseMatrix& A);

/// C = A*B (Gustavson row-wise product).
SparseMatrix multiply(const SparseMatrix& A, const SparseMatrix& B);

/// C = alpha*A + beta*B.
SparseMatrix add_scaled(double alpha, const SparseMatrix& A, double beta, const SparseMatrix& B);

/// diag(s) * A and A * diag(s).
SparseMatrix scale_rows(const Vector& s, const SparseMatrix& A);
SparseMatrix scale_cols(const SparseMatrix& A, const Vector& s);

/// Dot product of row i of A with row j of B.
double row_dot(const SparseMatrix& A, int i, const SparseMatrix& B, int j);

/// Solves U*x = b for upper triangular U with nonzero diagonal.
Vector upper_triangular_solve(const SparseMatrix& U, const Vector& b);

/// Dense |idx| x |idx| copy of A[idx, idx]; idx must be strictly increasing.
/// Entries outside the stored pattern become zero.
DenseMatrix gather_principal_submatrix(const SparseMatrix& A, const std::vector<int>& idx);

double inf_norm(const SparseMatrix& A);  // max absolute row sum
double frobenius_norm(const SparseMatrix& A);

double dot(const Vector& a, const Vector& b);
double two_norm(const Vector& v);
double one_norm(const Vector& v);
double inf_norm(const Vector& v);

/// LU factorization with partial pivoting, reusable across right-hand sides.
///
/// A pivot of magnitude <= 1e-14 * max|M| is treated as singular and raises
/// SingularLocalSystem; near-singularity of a gathered system signals an
/// invalid pattern and must surface as an error, not as garbage values.
class DenseLU {
public:
    explicit DenseLU(DenseMatrix M);

    int order() const { return lu_.rows; }
    Vector solve(const Vector& rhs) const;

private:
    DenseMatrix lu_;
    std::vector<int> piv_;
};

/// One-shot solve of M*y = rhs via DenseLU.
Vector dense_solve(const DenseMatrix& M, const Vector& rhs);

DenseMatrix transposed(const DenseMatrix& M);

}  // namespace mfsai

#endif
