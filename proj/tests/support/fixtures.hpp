#ifndef MFSAI_TESTS_FIXTURES_HPP
#define MFSAI_TESTS_FIXTURES_HPP

#include "mfsai/sparse.hpp"

// Small hand-checkable matrices shared across the suites.
namespace mfsai::testing {

/// The weighted path Laplacian [[3, -3], [-3, 3]]: the smallest singular
/// irreducible M-matrix with an off-diagonal entry.
inline SparseMatrix path2_laplacian() {
    return SparseMatrix::from_triplets(
        {{0, 0, 3.0}, {0, 1, -3.0}, {1, 0, -3.0}, {1, 1, 3.0}}, 2);
}

/// Fully dense 3x3 singular irreducible M-matrix with exact rational
/// entries; its rows sum to zero, so (1,1,1) spans the kernel. Rounded to
/// four decimals its entries are
///   [[ 0.6667, -0.3333, -0.3333],
///    [-0.2500,  0.5000, -0.2500],
///    [-0.4000, -0.4000,  0.8000]].
inline SparseMatrix dense3_exact() {
    return SparseMatrix::from_triplets({{0, 0, 2.0 / 3.0},
                                        {0, 1, -1.0 / 3.0},
                                        {0, 2, -1.0 / 3.0},
                                        {1, 0, -0.25},
                                        {1, 1, 0.5},
                                        {1, 2, -0.25},
                                        {2, 0, -0.4},
                                        {2, 1, -0.4},
                                        {2, 2, 0.8}},
                                       3);
}

/// The same matrix truncated to the four printed decimals (not exactly
/// singular; useful only where 4-digit data is the point).
inline SparseMatrix dense3_printed() {
    return SparseMatrix::from_triplets({{0, 0, 0.6667},
                                        {0, 1, -0.3333},
                                        {0, 2, -0.3333},
                                        {1, 0, -0.25},
                                        {1, 1, 0.5},
                                        {1, 2, -0.25},
                                        {2, 0, -0.4},
                                        {2, 1, -0.4},
                                        {2, 2, 0.8}},
                                       3);
}

/// Factors and products of the complete-pattern construction on
/// dense3_exact(), as 4-digit reference values.
namespace dense3_reference {

inline DenseMatrix lower() {
    DenseMatrix L(3, 3);
    L(0, 0) = 1.5;
    L(1, 0) = 1.0;
    L(1, 1) = 2.6667;
    L(2, 0) = 1.0;
    L(2, 2) = 1.6667;
    return L;
}

inline DenseMatrix upper() {
    DenseMatrix U(3, 3);
    U(0, 0) = 1.5;
    U(0, 1) = 1.3333;
    U(0, 2) = 0.8333;
    U(1, 1) = 2.6667;
    U(2, 2) = 1.6667;
    return U;
}

inline Vector d_minus() { return {0.6667, 0.375, 0.0}; }

inline DenseMatrix a_hat() {
    DenseMatrix H(3, 3);
    H(0, 0) = 2.0;
    H(0, 1) = 1.3333;
    H(1, 0) = 1.0;
    H(1, 1) = 2.6667;
    return H;
}

inline DenseMatrix a_hat_times_a() {
    DenseMatrix M(3, 3);
    M(0, 0) = 1.0;
    M(0, 2) = -1.0;
    M(1, 1) = 1.0;
    M(1, 2) = -1.0;
    return M;
}

inline DenseMatrix a_times_a_hat() {
    DenseMatrix M(3, 3);
    M(0, 0) = 1.0;
    M(1, 1) = 1.0;
    M(2, 0) = -1.2;
    M(2, 1) = -1.6;
    return M;
}

}  // namespace dense3_reference

}  // namespace mfsai::testing

#endif
