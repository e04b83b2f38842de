#include "mfsai/fsai.hpp"

#include <algorithm>
#include <cmath>

#include "mfsai/parallel.hpp"

namespace mfsai {

namespace {

// Structural requirements the construction depends on. Violations of the
// trailing-pair exclusion are deliberately not rejected here: such patterns
// produce a singular local system and surface as SingularLocalSystem from
// the solver, which is the honest runtime diagnosis.
void require_buildable(const SparseMatrix& A, const TriangularPattern& S, Orientation expected) {
    if (S.orientation() != expected)
        throw InvalidPattern(expected == Orientation::Lower
                                 ? "lower factor needs a Lower pattern"
                                 : "upper factor needs an Upper pattern");
    if (S.n() != A.n())
        throw DimensionMismatch("pattern order " + std::to_string(S.n()) +
                                " does not match matrix order " + std::to_string(A.n()));
    for (const PatternViolation& v : validate(S)) {
        if (v.rule == pattern_rule::kForbiddenPairPresent) continue;
        throw InvalidPattern(v.rule + " at (" + std::to_string(v.i) + ", " + std::to_string(v.j) +
                             ")");
    }
}

// Solves the local system for one key (row of L or column of U). The
// gathered source is A^T for the lower factor and A for the upper one, so
// both factors share this kernel.
Vector solve_local_system(const SparseMatrix& gather_source, const std::vector<int>& support,
                          int key) {
    DenseMatrix local = gather_principal_submatrix(gather_source, support);
    const auto pos = std::lower_bound(support.begin(), support.end(), key);
    Vector rhs(support.size(), 0.0);
    rhs[static_cast<std::size_t>(pos - support.begin())] = 1.0;
    return DenseLU(std::move(local)).solve(rhs);
}

SparseMatrix build_factor(const SparseMatrix& A, const TriangularPattern& S, Orientation wanted,
                          int num_threads) {
    require_buildable(A, S, wanted);
    const int n = A.n();
    const bool lower = wanted == Orientation::Lower;

    // Row solves use (A[J,J])^T l = e_p; gathering from the materialized
    // transpose turns that into the same row-gather the column solves use.
    const SparseMatrix gather_source = lower ? transpose(A) : A;

    std::vector<Vector> solutions(n);
    detail::parallel_for(n, num_threads, [&](int k) {
        try {
            solutions[k] = solve_local_system(gather_source, S.support(k), k);
        } catch (const SingularLocalSystem& e) {
            throw SingularLocalSystem(std::string(lower ? "row " : "column ") +
                                      std::to_string(k) + ": " + e.what());
        }
    });

    std::vector<Triplet> trips;
    trips.reserve(S.size());
    for (int k = 0; k < n; ++k) {
        const std::vector<int>& support = S.support(k);
        for (std::size_t p = 0; p < support.size(); ++p) {
            const double v = solutions[k][p];
            if (v == 0.0) continue;
            if (lower) {
                trips.push_back({k, support[p], v});
            } else {
                trips.push_back({support[p], k, v});
            }
        }
    }
    return SparseMatrix::from_triplets(trips, n);
}

}  // namespace

SparseMatrix build_lower_factor(const SparseMatrix& A, const TriangularPattern& S_L,
                                int num_threads) {
    return build_factor(A, S_L, Orientation::Lower, num_threads);
}

SparseMatrix build_upper_factor(const SparseMatrix& A, const TriangularPattern& S_U,
                                int num_threads) {
    return build_factor(A, S_U, Orientation::Upper, num_threads);
}

FsaiPreconditioner build_preconditioner(const SparseMatrix& A, const TriangularPattern& S_L,
                                        const TriangularPattern& S_U, int num_threads) {
    FsaiPreconditioner P;
    P.L = build_lower_factor(A, S_L, num_threads);
    P.U = build_upper_factor(A, S_U, num_threads);

    // d_i = (row i of L*A) . (column i of U), without the full triple
    // product.
    const SparseMatrix LA = multiply(P.L, A);
    const SparseMatrix Ut = transpose(P.U);
    const int n = A.n();
    P.d.resize(n);
    P.g_scale.resize(n);
    for (int i = 0; i < n; ++i) {
        const double di = row_dot(LA, i, Ut, i);
        if (!(di > 0.0))
            throw NonpositiveDiagonal(
                "diag(L*A*U)[" + std::to_string(i) + "] = " + std::to_string(di) +
                "; the matrix is not a singular irreducible M-matrix or the pattern is invalid");
        P.d[i] = di;
        P.g_scale[i] = 1.0 / std::sqrt(di);
    }
    return P;
}

DenseMatrix preconditioned_matrix_dense(const FsaiPreconditioner& P, const SparseMatrix& A) {
    return to_dense(multiply(multiply(P.L, A), P.U));
}

Vector apply_left(const FsaiPreconditioner& P, const Vector& x) {
    Vector y = spmv(P.L, x);
    for (int i = 0; i < P.n(); ++i) y[i] *= P.g_scale[i];
    return y;
}

Vector apply_right(const FsaiPreconditioner& P, const Vector& x) {
    if (x.size() != P.g_scale.size())
        throw DimensionMismatch("apply_right: vector length does not match order");
    Vector t(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) t[i] = P.g_scale[i] * x[i];
    return spmv(P.U, t);
}

SparseMatrix GeneralizedInverse::realize_sparse() const {
    return multiply(scale_cols(U, d_minus), L);
}

DenseMatrix GeneralizedInverse::realize_dense() const { return to_dense(realize_sparse()); }

GeneralizedInverse build_one_two_inverse(const SparseMatrix& A, int excluded_col,
                                         int num_threads) {
    const int n = A.n();
    if (n < 2) throw InvalidParam("the factored (1,2)-inverse needs order >= 2");

    const TriangularPattern S_L = pattern_complete(n, Orientation::Lower, excluded_col);
    const TriangularPattern S_U = pattern_complete(n, Orientation::Upper, excluded_col);
    const int j = S_L.excluded_pair().second;

    GeneralizedInverse G;
    G.excluded_col = j;
    G.L = build_lower_factor(A, S_L, num_threads);
    G.U = build_upper_factor(A, S_U, num_threads);

    const SparseMatrix IF = multiply(multiply(G.L, A), G.U);
    G.d.resize(n);
    double max_d_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double di = IF.at(i, i);
        if (!(di > 0.0))
            throw NonpositiveDiagonal("diag(L*A*U)[" + std::to_string(i) +
                                      "] = " + std::to_string(di));
        G.d[i] = di;
        max_d_sq = std::max(max_d_sq, di * di);
    }
    G.arrow_b = IF.at(j, n - 1);
    G.arrow_c = IF.at(n - 1, j);

    const double defect = std::abs(G.d[j] * G.d[n - 1] - G.arrow_c * G.arrow_b);
    if (defect > 1e-10 * max_d_sq)
        throw ArrowheadViolation("d[" + std::to_string(j) + "]*d[" + std::to_string(n - 1) +
                                 "] - c*b = " + std::to_string(defect) +
                                 " exceeds tolerance; construction is inconsistent");

    G.d_minus.assign(n, 0.0);
    for (int i = 0; i < n - 1; ++i) G.d_minus[i] = 1.0 / G.d[i];
    return G;
}

}  // namespace mfsai
