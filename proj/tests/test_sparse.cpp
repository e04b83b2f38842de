#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mfsai/rng.hpp"
#include "mfsai/sparse.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace mfsai;
namespace mt = mfsai::testing;

TEST_CASE("from_triplets builds the path Laplacian") {
    const SparseMatrix A = mt::path2_laplacian();
    CHECK(A.n() == 2);
    CHECK(A.nnz() == 4);
    CHECK(A.at(0, 0) == 3.0);
    CHECK(A.at(0, 1) == -3.0);
    CHECK(A.at(1, 0) == -3.0);
    CHECK(A.at(1, 1) == 3.0);
}

TEST_CASE("from_triplets with no entries gives an all-zero matrix") {
    const SparseMatrix A = SparseMatrix::from_triplets({}, 3);
    CHECK(A.n() == 3);
    CHECK(A.nnz() == 0);
    for (int i = 0; i < 4; ++i) CHECK(A.row_starts()[i] == 0);
}

TEST_CASE("from_triplets sums duplicates") {
    const SparseMatrix A = SparseMatrix::from_triplets({{0, 0, 1.0}, {0, 0, 1.0}}, 1);
    CHECK(A.nnz() == 1);
    CHECK(A.at(0, 0) == 2.0);
}

TEST_CASE("from_triplets drops entries that cancel to zero") {
    const SparseMatrix A = SparseMatrix::from_triplets({{0, 1, 2.5}, {0, 1, -2.5}, {1, 0, 1.0}}, 2);
    CHECK(A.nnz() == 1);
    CHECK(A.at(0, 1) == 0.0);
}

TEST_CASE("from_triplets rejects out-of-range indices and bad orders") {
    CHECK_THROWS_AS(SparseMatrix::from_triplets({{0, 2, 1.0}}, 2), IndexOutOfRange);
    CHECK_THROWS_AS(SparseMatrix::from_triplets({{-1, 0, 1.0}}, 2), IndexOutOfRange);
    CHECK_THROWS_AS(SparseMatrix::from_triplets({}, 0), InvalidParam);
}

TEST_CASE("triplet round trip is exact") {
    for (const auto& [name, A] : mt::make_corpus(6, 2, 40, 99)) {
        CAPTURE(name);
        const SparseMatrix B = SparseMatrix::from_triplets(to_triplets(A), A.n());
        REQUIRE(B.nnz() == A.nnz());
        CHECK(B.row_starts() == A.row_starts());
        CHECK(B.col_indices() == A.col_indices());
        CHECK(B.values() == A.values());
    }
}

TEST_CASE("spmv annihilates the kernel of the path Laplacian") {
    const Vector y = spmv(mt::path2_laplacian(), {1.0, 1.0});
    CHECK(y[0] == 0.0);
    CHECK(y[1] == 0.0);
}

TEST_CASE("spmv on the identity is the identity") {
    const Vector y = spmv(SparseMatrix::identity(3), {1.0, 2.0, 3.0});
    CHECK(y == Vector{1.0, 2.0, 3.0});
}

TEST_CASE("spmv annihilates the known stationary vector of a generator matrix") {
    // Birth-death chain of order 6: stationary vector (1, r, ..., r^5).
    const double r = 1.7;
    const SparseMatrix A = SparseMatrix::from_triplets(
        [&] {
            std::vector<Triplet> t;
            for (int i = 0; i < 6; ++i) {
                double diag = 0.0;
                if (i + 1 < 6) {
                    t.push_back({i + 1, i, -r});
                    diag += r;
                }
                if (i > 0) {
                    t.push_back({i - 1, i, -1.0});
                    diag += 1.0;
                }
                t.push_back({i, i, diag});
            }
            return t;
        }(),
        6);
    Vector pi(6);
    for (int i = 0; i < 6; ++i) pi[i] = std::pow(r, i);
    CHECK(inf_norm(spmv(A, pi)) <= 1e-12 * inf_norm(A) * inf_norm(pi));
}

TEST_CASE("spmv rejects mismatched lengths") {
    CHECK_THROWS_AS(spmv(SparseMatrix::identity(3), Vector{1.0, 2.0}), DimensionMismatch);
}

TEST_CASE("spmv is linear") {
    std::mt19937_64 gen(7);
    for (const auto& [name, A] : mt::make_corpus(5, 3, 30, 11)) {
        CAPTURE(name);
        const int n = A.n();
        Vector x(n), y(n);
        for (int i = 0; i < n; ++i) {
            x[i] = 2.0 * detail::uniform01(gen) - 1.0;
            y[i] = 2.0 * detail::uniform01(gen) - 1.0;
        }
        const double a = 2.0 * detail::uniform01(gen) - 1.0;
        const double b = 2.0 * detail::uniform01(gen) - 1.0;

        Vector combo(n);
        for (int i = 0; i < n; ++i) combo[i] = a * x[i] + b * y[i];
        const Vector lhs = spmv(A, combo);
        const Vector ax = spmv(A, x), ay = spmv(A, y);
        for (int i = 0; i < n; ++i)
            CHECK(lhs[i] == doctest::Approx(a * ax[i] + b * ay[i]).epsilon(0.0).scale(1.0).epsilon(1e-12));
    }
}

TEST_CASE("gather_principal_submatrix matches the 4-digit reference block") {
    const DenseMatrix M = gather_principal_submatrix(mt::dense3_exact(), {0, 1});
    CHECK(M(0, 0) == doctest::Approx(0.6667).epsilon(0).scale(0).epsilon(5e-4));
    CHECK(M(0, 1) == doctest::Approx(-0.3333).scale(0).epsilon(5e-4));
    CHECK(M(1, 0) == doctest::Approx(-0.25).scale(0).epsilon(5e-4));
    CHECK(M(1, 1) == doctest::Approx(0.5).scale(0).epsilon(5e-4));
}

TEST_CASE("gather_principal_submatrix singleton") {
    const DenseMatrix M = gather_principal_submatrix(mt::path2_laplacian(), {1});
    CHECK(M.rows == 1);
    CHECK(M(0, 0) == 3.0);
}

TEST_CASE("gather_principal_submatrix agrees with dense slicing") {
    std::mt19937_64 gen(3);
    for (const auto& [name, A] : mt::make_corpus(8, 5, 30, 21)) {
        CAPTURE(name);
        std::vector<int> idx;
        for (int i = 0; i < A.n(); ++i)
            if (detail::uniform01(gen) < 0.5) idx.push_back(i);
        if (idx.empty()) idx.push_back(0);
        const DenseMatrix M = gather_principal_submatrix(A, idx);
        CHECK(mt::max_abs_diff(mt::to_eigen(M), mt::oracle_slice(A, idx)) == 0.0);
    }
}

TEST_CASE("gather_principal_submatrix validates its index set") {
    const SparseMatrix A = mt::path2_laplacian();
    CHECK_THROWS_AS(gather_principal_submatrix(A, {0, 2}), IndexOutOfRange);
    CHECK_THROWS_AS(gather_principal_submatrix(A, {1, 0}), InvalidParam);
    CHECK_THROWS_AS(gather_principal_submatrix(A, {0, 0}), InvalidParam);
}

TEST_CASE("dense_solve reproduces a hand-checked local system") {
    // Transposed leading 2x2 block of the dense 3x3 example, 4-digit data.
    DenseMatrix M(2, 2);
    M(0, 0) = 0.6667;
    M(0, 1) = -0.25;
    M(1, 0) = -0.3333;
    M(1, 1) = 0.5;
    const Vector x = dense_solve(M, {0.0, 1.0});
    CHECK(x[0] == doctest::Approx(1.0).scale(0).epsilon(5e-4));
    CHECK(x[1] == doctest::Approx(2.6667).scale(0).epsilon(5e-4));
}

TEST_CASE("dense_solve on the identity") {
    DenseMatrix I(2, 2);
    I(0, 0) = I(1, 1) = 1.0;
    CHECK(dense_solve(I, {7.0, 9.0}) == Vector{7.0, 9.0});
}

TEST_CASE("dense_solve reports singular systems") {
    DenseMatrix M(2, 2);
    M(0, 0) = 3.0;
    M(0, 1) = -3.0;
    M(1, 0) = -3.0;
    M(1, 1) = 3.0;
    CHECK_THROWS_AS(dense_solve(M, {0.0, 1.0}), SingularLocalSystem);
}

TEST_CASE("gather plus dense_solve equals the dense oracle") {
    std::mt19937_64 gen(17);
    for (const auto& [name, A] : mt::make_corpus(8, 4, 30, 31)) {
        CAPTURE(name);
        std::vector<int> idx;
        for (int i = 0; i < A.n(); ++i)
            if (detail::uniform01(gen) < 0.4) idx.push_back(i);
        if (static_cast<int>(idx.size()) == A.n()) idx.pop_back();  // keep it principal of order < n
        if (idx.empty()) idx.push_back(0);

        Vector rhs(idx.size());
        for (double& v : rhs) v = detail::uniform01(gen);

        const DenseMatrix M = gather_principal_submatrix(A, idx);
        const Vector x = dense_solve(M, rhs);
        const Vector ref = mt::oracle_solve(mt::from_eigen(mt::oracle_slice(A, idx)), rhs);
        for (std::size_t i = 0; i < x.size(); ++i)
            CHECK(x[i] == doctest::Approx(ref[i]).scale(1.0).epsilon(1e-10));
    }
}

TEST_CASE("transpose and multiply agree with the dense oracle") {
    for (const auto& [name, A] : mt::make_corpus(5, 3, 25, 41)) {
        CAPTURE(name);
        const Eigen::MatrixXd E = mt::to_eigen(A);
        CHECK(mt::max_abs_diff(mt::to_eigen(to_dense(transpose(A))), E.transpose()) == 0.0);
        CHECK(mt::max_abs_diff(mt::to_eigen(to_dense(multiply(A, A))), E * E) <= 1e-12 * E.norm() * E.norm());
        CHECK(mt::max_abs_diff(mt::to_eigen(to_dense(add_scaled(2.0, A, -0.5, transpose(A)))),
                               2.0 * E - 0.5 * E.transpose()) == 0.0);
    }
}

TEST_CASE("scale_rows and scale_cols apply diagonal factors") {
    const SparseMatrix A = mt::dense3_exact();
    const Vector s{2.0, 0.0, -1.0};
    const SparseMatrix R = scale_rows(s, A);
    CHECK(R.at(0, 1) == 2.0 * A.at(0, 1));
    CHECK(R.at(1, 1) == 0.0);  // zero scale drops the row
    const SparseMatrix C = scale_cols(A, s);
    CHECK(C.at(1, 0) == 2.0 * A.at(1, 0));
    CHECK(C.at(0, 1) == 0.0);
    CHECK(C.at(2, 2) == -A.at(2, 2));
}

TEST_CASE("upper_triangular_solve inverts an upper factor") {
    const SparseMatrix U = SparseMatrix::from_triplets(
        {{0, 0, 2.0}, {0, 1, 1.0}, {0, 2, 0.5}, {1, 1, 4.0}, {2, 2, 1.0}}, 3);
    const Vector b{1.0, 2.0, 3.0};
    const Vector x = upper_triangular_solve(U, b);
    const Vector back = spmv(U, x);
    for (int i = 0; i < 3; ++i) CHECK(back[i] == doctest::Approx(b[i]).epsilon(1e-14));
}

TEST_CASE("norms") {
    const SparseMatrix A = mt::path2_laplacian();
    CHECK(inf_norm(A) == 6.0);
    CHECK(frobenius_norm(A) == doctest::Approx(6.0));
    CHECK(inf_norm(SparseMatrix::from_triplets({}, 2)) == 0.0);
}
