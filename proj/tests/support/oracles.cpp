#include "support/oracles.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <numeric>
#include <random>

#include "mfsai/rng.hpp"

namespace mfsai::testing {

Eigen::MatrixXd to_eigen(const SparseMatrix& A) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(A.n(), A.n());
    for (int i = 0; i < A.n(); ++i)
        for (int k = A.row_starts()[i]; k < A.row_starts()[i + 1]; ++k)
            M(i, A.col_indices()[k]) = A.values()[k];
    return M;
}

Eigen::MatrixXd to_eigen(const DenseMatrix& M) {
    Eigen::MatrixXd E(M.rows, M.cols);
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c) E(r, c) = M(r, c);
    return E;
}

DenseMatrix from_eigen(const Eigen::MatrixXd& M) {
    DenseMatrix D(static_cast<int>(M.rows()), static_cast<int>(M.cols()));
    for (int r = 0; r < D.rows; ++r)
        for (int c = 0; c < D.cols; ++c) D(r, c) = M(r, c);
    return D;
}

SparseMatrix sparse_from_eigen(const Eigen::MatrixXd& M, double drop_tol) {
    std::vector<Triplet> trips;
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c)
            if (std::abs(M(r, c)) > drop_tol) trips.push_back({r, c, M(r, c)});
    return SparseMatrix::from_triplets(trips, static_cast<int>(M.rows()));
}

Vector oracle_null_vector(const SparseMatrix& A) {
    const Eigen::MatrixXd M = to_eigen(A);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
    Eigen::VectorXd v = svd.matrixV().col(M.cols() - 1);
    if (v.sum() < 0.0) v = -v;
    v /= v.lpNorm<1>();
    Vector out(v.size());
    for (int i = 0; i < v.size(); ++i) out[i] = v(i);
    return out;
}

Eigen::MatrixXd oracle_pseudoinverse(const SparseMatrix& A, double rank_tol) {
    const Eigen::MatrixXd M = to_eigen(A);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd& s = svd.singularValues();
    const double cutoff = rank_tol * s(0);
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
    for (int i = 0; i < s.size(); ++i)
        if (s(i) > cutoff) inv(i) = 1.0 / s(i);
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

Vector oracle_solve(const DenseMatrix& M, const Vector& rhs) {
    Eigen::VectorXd b(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) b(static_cast<int>(i)) = rhs[i];
    const Eigen::VectorXd x = to_eigen(M).fullPivLu().solve(b);
    Vector out(x.size());
    for (int i = 0; i < x.size(); ++i) out[i] = x(i);
    return out;
}

Eigen::MatrixXd oracle_slice(const SparseMatrix& A, const std::vector<int>& idx) {
    const Eigen::MatrixXd M = to_eigen(A);
    const int m = static_cast<int>(idx.size());
    Eigen::MatrixXd S(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) S(r, c) = M(idx[r], idx[c]);
    return S;
}

namespace {

std::vector<char> reachable(const std::vector<std::vector<int>>& adj, int start) {
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> queue{start};
    seen[start] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (int w : adj[queue[q]])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    return seen;
}

}  // namespace

bool oracle_strongly_connected(const SparseMatrix& A) {
    const int n = A.n();
    std::vector<std::vector<int>> fwd(n), rev(n);
    for (int i = 0; i < n; ++i)
        for (int k = A.row_starts()[i]; k < A.row_starts()[i + 1]; ++k) {
            const int j = A.col_indices()[k];
            if (j == i) continue;
            fwd[i].push_back(j);
            rev[j].push_back(i);
        }
    for (char s : reachable(fwd, 0))
        if (!s) return false;
    for (char s : reachable(rev, 0))
        if (!s) return false;
    return true;
}

SparseMatrix permute_symmetric(const SparseMatrix& A, const std::vector<int>& perm) {
    std::vector<Triplet> trips;
    trips.reserve(A.nnz());
    for (const Triplet& t : to_triplets(A)) trips.push_back({perm[t.row], perm[t.col], t.value});
    return SparseMatrix::from_triplets(trips, A.n());
}

std::vector<int> random_permutation(int n, std::uint64_t seed) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 gen(seed);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(detail::uniform01(gen) * (i + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

double max_abs_diff(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    return (A - B).cwiseAbs().maxCoeff();
}

}  // namespace mfsai::testing
