#include "mfsai/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mfsai {

namespace {

std::string pair_str(int i, int j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

SparseMatrix SparseMatrix::from_triplets(const std::vector<Triplet>& entries, int n) {
    if (n < 1) throw InvalidParam("matrix order must be >= 1, got " + std::to_string(n));
    for (const Triplet& t : entries) {
        if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n)
            throw IndexOutOfRange("triplet " + pair_str(t.row, t.col) +
                                  " out of range for order " + std::to_string(n));
    }

    std::vector<Triplet> sorted = entries;
    std::sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseMatrix A;
    A.n_ = n;
    A.row_starts_.assign(n + 1, 0);
    A.col_indices_.reserve(sorted.size());
    A.values_.reserve(sorted.size());

    std::size_t p = 0;
    for (int i = 0; i < n; ++i) {
        A.row_starts_[i] = static_cast<int>(A.values_.size());
        while (p < sorted.size() && sorted[p].row == i) {
            const int c = sorted[p].col;
            double v = 0.0;
            while (p < sorted.size() && sorted[p].row == i && sorted[p].col == c) {
                v += sorted[p].value;
                ++p;
            }
            if (v != 0.0) {
                A.col_indices_.push_back(c);
                A.values_.push_back(v);
            }
        }
    }
    A.row_starts_[n] = static_cast<int>(A.values_.size());
    return A;
}

SparseMatrix SparseMatrix::identity(int n) {
    std::vector<Triplet> trips;
    trips.reserve(n);
    for (int i = 0; i < n; ++i) trips.push_back({i, i, 1.0});
    return from_triplets(trips, n);
}

double SparseMatrix::at(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw IndexOutOfRange("entry " + pair_str(i, j) + " out of range for order " +
                              std::to_string(n_));
    const auto begin = col_indices_.begin() + row_starts_[i];
    const auto end = col_indices_.begin() + row_starts_[i + 1];
    const auto it = std::lower_bound(begin, end, j);
    if (it == end || *it != j) return 0.0;
    return values_[static_cast<std::size_t>(it - col_indices_.begin())];
}

std::vector<Triplet> to_triplets(const SparseMatrix& A) {
    std::vector<Triplet> trips;
    trips.reserve(A.nnz());
    for (int i = 0; i < A.n(); ++i)
        for (int k = A.row_starts()[i]; k < A.row_starts()[i + 1]; ++k)
            trips.push_back({i, A.col_indices()[k], A.values()[k]});
    return trips;
}

DenseMatrix to_dense(const SparseMatrix& A) {
    DenseMatrix M(A.n(), A.n());
    for (int i = 0; i < A.n(); ++i)
        for (int k = A.row_starts()[i]; k < A.row_starts()[i + 1]; ++k)
            M(i, A.col_indices()[k]) = A.values()[k];
    return M;
}

Vector spmv(const SparseMatrix& A, const Vector& x) {
    if (static_cast<int>(x.size()) != A.n())
        throw DimensionMismatch("spmv: vector length " + std::to_string(x.size()) +
                                " does not match order " + std::to_string(A.n()));
    Vector y(A.n(), 0.0);
    for (int i = 0; i < A.n(); ++i) {
        double s = 0.0;
        for (int k = A.row_starts()[i]; k < A.row_starts()[i + 1]; ++k)
            s += A.values()[k] * x[A.col_indices()[k]];
        y[i] = s;
    }
    return y;
}

SparseMatrix transpose(const SparseMatrix& A) {
    const int n = A.n();
    std::vector<Triplet> trips;
    trips.reserve(A.nnz());
    for (int i = 0; i < n; ++i)
        for (int k = A.row_starts()[i]; k < A.row_starts()[i + 1]; ++k)
            trips.push_back({A.col_indices()[k], i, A.values()[k]});
    return SparseMatrix::from_triplets(trips, n);
}

SparseMatrix multiply(const SparseMatrix& A, const SparseMatrix& B) {
    if (A.n() != B.n())
        throw DimensionMismatch("multiply: orders " + std::to_string(A.n()) + " and " +
                                std::to_string(B.n()) + " differ");
    const int n = A.n();
    std::vector<int> marker(n, -1);
    Vector acc(n, 0.0);
    std::vector<int> cols_in_row;
    std::vector<Triplet> trips;

    for (int i = 0; i < n; ++i) {
        cols_in_row.clear();
        for (int ka = A.row_starts()[i]; ka < A.row_starts()[i + 1]; ++ka) {
            const int k = A.col_indices()[ka];
            const double a = A.values()[ka];
            for (int kb = B.row_starts()[k]; kb < B.row_starts()[k + 1]; ++kb) {
                const int j = B.col_indices()[kb];
                if (marker[j] != i) {
                    marker[j] = i;
                    acc[j] = 0.0;
                    cols_in_row.push_back(j);
                }
                acc[j] += a * B.values()[kb];
            }
        }
        std::sort(cols_in_row.begin(), cols_in_row.end());
        for (int j : cols_in_row)
            if (acc[j] != 0.0) trips.push_back({i, j, acc[j]});
    }
    return SparseMatrix::from_triplets(trips, n);
}

SparseMatrix add_scaled(double alpha, const SparseMatrix& A, double beta, const SparseMatrix& B) {
    if (A.n() != B.n())
        throw DimensionMismatch("add_scaled: orders " + std::to_string(A.n()) + " and " +
                                std::to_string(B.n()) + " differ");
    std::vector<Triplet> trips;
    trips.reserve(A.nnz() + B.nnz());
    for (int i = 0; i < A.n(); ++i) {
        int ka = A.row_starts()[i], kb = B.row_starts()[i];
        const int ea = A.row_starts()[i + 1], eb = B.row_starts()[i + 1];
        while (ka < ea || kb < eb) {
            const int ja = ka < ea ? A.col_indices()[ka] : A.n();
            const int jb = kb < eb ? B.col_indices()[kb] : B.n();
            if (ja < jb) {
                trips.push_back({i, ja, alpha * A.values()[ka++]});
            } else if (jb < ja) {
                trips.push_back({i, jb, beta * B.values()[kb++]});
            } else {
                trips.push_back({i, ja, alpha * A.values()[ka++] + beta * B.values()[kb++]});
            }
        }
    }
    return SparseMatrix::from_triplets(trips, A.n());
}

SparseMatrix scale_rows(const Vector& s, const SparseMatrix& A) {
    if (static_cast<int>(s.size()) != A.n())
        throw DimensionMismatch("scale_rows: scale length does not match order");
    std::vector<Triplet> trips;
    trips.reserve(A.nnz());
    for (int i = 0; i < A.n(); ++i)
        for (int k = A.row_starts()[i]; k < A.row_starts()[i + 1]; ++k)
            trips.push_back({i, A.col_indices()[k], s[i] * A.values()[k]});
    return SparseMatrix::from_triplets(trips, A.n());
}

SparseMatrix scale_cols(const SparseMatrix& A, const Vector& s) {
    if (static_cast<int>(s.size()) != A.n())
        throw DimensionMismatch("scale_cols: scale length does not match order");
    std::vector<Triplet> trips;
    trips.reserve(A.nnz());
    for (int i = 0; i < A.n(); ++i)
        for (int k = A.row_starts()[i]; k < A.row_starts()[i + 1]; ++k)
            trips.push_back({i, A.col_indices()[k], A.values()[k] * s[A.col_indices()[k]]});
    return SparseMatrix::from_triplets(trips, A.n());
}

double row_dot(const SparseMatrix& A, int i, const SparseMatrix& B, int j) {
    int ka = A.row_starts()[i], kb = B.row_starts()[j];
    const int ea = A.row_starts()[i + 1], eb = B.row_starts()[j + 1];
    double s = 0.0;
    while (ka < ea && kb < eb) {
        const int ca = A.col_indices()[ka], cb = B.col_indices()[kb];
        if (ca < cb) {
            ++ka;
        } else if (cb < ca) {
            ++kb;
        } else {
            s += A.values()[ka++] * B.values()[kb++];
        }
    }
    return s;
}

Vector upper_triangular_solve(const SparseMatrix& U, const Vector& b) {
    const int n = U.n();
    if (static_cast<int>(b.size()) != n)
        throw DimensionMismatch("triangular solve: vector length does not match order");
    Vector x(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        double diag = 0.0;
        for (int k = U.row_starts()[i]; k < U.row_starts()[i + 1]; ++k) {
            const int j = U.col_indices()[k];
            if (j == i) {
                diag = U.values()[k];
            } else if (j > i) {
                s -= U.values()[k] * x[j];
            } else {
                throw InvalidParam("triangular solve: matrix has an entry below the diagonal");
            }
        }
        if (diag == 0.0)
            throw SingularLocalSystem("triangular solve: zero diagonal in row " + std::to_string(i));
        x[i] = s / diag;
    }
    return x;
}

DenseMatrix gather_principal_submatrix(const SparseMatrix& A, const std::vector<int>& idx) {
    const int m = static_cast<int>(idx.size());
    for (int r = 0; r < m; ++r) {
        if (idx[r] < 0 || idx[r] >= A.n())
            throw IndexOutOfRange("gather: index " + std::to_string(idx[r]) +
                                  " out of range for order " + std::to_string(A.n()));
        if (r > 0 && idx[r] <= idx[r - 1])
            throw InvalidParam("gather: index set must be strictly increasing");
    }
    DenseMatrix M(m, m);
    for (int r = 0; r < m; ++r) {
        const int i = idx[r];
        int k = A.row_starts()[i];
        const int ke = A.row_starts()[i + 1];
        int s = 0;
        while (k < ke && s < m) {
            const int c = A.col_indices()[k];
            if (c < idx[s]) {
                ++k;
            } else if (c > idx[s]) {
                ++s;
            } else {
                M(r, s) = A.values()[k];
                ++k;
                ++s;
            }
        }
    }
    return M;
}

double inf_norm(const SparseMatrix& A) {
    double m = 0.0;
    for (int i = 0; i < A.n(); ++i) {
        double s = 0.0;
        for (int k = A.row_starts()[i]; k < A.row_starts()[i + 1]; ++k)
            s += std::abs(A.values()[k]);
        m = std::max(m, s);
    }
    return m;
}

double frobenius_norm(const SparseMatrix& A) {
    double s = 0.0;
    for (double v : A.values()) s += v * v;
    return std::sqrt(s);
}

double dot(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double two_norm(const Vector& v) { return std::sqrt(dot(v, v)); }

double one_norm(const Vector& v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

double inf_norm(const Vector& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

DenseLU::DenseLU(DenseMatrix M) : lu_(std::move(M)) {
    if (lu_.rows != lu_.cols)
        throw InvalidParam("DenseLU: matrix is not square");
    const int m = lu_.rows;
    piv_.resize(m);

    double max_abs = 0.0;
    for (double v : lu_.data) max_abs = std::max(max_abs, std::abs(v));
    const double pivot_floor = 1e-14 * max_abs;

    for (int k = 0; k < m; ++k) {
        int pr = k;
        double pv = std::abs(lu_(k, k));
        for (int r = k + 1; r < m; ++r) {
            const double v = std::abs(lu_(r, k));
            if (v > pv) {
                pv = v;
                pr = r;
            }
        }
        if (pv <= pivot_floor)
            throw SingularLocalSystem("pivot " + std::to_string(pv) + " at step " +
                                      std::to_string(k) + " of order-" + std::to_string(m) +
                                      " system");
        piv_[k] = pr;
        if (pr != k)
            for (int c = 0; c < m; ++c) std::swap(lu_(k, c), lu_(pr, c));
        for (int r = k + 1; r < m; ++r) {
            const double f = lu_(r, k) / lu_(k, k);
            lu_(r, k) = f;
            for (int c = k + 1; c < m; ++c) lu_(r, c) -= f * lu_(k, c);
        }
    }
}

Vector DenseLU::solve(const Vector& rhs) const {
    const int m = lu_.rows;
    if (static_cast<int>(rhs.size()) != m)
        throw DimensionMismatch("DenseLU::solve: rhs length does not match order");
    Vector x = rhs;
    for (int k = 0; k < m; ++k) {
        if (piv_[k] != k) std::swap(x[k], x[piv_[k]]);
        for (int r = k + 1; r < m; ++r) x[r] -= lu_(r, k) * x[k];
    }
    for (int k = m - 1; k >= 0; --k) {
        for (int c = k + 1; c < m; ++c) x[k] -= lu_(k, c) * x[c];
        x[k] /= lu_(k, k);
    }
    return x;
}

Vector dense_solve(const DenseMatrix& M, const Vector& rhs) { return DenseLU(M).solve(rhs); }

DenseMatrix transposed(const DenseMatrix& M) {
    DenseMatrix T(M.cols, M.rows);
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c) T(c, r) = M(r, c);
    return T;
}

}  // namespace mfsai
