#include "mfsai/mmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace mfsai {

namespace {

// Orders beyond this would make the dense kernels behind classify and the
// null-vector iteration unreasonable.
constexpr int kDenseOrderLimit = 4096;

constexpr int kMaxInverseIterations = 100;

void check_dense_scale(int n, const char* op) {
    if (n > kDenseOrderLimit)
        throw InvalidParam(std::string(op) + ": order " + std::to_string(n) +
                           " exceeds the dense-kernel limit of " +
                           std::to_string(kDenseOrderLimit));
}

}  // namespace

const char* to_string(MVerdict v) {
    switch (v) {
        case MVerdict::NonsingularM: return "NonsingularM";
        case MVerdict::SingularIrreducibleM: return "SingularIrreducibleM";
        case MVerdict::NotM: return "NotM";
    }
    return "NotM";
}

bool is_z_matrix(const SparseMatrix& A) {
    for (int i = 0; i < A.n(); ++i)
        for (int k = A.row_starts()[i]; k < A.row_starts()[i + 1]; ++k)
            if (A.col_indices()[k] != i && A.values()[k] > 0.0) return false;
    return true;
}

// Iterative Tarjan. The graph is one strongly connected component exactly
// when the first completed component has size n.
bool is_irreducible(const SparseMatrix& A) {
    const int n = A.n();
    if (n == 1) return true;

    std::vector<int> index(n, -1);
    std::vector<int> lowlink(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> scc_stack;
    scc_stack.reserve(n);

    struct Frame {
        int v;
        int edge;
    };
    std::vector<Frame> call_stack;
    call_stack.push_back({0, A.row_starts()[0]});
    int next_index = 0;
    index[0] = lowlink[0] = next_index++;
    scc_stack.push_back(0);
    on_stack[0] = 1;

    while (!call_stack.empty()) {
        Frame& f = call_stack.back();
        const int v = f.v;
        if (f.edge < A.row_starts()[v + 1]) {
            const int w = A.col_indices()[f.edge++];
            if (w == v) continue;  // diagonal entries are not edges
            if (index[w] == -1) {
                index[w] = lowlink[w] = next_index++;
                scc_stack.push_back(w);
                on_stack[w] = 1;
                call_stack.push_back({w, A.row_starts()[w]});
            } else if (on_stack[w]) {
                lowlink[v] = std::min(lowlink[v], index[w]);
            }
        } else {
            call_stack.pop_back();
            if (!call_stack.empty())
                lowlink[call_stack.back().v] = std::min(lowlink[call_stack.back().v], lowlink[v]);
            if (lowlink[v] == index[v]) {
                // First completed component; it spans everything iff its
                // size is n.
                int size = 0;
                for (int s = static_cast<int>(scc_stack.size()) - 1; s >= 0; --s) {
                    ++size;
                    if (scc_stack[s] == v) break;
                }
                return size == n;
            }
        }
    }
    return false;
}

Vector positive_null_vector(const SparseMatrix& A, double tol, const Vector& start) {
    const int n = A.n();
    check_dense_scale(n, "positive_null_vector");
    const double norm_a = inf_norm(A);

    if (norm_a == 0.0) {
        // The zero matrix of order 1 is the only singular irreducible case.
        if (n == 1) return Vector{1.0};
        throw NotSingularIrreducible("zero matrix of order > 1 is reducible");
    }

    Vector v;
    if (start.empty()) {
        v.assign(n, 1.0);
    } else {
        if (static_cast<int>(start.size()) != n)
            throw DimensionMismatch("start vector length does not match order");
        v = start;
    }
    {
        const double s = one_norm(v);
        if (s == 0.0) throw InvalidParam("start vector must be nonzero");
        for (double& x : v) x /= s;
    }

    const double sigma = 1e-8 * norm_a;
    DenseMatrix shifted = to_dense(A);
    for (int i = 0; i < n; ++i) shifted(i, i) += sigma;

    std::optional<DenseLU> lu;
    try {
        lu.emplace(std::move(shifted));
    } catch (const SingularLocalSystem&) {
        // A + sigma*I is nonsingular for every M-matrix and sigma > 0, so a
        // singular shift already disproves the hypothesis.
        throw NotSingularIrreducible("shifted matrix A + sigma*I is singular");
    }

    const double target = tol * norm_a;
    for (int iter = 0; iter < kMaxInverseIterations; ++iter) {
        Vector w = lu->solve(v);
        double s = 0.0;
        for (double x : w) s += x;
        if (s < 0.0)
            for (double& x : w) x = -x;
        const double norm_w = one_norm(w);
        if (norm_w == 0.0) throw NotSingularIrreducible("inverse iteration collapsed to zero");
        for (double& x : w) x /= norm_w;

        const double residual = inf_norm(spmv(A, w));
        double step = 0.0;
        for (int i = 0; i < n; ++i) step = std::max(step, std::abs(w[i] - v[i]));
        v = std::move(w);

        if (residual <= target) {
            for (double x : v)
                if (!(x > 0.0))
                    throw NotSingularIrreducible(
                        "null vector has a nonpositive entry; matrix is not a singular "
                        "irreducible M-matrix");
            return v;
        }
        // Direction converged to an eigenvector with a nonzero eigenvalue;
        // more iterations cannot lower the residual.
        if (step < 1e-15 && iter >= 2) break;
    }
    throw NotSingularIrreducible("residual not below " + std::to_string(target) +
                                 " after inverse iteration");
}

MMatrixReport classify(const SparseMatrix& A, double tol) {
    check_dense_scale(A.n(), "classify");
    MMatrixReport report;
    report.is_z = is_z_matrix(A);
    report.is_irreducible = is_irreducible(A);
    if (!report.is_z) {
        report.verdict = MVerdict::NotM;
        return report;
    }

    if (report.is_irreducible) {
        try {
            report.null_vector = positive_null_vector(A, tol);
            report.has_positive_null_vector = true;
            report.verdict = MVerdict::SingularIrreducibleM;
            return report;
        } catch (const NotSingularIrreducible&) {
        }
    }

    // Nonsingular test: a Z-matrix is a nonsingular M-matrix exactly when
    // A^{-1} * ones is entrywise positive (it then witnesses x > 0 with
    // A x > 0).
    try {
        Vector x = DenseLU(to_dense(A)).solve(Vector(A.n(), 1.0));
        bool positive = true;
        for (double xi : x)
            if (!(xi > 0.0)) positive = false;
        report.verdict = positive ? MVerdict::NonsingularM : MVerdict::NotM;
    } catch (const SingularLocalSystem&) {
        report.verdict = MVerdict::NotM;
    }
    return report;
}

InverseAxiomReport penrose_residuals(const SparseMatrix& A, const SparseMatrix& X) {
    if (A.n() != X.n())
        throw DimensionMismatch("penrose_residuals: orders " + std::to_string(A.n()) + " and " +
                                std::to_string(X.n()) + " differ");
    const SparseMatrix AX = multiply(A, X);
    const SparseMatrix XA = multiply(X, A);

    InverseAxiomReport r;
    r.ax1 = frobenius_norm(add_scaled(1.0, multiply(AX, A), -1.0, A));
    r.ax2 = frobenius_norm(add_scaled(1.0, multiply(XA, X), -1.0, X));
    r.ax3 = frobenius_norm(add_scaled(1.0, transpose(AX), -1.0, AX));
    r.ax4 = frobenius_norm(add_scaled(1.0, transpose(XA), -1.0, XA));
    return r;
}

}  // namespace mfsai
