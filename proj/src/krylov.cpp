#include "mfsai/krylov.hpp"

#include <cmath>
#include <random>

#include "mfsai/rng.hpp"

namespace mfsai {

namespace {

constexpr double kBreakdownFloor = 1e-30;

void axpy(double a, const Vector& x, Vector& y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

}  // namespace

Vector random_start_vector(int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    Vector x(n);
    for (double& v : x) {
        double u = detail::uniform01(gen);
        while (u == 0.0) u = detail::uniform01(gen);  // entries in the open interval
        v = u;
    }
    return x;
}

SolveReport bicgstab(const LinearOperator& apply, const Vector& b, const Vector& x0,
                     const SolveConfig& cfg) {
    if (b.size() != x0.size())
        throw DimensionMismatch("bicgstab: rhs and start vector lengths differ");
    if (!(cfg.tol > 0.0)) throw InvalidParam("bicgstab: tol must be positive");
    if (cfg.max_iters < 1) throw InvalidParam("bicgstab: max_iters must be >= 1");

    const std::size_t n = b.size();
    SolveReport rep;
    rep.x = x0;

    Vector r = apply(rep.x);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
    const Vector r_hat = r;

    double res = two_norm(r);
    rep.residual_history.push_back(res);
    if (res <= cfg.tol) {
        rep.converged = true;
        rep.true_residual = res;
        return rep;
    }

    double rho = 1.0, alpha = 1.0, omega = 1.0;
    Vector p(n, 0.0), v(n, 0.0);

    for (int it = 1; it <= cfg.max_iters; ++it) {
        const double rho_new = dot(r_hat, r);
        if (std::abs(rho_new) < kBreakdownFloor) {
            rep.breakdown = "rho";
            break;
        }
        if (it == 1) {
            p = r;
        } else {
            const double beta = (rho_new / rho) * (alpha / omega);
            for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
        }
        rho = rho_new;

        v = apply(p);
        const double denom = dot(r_hat, v);
        if (std::abs(denom) < kBreakdownFloor) {
            rep.breakdown = "alpha_denominator";
            break;
        }
        alpha = rho / denom;

        for (std::size_t i = 0; i < n; ++i) r[i] -= alpha * v[i];  // r is now the half-step s
        axpy(alpha, p, rep.x);
        res = two_norm(r);
        if (res <= cfg.tol) {
            rep.residual_history.push_back(res);
            rep.iterations = it;
            rep.converged = true;
            break;
        }

        const Vector t = apply(r);
        const double tt = dot(t, t);
        omega = tt == 0.0 ? 0.0 : dot(t, r) / tt;
        if (std::abs(omega) < kBreakdownFloor) {
            rep.residual_history.push_back(res);
            rep.iterations = it;
            rep.breakdown = "omega";
            break;
        }
        axpy(omega, r, rep.x);
        axpy(-omega, t, r);

        res = two_norm(r);
        rep.residual_history.push_back(res);
        rep.iterations = it;
        if (res <= cfg.tol) {
            rep.converged = true;
            break;
        }
        if (!std::isfinite(res)) {
            rep.breakdown = "nonfinite";
            break;
        }
    }

    rep.true_residual = rep.residual_history.back();
    return rep;
}

SolveReport solve_preconditioned(const SparseMatrix& A, const FsaiPreconditioner& P,
                                 const Vector& b, const SolveConfig& cfg) {
    const int n = A.n();
    if (P.n() != n || static_cast<int>(b.size()) != n)
        throw DimensionMismatch("solve_preconditioned: operator, preconditioner, and rhs "
                                "dimensions do not agree");

    // Start from the seeded x0 of the protocol: y0 = G2^{-1} x0.
    const Vector x0 = random_start_vector(n, cfg.seed);
    Vector y0 = upper_triangular_solve(P.U, x0);
    for (int i = 0; i < n; ++i) y0[i] /= P.g_scale[i];

    const LinearOperator op = [&](const Vector& y) {
        return apply_left(P, spmv(A, apply_right(P, y)));
    };

    SolveReport rep = bicgstab(op, apply_left(P, b), y0, cfg);
    rep.x = apply_right(P, rep.x);

    Vector residual = spmv(A, rep.x);
    for (int i = 0; i < n; ++i) residual[i] = b[i] - residual[i];
    rep.true_residual = two_norm(residual);
    return rep;
}

PreconChoice PreconChoice::parse(const std::string& text) {
    PreconChoice c;
    if (text == "none") {
        c.kind = Kind::None;
    } else if (text == "diag") {
        c.kind = Kind::Diagonal;
    } else if (text == "matrix") {
        c.kind = Kind::FromMatrix;
    } else if (text == "complete") {
        c.kind = Kind::Complete;
    } else if (text.rfind("band:", 0) == 0) {
        c.kind = Kind::Banded;
        try {
            std::size_t used = 0;
            c.bandwidth = std::stoi(text.substr(5), &used);
            if (used != text.size() - 5) throw std::invalid_argument(text);
        } catch (const std::exception&) {
            throw InvalidParam("invalid bandwidth in pattern choice '" + text + "'");
        }
        if (c.bandwidth < 0) throw InvalidParam("bandwidth must be >= 0");
    } else {
        throw InvalidParam("unknown pattern choice '" + text +
                           "' (expected none, diag, matrix, band:<k>, or complete)");
    }
    return c;
}

std::string PreconChoice::to_string() const {
    switch (kind) {
        case Kind::None: return "none";
        case Kind::Diagonal: return "diag";
        case Kind::FromMatrix: return "matrix";
        case Kind::Banded: return "band:" + std::to_string(bandwidth);
        case Kind::Complete: return "complete";
    }
    return "none";
}

std::pair<TriangularPattern, TriangularPattern> build_pattern_pair(const SparseMatrix& A,
                                                                   const PreconChoice& choice) {
    const int n = A.n();
    switch (choice.kind) {
        case PreconChoice::Kind::Diagonal:
            return {pattern_diagonal(n, Orientation::Lower), pattern_diagonal(n, Orientation::Upper)};
        case PreconChoice::Kind::FromMatrix:
            return {pattern_from_matrix(A, Orientation::Lower),
                    pattern_from_matrix(A, Orientation::Upper)};
        case PreconChoice::Kind::Banded:
            return {pattern_banded(n, choice.bandwidth, Orientation::Lower),
                    pattern_banded(n, choice.bandwidth, Orientation::Upper)};
        case PreconChoice::Kind::Complete:
            return {pattern_complete(n, Orientation::Lower, choice.excluded_col),
                    pattern_complete(n, Orientation::Upper, choice.excluded_col)};
        case PreconChoice::Kind::None:
            break;
    }
    throw InvalidParam("pattern choice 'none' does not define a pattern pair");
}

Vector stationary_vector(const SparseMatrix& A, const PreconChoice& choice,
                         const SolveConfig& cfg) {
    const int n = A.n();
    const Vector zero(n, 0.0);

    SolveReport rep;
    if (choice.kind == PreconChoice::Kind::None) {
        const LinearOperator op = [&](const Vector& x) { return spmv(A, x); };
        rep = bicgstab(op, zero, random_start_vector(n, cfg.seed), cfg);
    } else {
        const auto [S_L, S_U] = build_pattern_pair(A, choice);
        const FsaiPreconditioner P = build_preconditioner(A, S_L, S_U);
        rep = solve_preconditioned(A, P, zero, cfg);
    }

    if (!rep.converged)
        throw NotConverged("solver did not converge within " + std::to_string(cfg.max_iters) +
                               " iterations" +
                               (rep.breakdown.empty() ? "" : " (breakdown: " + rep.breakdown + ")"),
                           std::move(rep));

    Vector v = rep.x;
    double sum = 0.0;
    for (double x : v) sum += x;
    if (sum < 0.0)
        for (double& x : v) x = -x;
    const double norm = one_norm(v);
    if (norm == 0.0) throw NotConverged("solver converged to the zero vector", std::move(rep));
    for (double& x : v) x /= norm;

    const double residual = inf_norm(spmv(A, v));
    if (residual > 1e-8 * inf_norm(A))
        throw NotConverged("normalized null-vector residual " + std::to_string(residual) +
                               " too large",
                           std::move(rep));
    return v;
}

}  // namespace mfsai
