#ifndef MFSAI_KRYLOV_HPP
#define MFSAI_KRYLOV_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "mfsai/fsai.hpp"
#include "mfsai/sparse.hpp"

namespace mfsai {

struct SolveConfig {
    double tol = 1e-11;   // absolute threshold on the iteration residual 2-norm
    int max_iters = 500;
    std::uint64_t seed = 0;  // drives the random start vector
};

struct SolveReport {
    Vector x;
    std::vector<double> residual_history;  // front() is the initial residual
    int iterations = 0;
    bool converged = false;
    std::string breakdown;  // empty when no scalar breakdown occurred
    // ||b - A x||_2 at exit. For preconditioned solves this is the residual
    // of the original system while residual_history tracks the
    // preconditioned one.
    double true_residual = std::numeric_limits<double>::quiet_NaN();
};

using LinearOperator = std::function<Vector(const Vector&)>;

/// Seeded start vector with entries uniform in (0, 1); bit-reproducible.
Vector random_start_vector(int n, std::uint64_t seed);

/// Bi-CGSTAB on a general linear operator. Terminates on tolerance,
/// max_iters, or scalar breakdown (|rho| or |omega| below 1e-30), which is
/// reported in the breakdown field rather than thrown.
SolveReport bicgstab(const LinearOperator& apply, const Vector& b, const Vector& x0,
                     const SolveConfig& cfg);

/// Runs Bi-CGSTAB on the split-preconditioned system
/// G1 A G2 y = G1 b and returns x = G2 y. The start iterate corresponds to
/// the seeded random x0, i.e. y0 = G2^{-1} x0. residual_history holds the
/// preconditioned residuals; true_residual holds ||b - A x||_2 at exit.
SolveReport solve_preconditioned(const SparseMatrix& A, const FsaiPreconditioner& P,
                                 const Vector& b, const SolveConfig& cfg);

/// Preconditioner pattern choice for the solver protocol and the CLI.
struct PreconChoice {
    enum class Kind { None, Diagonal, FromMatrix, Banded, Complete };
    Kind kind = Kind::None;
    int bandwidth = 5;   // only for Banded
    int excluded_col = -1;  // only for Complete; -1 = default

    static PreconChoice parse(const std::string& text);
    std::string to_string() const;
};

/// Lower/upper pattern pair for the choice; must not be called for None.
std::pair<TriangularPattern, TriangularPattern> build_pattern_pair(const SparseMatrix& A,
                                                                   const PreconChoice& choice);

/// Stationary-distribution protocol: solve A x = 0 from a seeded random
/// start with the chosen preconditioner, then normalize to a nonnegative
/// unit-1-norm vector. Throws NotConverged (with the report attached) when
/// the solve fails or the normalized residual check fails.
Vector stationary_vector(const SparseMatrix& A, const PreconChoice& choice,
                         const SolveConfig& cfg);

class NotConverged : public Error {
public:
    NotConverged(const std::string& m, SolveReport rep)
        : Error("NotConverged", m), report(std::move(rep)) {}
    SolveReport report;
};

}  // namespace mfsai

#endif
