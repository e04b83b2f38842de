#ifndef MFSAI_ERRORS_HPP
#define MFSAI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mfsai {

/// Base class of all library errors. `kind()` is a stable machine-readable
/// tag; the CLI serializes it into its error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& m) : Error("IndexOutOfRange", m) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& m) : Error("DimensionMismatch", m) {}
};

class InvalidParam : public Error {
public:
    explicit InvalidParam(const std::string& m) : Error("InvalidParam", m) {}
};

/// A gathered local system is numerically singular. For patterns that keep
/// the mandatory exclusions this cannot happen on a singular irreducible
/// M-matrix, so this error is the runtime detector for invalid patterns.
class SingularLocalSystem : public Error {
public:
    explicit SingularLocalSystem(const std::string& m) : Error("SingularLocalSystem", m) {}
};

class InvalidPattern : public Error {
public:
    explicit InvalidPattern(const std::string& m) : Error("InvalidPattern", m) {}
};

class InvalidExclusion : public Error {
public:
    explicit InvalidExclusion(const std::string& m) : Error("InvalidExclusion", m) {}
};

/// diag(L*A*U) acquired a nonpositive entry. The diagonal is provably
/// positive for singular irreducible M-matrices, so this signals an invalid
/// input or an implementation fault, never an expected runtime condition.
class NonpositiveDiagonal : public Error {
public:
    explicit NonpositiveDiagonal(const std::string& m) : Error("NonpositiveDiagonal", m) {}
};

/// The trailing 2x2 coupling of the complete-pattern product L*A*U failed
/// the determinant identity d_j * d_n = c * b.
class ArrowheadViolation : public Error {
public:
    explicit ArrowheadViolation(const std::string& m) : Error("ArrowheadViolation", m) {}
};

class NotSingularIrreducible : public Error {
public:
    explicit NotSingularIrreducible(const std::string& m) : Error("NotSingularIrreducible", m) {}
};

class DisconnectedGraph : public Error {
public:
    explicit DisconnectedGraph(const std::string& m) : Error("DisconnectedGraph", m) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& m) : Error("ParseError", m) {}
};

class UnsupportedFormat : public Error {
public:
    explicit UnsupportedFormat(const std::string& m) : Error("UnsupportedFormat", m) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& m) : Error("IoError", m) {}
};

}  // namespace mfsai

#endif
