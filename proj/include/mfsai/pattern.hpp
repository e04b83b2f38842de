#ifndef MFSAI_PATTERN_HPP
#define MFSAI_PATTERN_HPP

#include <string>
#include <utility>
#include <vector>

#include "mfsai/sparse.hpp"

namespace mfsai {

enum class Orientation { Lower, Upper };

/// Prescribed triangular nonzero pattern for one approximate-inverse factor.
///
/// A Lower pattern stores, per row i, the sorted column indices j <= i that
/// may carry a value; an Upper pattern stores, per column j, the sorted row
/// indices i <= j. Every diagonal pair (i, i) is mandatory. For singular
/// matrices one trailing pair must stay excluded — by default (n-1, n-2)
/// for Lower and the mirrored (n-2, n-1) for Upper (zero-based) — so that
/// every local system gathered from the pattern is a principal submatrix of
/// order at most n-1 and therefore nonsingular.
class TriangularPattern {
public:
    /// No pair excluded (only meaningful for order 1).
    static constexpr std::pair<int, int> kNoExclusion{-1, -1};

    /// Builds a pattern from explicit (i, j) pairs. Pairs are sorted and
    /// de-duplicated but otherwise taken as given; run validate() to check
    /// the invariants. The excluded pair defaults to the standard trailing
    /// pair and may be overridden (including to kNoExclusion) by callers
    /// that deliberately construct non-conforming patterns.
    static TriangularPattern from_pairs(int n, Orientation orientation,
                                        const std::vector<std::pair<int, int>>& pairs);
    static TriangularPattern from_pairs(int n, Orientation orientation,
                                        const std::vector<std::pair<int, int>>& pairs,
                                        std::pair<int, int> excluded_pair);

    int n() const { return n_; }
    Orientation orientation() const { return orientation_; }

    /// The pair that must be absent, or kNoExclusion.
    std::pair<int, int> excluded_pair() const { return excluded_pair_; }

    /// Lower: sorted column indices of row k. Upper: sorted row indices of
    /// column k.
    const std::vector<int>& support(int k) const;

    bool contains(int i, int j) const;

    /// All (i, j) pairs, ordered by the primary index.
    std::vector<std::pair<int, int>> pairs() const;

    std::size_t size() const;

    /// The mirrored pattern: (i, j) becomes (j, i) and the orientation flips.
    TriangularPattern transposed() const;

private:
    friend TriangularPattern pattern_diagonal(int, Orientation);
    friend TriangularPattern pattern_from_matrix(const SparseMatrix&, Orientation);
    friend TriangularPattern pattern_banded(int, int, Orientation);
    friend TriangularPattern pattern_complete(int, Orientation, int);

    TriangularPattern(int n, Orientation orientation, std::pair<int, int> excluded_pair);

    int n_;
    Orientation orientation_;
    std::pair<int, int> excluded_pair_;
    std::vector<std::vector<int>> sets_;
};

/// The default trailing exclusion for the given orientation: (n-1, n-2) for
/// Lower, (n-2, n-1) for Upper, kNoExclusion when n == 1.
std::pair<int, int> default_excluded_pair(int n, Orientation orientation);

/// Only the diagonal pairs (i, i).
TriangularPattern pattern_diagonal(int n, Orientation orientation);

/// The structural lower (upper) triangle of A, with the diagonal forcibly
/// added and the default trailing pair forcibly removed.
TriangularPattern pattern_from_matrix(const SparseMatrix& A, Orientation orientation);

/// All pairs within the given bandwidth of the diagonal, minus the default
/// trailing pair.
TriangularPattern pattern_banded(int n, int bandwidth, Orientation orientation);

/// The full triangle minus the trailing pair (n-1, excluded_col) for Lower
/// (mirrored for Upper). excluded_col = -1 selects the default n-2. The
/// diagonal pair may not be excluded.
TriangularPattern pattern_complete(int n, Orientation orientation, int excluded_col = -1);

struct PatternViolation {
    int i;
    int j;
    std::string rule;
};

/// Stable rule identifiers used in PatternViolation::rule.
namespace pattern_rule {
inline constexpr const char* kDiagonalMissing = "diagonal missing";
inline constexpr const char* kForbiddenPairPresent = "forbidden pair present";
inline constexpr const char* kOutOfTriangle = "outside triangle";
inline constexpr const char* kIndexOutOfRange = "index out of range";
inline constexpr const char* kUnsorted = "unsorted or duplicate index";
}  // namespace pattern_rule

/// Empty iff all pattern invariants hold; each violation names the offending
/// pair and the rule it breaks.
std::vector<PatternViolation> validate(const TriangularPattern& S);

}  // namespace mfsai

#endif
