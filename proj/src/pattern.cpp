#include "mfsai/pattern.hpp"

#include <algorithm>

namespace mfsai {

namespace {

// Primary/secondary index of a pair under the given orientation. Lower
// patterns are keyed by row, Upper patterns by column.
int key_of(Orientation o, int i, int j) { return o == Orientation::Lower ? i : j; }
int member_of(Orientation o, int i, int j) { return o == Orientation::Lower ? j : i; }

std::pair<int, int> as_pair(Orientation o, int key, int member) {
    return o == Orientation::Lower ? std::make_pair(key, member) : std::make_pair(member, key);
}

void insert_sorted_unique(std::vector<int>& set, int value) {
    auto it = std::lower_bound(set.begin(), set.end(), value);
    if (it == set.end() || *it != value) set.insert(it, value);
}

void erase_if_present(std::vector<int>& set, int value) {
    auto it = std::lower_bound(set.begin(), set.end(), value);
    if (it != set.end() && *it == value) set.erase(it);
}

// Adds the mandatory diagonal and strips the excluded pair.
void repair(std::vector<std::vector<int>>& sets, std::pair<int, int> excluded, Orientation o) {
    const int n = static_cast<int>(sets.size());
    for (int k = 0; k < n; ++k) insert_sorted_unique(sets[k], k);
    if (excluded != TriangularPattern::kNoExclusion)
        erase_if_present(sets[key_of(o, excluded.first, excluded.second)],
                         member_of(o, excluded.first, excluded.second));
}

void check_order(int n) {
    if (n < 1) throw InvalidParam("pattern order must be >= 1, got " + std::to_string(n));
}

}  // namespace

std::pair<int, int> default_excluded_pair(int n, Orientation orientation) {
    if (n < 2) return TriangularPattern::kNoExclusion;
    return orientation == Orientation::Lower ? std::make_pair(n - 1, n - 2)
                                             : std::make_pair(n - 2, n - 1);
}

TriangularPattern::TriangularPattern(int n, Orientation orientation,
                                     std::pair<int, int> excluded_pair)
    : n_(n), orientation_(orientation), excluded_pair_(excluded_pair), sets_(n) {}

TriangularPattern TriangularPattern::from_pairs(int n, Orientation orientation,
                                                const std::vector<std::pair<int, int>>& pairs) {
    return from_pairs(n, orientation, pairs, default_excluded_pair(n, orientation));
}

TriangularPattern TriangularPattern::from_pairs(int n, Orientation orientation,
                                                const std::vector<std::pair<int, int>>& pairs,
                                                std::pair<int, int> excluded_pair) {
    check_order(n);
    TriangularPattern S(n, orientation, excluded_pair);
    for (const auto& [i, j] : pairs) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw IndexOutOfRange("pattern pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                  ") out of range for order " + std::to_string(n));
        S.sets_[key_of(orientation, i, j)].push_back(member_of(orientation, i, j));
    }
    for (std::vector<int>& set : S.sets_) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    return S;
}

const std::vector<int>& TriangularPattern::support(int k) const {
    if (k < 0 || k >= n_)
        throw IndexOutOfRange("pattern index " + std::to_string(k) + " out of range");
    return sets_[k];
}

bool TriangularPattern::contains(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) return false;
    const std::vector<int>& set = sets_[key_of(orientation_, i, j)];
    return std::binary_search(set.begin(), set.end(), member_of(orientation_, i, j));
}

std::vector<std::pair<int, int>> TriangularPattern::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size());
    for (int k = 0; k < n_; ++k)
        for (int m : sets_[k]) out.push_back(as_pair(orientation_, k, m));
    return out;
}

std::size_t TriangularPattern::size() const {
    std::size_t s = 0;
    for (const std::vector<int>& set : sets_) s += set.size();
    return s;
}

TriangularPattern TriangularPattern::transposed() const {
    const Orientation flipped =
        orientation_ == Orientation::Lower ? Orientation::Upper : Orientation::Lower;
    std::pair<int, int> excluded = excluded_pair_;
    if (excluded != kNoExclusion) excluded = {excluded.second, excluded.first};
    TriangularPattern S(n_, flipped, excluded);
    S.sets_ = sets_;  // per-key sets are identical under the mirrored reading
    return S;
}

TriangularPattern pattern_diagonal(int n, Orientation orientation) {
    check_order(n);
    TriangularPattern S(n, orientation, default_excluded_pair(n, orientation));
    for (int i = 0; i < n; ++i) S.sets_[i].push_back(i);
    return S;
}

TriangularPattern pattern_from_matrix(const SparseMatrix& A, Orientation orientation) {
    const int n = A.n();
    TriangularPattern S(n, orientation, default_excluded_pair(n, orientation));
    for (int i = 0; i < n; ++i) {
        for (int k = A.row_starts()[i]; k < A.row_starts()[i + 1]; ++k) {
            const int j = A.col_indices()[k];
            if (orientation == Orientation::Lower && j <= i) S.sets_[i].push_back(j);
            // Rows are visited in increasing i, so per-column sets stay sorted.
            if (orientation == Orientation::Upper && i <= j) S.sets_[j].push_back(i);
        }
    }
    repair(S.sets_, S.excluded_pair(), orientation);
    return S;
}

TriangularPattern pattern_banded(int n, int bandwidth, Orientation orientation) {
    check_order(n);
    if (bandwidth < 0) throw InvalidParam("bandwidth must be >= 0");
    TriangularPattern S(n, orientation, default_excluded_pair(n, orientation));
    for (int k = 0; k < n; ++k)
        for (int m = std::max(0, k - bandwidth); m <= k; ++m) S.sets_[k].push_back(m);
    repair(S.sets_, S.excluded_pair(), orientation);
    return S;
}

TriangularPattern pattern_complete(int n, Orientation orientation, int excluded_col) {
    check_order(n);
    if (excluded_col == n - 1)
        throw InvalidExclusion("the diagonal pair (" + std::to_string(n - 1) + ", " +
                               std::to_string(n - 1) + ") may not be excluded");
    std::pair<int, int> excluded = TriangularPattern::kNoExclusion;
    if (n >= 2) {
        if (excluded_col == -1) excluded_col = n - 2;
        if (excluded_col < 0 || excluded_col >= n)
            throw InvalidExclusion("excluded column " + std::to_string(excluded_col) +
                                   " out of range for order " + std::to_string(n));
        excluded = orientation == Orientation::Lower ? std::make_pair(n - 1, excluded_col)
                                                     : std::make_pair(excluded_col, n - 1);
    }
    TriangularPattern S(n, orientation, excluded);
    for (int k = 0; k < n; ++k)
        for (int m = 0; m <= k; ++m) S.sets_[k].push_back(m);
    repair(S.sets_, S.excluded_pair(), orientation);
    return S;
}

std::vector<PatternViolation> validate(const TriangularPattern& S) {
    std::vector<PatternViolation> out;
    const int n = S.n();
    const Orientation o = S.orientation();

    for (int k = 0; k < n; ++k) {
        const std::vector<int>& set = S.support(k);
        bool has_diag = false;
        int prev = -1;
        bool first = true;
        for (int m : set) {
            const auto [i, j] = as_pair(o, k, m);
            if (m < 0 || m >= n) {
                out.push_back({i, j, pattern_rule::kIndexOutOfRange});
                continue;
            }
            if (!first && m <= prev) out.push_back({i, j, pattern_rule::kUnsorted});
            prev = m;
            first = false;
            if (m > k) out.push_back({i, j, pattern_rule::kOutOfTriangle});
            if (m == k) has_diag = true;
        }
        if (!has_diag) out.push_back({as_pair(o, k, k).first, as_pair(o, k, k).second,
                                      pattern_rule::kDiagonalMissing});
    }

    const std::pair<int, int> excluded = S.excluded_pair();
    if (excluded != TriangularPattern::kNoExclusion && S.contains(excluded.first, excluded.second))
        out.push_back({excluded.first, excluded.second, pattern_rule::kForbiddenPairPresent});

    return out;
}

}  // namespace mfsai
