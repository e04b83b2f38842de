#ifndef MFSAI_TESTS_CORPUS_HPP
#define MFSAI_TESTS_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mfsai/sparse.hpp"

namespace mfsai::testing {

struct NamedMatrix {
    std::string name;
    SparseMatrix A;
};

/// Random singular irreducible M-matrices drawn from all generator
/// families. Orders land in [min_order, max_order] (approximately for the
/// block/grid families). Parameters are kept mild — stationary-vector skew
/// and cross-block coupling are bounded — so the theorem tolerances are
/// meaningful rather than swamped by conditioning.
std::vector<NamedMatrix> make_corpus(int count, int min_order, int max_order, std::uint64_t seed);

}  // namespace mfsai::testing

#endif
