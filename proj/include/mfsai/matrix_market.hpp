#ifndef MFSAI_MATRIX_MARKET_HPP
#define MFSAI_MATRIX_MARKET_HPP

#include <string>

#include "mfsai/sparse.hpp"

namespace mfsai {

/// Reads a square matrix from a Matrix Market coordinate file. Supported
/// headers: real or integer field, general or symmetric symmetry (symmetric
/// entries are mirrored). File indices are 1-based.
SparseMatrix read_matrix_market(const std::string& path);

/// Writes coordinate real general format with 17 significant digits, enough
/// for an exact binary round trip.
void write_matrix_market(const SparseMatrix& A, const std::string& path);

}  // namespace mfsai

#endif
