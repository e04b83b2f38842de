#include "mfsai/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mfsai {

namespace {

std::string lowercased(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

[[noreturn]] void parse_fail(const std::string& path, int line, const std::string& what) {
    throw ParseError(path + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

SparseMatrix read_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");

    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) parse_fail(path, 1, "empty file");
    ++line_no;
    std::istringstream banner(line);
    std::string magic, object, format, field, symmetry;
    banner >> magic >> object >> format >> field >> symmetry;
    if (lowercased(magic) != "%%matrixmarket") parse_fail(path, line_no, "missing MatrixMarket banner");
    if (lowercased(object) != "matrix") parse_fail(path, line_no, "unsupported object '" + object + "'");
    format = lowercased(format);
    field = lowercased(field);
    symmetry = lowercased(symmetry);
    if (format != "coordinate")
        throw UnsupportedFormat("'" + format + "' format is not supported (coordinate only)");
    if (field != "real" && field != "integer")
        throw UnsupportedFormat("'" + field + "' field is not supported (real or integer only)");
    if (symmetry != "general" && symmetry != "symmetric")
        throw UnsupportedFormat("'" + symmetry + "' symmetry is not supported");
    const bool symmetric = symmetry == "symmetric";

    int rows = 0, cols = 0;
    long declared_nnz = 0;
    for (;;) {
        if (!std::getline(in, line)) parse_fail(path, line_no + 1, "missing size line");
        ++line_no;
        if (line.empty() || line[0] == '%') continue;
        std::istringstream sizes(line);
        if (!(sizes >> rows >> cols >> declared_nnz)) parse_fail(path, line_no, "malformed size line");
        break;
    }
    if (rows != cols)
        throw UnsupportedFormat("only square matrices are supported, got " + std::to_string(rows) +
                                "x" + std::to_string(cols));
    if (rows < 1) parse_fail(path, line_no, "matrix order must be >= 1");
    if (declared_nnz < 0) parse_fail(path, line_no, "negative entry count");

    std::vector<Triplet> trips;
    trips.reserve(static_cast<std::size_t>(declared_nnz) * (symmetric ? 2 : 1));
    long seen = 0;
    while (seen < declared_nnz) {
        if (!std::getline(in, line))
            parse_fail(path, line_no + 1,
                       "expected " + std::to_string(declared_nnz) + " entries, got " +
                           std::to_string(seen));
        ++line_no;
        if (line.empty() || line[0] == '%') continue;
        std::istringstream entry(line);
        int i = 0, j = 0;
        double v = 0.0;
        if (!(entry >> i >> j >> v)) parse_fail(path, line_no, "malformed entry line");
        if (i < 1 || i > rows || j < 1 || j > cols)
            parse_fail(path, line_no, "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                          ") out of range");
        trips.push_back({i - 1, j - 1, v});
        if (symmetric && i != j) trips.push_back({j - 1, i - 1, v});
        ++seen;
    }
    return SparseMatrix::from_triplets(trips, rows);
}

void write_matrix_market(const SparseMatrix& A, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");

    out << "%%MatrixMarket matrix coordinate real general\n";
    out << A.n() << " " << A.n() << " " << A.nnz() << "\n";

    char buffer[64];
    for (int i = 0; i < A.n(); ++i) {
        for (int k = A.row_starts()[i]; k < A.row_starts()[i + 1]; ++k) {
            std::snprintf(buffer, sizeof buffer, "%d %d %.17g\n", i + 1,
                          A.col_indices()[k] + 1, A.values()[k]);
            out << buffer;
        }
    }
    if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace mfsai
