#ifndef MFSAI_GENERATORS_HPP
#define MFSAI_GENERATORS_HPP

#include <cstdint>
#include <tuple>

#include "mfsai/sparse.hpp"

namespace mfsai {

/// Desk-scale singular irreducible M-matrix families. Every generator
/// returns A = -Q^T for a continuous-time Markov generator Q (or a graph
/// Laplacian), so the stationary distribution is the entrywise positive
/// vector with A x = 0 and the columns of A sum to zero.

/// Two-dimensional Markov chain: a two-station tandem network on an
/// nx-by-ny occupancy grid. State (x, y) moves to (x+1, y) at the arrival
/// rate, to (x-1, y+1) at the transfer rate, and to (x, y-1) at the
/// departure rate. drift in [0, 1) biases arrivals against departures and
/// the seed jitters every rate by up to +/-20%. nx = ny = 11 gives
/// n = 121 with 441 stored entries.
SparseMatrix gen_lattice2d(int nx, int ny, double drift, std::uint64_t seed);

/// Birth-death chain on n states with constant birth rate lambda and death
/// rate mu; the stationary vector is proportional to (1, rho, rho^2, ...)
/// with rho = lambda/mu.
SparseMatrix gen_birth_death(int n, double lambda, double mu);

/// Nearly completely decomposable chain: dense random rates inside each
/// block, weak cross-block rates of magnitude `coupling` along a cycle
/// through the blocks (which enforces irreducibility).
SparseMatrix gen_ncd(int num_blocks, int block_size, double coupling, std::uint64_t seed);

struct WeightedEdge {
    int u;
    int v;
    double weight;
};

/// Graph Laplacian L = D - W of a weighted undirected graph; the graph must
/// be connected and all weights positive.
SparseMatrix gen_graph_laplacian(const std::vector<WeightedEdge>& edges, int n);

/// Random connected weighted graph (a random spanning tree plus extra
/// edges); convenience input for gen_graph_laplacian.
std::vector<WeightedEdge> random_connected_edges(int n, int extra_edges, std::uint64_t seed);

}  // namespace mfsai

#endif
