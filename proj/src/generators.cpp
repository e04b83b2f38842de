#include "mfsai/generators.hpp"

#include <random>

#include "mfsai/rng.hpp"

namespace mfsai {

namespace {

// Accumulates continuous-time transitions and assembles A = -Q^T.
class GeneratorBuilder {
public:
    explicit GeneratorBuilder(int n) : n_(n), out_rate_(n, 0.0) {}

    void add_transition(int from, int to, double rate) {
        trips_.push_back({to, from, -rate});
        out_rate_[from] += rate;
    }

    SparseMatrix build() {
        for (int s = 0; s < n_; ++s) trips_.push_back({s, s, out_rate_[s]});
        return SparseMatrix::from_triplets(trips_, n_);
    }

private:
    int n_;
    Vector out_rate_;
    std::vector<Triplet> trips_;
};

double jittered(double base, std::mt19937_64& gen) {
    return base * (0.8 + 0.4 * detail::uniform01(gen));
}

}  // namespace

SparseMatrix gen_lattice2d(int nx, int ny, double drift, std::uint64_t seed) {
    if (nx < 2 || ny < 2) throw InvalidParam("gen_lattice2d: nx and ny must be >= 2");
    if (!(drift >= 0.0 && drift < 1.0)) throw InvalidParam("gen_lattice2d: drift must be in [0, 1)");

    const double arrival = 1.0 + drift;
    const double transfer = 1.0;
    const double departure = 1.0 - drift;

    std::mt19937_64 gen(seed);
    GeneratorBuilder builder(nx * ny);
    const auto state = [ny](int x, int y) { return x * ny + y; };

    for (int x = 0; x < nx; ++x) {
        for (int y = 0; y < ny; ++y) {
            if (x + 1 < nx) builder.add_transition(state(x, y), state(x + 1, y), jittered(arrival, gen));
            if (x > 0 && y + 1 < ny)
                builder.add_transition(state(x, y), state(x - 1, y + 1), jittered(transfer, gen));
            if (y > 0) builder.add_transition(state(x, y), state(x, y - 1), jittered(departure, gen));
        }
    }
    return builder.build();
}

SparseMatrix gen_birth_death(int n, double lambda, double mu) {
    if (n < 2) throw InvalidParam("gen_birth_death: n must be >= 2");
    if (!(lambda > 0.0) || !(mu > 0.0))
        throw InvalidParam("gen_birth_death: lambda and mu must be positive");

    GeneratorBuilder builder(n);
    for (int i = 0; i < n; ++i) {
        if (i + 1 < n) builder.add_transition(i, i + 1, lambda);
        if (i > 0) builder.add_transition(i, i - 1, mu);
    }
    return builder.build();
}

SparseMatrix gen_ncd(int num_blocks, int block_size, double coupling, std::uint64_t seed) {
    if (num_blocks < 2) throw InvalidParam("gen_ncd: num_blocks must be >= 2");
    if (block_size < 2) throw InvalidParam("gen_ncd: block_size must be >= 2");
    if (!(coupling > 0.0)) throw InvalidParam("gen_ncd: coupling must be positive");

    std::mt19937_64 gen(seed);
    GeneratorBuilder builder(num_blocks * block_size);

    for (int b = 0; b < num_blocks; ++b) {
        const int base = b * block_size;
        for (int p = 0; p < block_size; ++p)
            for (int q = 0; q < block_size; ++q)
                if (p != q)
                    builder.add_transition(base + p, base + q, 0.5 + detail::uniform01(gen));
        // Weak cycle through the blocks keeps the chain irreducible.
        const int next_base = ((b + 1) % num_blocks) * block_size;
        builder.add_transition(base + block_size - 1, next_base,
                               coupling * (0.5 + detail::uniform01(gen)));
    }
    return builder.build();
}

SparseMatrix gen_graph_laplacian(const std::vector<WeightedEdge>& edges, int n) {
    if (n < 1) throw InvalidParam("gen_graph_laplacian: n must be >= 1");
    std::vector<Triplet> trips;
    trips.reserve(edges.size() * 2 + n);
    Vector degree(n, 0.0);
    std::vector<std::vector<int>> adjacency(n);

    for (const WeightedEdge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw IndexOutOfRange("gen_graph_laplacian: edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ") out of range");
        if (e.u == e.v) throw InvalidParam("gen_graph_laplacian: self-loops are not allowed");
        if (!(e.weight > 0.0)) throw InvalidParam("gen_graph_laplacian: weights must be positive");
        trips.push_back({e.u, e.v, -e.weight});
        trips.push_back({e.v, e.u, -e.weight});
        degree[e.u] += e.weight;
        degree[e.v] += e.weight;
        adjacency[e.u].push_back(e.v);
        adjacency[e.v].push_back(e.u);
    }

    // Connectivity sweep.
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (int w : adjacency[queue[q]])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    if (static_cast<int>(queue.size()) != n)
        throw DisconnectedGraph("gen_graph_laplacian: graph is not connected");

    for (int i = 0; i < n; ++i)
        if (degree[i] != 0.0) trips.push_back({i, i, degree[i]});
    return SparseMatrix::from_triplets(trips, n);
}

std::vector<WeightedEdge> random_connected_edges(int n, int extra_edges, std::uint64_t seed) {
    if (n < 2) throw InvalidParam("random_connected_edges: n must be >= 2");
    if (extra_edges < 0) throw InvalidParam("random_connected_edges: extra_edges must be >= 0");

    std::mt19937_64 gen(seed);
    std::vector<WeightedEdge> edges;
    edges.reserve(n - 1 + extra_edges);
    for (int v = 1; v < n; ++v) {
        const int u = static_cast<int>(detail::uniform01(gen) * v);
        edges.push_back({u, v, 0.5 + detail::uniform01(gen)});
    }
    int added = 0;
    while (added < extra_edges) {
        const int u = static_cast<int>(detail::uniform01(gen) * n);
        const int v = static_cast<int>(detail::uniform01(gen) * n);
        if (u == v) continue;
        edges.push_back({u, v, 0.5 + detail::uniform01(gen)});
        ++added;
    }
    return edges;
}

}  // namespace mfsai
