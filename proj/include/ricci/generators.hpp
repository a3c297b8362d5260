#pragma once

#include "ricci/graph.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace ricci {

/// Labelled layout of the sharpness graph. Vertex numbering is fixed:
/// x = 0, y = 1, z_0..z_{l-3}, x_0..x_l, y_0..y_l, v last.
struct SharpnessGraph {
    Graph graph;
    std::size_t l = 0;
    Vertex x = 0;
    Vertex y = 1;
    std::vector<Vertex> z;
    std::vector<Vertex> xs;
    std::vector<Vertex> ys;
    Vertex v = 0;
};

/// 3l+3 vertices, minimum degree 2l = 2n/3 - 2, and an edge (x, y) of
/// Lin-Lu-Yau curvature -1/(2l).
inline SharpnessGraph generate_sharpness(std::size_t l) {
    if (l < 2) throw std::invalid_argument("sharpness construction needs l >= 2");
    SharpnessGraph s;
    s.l = l;
    Vertex next = 2;
    for (std::size_t i = 0; i + 3 <= l; ++i) s.z.push_back(next++);
    for (std::size_t i = 0; i <= l; ++i) s.xs.push_back(next++);
    for (std::size_t i = 0; i <= l; ++i) s.ys.push_back(next++);
    s.v = next++;

    std::vector<Edge> edges{{s.x, s.y}};
    for (Vertex zi : s.z) {
        edges.push_back({s.x, zi});
        edges.push_back({s.y, zi});
    }
    for (Vertex xi : s.xs) edges.push_back({s.x, xi});
    for (Vertex yi : s.ys) edges.push_back({s.y, yi});
    for (Vertex zi : s.z) {
        for (std::size_t j = 0; j <= l; ++j) {
            edges.push_back({zi, s.xs[j]});
            edges.push_back({zi, s.ys[j]});
        }
    }
    for (std::size_t i = 0; i <= l; ++i) {
        for (std::size_t j = i + 1; j <= l; ++j) {
            edges.push_back({s.xs[i], s.xs[j]});
            edges.push_back({s.ys[i], s.ys[j]});
        }
        edges.push_back({s.v, s.xs[i]});
        edges.push_back({s.v, s.ys[i]});
    }
    s.graph = Graph(next, edges);
    return s;
}

enum class StandardKind { cycle, complete, path, hypercube, petersen };

inline Graph generate_standard(StandardKind kind, std::size_t size) {
    std::vector<Edge> edges;
    switch (kind) {
    case StandardKind::cycle:
        if (size < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
        for (Vertex i = 0; i < size; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % size)});
        return Graph(size, edges);
    case StandardKind::complete:
        if (size < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
        for (Vertex i = 0; i < size; ++i)
            for (Vertex j = i + 1; j < size; ++j) edges.push_back({i, j});
        return Graph(size, edges);
    case StandardKind::path:
        if (size < 1) throw std::invalid_argument("path needs at least 1 vertex");
        for (Vertex i = 0; i + 1 < size; ++i) edges.push_back({i, i + 1});
        return Graph(size, edges);
    case StandardKind::hypercube: {
        if (size < 1 || size > 16) throw std::invalid_argument("hypercube dimension must be in 1..16");
        const Vertex n = Vertex{1} << size;
        for (Vertex a = 0; a < n; ++a)
            for (std::size_t bit = 0; bit < size; ++bit) {
                const Vertex b = a ^ (Vertex{1} << bit);
                if (a < b) edges.push_back({a, b});
            }
        return Graph(n, edges);
    }
    case StandardKind::petersen: {
        // outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9
        for (Vertex i = 0; i < 5; ++i) {
            edges.push_back({i, (i + 1) % 5});
            edges.push_back({i, i + 5});
            edges.push_back({i + 5, (i + 2) % 5 + 5});
        }
        return Graph(10, edges);
    }
    }
    throw std::invalid_argument("unknown graph kind");
}

inline Graph cycle_graph(std::size_t n) { return generate_standard(StandardKind::cycle, n); }
inline Graph complete_graph(std::size_t n) { return generate_standard(StandardKind::complete, n); }
inline Graph path_graph(std::size_t n) { return generate_standard(StandardKind::path, n); }
inline Graph hypercube_graph(std::size_t d) { return generate_standard(StandardKind::hypercube, d); }
inline Graph petersen_graph() { return generate_standard(StandardKind::petersen, 10); }

/// Uniform draw from [0, bound) by rejection, independent of the standard
/// library's distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r = 0;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

/// Erdos-Renyi draw with p = min(1, 1.1 (delta_min+1)/(n-1)), then every
/// vertex below delta_min is joined to uniformly chosen non-neighbours until
/// it reaches delta_min. Deterministic per seed.
inline Graph random_min_degree_graph(std::size_t n, std::size_t delta_min, std::uint64_t seed) {
    if (delta_min >= n) {
        throw std::invalid_argument("infeasible: minimum degree " + std::to_string(delta_min) +
                                    " on " + std::to_string(n) + " vertices");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::set<Vertex>> adj(n);
    if (n >= 2) {
        // p = 11 (delta_min + 1) / (10 (n - 1)), compared exactly on integers
        const std::uint64_t den = 10 * (n - 1);
        const std::uint64_t num = 11 * (delta_min + 1);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                if (uniform_below(rng, den) < num) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
    }
    for (Vertex u = 0; u < n; ++u) {
        while (adj[u].size() < delta_min) {
            std::vector<Vertex> candidates;
            for (Vertex w = 0; w < n; ++w) {
                if (w != u && !adj[u].contains(w)) candidates.push_back(w);
            }
            const Vertex w = candidates[uniform_below(rng, candidates.size())];
            adj[u].insert(w);
            adj[w].insert(u);
        }
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w : adj[u])
            if (u < w) edges.push_back({u, w});
    return Graph(n, edges);
}

} // namespace ricci
