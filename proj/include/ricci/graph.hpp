#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ricci {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    /// Same edge with u < v.
    [[nodiscard]] Edge canonical() const { return u < v ? Edge{u, v} : Edge{v, u}; }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Hop distance, or Infinite for vertices in different components.
class Distance {
public:
    constexpr Distance() = default;
    constexpr explicit Distance(std::uint32_t hops) : hops_(hops) {}
    static constexpr Distance infinite() { return Distance{kInfinite, 0}; }

    [[nodiscard]] constexpr bool is_infinite() const { return hops_ == kInfinite; }
    [[nodiscard]] constexpr bool is_finite() const { return !is_infinite(); }
    [[nodiscard]] std::uint32_t value() const {
        if (is_infinite()) throw std::logic_error("value() of an infinite distance");
        return hops_;
    }
    [[nodiscard]] std::string str() const { return is_infinite() ? "inf" : std::to_string(hops_); }

    friend constexpr auto operator<=>(const Distance&, const Distance&) = default;

private:
    static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
    constexpr Distance(std::uint32_t raw, int) : hops_(raw) {}
    std::uint32_t hops_ = 0;
};

/// Sorted, duplicate-free list of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }
    VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

    [[nodiscard]] std::size_t size() const { return ids_.size(); }
    [[nodiscard]] bool empty() const { return ids_.empty(); }
    [[nodiscard]] bool contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }
    [[nodiscard]] auto begin() const { return ids_.begin(); }
    [[nodiscard]] auto end() const { return ids_.end(); }
    [[nodiscard]] Vertex operator[](std::size_t i) const { return ids_[i]; }
    [[nodiscard]] const std::vector<Vertex>& ids() const { return ids_; }

    [[nodiscard]] VertexSet minus(const VertexSet& other) const {
        std::vector<Vertex> out;
        std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(), std::back_inserter(out));
        return VertexSet(std::move(out));
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> ids_;
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on self-loops, duplicate edges or out-of-range ids.
    Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
        for (const Edge& e : edges) {
            if (e.u >= n || e.v >= n) {
                throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                 " has an endpoint >= n = " + std::to_string(n));
            }
            if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
        }
        for (Vertex v = 0; v < n; ++v) {
            auto& nb = adj_[v];
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
                const Vertex w = *std::adjacent_find(nb.begin(), nb.end());
                throw GraphError("duplicate edge " + std::to_string(std::min(v, w)) + "-" +
                                 std::to_string(std::max(v, w)));
            }
        }
        edge_count_ = edges.size();
    }

    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    [[nodiscard]] std::size_t vertex_count() const { return adj_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edge_count_; }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }
    [[nodiscard]] std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    /// All edges with u < v, sorted lexicographically.
    [[nodiscard]] std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < adj_.size(); ++u) {
            for (Vertex v : adj_[u]) {
                if (u < v) out.push_back({u, v});
            }
        }
        return out;
    }

    void check_vertex(Vertex v) const {
        if (v >= adj_.size()) {
            throw GraphError("vertex " + std::to_string(v) + " out of range (n = " + std::to_string(adj_.size()) + ")");
        }
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// BFS hop counts from `source`; entries beyond `max_radius` (or unreachable)
/// are Distance::infinite().
inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source,
                                           std::uint32_t max_radius = std::numeric_limits<std::uint32_t>::max() - 1) {
    g.check_vertex(source);
    std::vector<Distance> dist(g.vertex_count(), Distance::infinite());
    dist[source] = Distance{0};
    std::deque<Vertex> queue{source};
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        const std::uint32_t du = dist[u].value();
        if (du == max_radius) continue;
        for (Vertex w : g.neighbors(u)) {
            if (dist[w].is_infinite()) {
                dist[w] = Distance{du + 1};
                queue.push_back(w);
            }
        }
    }
    return dist;
}

inline Distance distance(const Graph& g, Vertex x, Vertex y) {
    g.check_vertex(y);
    return bfs_distances(g, x)[y];
}

inline VertexSet sphere(const Graph& g, Vertex x, std::uint32_t r) {
    const auto dist = bfs_distances(g, x, r);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < dist.size(); ++v) {
        if (dist[v] == Distance{r}) out.push_back(v);
    }
    return VertexSet(std::move(out));
}

inline VertexSet ball(const Graph& g, Vertex x, std::uint32_t r) {
    const auto dist = bfs_distances(g, x, r);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < dist.size(); ++v) {
        if (dist[v].is_finite()) out.push_back(v);
    }
    return VertexSet(std::move(out));
}

/// N_xy: vertices adjacent to both x and y.
inline VertexSet common_neighbors(const Graph& g, Vertex x, Vertex y) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) throw GraphError("common_neighbors requires distinct vertices");
    const auto nx = g.neighbors(x);
    const auto ny = g.neighbors(y);
    std::vector<Vertex> out;
    std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline std::size_t min_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw GraphError("min_degree of the empty graph");
    std::size_t best = g.degree(0);
    for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
    return best;
}

inline Distance diameter(const Graph& g) {
    if (g.vertex_count() == 0) throw GraphError("diameter of the empty graph");
    Distance best{0};
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (const Distance& d : bfs_distances(g, v)) {
            if (d.is_infinite()) return Distance::infinite();
            best = std::max(best, d);
        }
    }
    return best;
}

} // namespace ricci
