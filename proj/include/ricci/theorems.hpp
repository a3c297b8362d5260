#pragma once

#include "ricci/curvature.hpp"
#include "ricci/edge_list.hpp"
#include "ricci/generators.hpp"
#include "ricci/parallel.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ricci {

/// Outcome of checking one statement on one instance. A violation is a
/// hypothesis that holds together with a conclusion that fails.
struct TheoremReport {
    std::string theorem;
    bool hypothesis_holds = false;
    bool conclusion_holds = false;
    std::optional<Edge> witness;
    std::vector<std::pair<std::string, std::string>> details;
    std::optional<std::string> witness_graph; // edge list, set on violations

    [[nodiscard]] bool violation() const { return hypothesis_holds && !conclusion_holds; }

    [[nodiscard]] std::optional<std::string> detail(const std::string& key) const {
        for (const auto& [k, v] : details)
            if (k == key) return v;
        return std::nullopt;
    }

    void add(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
};

struct CheckOptions {
    Route route = Route::transport;
    std::size_t threads = 1;
};

namespace detail {

inline void attach_witness_graph(TheoremReport& r, const Graph& g) {
    if (r.violation()) r.witness_graph = write_edge_list(g);
}

} // namespace detail

/// delta(G) >= 2|V|/3 - 1  implies  Ric(G) >= 0. The hypothesis is evaluated
/// as the integer inequality 3 (delta + 1) >= 2 n.
inline bool degree_threshold_hypothesis(const Graph& g) {
    return 3 * (min_degree(g) + 1) >= 2 * g.vertex_count();
}

inline TheoremReport check_degree_threshold(const Graph& g, const CheckOptions& opts = {}) {
    if (g.edge_count() == 0) throw CurvatureError("graph has no edges");
    TheoremReport r;
    r.theorem = "degree_threshold";
    r.hypothesis_holds = degree_threshold_hypothesis(g);
    const auto ric = ricci_lower(g, opts.route, opts.threads);
    r.conclusion_holds = ric.value >= 0;
    r.witness = ric.witness;
    r.add("n", std::to_string(g.vertex_count()));
    r.add("min_degree", std::to_string(min_degree(g)));
    r.add("ricci_lower", to_string(ric.value));
    detail::attach_witness_graph(r, g);
    return r;
}

/// delta(G) >= (|V| - 1)/2  implies  diam(G) <= 2.
inline TheoremReport check_diameter_lemma(const Graph& g) {
    TheoremReport r;
    r.theorem = "diameter_lemma";
    const std::size_t delta = min_degree(g);
    r.hypothesis_holds = 2 * delta + 1 >= g.vertex_count();
    const Distance diam = diameter(g);
    r.conclusion_holds = diam <= Distance{2};
    r.add("n", std::to_string(g.vertex_count()));
    r.add("min_degree", std::to_string(delta));
    r.add("diameter", diam.str());
    detail::attach_witness_graph(r, g);
    return r;
}

/// Builds the sharpness graph for `l` and confirms its structure and the
/// curvature -1/(2l) of the edge (x, y) by both computation routes.
inline TheoremReport check_sharpness(std::size_t l) {
    const SharpnessGraph s = generate_sharpness(l);
    const Graph& g = s.graph;
    TheoremReport r;
    r.theorem = "sharpness";
    r.hypothesis_holds = true;
    r.witness = Edge{s.x, s.y};

    const std::size_t n = g.vertex_count();
    const std::size_t delta = min_degree(g);
    bool ok = n == 3 * l + 3 && delta == 2 * l && 3 * (delta + 2) == 2 * n;
    ok = ok && g.degree(s.x) == g.degree(s.y);
    for (Vertex a : s.xs)
        for (Vertex b : s.ys) ok = ok && distance(g, a, b) == Distance{2};

    const Rational expected(-1, static_cast<std::int64_t>(2 * l));
    const Rational via_transport = kappa_lly(g, s.x, s.y).kappa;
    const Rational via_assignment = lly_equal_degree(g, s.x, s.y).kappa;
    ok = ok && via_transport == expected && via_assignment == expected;
    r.conclusion_holds = ok;

    r.add("l", std::to_string(l));
    r.add("n", std::to_string(n));
    r.add("min_degree", std::to_string(delta));
    r.add("kappa_transport", to_string(via_transport));
    r.add("kappa_assignment", to_string(via_assignment));
    r.add("expected", to_string(expected));
    detail::attach_witness_graph(r, g);
    return r;
}

/// (2|N_xy| + 3)/max(d_x, d_y) - 1, the lower bound on kappa(x, y) valid
/// whenever diam(G) <= 2.
inline Rational proof_lower_bound(const Graph& g, Vertex x, Vertex y) {
    const auto common = static_cast<std::int64_t>(common_neighbors(g, x, y).size());
    const auto d = static_cast<std::int64_t>(std::max(g.degree(x), g.degree(y)));
    return Rational(2 * common + 3, d) - 1;
}

inline TheoremReport check_proof_bound(const Graph& g, Vertex x, Vertex y, const CheckOptions& opts = {}) {
    require_edge(g, x, y);
    TheoremReport r;
    r.theorem = "proof_bound";
    r.witness = Edge{x, y}.canonical();
    const Distance diam = diameter(g);
    r.hypothesis_holds = diam <= Distance{2};
    r.add("diameter", diam.str());
    if (!r.hypothesis_holds) {
        r.add("status", "inapplicable");
        return r;
    }
    const Rational bound = proof_lower_bound(g, x, y);
    const Rational kappa = lly_curvature(g, x, y, opts.route).kappa;
    r.conclusion_holds = kappa >= bound;
    r.add("bound", to_string(bound));
    r.add("kappa", to_string(kappa));
    detail::attach_witness_graph(r, g);
    return r;
}

/// The bound on every edge; the witness is the edge of least slack.
inline TheoremReport check_proof_bound_all(const Graph& g, const CheckOptions& opts = {}) {
    const auto edges = g.edges();
    if (edges.empty()) throw CurvatureError("graph has no edges");
    TheoremReport r;
    r.theorem = "proof_bound";
    const Distance diam = diameter(g);
    r.hypothesis_holds = diam <= Distance{2};
    r.add("diameter", diam.str());
    if (!r.hypothesis_holds) {
        r.add("status", "inapplicable");
        return r;
    }
    const auto slack = parallel_map(edges.size(), opts.threads, [&](std::size_t i) {
        return lly_curvature(g, edges[i].u, edges[i].v, opts.route).kappa - proof_lower_bound(g, edges[i].u, edges[i].v);
    });
    std::size_t worst = 0;
    for (std::size_t i = 1; i < slack.size(); ++i)
        if (slack[i] < slack[worst]) worst = i;
    r.conclusion_holds = slack[worst] >= 0;
    r.witness = edges[worst];
    r.add("bound", to_string(proof_lower_bound(g, edges[worst].u, edges[worst].v)));
    r.add("min_slack", to_string(slack[worst]));
    detail::attach_witness_graph(r, g);
    return r;
}

/// Under 3(delta + 1) >= 2n every edge has 3(|N_xy| + 2) >= n; the degree
/// inequality d_y <= n - d_x + |N_xy| holds on every edge of every graph.
inline TheoremReport check_neighborhood_inequalities(const Graph& g) {
    TheoremReport r;
    r.theorem = "neighborhood_inequalities";
    r.hypothesis_holds = degree_threshold_hypothesis(g);
    const std::size_t n = g.vertex_count();
    bool common_ok = true;
    bool degree_ok = true;
    for (const Edge& e : g.edges()) {
        const std::size_t c = common_neighbors(g, e.u, e.v).size();
        const std::size_t du = g.degree(e.u), dv = g.degree(e.v);
        const bool edge_common = 3 * (c + 2) >= n;
        const bool edge_degree = du + dv <= n + c;
        if ((!edge_common || !edge_degree) && !r.witness) r.witness = e;
        common_ok = common_ok && edge_common;
        degree_ok = degree_ok && edge_degree;
    }
    r.conclusion_holds = common_ok && degree_ok;
    r.add("common_neighbor_bound", common_ok ? "holds" : "fails");
    r.add("degree_bound", degree_ok ? "holds" : "fails");
    detail::attach_witness_graph(r, g);
    return r;
}

enum class SweepMode { threshold, diameter, proof_bound };

/// Minimum degree the sampler demands for a graph on n vertices.
inline std::size_t sweep_min_degree(SweepMode mode, std::size_t n) {
    switch (mode) {
    case SweepMode::threshold:
    case SweepMode::proof_bound:
        // ceil((2n - 3)/3), i.e. the least delta with 3(delta + 1) >= 2n
        return 2 * n < 3 ? 0 : (2 * n - 3 + 2) / 3;
    case SweepMode::diameter:
        return n / 2; // ceil((n - 1)/2)
    }
    return 0;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct SweepConfig {
    std::size_t n_min = 7;
    std::size_t n_max = 30;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    SweepMode mode = SweepMode::threshold;
    std::size_t threads = 1;
};

inline TheoremReport run_sweep_check(const Graph& g, SweepMode mode) {
    switch (mode) {
    case SweepMode::threshold:
        return check_degree_threshold(g);
    case SweepMode::diameter:
        return check_diameter_lemma(g);
    case SweepMode::proof_bound:
        return check_proof_bound_all(g);
    }
    throw std::logic_error("unknown sweep mode");
}

/// Random falsification sweep. Sample i draws from its own generator seeded
/// by (seed, i), so reports do not depend on the thread count.
inline std::vector<TheoremReport> sweep_random(const SweepConfig& cfg) {
    if (cfg.n_min > cfg.n_max) throw std::invalid_argument("n_min > n_max");
    if (cfg.samples == 0) throw std::invalid_argument("samples must be >= 1");
    if (cfg.n_min < 2) throw std::invalid_argument("infeasible: graphs need at least 2 vertices to carry an edge");
    return parallel_map(cfg.samples, cfg.threads, [&](std::size_t i) {
        std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(i)));
        const std::size_t n = cfg.n_min + uniform_below(rng, cfg.n_max - cfg.n_min + 1);
        const Graph g = random_min_degree_graph(n, sweep_min_degree(cfg.mode, n), rng());
        TheoremReport r = run_sweep_check(g, cfg.mode);
        r.add("sample", std::to_string(i));
        return r;
    });
}

/// Calls fn(graph) for every labelled simple graph on n vertices (all
/// 2^(n(n-1)/2) edge subsets) whose minimum degree is at least `min_delta`.
template <class Fn>
void for_each_labeled_graph(std::size_t n, std::size_t min_delta, Fn&& fn) {
    if (n > 8) throw std::invalid_argument("exhaustive enumeration is limited to n <= 8");
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<std::size_t> deg(n);
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::fill(deg.begin(), deg.end(), 0);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (mask >> k & 1U) {
                ++deg[pairs[k].u];
                ++deg[pairs[k].v];
            }
        }
        if (n > 0 && *std::min_element(deg.begin(), deg.end()) < min_delta) continue;
        edges.clear();
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1U) edges.push_back(pairs[k]);
        fn(Graph(n, edges));
    }
}

/// The degree-threshold check over every labelled graph on n vertices meeting the hypothesis.
inline std::vector<TheoremReport> exhaustive_threshold(std::size_t n, std::size_t threads = 1) {
    std::vector<Graph> graphs;
    const std::size_t delta = sweep_min_degree(SweepMode::threshold, n);
    for_each_labeled_graph(n, delta, [&](const Graph& g) {
        if (g.edge_count() > 0) graphs.push_back(g);
    });
    return parallel_map(graphs.size(), threads, [&](std::size_t i) { return check_degree_threshold(graphs[i]); });
}

} // namespace ricci
