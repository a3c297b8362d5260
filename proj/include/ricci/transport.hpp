#pragma once

#include "ricci/graph.hpp"
#include "ricci/min_cost_flow.hpp"
#include "ricci/rational.hpp"

#include <array>
#include <deque>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ricci {

class TransportError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Probability measure with finite support. Masses are strictly positive and
/// sum to exactly 1.
class ProbMeasure {
public:
    using Masses = std::map<Vertex, Rational>;

    ProbMeasure() = default;

    /// Zero entries are dropped; negative entries or a total other than 1 throw.
    static ProbMeasure from_masses(Masses masses) {
        Rational total = 0;
        for (auto it = masses.begin(); it != masses.end();) {
            if (it->second < 0) throw TransportError("negative mass at vertex " + std::to_string(it->first));
            total += it->second;
            it = it->second == 0 ? masses.erase(it) : std::next(it);
        }
        if (total != 1) throw TransportError("masses sum to " + to_string(total) + ", expected 1");
        ProbMeasure m;
        m.masses_ = std::move(masses);
        return m;
    }

    [[nodiscard]] const Masses& masses() const { return masses_; }
    [[nodiscard]] Rational operator()(Vertex v) const {
        const auto it = masses_.find(v);
        return it == masses_.end() ? Rational(0) : it->second;
    }
    [[nodiscard]] std::size_t support_size() const { return masses_.size(); }
    [[nodiscard]] auto begin() const { return masses_.begin(); }
    [[nodiscard]] auto end() const { return masses_.end(); }

    friend bool operator==(const ProbMeasure&, const ProbMeasure&) = default;

private:
    Masses masses_;
};

/// Coupling of two measures, stored sparsely without zero entries.
struct TransportPlan {
    std::map<std::pair<Vertex, Vertex>, Rational> entries;
    ProbMeasure source;
    ProbMeasure target;

    [[nodiscard]] Rational at(Vertex from, Vertex to) const {
        const auto it = entries.find({from, to});
        return it == entries.end() ? Rational(0) : it->second;
    }

    /// True iff every entry is positive and row/column sums reproduce the
    /// marginals exactly.
    [[nodiscard]] bool marginals_match() const {
        std::map<Vertex, Rational> rows, cols;
        for (const auto& [key, mass] : entries) {
            if (mass <= 0) return false;
            rows[key.first] += mass;
            cols[key.second] += mass;
        }
        return rows == source.masses() && cols == target.masses();
    }
};

/// Mass moved over each distance by a plan: nu[i] for i = 0..3, and overflow
/// for anything farther.
struct MassByDistance {
    std::array<Rational, 4> nu{};
    Rational overflow{0};

    [[nodiscard]] Rational total() const { return nu[0] + nu[1] + nu[2] + nu[3] + overflow; }
};

/// mu_x^alpha: mass alpha at x and (1 - alpha)/d_x on each neighbour.
inline ProbMeasure vertex_measure(const Graph& g, Vertex x, const Rational& alpha) {
    g.check_vertex(x);
    if (alpha < 0 || alpha > 1) throw TransportError("idleness " + to_string(alpha) + " outside [0, 1]");
    const auto nb = g.neighbors(x);
    if (nb.empty()) throw TransportError("vertex " + std::to_string(x) + " is isolated");
    ProbMeasure::Masses masses;
    masses[x] = alpha;
    const Rational share = (1 - alpha) / Rational(nb.size());
    for (Vertex w : nb) masses[w] = share;
    return ProbMeasure::from_masses(std::move(masses));
}

namespace detail {

/// BFS from `source` that stops once every vertex in `targets` is labelled.
inline std::vector<Distance> distances_to(const Graph& g, Vertex source, const std::vector<Vertex>& targets) {
    std::vector<Distance> dist(g.vertex_count(), Distance::infinite());
    std::vector<char> wanted(g.vertex_count(), 0);
    std::size_t remaining = 0;
    for (Vertex t : targets) {
        g.check_vertex(t);
        if (!wanted[t]) {
            wanted[t] = 1;
            ++remaining;
        }
    }
    dist[source] = Distance{0};
    if (wanted[source]) --remaining;
    std::deque<Vertex> queue{source};
    while (!queue.empty() && remaining > 0) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w].is_infinite()) {
                dist[w] = Distance{dist[u].value() + 1};
                if (wanted[w]) --remaining;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

inline std::vector<std::vector<int>> support_costs(const Graph& g, const std::vector<Vertex>& from,
                                                   const std::vector<Vertex>& to) {
    std::vector<std::vector<int>> cost(from.size(), std::vector<int>(to.size()));
    for (std::size_t i = 0; i < from.size(); ++i) {
        const auto dist = distances_to(g, from[i], to);
        for (std::size_t j = 0; j < to.size(); ++j) {
            if (dist[to[j]].is_infinite()) {
                throw TransportError("vertices " + std::to_string(from[i]) + " and " + std::to_string(to[j]) +
                                     " lie in different components");
            }
            cost[i][j] = static_cast<int>(dist[to[j]].value());
        }
    }
    return cost;
}

struct PlanSolve {
    std::map<std::pair<Vertex, Vertex>, Rational> entries;
    Rational cost;
};

template <class Cap>
PlanSolve solve_scaled(const std::vector<Vertex>& from, const std::vector<Vertex>& to,
                       const std::vector<BigInt>& supply, const std::vector<BigInt>& demand,
                       const std::vector<std::vector<int>>& cost, const BigInt& scale) {
    std::vector<Cap> s, d;
    s.reserve(supply.size());
    d.reserve(demand.size());
    for (const auto& v : supply) s.push_back(static_cast<Cap>(v));
    for (const auto& v : demand) d.push_back(static_cast<Cap>(v));
    const auto res = solve_transportation<Cap>(s, d, cost);
    PlanSolve out;
    for (std::size_t i = 0; i < from.size(); ++i)
        for (std::size_t j = 0; j < to.size(); ++j) {
            if (res.flow[i][j] > 0) out.entries[{from[i], to[j]}] = Rational(BigInt(res.flow[i][j]), scale);
        }
    out.cost = Rational(BigInt(res.total_cost), scale);
    return out;
}

/// Exact transport between two nonnegative mass maps of equal total. Masses
/// are scaled to integers by the lcm of their denominators and handed to
/// the min-cost-flow solver.
inline PlanSolve solve_masses(const Graph& g, const std::map<Vertex, Rational>& supply,
                              const std::map<Vertex, Rational>& demand) {
    std::vector<Vertex> from, to;
    BigInt scale = 1;
    Rational total_s = 0, total_d = 0;
    for (const auto& [v, m] : supply) {
        from.push_back(v);
        scale = lcm(scale, denom(m));
        total_s += m;
    }
    for (const auto& [v, m] : demand) {
        to.push_back(v);
        scale = lcm(scale, denom(m));
        total_d += m;
    }
    if (total_s != total_d) {
        throw TransportError("mismatched total mass: " + to_string(total_s) + " vs " + to_string(total_d));
    }
    if (from.empty()) return {};
    const auto cost = support_costs(g, from, to);

    std::vector<BigInt> s, d;
    for (const auto& [v, m] : supply) s.push_back(numer(m) * (scale / denom(m)));
    for (const auto& [v, m] : demand) d.push_back(numer(m) * (scale / denom(m)));

    int max_cost = 0;
    for (const auto& row : cost)
        for (int c : row) max_cost = std::max(max_cost, c);
    const BigInt total = numer(total_s) * (scale / denom(total_s));
    // int64 is enough when total * (max path cost + headroom) stays representable
    const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max() / 4) /
                         BigInt(static_cast<std::int64_t>(max_cost) + 1 + static_cast<std::int64_t>(from.size() + to.size()));
    if (total <= limit) return solve_scaled<std::int64_t>(from, to, s, d, cost, scale);
    return solve_scaled<BigInt>(from, to, s, d, cost, scale);
}

} // namespace detail

inline TransportPlan optimal_plan(const Graph& g, const ProbMeasure& mu1, const ProbMeasure& mu2) {
    auto solved = detail::solve_masses(g, mu1.masses(), mu2.masses());
    return TransportPlan{std::move(solved.entries), mu1, mu2};
}

/// W_1(mu1, mu2) with cost = graph distance.
inline Rational wasserstein(const Graph& g, const ProbMeasure& mu1, const ProbMeasure& mu2) {
    return detail::solve_masses(g, mu1.masses(), mu2.masses()).cost;
}

/// Optimal plan keeping min(mu1(z), mu2(z)) in place at every z. The leftover
/// measures have disjoint supports and are transported optimally.
inline TransportPlan diagonal_fixed_plan(const Graph& g, const ProbMeasure& mu1, const ProbMeasure& mu2) {
    std::map<Vertex, Rational> rest1, rest2;
    std::map<std::pair<Vertex, Vertex>, Rational> diagonal;
    for (const auto& [v, m] : mu1) {
        const Rational kept = std::min(m, mu2(v));
        if (kept > 0) diagonal[{v, v}] = kept;
        if (m > kept) rest1[v] = m - kept;
    }
    for (const auto& [v, m] : mu2) {
        const Rational kept = std::min(m, mu1(v));
        if (m > kept) rest2[v] = m - kept;
    }
    auto solved = detail::solve_masses(g, rest1, rest2);
    for (auto& [key, mass] : diagonal) solved.entries[key] += mass;
    return TransportPlan{std::move(solved.entries), mu1, mu2};
}

/// Sum of d(u, v) * pi(u, v).
inline Rational plan_cost(const Graph& g, const TransportPlan& plan) {
    Rational total = 0;
    for (const auto& [key, mass] : plan.entries) {
        const Distance d = distance(g, key.first, key.second);
        if (d.is_infinite()) throw TransportError("plan moves mass between components");
        total += mass * Rational(d.value());
    }
    return total;
}

inline MassByDistance mass_by_distance(const Graph& g, const TransportPlan& plan) {
    MassByDistance out;
    for (const auto& [key, mass] : plan.entries) {
        const Distance d = distance(g, key.first, key.second);
        if (d.is_infinite()) throw TransportError("plan moves mass between components");
        if (d.value() <= 3) {
            out.nu[d.value()] += mass;
        } else {
            out.overflow += mass;
        }
    }
    return out;
}

} // namespace ricci
