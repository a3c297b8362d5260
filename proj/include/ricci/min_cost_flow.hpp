#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ricci {

/// Integer transportation problem: ship supply[i] to demand[j] at unit
/// cost cost[i][j]. Flow amounts use `Cap` (int64_t or an arbitrary
/// precision integer); unit costs are small nonnegative ints.
template <class Cap>
struct TransportationResult {
    Cap total_cost{0};
    std::vector<std::vector<Cap>> flow; // flow[i][j]
};

namespace detail {

template <class Cap>
class ResidualNetwork {
public:
    struct Arc {
        std::size_t to;
        std::size_t rev;
        Cap cap;
        std::int64_t cost;
    };

    explicit ResidualNetwork(std::size_t nodes) : out_(nodes) {}

    std::size_t add_arc(std::size_t from, std::size_t to, Cap cap, std::int64_t cost) {
        out_[from].push_back({to, out_[to].size(), cap, cost});
        out_[to].push_back({from, out_[from].size() - 1, Cap{0}, -cost});
        return out_[from].size() - 1;
    }

    [[nodiscard]] const Arc& arc(std::size_t from, std::size_t idx) const { return out_[from][idx]; }

    /// Successive shortest paths with Bellman-Ford. Arcs are scanned in
    /// insertion order so the resulting flow is deterministic.
    Cap run(std::size_t source, std::size_t sink, const Cap& required) {
        constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
        const std::size_t n = out_.size();
        Cap pushed{0};
        Cap cost{0};
        std::vector<std::int64_t> dist(n);
        std::vector<std::size_t> prev_node(n), prev_arc(n);
        while (pushed < required) {
            std::fill(dist.begin(), dist.end(), kInf);
            dist[source] = 0;
            for (std::size_t round = 0; round + 1 < n; ++round) {
                bool changed = false;
                for (std::size_t u = 0; u < n; ++u) {
                    if (dist[u] == kInf) continue;
                    for (std::size_t k = 0; k < out_[u].size(); ++k) {
                        const Arc& a = out_[u][k];
                        if (a.cap > 0 && dist[u] + a.cost < dist[a.to]) {
                            dist[a.to] = dist[u] + a.cost;
                            prev_node[a.to] = u;
                            prev_arc[a.to] = k;
                            changed = true;
                        }
                    }
                }
                if (!changed) break;
            }
            if (dist[sink] == kInf) throw std::logic_error("transportation problem is infeasible");

            Cap bottleneck = required - pushed;
            for (std::size_t v = sink; v != source; v = prev_node[v]) {
                const Arc& a = out_[prev_node[v]][prev_arc[v]];
                if (a.cap < bottleneck) bottleneck = a.cap;
            }
            for (std::size_t v = sink; v != source; v = prev_node[v]) {
                Arc& a = out_[prev_node[v]][prev_arc[v]];
                a.cap -= bottleneck;
                out_[a.to][a.rev].cap += bottleneck;
            }
            pushed += bottleneck;
            cost += bottleneck * Cap(dist[sink]);
        }
        return cost;
    }

private:
    std::vector<std::vector<Arc>> out_;
};

} // namespace detail

template <class Cap>
TransportationResult<Cap> solve_transportation(const std::vector<Cap>& supply, const std::vector<Cap>& demand,
                                               const std::vector<std::vector<int>>& cost) {
    const std::size_t m = supply.size();
    const std::size_t k = demand.size();
    if (cost.size() != m) throw std::invalid_argument("cost matrix row count mismatch");
    for (const auto& row : cost) {
        if (row.size() != k) throw std::invalid_argument("cost matrix column count mismatch");
    }
    Cap total_supply{0}, total_demand{0};
    for (const Cap& s : supply) {
        if (s < 0) throw std::invalid_argument("negative supply");
        total_supply += s;
    }
    for (const Cap& d : demand) {
        if (d < 0) throw std::invalid_argument("negative demand");
        total_demand += d;
    }
    if (total_supply != total_demand) throw std::invalid_argument("supply and demand totals differ");

    const std::size_t source = m + k;
    const std::size_t sink = m + k + 1;
    detail::ResidualNetwork<Cap> net(m + k + 2);
    for (std::size_t i = 0; i < m; ++i) net.add_arc(source, i, supply[i], 0);
    std::vector<std::vector<std::size_t>> arc_index(m, std::vector<std::size_t>(k));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j) arc_index[i][j] = net.add_arc(i, m + j, total_supply, cost[i][j]);
    for (std::size_t j = 0; j < k; ++j) net.add_arc(m + j, sink, demand[j], 0);

    TransportationResult<Cap> result;
    result.total_cost = total_supply > 0 ? net.run(source, sink, total_supply) : Cap{0};
    result.flow.assign(m, std::vector<Cap>(k, Cap{0}));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            result.flow[i][j] = total_supply - net.arc(i, arc_index[i][j]).cap;
        }
    return result;
}

} // namespace ricci
