#pragma once

#include "ricci/curvature_types.hpp"
#include "ricci/graph.hpp"
#include "ricci/transport.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ricci {

/// Square min-cost bijection problem between S_1(x)\B_1(y) (left) and
/// S_1(y)\B_1(x) (right); cost[i][j] = d(left_i, right_j).
struct AssignmentInstance {
    VertexSet left;
    VertexSet right;
    std::vector<std::vector<int>> cost;
};

struct AssignmentResult {
    std::int64_t total_cost = 0;
    std::vector<std::size_t> matching; // left index -> right index
};

namespace detail {

/// Hungarian method with potentials, O(n^3). `forbidden` entries never
/// appear in the returned matching; returns nullopt when no perfect
/// matching avoids them.
inline std::optional<std::int64_t> hungarian(const std::vector<std::vector<int>>& cost,
                                             const std::vector<std::vector<char>>& forbidden,
                                             std::vector<std::size_t>* matching) {
    const std::size_t n = cost.size();
    constexpr std::int64_t kBlocked = std::int64_t{1} << 40;
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    auto c = [&](std::size_t i, std::size_t j) -> std::int64_t {
        return forbidden[i][j] ? kBlocked : cost[i][j];
    };
    // 1-based arrays as in the classic formulation; column 0 is a sentinel
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<std::int64_t> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            std::int64_t delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const std::int64_t cur = c(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> match(n);
    std::int64_t total = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        match[p[j] - 1] = j - 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (forbidden[i][match[i]]) return std::nullopt;
        total += cost[i][match[i]];
    }
    if (matching) *matching = std::move(match);
    return total;
}

} // namespace detail

/// Exact minimum-cost perfect assignment. Among optimal matchings the
/// lexicographically least (by right index of left 0, 1, ...) is returned.
inline AssignmentResult solve_assignment(const AssignmentInstance& instance) {
    const std::size_t n = instance.cost.size();
    if (instance.left.size() != n || instance.right.size() != n) {
        throw std::invalid_argument("assignment instance is not square");
    }
    for (const auto& row : instance.cost) {
        if (row.size() != n) throw std::invalid_argument("assignment instance is not square");
    }
    AssignmentResult result;
    if (n == 0) return result;

    std::vector<std::vector<char>> forbidden(n, std::vector<char>(n, 0));
    const auto optimum = detail::hungarian(instance.cost, forbidden, nullptr);
    result.total_cost = *optimum;

    // Fix rows one at a time to the smallest column that keeps the optimum.
    result.matching.assign(n, 0);
    std::vector<char> column_taken(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (column_taken[j]) continue;
            auto trial = forbidden;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) trial[i][k] = 1;
                if (k != i) trial[k][j] = 1;
            }
            const auto value = detail::hungarian(instance.cost, trial, nullptr);
            if (value && *value == *optimum) {
                forbidden = std::move(trial);
                result.matching[i] = j;
                column_taken[j] = 1;
                break;
            }
        }
    }
    return result;
}

/// Builds the exclusive-neighbourhood assignment instance of an edge.
inline AssignmentInstance make_assignment_instance(const Graph& g, Vertex x, Vertex y) {
    require_edge(g, x, y);
    const VertexSet bx = ball(g, x, 1);
    const VertexSet by = ball(g, y, 1);
    AssignmentInstance inst;
    inst.left = VertexSet(std::vector<Vertex>(g.neighbors(x).begin(), g.neighbors(x).end())).minus(by);
    inst.right = VertexSet(std::vector<Vertex>(g.neighbors(y).begin(), g.neighbors(y).end())).minus(bx);
    if (inst.left.size() == inst.right.size()) {
        inst.cost = detail::support_costs(g, inst.left.ids(), inst.right.ids());
    }
    return inst;
}

/// Lin-Lu-Yau curvature of an edge whose endpoints share degree d:
/// kappa = (d + 1 - min_phi sum d(z, phi(z))) / d.
inline LLYCurvature lly_equal_degree(const Graph& g, Vertex x, Vertex y) {
    require_edge(g, x, y);
    const std::size_t d = g.degree(x);
    if (g.degree(y) != d) {
        throw CurvatureError("assignment formula needs equal degrees (d_x = " + std::to_string(d) +
                             ", d_y = " + std::to_string(g.degree(y)) + ")");
    }
    const auto inst = make_assignment_instance(g, x, y);
    const auto solved = solve_assignment(inst);
    const Rational kappa = Rational(static_cast<std::int64_t>(d + 1) - solved.total_cost, static_cast<std::int64_t>(d));
    return {x, y, kappa};
}

} // namespace ricci
