#pragma once

#include "ricci/assignment.hpp"
#include "ricci/curvature_types.hpp"
#include "ricci/parallel.hpp"
#include "ricci/transport.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace ricci {

inline EdgeCurvature kappa_alpha(const Graph& g, Vertex x, Vertex y, const Rational& alpha) {
    require_edge(g, x, y);
    if (alpha < 0 || alpha > 1) throw CurvatureError("idleness " + to_string(alpha) + " outside [0, 1]");
    const Rational w = wasserstein(g, vertex_measure(g, x, alpha), vertex_measure(g, y, alpha));
    return {x, y, alpha, 1 - w};
}

/// Start of the final linear piece of the idleness function:
/// 1 / (max(d_x, d_y) + 1).
inline Rational linear_tail_start(const Graph& g, Vertex x, Vertex y) {
    return Rational(1, static_cast<std::int64_t>(std::max(g.degree(x), g.degree(y)) + 1));
}

/// Lin-Lu-Yau curvature through the exact tail linearity
/// kappa_alpha = (1 - alpha) kappa on [1/(max(d_x, d_y) + 1), 1]; one
/// transport solve, no limit taken.
inline LLYCurvature kappa_lly(const Graph& g, Vertex x, Vertex y) {
    const Rational a = linear_tail_start(g, x, y);
    const EdgeCurvature k = kappa_alpha(g, x, y, a);
    return {x, y, k.kappa / (1 - a)};
}

/// Route used for Lin-Lu-Yau curvature.
///  automatic  - assignment formula when d_x = d_y, transport otherwise
///  transport  - always the general optimal-transport path
///  assignment - equal-degree formula only (throws otherwise)
enum class Route { automatic, transport, assignment };

inline LLYCurvature lly_curvature(const Graph& g, Vertex x, Vertex y, Route route = Route::automatic) {
    switch (route) {
    case Route::transport:
        return kappa_lly(g, x, y);
    case Route::assignment:
        return lly_equal_degree(g, x, y);
    case Route::automatic:
        require_edge(g, x, y);
        return g.degree(x) == g.degree(y) ? lly_equal_degree(g, x, y) : kappa_lly(g, x, y);
    }
    throw std::logic_error("unknown route");
}

/// Concave piecewise-linear function on [0, 1] given by its breakpoints.
class PiecewiseLinearFn {
public:
    struct Breakpoint {
        Rational alpha;
        Rational value;
        friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
    };

    PiecewiseLinearFn() = default;
    explicit PiecewiseLinearFn(std::vector<Breakpoint> points) : points_(std::move(points)) {
        if (points_.size() < 2 || points_.front().alpha != 0 || points_.back().alpha != 1) {
            throw std::invalid_argument("breakpoints must span [0, 1]");
        }
        for (std::size_t i = 1; i < points_.size(); ++i) {
            if (points_[i].alpha <= points_[i - 1].alpha) throw std::invalid_argument("breakpoints not increasing");
        }
    }

    [[nodiscard]] const std::vector<Breakpoint>& breakpoints() const { return points_; }
    [[nodiscard]] std::size_t piece_count() const { return points_.size() - 1; }

    [[nodiscard]] Rational operator()(const Rational& alpha) const {
        if (alpha < 0 || alpha > 1) throw std::invalid_argument("argument outside [0, 1]");
        auto hi = std::lower_bound(points_.begin(), points_.end(), alpha,
                                   [](const Breakpoint& b, const Rational& a) { return b.alpha < a; });
        if (hi->alpha == alpha) return hi->value;
        const auto lo = std::prev(hi);
        return lo->value + (hi->value - lo->value) * (alpha - lo->alpha) / (hi->alpha - lo->alpha);
    }

private:
    std::vector<Breakpoint> points_;
};

namespace detail {

struct Line {
    Rational slope;
    Rational intercept;
    [[nodiscard]] Rational at(const Rational& a) const { return slope * a + intercept; }
    friend bool operator==(const Line&, const Line&) = default;
};

class IdlenessResolver {
public:
    IdlenessResolver(const Graph& g, Vertex x, Vertex y) : g_(g), x_(x), y_(y) {
        const auto dx = static_cast<std::int64_t>(g.degree(x));
        const auto dy = static_cast<std::int64_t>(g.degree(y));
        bound_ = BigInt(4) * dx * dy * (dx + 1) * (dy + 1);
    }

    PiecewiseLinearFn run() {
        const LLYCurvature lly = kappa_lly(g_, x_, y_);
        const Line tail{-lly.kappa, lly.kappa};
        const Rational f0 = eval(0);
        const Rational eps = step(0);
        const Line head{(eval(eps) - f0) / eps, f0};

        cuts_.clear();
        resolve(0, head, 1, tail, 0);

        std::vector<PiecewiseLinearFn::Breakpoint> pts{{Rational(0), f0}};
        for (const Rational& c : cuts_) pts.push_back({c, eval(c)});
        pts.push_back({Rational(1), Rational(0)});
        verify(pts);
        return PiecewiseLinearFn(std::move(pts));
    }

private:
    static constexpr int kMaxDepth = 64;

    Rational eval(const Rational& a) {
        if (auto it = cache_.find(a); it != cache_.end()) return it->second;
        const Rational v = kappa_alpha(g_, x_, y_, a).kappa;
        cache_.emplace(a, v);
        return v;
    }

    // Breakpoints have denominators <= bound_, so none lies strictly within
    // 1/(bound_ * den(c)) of c.
    Rational step(const Rational& c) const { return Rational(BigInt(1), 2 * bound_ * denom(c)); }

    // head is f just right of a, tail is f just left of b.
    void resolve(const Rational& a, const Line& head, const Rational& b, const Line& tail, int depth) {
        if (head == tail) return;
        if (depth > kMaxDepth) throw CurvatureError("idleness function did not resolve");
        if (head.slope <= tail.slope) throw CurvatureError("idleness function is not concave");
        const Rational c = (tail.intercept - head.intercept) / (head.slope - tail.slope);
        if (c <= a || c >= b) throw CurvatureError("idleness function: breakpoint outside its bracket");
        const Rational fc = eval(c);
        const Rational on_lines = head.at(c);
        if (fc == on_lines) {
            cuts_.push_back(c);
            return;
        }
        if (fc > on_lines) throw CurvatureError("idleness function is not concave");

        const Rational eps = step(c);
        const Line left{(fc - eval(c - eps)) / eps, 0};
        const Line right{(eval(c + eps) - fc) / eps, 0};
        const Line into_c{left.slope, fc - left.slope * c};
        const Line out_of_c{right.slope, fc - right.slope * c};
        resolve(a, head, c, into_c, depth + 1);
        if (into_c != out_of_c) cuts_.push_back(c);
        resolve(c, out_of_c, b, tail, depth + 1);
    }

    // Every piece must be linear (midpoint on the chord suffices for a
    // concave function) and every breakpoint within the denominator bound.
    void verify(std::vector<PiecewiseLinearFn::Breakpoint>& pts) {
        std::sort(pts.begin(), pts.end(), [](const auto& p, const auto& q) { return p.alpha < q.alpha; });
        // merge collinear neighbours
        std::vector<PiecewiseLinearFn::Breakpoint> merged{pts.front()};
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (merged.size() >= 2 && i + 1 <= pts.size()) {
                const auto& p = merged[merged.size() - 2];
                const auto& q = merged.back();
                const auto& r = pts[i];
                if ((q.value - p.value) * (r.alpha - q.alpha) == (r.value - q.value) * (q.alpha - p.alpha)) {
                    merged.back() = r;
                    continue;
                }
            }
            merged.push_back(pts[i]);
        }
        pts = std::move(merged);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const auto& p = pts[i];
            const auto& q = pts[i + 1];
            const Rational mid = (p.alpha + q.alpha) / 2;
            if (eval(mid) != (p.value + q.value) / 2) {
                throw CurvatureError("idleness function: piece [" + to_string(p.alpha) + ", " + to_string(q.alpha) +
                                     "] is not linear");
            }
            if (i > 0 && denom(p.alpha) > bound_) {
                throw CurvatureError("idleness function: breakpoint " + to_string(p.alpha) +
                                     " exceeds the denominator bound");
            }
        }
    }

    const Graph& g_;
    Vertex x_;
    Vertex y_;
    BigInt bound_;
    std::vector<Rational> cuts_;
    std::map<Rational, Rational> cache_;
};

} // namespace detail

/// The idleness function alpha -> kappa_alpha(x, y), recovered exactly.
///
/// The last piece [1/(max(d_x, d_y) + 1), 1] is the known linear tail through
/// (1, 0). Elsewhere, lines adjacent to an unresolved bracket are intersected;
/// if kappa at the intersection lies on both lines it is a breakpoint,
/// otherwise the line through that point is found from one-sided differences
/// and both halves are resolved again. The result is checked piece by piece.
inline PiecewiseLinearFn idleness_function(const Graph& g, Vertex x, Vertex y) {
    require_edge(g, x, y);
    return detail::IdlenessResolver(g, x, y).run();
}

struct RicciLowerBound {
    Rational value;
    Edge witness;
};

/// Ric(G) = min over edges of the Lin-Lu-Yau curvature. Ties go to the
/// lexicographically least edge, independent of the thread count.
inline RicciLowerBound ricci_lower(const Graph& g, Route route = Route::transport,
                                   std::size_t threads = 1) {
    const auto edges = g.edges();
    if (edges.empty()) throw CurvatureError("graph has no edges");
    const auto values = parallel_map(edges.size(), threads, [&](std::size_t i) {
        return lly_curvature(g, edges[i].u, edges[i].v, route).kappa;
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] < values[best]) best = i;
    }
    return {values[best], edges[best]};
}

/// Per-edge curvature for every edge, in edge order.
inline std::vector<LLYCurvature> all_lly(const Graph& g, Route route = Route::transport, std::size_t threads = 1) {
    const auto edges = g.edges();
    return parallel_map(edges.size(), threads,
                        [&](std::size_t i) { return lly_curvature(g, edges[i].u, edges[i].v, route); });
}

inline std::vector<EdgeCurvature> all_kappa_alpha(const Graph& g, const Rational& alpha, std::size_t threads = 1) {
    const auto edges = g.edges();
    return parallel_map(edges.size(), threads,
                        [&](std::size_t i) { return kappa_alpha(g, edges[i].u, edges[i].v, alpha); });
}

} // namespace ricci
