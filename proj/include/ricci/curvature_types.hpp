#pragma once

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

#include <stdexcept>

namespace ricci {

class CurvatureError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// kappa_alpha(x, y) = 1 - W_1(mu_x^alpha, mu_y^alpha).
struct EdgeCurvature {
    Vertex x = 0;
    Vertex y = 0;
    Rational alpha;
    Rational kappa;
};

/// Lin-Lu-Yau curvature kappa(x, y) = lim_{alpha -> 1} kappa_alpha / (1 - alpha).
struct LLYCurvature {
    Vertex x = 0;
    Vertex y = 0;
    Rational kappa;
};

inline void require_edge(const Graph& g, Vertex x, Vertex y) {
    if (!g.adjacent(x, y)) {
        throw CurvatureError("vertices " + std::to_string(x) + " and " + std::to_string(y) + " are not adjacent");
    }
}

} // namespace ricci
