#include "ricci/curvature.hpp"
#include "ricci/generators.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ricci;

namespace {

Rational r(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

std::vector<Graph> small_corpus() {
    std::vector<Graph> gs{complete_graph(3), complete_graph(4), cycle_graph(5), cycle_graph(6), path_graph(4),
                          hypercube_graph(3), petersen_graph(), generate_sharpness(2).graph,
                          Graph(5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}})};
    std::mt19937_64 rng(42);
    for (int i = 0; i < 12; ++i) {
        const std::size_t n = 4 + rng() % 8;
        gs.push_back(random_min_degree_graph(n, 1 + rng() % (n - 2), rng()));
    }
    return gs;
}

} // namespace

TEST(KappaAlpha, Examples) {
    const Graph k3 = complete_graph(3);
    EXPECT_EQ(kappa_alpha(k3, 0, 1, r(1)).kappa, 0);
    EXPECT_EQ(kappa_alpha(petersen_graph(), 0, 1, r(1)).kappa, 0);
    ASSERT_EQ(oracle::kappa_alpha(k3, 0, 1, r(1, 3)), r(1));
    EXPECT_EQ(kappa_alpha(k3, 0, 1, r(1, 3)).kappa, r(1));
    const auto s = generate_sharpness(2);
    EXPECT_EQ(kappa_alpha(s.graph, s.x, s.y, r(1, 5)).kappa, r(-1, 5));
}

TEST(KappaAlpha, Errors) {
    const Graph c6 = cycle_graph(6);
    EXPECT_THROW(kappa_alpha(c6, 0, 2, r(1, 2)), CurvatureError);
    EXPECT_THROW(kappa_alpha(c6, 0, 1, r(-1, 2)), CurvatureError);
    EXPECT_THROW(kappa_alpha(c6, 0, 1, r(2)), CurvatureError);
    EXPECT_THROW(kappa_lly(c6, 0, 3), CurvatureError);
}

TEST(KappaAlpha, AgreesWithOracle) {
    for (const Graph& g : small_corpus()) {
        for (const Edge& e : g.edges()) {
            for (const Rational& a : {r(0), r(1, 4), r(2, 3)}) {
                EXPECT_EQ(kappa_alpha(g, e.u, e.v, a).kappa, oracle::kappa_alpha(g, e.u, e.v, a));
            }
        }
    }
}

TEST(KappaLly, Examples) {
    const auto s = generate_sharpness(2);
    EXPECT_EQ(kappa_lly(s.graph, s.x, s.y).kappa, r(-1, 4));
    EXPECT_EQ(kappa_lly(cycle_graph(6), 2, 3).kappa, 0);
    for (std::int64_t n = 3; n <= 6; ++n) {
        ASSERT_EQ(oracle::kappa_lly(complete_graph(n), 0, 1), r(n, n - 1));
        EXPECT_EQ(kappa_lly(complete_graph(n), 0, 1).kappa, r(n, n - 1));
    }
}

TEST(KappaLly, DegreeOneEndpoint) {
    // pendant edge 0-1 of a star with three leaves
    const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    const auto k = kappa_lly(star, 1, 0);
    EXPECT_EQ(k.kappa, oracle::kappa_lly(star, 1, 0));
    EXPECT_EQ(vertex_measure(star, 1, r(1, 3)).masses(), (ProbMeasure::Masses{{0, r(2, 3)}, {1, r(1, 3)}}));
    const Graph k2(2, {{0, 1}});
    EXPECT_EQ(kappa_lly(k2, 0, 1).kappa, 2);
}

TEST(CurvatureProperties, TailLinearitySymmetryAndDecomposition) {
    for (const Graph& g : small_corpus()) {
        for (const Edge& e : g.edges()) {
            const Rational k = kappa_lly(g, e.u, e.v).kappa;
            EXPECT_EQ(kappa_lly(g, e.v, e.u).kappa, k);
            const Rational start = linear_tail_start(g, e.u, e.v);
            for (const Rational& a : {start, (start + 1) / 2, r(9, 10)}) {
                EXPECT_EQ(kappa_alpha(g, e.u, e.v, a).kappa, (1 - a) * k);
            }
            for (const Rational& a : {r(0), r(1, 3), r(5, 7)}) {
                const Rational ka = kappa_alpha(g, e.u, e.v, a).kappa;
                EXPECT_EQ(kappa_alpha(g, e.v, e.u, a).kappa, ka);
                const auto m = mass_by_distance(
                    g, optimal_plan(g, vertex_measure(g, e.u, a), vertex_measure(g, e.v, a)));
                EXPECT_EQ(m.nu[0] - m.nu[2] - 2 * m.nu[3], ka);
            }
        }
    }
}

TEST(CurvatureProperties, ConcavityAndMonotoneRatio) {
    for (const Graph& g : small_corpus()) {
        for (const Edge& e : g.edges()) {
            std::vector<Rational> k;
            for (std::int64_t i = 0; i <= 8; ++i) k.push_back(kappa_alpha(g, e.u, e.v, r(i, 8)).kappa);
            for (std::size_t i = 1; i + 1 < k.size(); ++i) EXPECT_GE(2 * k[i], k[i - 1] + k[i + 1]);
            for (std::int64_t i = 0; i + 1 < 8; ++i) {
                EXPECT_LE(k[i] / (1 - r(i, 8)), k[i + 1] / (1 - r(i + 1, 8)));
            }
        }
    }
}

TEST(IdlenessFunction, TriangleGolden) {
    // oracle values at k/8 pin the shape: 1/2 at 0, peak 1 at 1/3, 0 at 1
    const Graph k3 = complete_graph(3);
    ASSERT_EQ(oracle::kappa_alpha(k3, 0, 1, r(0)), r(1, 2));
    ASSERT_EQ(oracle::kappa_alpha(k3, 0, 1, r(1, 8)), r(11, 16));
    ASSERT_EQ(oracle::kappa_alpha(k3, 0, 1, r(3, 8)), r(15, 16));
    const auto f = idleness_function(k3, 0, 1);
    using B = PiecewiseLinearFn::Breakpoint;
    EXPECT_EQ(f.breakpoints(), (std::vector<B>{{r(0), r(1, 2)}, {r(1, 3), r(1)}, {r(1), r(0)}}));
    EXPECT_EQ(f(r(1, 8)), r(11, 16));
}

TEST(IdlenessFunction, SingleAndMultiplePieces) {
    // C6: kappa_alpha = 0 throughout
    const auto flat = idleness_function(cycle_graph(6), 0, 1);
    EXPECT_EQ(flat.piece_count(), 1u);
    EXPECT_EQ(flat(r(1, 2)), 0);
    for (const Graph& g : small_corpus()) {
        for (const Edge& e : g.edges()) {
            const auto f = idleness_function(g, e.u, e.v);
            EXPECT_LE(f.piece_count(), 3u);
            EXPECT_EQ(f.breakpoints().back().value, 0);
            for (std::int64_t i = 0; i <= 12; ++i) EXPECT_EQ(f(r(i, 12)), kappa_alpha(g, e.u, e.v, r(i, 12)).kappa);
        }
    }
    EXPECT_THROW(idleness_function(cycle_graph(6), 0, 2), CurvatureError);
}

TEST(PiecewiseLinear, Validation) {
    using B = PiecewiseLinearFn::Breakpoint;
    EXPECT_THROW(PiecewiseLinearFn({{r(0), r(0)}}), std::invalid_argument);
    EXPECT_THROW(PiecewiseLinearFn({{r(1, 2), r(0)}, {r(1), r(0)}}), std::invalid_argument);
    EXPECT_THROW(PiecewiseLinearFn({{r(0), r(0)}, {r(1, 2), r(1)}, {r(1, 2), r(1)}, {r(1), r(0)}}),
                 std::invalid_argument);
    const PiecewiseLinearFn f({B{r(0), r(1)}, B{r(1), r(0)}});
    EXPECT_EQ(f(r(1, 4)), r(3, 4));
    EXPECT_THROW(f(r(2)), std::invalid_argument);
}

TEST(RicciLower, Examples) {
    const auto k6 = ricci_lower(complete_graph(6));
    EXPECT_EQ(k6.value, r(6, 5));
    EXPECT_EQ(k6.witness, (Edge{0, 1}));
    const auto s = generate_sharpness(2);
    const auto sharp = ricci_lower(s.graph);
    EXPECT_EQ(sharp.value, r(-1, 4));
    EXPECT_EQ(sharp.witness, (Edge{s.x, s.y}));
    EXPECT_EQ(ricci_lower(cycle_graph(6)).value, 0);
    EXPECT_THROW(ricci_lower(Graph(3, std::span<const Edge>{})), CurvatureError);
}

TEST(RicciLower, IndependentOfThreadsAndRoute) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 8; ++i) {
        const Graph g = random_min_degree_graph(12, 5, rng());
        const auto one = ricci_lower(g, Route::transport, 1);
        const auto four = ricci_lower(g, Route::transport, 4);
        const auto fast = ricci_lower(g, Route::automatic, 3);
        EXPECT_EQ(one.value, four.value);
        EXPECT_EQ(one.witness, four.witness);
        EXPECT_EQ(one.value, fast.value);
        EXPECT_EQ(one.witness, fast.witness);
    }
}
