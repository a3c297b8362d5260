#include "ricci/edge_list.hpp"
#include "ricci/generators.hpp"
#include "ricci/graph.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace ricci;

namespace {

Graph two_disjoint_edges() { return Graph(4, {{0, 1}, {2, 3}}); }

std::vector<Graph> fixture_graphs() {
    std::vector<Graph> gs{complete_graph(4), complete_graph(6), cycle_graph(5), cycle_graph(6), path_graph(4),
                          hypercube_graph(3), petersen_graph(), two_disjoint_edges()};
    for (std::size_t l = 2; l <= 5; ++l) gs.push_back(generate_sharpness(l).graph);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        gs.push_back(random_min_degree_graph(5 + seed % 12, (seed % 5), seed));
    }
    return gs;
}

} // namespace

TEST(EdgeList, ParsesPath) {
    const Graph g = parse_edge_list("0 1\n1 2\n");
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(EdgeList, HeaderDeclaresIsolatedVertices) {
    const Graph g = parse_edge_list("n 4\n0 1\n");
    EXPECT_EQ(g.vertex_count(), 4u);
    EXPECT_EQ(g.degree(2), 0u);
    EXPECT_EQ(g.degree(3), 0u);
}

TEST(EdgeList, CommentsAndBlankLines) {
    const Graph g = parse_edge_list("# a triangle\n\nn 3   # three vertices\n0 1\n 1\t2 \n\n2 0 # closing edge\n");
    EXPECT_EQ(g, complete_graph(3));
}

TEST(EdgeList, ErrorsNameKindAndLine) {
    auto expect_error = [](std::string_view text, ParseErrorKind kind, std::size_t line) {
        try {
            parse_edge_list(text);
            ADD_FAILURE() << "no error for: " << text;
        } catch (const ParseError& e) {
            EXPECT_EQ(e.kind(), kind) << text;
            EXPECT_EQ(e.line(), line) << text;
            EXPECT_NE(std::string(e.what()).find("line " + std::to_string(line)), std::string::npos);
        }
    };
    expect_error("0 0\n", ParseErrorKind::self_loop, 1);
    expect_error("0 1\n1 2\n2 1\n", ParseErrorKind::duplicate_edge, 3);
    expect_error("0 1\n# c\n1 x\n", ParseErrorKind::bad_token, 3);
    expect_error("0 1.5\n", ParseErrorKind::bad_token, 1);
    expect_error("0 -1\n", ParseErrorKind::bad_token, 1);
    expect_error("n 3\n0 1\n1 3\n", ParseErrorKind::vertex_out_of_range, 3);
    expect_error("0 1 2\n", ParseErrorKind::malformed_line, 1);
    expect_error("0 1\nn 3\n", ParseErrorKind::malformed_line, 2);
}

TEST(EdgeList, WriterRoundTrip) {
    for (const Graph& g : fixture_graphs()) {
        const std::string text = write_edge_list(g);
        EXPECT_EQ(parse_edge_list(text), g);
        EXPECT_EQ(write_edge_list(parse_edge_list(text)), text);
    }
    EXPECT_EQ(write_edge_list(parse_edge_list("2 1\n0 2\n")), "n 3\n0 2\n1 2\n");
}

TEST(GraphCore, RejectsInvalidConstruction) {
    EXPECT_THROW(Graph(3, {{0, 0}}), GraphError);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), GraphError);
    EXPECT_THROW(Graph(2, {{0, 2}}), GraphError);
}

TEST(GraphCore, Distances) {
    const Graph c6 = cycle_graph(6);
    EXPECT_EQ(distance(c6, 0, 3), Distance{3});
    EXPECT_EQ(distance(c6, 4, 4), Distance{0});
    EXPECT_EQ(distance(two_disjoint_edges(), 0, 3), Distance::infinite());
    EXPECT_THROW(distance(c6, 0, 6), GraphError);
    EXPECT_THROW(distance(c6, 9, 0), GraphError);
}

TEST(GraphCore, DistanceMatchesFloydWarshall) {
    for (const Graph& g : fixture_graphs()) {
        const auto fw = oracle::all_pairs(g);
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                const Distance d = distance(g, u, v);
                if (fw[u][v] < 0) {
                    EXPECT_TRUE(d.is_infinite());
                } else {
                    EXPECT_EQ(d, Distance(static_cast<std::uint32_t>(fw[u][v])));
                }
                EXPECT_EQ(d == Distance{1}, g.adjacent(u, v));
            }
    }
}

TEST(GraphCore, SpheresAndBalls) {
    const Graph c6 = cycle_graph(6);
    EXPECT_EQ(sphere(c6, 0, 2), (VertexSet{2, 4}));
    EXPECT_EQ(ball(c6, 3, 0), (VertexSet{3}));
    const Graph k4 = complete_graph(4);
    EXPECT_EQ(sphere(k4, 0, 1), (VertexSet{1, 2, 3}));
    EXPECT_TRUE(sphere(k4, 0, 2).empty());
    EXPECT_THROW(sphere(k4, 4, 1), GraphError);
}

TEST(GraphCore, SpherePartitionAndDegreeSum) {
    for (const Graph& g : fixture_graphs()) {
        std::size_t degree_sum = 0;
        for (Vertex x = 0; x < g.vertex_count(); ++x) {
            EXPECT_EQ(sphere(g, x, 1).size(), g.degree(x));
            degree_sum += g.degree(x);
            for (std::uint32_t r = 0; r <= 4; ++r) {
                std::size_t total = 0;
                for (std::uint32_t i = 0; i <= r; ++i) total += sphere(g, x, i).size();
                EXPECT_EQ(ball(g, x, r).size(), total);
            }
        }
        EXPECT_EQ(degree_sum, 2 * g.edge_count());
    }
}

TEST(GraphCore, CommonNeighbors) {
    EXPECT_EQ(common_neighbors(complete_graph(4), 0, 1), (VertexSet{2, 3}));
    EXPECT_TRUE(common_neighbors(cycle_graph(6), 0, 1).empty());
    const auto s3 = generate_sharpness(3);
    EXPECT_EQ(common_neighbors(s3.graph, s3.x, s3.y), (VertexSet{s3.z[0]}));
    EXPECT_THROW(common_neighbors(complete_graph(4), 2, 2), GraphError);
    EXPECT_THROW(common_neighbors(complete_graph(4), 0, 7), GraphError);
}

TEST(GraphCore, MinDegreeAndDiameter) {
    const Graph k6 = complete_graph(6);
    EXPECT_EQ(min_degree(k6), 5u);
    EXPECT_EQ(diameter(k6), Distance{1});
    EXPECT_EQ(diameter(path_graph(3)), Distance{2});
    EXPECT_EQ(min_degree(generate_sharpness(2).graph), 4u);
    EXPECT_EQ(diameter(two_disjoint_edges()), Distance::infinite());
    EXPECT_THROW(min_degree(Graph{}), GraphError);
    EXPECT_THROW(diameter(Graph{}), GraphError);
}

TEST(GraphCore, DiameterLemmaOnFixtures) {
    for (const Graph& g : fixture_graphs()) {
        if (2 * min_degree(g) + 1 >= g.vertex_count()) {
            EXPECT_LE(diameter(g), Distance{2});
        }
    }
}

TEST(Generators, SharpnessLayoutAndDegrees) {
    for (std::size_t l = 2; l <= 12; ++l) {
        const auto s = generate_sharpness(l);
        const Graph& g = s.graph;
        const std::size_t n = g.vertex_count();
        EXPECT_EQ(n, 3 * l + 3);
        EXPECT_EQ(3 * (min_degree(g) + 2), 2 * n);
        EXPECT_EQ(s.x, 0u);
        EXPECT_EQ(s.y, 1u);
        EXPECT_EQ(s.z.size(), l - 2);
        EXPECT_EQ(s.v, n - 1);
        EXPECT_EQ(g.degree(s.x), 2 * l);
        EXPECT_EQ(g.degree(s.y), 2 * l);
        for (Vertex xi : s.xs) EXPECT_EQ(g.degree(xi), 2 * l);
        for (Vertex yi : s.ys) EXPECT_EQ(g.degree(yi), 2 * l);
        for (Vertex zi : s.z) EXPECT_EQ(g.degree(zi), 2 * l + 4);
        EXPECT_EQ(g.degree(s.v), 2 * l + 2);
        EXPECT_EQ(common_neighbors(g, s.x, s.y).size(), l - 2);
    }
    EXPECT_EQ(generate_sharpness(2).graph.vertex_count(), 9u);
    EXPECT_EQ(generate_sharpness(3).graph.degree(2), 10u);
    EXPECT_EQ(common_neighbors(generate_sharpness(4).graph, 0, 1).size(), 2u);
    EXPECT_THROW(generate_sharpness(1), std::invalid_argument);
}

TEST(Generators, StandardGraphs) {
    EXPECT_EQ(complete_graph(4).edge_count(), 6u);
    const Graph c5 = cycle_graph(5);
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2u);
    const Graph q3 = hypercube_graph(3);
    EXPECT_EQ(q3.vertex_count(), 8u);
    for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(q3.degree(v), 3u);
    EXPECT_TRUE(q3.adjacent(0b101, 0b100));
    EXPECT_FALSE(q3.adjacent(0b101, 0b110));
    const Graph p = petersen_graph();
    EXPECT_EQ(p.edge_count(), 15u);
    EXPECT_EQ(diameter(p), Distance{2});
    for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3u);
    EXPECT_THROW(cycle_graph(2), std::invalid_argument);
    EXPECT_THROW(complete_graph(0), std::invalid_argument);
    EXPECT_THROW(hypercube_graph(17), std::invalid_argument);
}

TEST(Generators, RandomMinDegree) {
    EXPECT_GE(min_degree(random_min_degree_graph(9, 5, 1)), 5u);
    for (std::uint64_t seed : {0ULL, 7ULL, 123456789ULL}) EXPECT_EQ(random_min_degree_graph(5, 4, seed), complete_graph(5));
    EXPECT_THROW(random_min_degree_graph(4, 4, 3), std::invalid_argument);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 2 + seed % 25;
        const std::size_t delta = seed % n;
        const Graph g = random_min_degree_graph(n, delta, seed);
        EXPECT_EQ(g.vertex_count(), n);
        EXPECT_GE(min_degree(g), delta);
        EXPECT_EQ(g, random_min_degree_graph(n, delta, seed));
    }
}
