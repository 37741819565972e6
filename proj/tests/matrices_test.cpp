#include <gtest/gtest.h>

#include "orhyp/constructions.hpp"
#include "orhyp/matrices.hpp"
#include "test_fixtures.hpp"

using namespace orhyp;
using fixtures::p3;
using fixtures::to_matrix;

TEST(Matrices, P3AgainstOracle) {
    const auto g = p3();
    const auto ts = oracle::triples(g);
    // Hand values: H has columns e1 = (+,+,0), e2 = (0,+,-).
    const IntMatrix h{{1, 0}, {1, 1}, {0, -1}};
    const IntMatrix a{{0, -1, 0}, {-1, 0, 1}, {0, 1, 0}};
    const IntMatrix l{{1, 1, 0}, {1, 2, -1}, {0, -1, 1}};
    EXPECT_EQ(to_matrix(oracle::incidence(3, 2, ts), 3, 2), h);
    EXPECT_EQ(to_matrix(oracle::adjacency(3, ts), 3, 3), a);
    EXPECT_EQ(to_matrix(oracle::laplacian(3, ts), 3, 3), l);

    EXPECT_EQ(incidence_matrix(g), h);
    EXPECT_EQ(adjacency_matrix(g), a);
    EXPECT_EQ(degree_matrix(g), (IntMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}));
    EXPECT_EQ(laplacian_matrix(g), l);
}

TEST(Matrices, P3Dual) {
    const auto d = incidence_dual(p3());
    EXPECT_EQ(laplacian_matrix(d), (IntMatrix{{2, 1}, {1, 2}}));
    EXPECT_EQ(adjacency_matrix(d), (IntMatrix{{0, -1}, {-1, 0}}));
}

TEST(Matrices, EmptyShapes) {
    const OrientedHypergraph g({"a", "b"}, {});
    EXPECT_EQ(incidence_matrix(g).rows(), 2u);
    EXPECT_EQ(incidence_matrix(g).cols(), 0u);
    EXPECT_EQ(laplacian_matrix(g), IntMatrix(2, 2));
}

TEST(Matrices, FanoDegreeAndLaplacian) {
    const auto g = fixtures::fano_hypergraph();
    EXPECT_EQ(degree_matrix(g), 3 * IntMatrix::identity(7));
    // every pair lies in one block, all signs +1, so each off-diagonal entry is -1
    EXPECT_EQ(adjacency_matrix(g), IntMatrix::identity(7) - IntMatrix::ones(7, 7));
}

TEST(MatricesProperty, MatchBruteForce) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto g = fixtures::random_instance(seed, {}, 10, 8);
        const auto ts = oracle::triples(g);
        const auto n = g.vertex_count();
        const auto m = g.edge_count();
        EXPECT_EQ(incidence_matrix(g), to_matrix(oracle::incidence(n, m, ts), n, m)) << seed;
        EXPECT_EQ(adjacency_matrix(g), to_matrix(oracle::adjacency(n, ts), n, n)) << seed;
        EXPECT_EQ(degree_matrix(g), to_matrix(oracle::degree(n, ts), n, n)) << seed;
        EXPECT_EQ(laplacian_matrix(g), to_matrix(oracle::laplacian(n, ts), n, n)) << seed;
        const auto dts = oracle::dual(ts);
        EXPECT_EQ(laplacian_matrix(incidence_dual(g)), to_matrix(oracle::laplacian(m, dts), m, m)) << seed;
    }
}

TEST(MatricesProperty, FactorizationIdentities) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto g = fixtures::random_instance(seed, {}, 10, 8);
        const auto h = incidence_matrix(g);
        const auto d = incidence_dual(g);
        EXPECT_EQ(incidence_matrix(d), mat_transpose(h));
        EXPECT_EQ(laplacian_matrix(g), h * mat_transpose(h));
        EXPECT_EQ(laplacian_matrix(d), mat_transpose(h) * h);
        EXPECT_EQ(adjacency_matrix(g), adjacency_matrix(strict_k_section(g, 2)));
        EXPECT_EQ(adjacency_matrix(g), adjacency_matrix(k_section(g, 2)));
        EXPECT_TRUE(adjacency_matrix(g).is_symmetric());
    }
}
