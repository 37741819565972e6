#include <gtest/gtest.h>

#include <set>

#include "orhyp/designs.hpp"
#include "orhyp/matrices.hpp"
#include "test_fixtures.hpp"

using namespace orhyp;

namespace {

std::vector<std::string> labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
}

std::vector<BlockSpec> fano_blocks() {
    const auto d = fano();
    std::vector<BlockSpec> out;
    for (const auto& b : d.blocks()) {
        BlockSpec s{b.label, {}};
        for (auto p : b.points) s.points.push_back(std::to_string(p));
        out.push_back(s);
    }
    return out;
}

} // namespace

TEST(Design, FanoParameters) {
    const auto d = fano();
    EXPECT_EQ(d.parameters(), (DesignParameters{7, 7, 3, 3, 1}));
    EXPECT_EQ(format_parameters(d.parameters()), "(7,7,3,3,1)");
    // exhaustive pair oracle: each of the 21 pairs in exactly one block
    int pairs = 0;
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j) {
            int hits = 0;
            for (const auto& b : d.blocks()) {
                const std::set<std::size_t> s(b.points.begin(), b.points.end());
                hits += s.count(i) && s.count(j);
            }
            EXPECT_EQ(hits, 1) << i << "," << j;
            ++pairs;
        }
    EXPECT_EQ(pairs, 21);
}

TEST(Design, FanoIdentities) {
    const auto d = fano();
    const IntMatrix expected = 2 * IntMatrix::identity(7) + IntMatrix::ones(7, 7);
    const auto c = design_incidence_matrix(d);
    EXPECT_EQ(c * mat_transpose(c), expected);
    EXPECT_EQ(laplacian_matrix(design_to_hypergraph(d)), expected);
    const auto r = check_design_identity(d);
    EXPECT_TRUE(r.passed()) << render_report(r);
}

TEST(Design, SmallDesigns) {
    const auto one = validate_design({"a", "b"}, {{"x", {"a", "b"}}});
    ASSERT_TRUE(one.ok()) << one.violation;
    EXPECT_EQ(one.design->parameters(), (DesignParameters{2, 1, 1, 2, 1}));

    std::vector<BlockSpec> pairs;
    const auto pts = labels(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) pairs.push_back({"p" + std::to_string(i) + std::to_string(j), {pts[i], pts[j]}});
    const auto complete = validate_design(pts, pairs);
    ASSERT_TRUE(complete.ok()) << complete.violation;
    EXPECT_EQ(complete.design->parameters(), (DesignParameters{4, 6, 3, 2, 1}));
    const auto c = design_incidence_matrix(*complete.design);
    EXPECT_EQ(c * mat_transpose(c), 2 * IntMatrix::identity(4) + IntMatrix::ones(4, 4));
}

TEST(Design, EverySingleMembershipFlipRejected) {
    const auto base = fano_blocks();
    const auto pts = labels(7);
    int rejected = 0;
    for (std::size_t j = 0; j < base.size(); ++j) {
        for (const auto& p : pts) {
            auto blocks = base;
            auto& members = blocks[j].points;
            auto it = std::find(members.begin(), members.end(), p);
            if (it != members.end()) members.erase(it);
            else members.push_back(p);
            const auto res = validate_design(pts, blocks);
            EXPECT_FALSE(res.ok()) << "block " << j << " point " << p;
            rejected += !res.ok();
        }
    }
    EXPECT_EQ(rejected, 49);
}

TEST(Design, ReplacementNamesPair) {
    auto blocks = fano_blocks();
    blocks[0].points = {"0", "1", "2"};  // was {0,1,3}
    const auto res = validate_design(labels(7), blocks);
    ASSERT_FALSE(res.ok());
    EXPECT_NE(res.violation.find("pair {"), std::string::npos) << res.violation;
}

TEST(Design, StructuralRejections) {
    EXPECT_FALSE(validate_design({}, {}).ok());
    EXPECT_FALSE(validate_design({"a"}, {{"x", {"a"}}}).ok());
    EXPECT_FALSE(validate_design({"a", "b"}, {{"x", {"a", "c"}}}).ok());
    EXPECT_FALSE(validate_design({"a", "b"}, {{"x", {"a", "a"}}}).ok());
    EXPECT_FALSE(validate_design({"a", "a"}, {{"x", {"a"}}}).ok());
    EXPECT_FALSE(validate_design({"a", "b"}, {{"x", {}}}).ok());
}

TEST(Design, DeclaredParameters) {
    EXPECT_TRUE(validate_design(labels(7), fano_blocks(), DesignParameters{7, 7, 3, 3, 1}).ok());
    const auto bad = validate_design(labels(7), fano_blocks(), DesignParameters{7, 7, 3, 3, 2});
    ASSERT_FALSE(bad.ok());
    EXPECT_NE(bad.violation.find("declared"), std::string::npos);
}

TEST(Design, CirculantFamily) {
    // {i, i+1, i+3} mod 7 is the only shift pattern among these that is a difference set
    const auto pts = labels(7);
    auto make = [&](int a, int b) {
        std::vector<BlockSpec> blocks;
        for (int i = 0; i < 7; ++i)
            blocks.push_back({"c" + std::to_string(i),
                              {std::to_string(i), std::to_string((i + a) % 7), std::to_string((i + b) % 7)}});
        return validate_design(pts, blocks);
    };
    EXPECT_TRUE(make(1, 3).ok());
    EXPECT_FALSE(make(1, 2).ok());
}

TEST(Design, HypergraphRoundTrip) {
    const auto g = design_to_hypergraph(fano());
    const auto res = design_of_hypergraph(g);
    ASSERT_TRUE(res.ok());
    EXPECT_EQ(design_to_hypergraph(*res.design), g);
    EXPECT_FALSE(design_of_hypergraph(fixtures::p3()).ok());
}
