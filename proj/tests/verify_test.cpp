#include <gtest/gtest.h>

#include <filesystem>

#include "orhyp/errors.hpp"
#include "orhyp/ohg_format.hpp"
#include "orhyp/verify.hpp"
#include "test_fixtures.hpp"

using namespace orhyp;
namespace fs = std::filesystem;

namespace {

// Fails whenever some vertex has degree 3 or more; unmet on edgeless input.
LawSpec degree_law() {
    return {"fake-degree",
            [](std::uint64_t) { return GeneratorConstraints{}; },
            [](const OrientedHypergraph& g, const LawContext&) {
                LawReport r;
                r.law = "fake-degree";
                if (g.edge_count() == 0) {
                    r.not_met("edgeless");
                    return r;
                }
                r.add("max degree below 3", g.vertex_count() == 0 || max_degree(g) < 3);
                r.seal(g);
                return r;
            }};
}

LawSpec never_met() {
    return {"fake-unmet", [](std::uint64_t) { return GeneratorConstraints{}; },
            [](const OrientedHypergraph&, const LawContext&) {
                LawReport r;
                r.law = "fake-unmet";
                r.not_met("never");
                return r;
            }};
}

fs::path scratch_dir(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("orhyp-test-" + name);
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST(Verify, FailureWritesReplayableWitness) {
    const auto dir = scratch_dir("witness");
    VerifyOptions opt;
    opt.trials = 50;
    opt.seed = 3;
    opt.witness_dir = dir;
    const auto res = run_verify(opt, {degree_law()});
    ASSERT_EQ(res.laws.size(), 1u);
    const auto& s = res.laws[0];
    ASSERT_EQ(s.outcome, Outcome::violation);
    EXPECT_EQ(res.exit_code(), 3);
    ASSERT_TRUE(s.witness_file.has_value());
    ASSERT_TRUE(fs::exists(*s.witness_file));
    EXPECT_EQ(s.witness_file->filename().string(), "witness-fake-degree-" + std::to_string(s.failure_seed) + ".ohg");

    std::ifstream in(*s.witness_file);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto text = ss.str();
    EXPECT_NE(text.find("--seed " + std::to_string(s.failure_seed)), std::string::npos);
    const auto g = parse_ohg(text);
    EXPECT_EQ(g, *s.failure->witness);

    VerifyOptions replay;
    replay.instance = g;
    replay.seed = s.failure_seed;
    const auto again = run_verify(replay, {degree_law()});
    EXPECT_EQ(again.laws[0].outcome, Outcome::violation);
    EXPECT_EQ(again.exit_code(), 3);
    fs::remove_all(dir);
}

TEST(Verify, DeterministicAcrossRuns) {
    VerifyOptions opt;
    opt.trials = 50;
    opt.seed = 11;
    const auto a = run_verify(opt, {degree_law()});
    const auto b = run_verify(opt, {degree_law()});
    EXPECT_EQ(a.laws[0].failure_seed, b.laws[0].failure_seed);
    EXPECT_EQ(a.laws[0].attempts, b.laws[0].attempts);
}

TEST(Verify, UnmetHypothesisExitsTwo) {
    VerifyOptions opt;
    opt.trials = 5;
    const auto res = run_verify(opt, {never_met()});
    EXPECT_EQ(res.laws[0].outcome, Outcome::hypothesis_not_met);
    EXPECT_EQ(res.laws[0].attempts, 500u);
    EXPECT_EQ(res.exit_code(), 2);
    EXPECT_EQ(run_verify(opt, {never_met(), degree_law()}).exit_code(), 3);
}

TEST(Verify, SelectionAndUnknownLaw) {
    VerifyOptions opt;
    opt.trials = 5;
    opt.laws = {"lemma-2.1", "theorem-5.4"};
    const auto res = run_verify(opt);
    ASSERT_EQ(res.laws.size(), 2u);
    EXPECT_EQ(res.laws[1].law, "theorem-5.4");
    EXPECT_EQ(res.exit_code(), 0);
    opt.laws = {"lemma-0.0"};
    EXPECT_THROW(run_verify(opt), lookup_error);
}

TEST(Verify, IndependentOfOtherLaws) {
    VerifyOptions one;
    one.trials = 20;
    one.laws = {"proposition-4.8"};
    VerifyOptions both = one;
    both.laws = {"lemma-2.1", "proposition-4.8"};
    EXPECT_EQ(run_verify(one).laws[0].attempts, run_verify(both).laws[1].attempts);
}

TEST(Verify, InstanceMode) {
    VerifyOptions opt;
    opt.instance = fixtures::p3();
    const auto res = run_verify(opt);
    EXPECT_EQ(res.laws.size(), 19u);
    EXPECT_EQ(res.exit_code(), 2);  // P3 is not regular, among others
    for (const auto& s : res.laws) EXPECT_NE(s.outcome, Outcome::violation) << s.law;
}
