#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orhyp/generator.hpp"
#include "orhyp/laws.hpp"

namespace orhyp {

// A law as the verifier sees it: how to draw instances likely to meet its
// hypothesis, and how to check one instance.
struct LawSpec {
    std::string name;
    std::function<GeneratorConstraints(std::uint64_t trial_seed)> constraints;
    std::function<LawReport(const OrientedHypergraph&, const LawContext&)> check;
};

// Every LawId, in all_laws() order.
std::vector<LawSpec> default_law_specs();

struct VerifyOptions {
    std::vector<std::string> laws;  // names; empty means every spec
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::size_t max_vertices = 10;
    std::size_t max_edges = 8;
    std::optional<OrientedHypergraph> instance;  // verify one instance instead of generating
    std::optional<std::filesystem::path> witness_dir;
};

enum class Outcome { pass, hypothesis_not_met, violation };

struct LawSummary {
    std::string law;
    Outcome outcome = Outcome::pass;
    std::size_t passed_trials = 0;
    std::size_t attempts = 0;
    std::string note;
    std::optional<LawReport> failure;
    std::uint64_t failure_seed = 0;
    std::optional<std::filesystem::path> witness_file;
};

struct VerifyResult {
    std::vector<LawSummary> laws;

    // 3 on any violation, else 2 on any unmet hypothesis, else 0.
    int exit_code() const noexcept;
};

// Generated mode: per law, resamples until `trials` instances meet the
// hypothesis, giving up after 100 * trials attempts. Trial seeds derive from
// the base seed and the law name only, so results are independent of which
// other laws run. Throws lookup_error for an unknown law name.
VerifyResult run_verify(const VerifyOptions& options, const std::vector<LawSpec>& specs = default_law_specs());

// Witness file text: replay comment lines followed by the canonical ohg form.
std::string witness_text(const std::string& law, std::uint64_t seed, const OrientedHypergraph& g);

} // namespace orhyp
