#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "orhyp/hypergraph.hpp"

namespace orhyp {

struct GeneratorConstraints {
    bool linear = false;
    std::optional<std::size_t> k_uniform;
    std::optional<std::size_t> r_regular;
    bool two_regular = false;
    bool all_positive = false;
    // Vertices and edges form a balanced incomplete block design, all signs +1.
    bool bibd = false;
};

struct GeneratorConfig {
    std::uint64_t seed = 0;
    std::size_t max_vertices = 10;
    std::size_t max_edges = 8;
    std::size_t min_edge_size = 0;
    std::optional<std::size_t> max_edge_size;  // defaults to max_vertices
    GeneratorConstraints constraints;
};

inline constexpr int kGeneratorAttemptCap = 10000;

// "linear,k-uniform(3)" style summary; "none" when unconstrained.
std::string describe(const GeneratorConstraints& c);

// Throws precondition_error when no instance within the size bounds can
// satisfy the constraint set.
void check_satisfiable(const GeneratorConfig& config);

// Deterministic in config. Vertices are v1..vn and edges e1..em; signs are
// uniform +-1 unless all_positive. Constraints are enforced by rejection
// sampling; generation_error after kGeneratorAttemptCap attempts.
OrientedHypergraph generate(const GeneratorConfig& config);

} // namespace orhyp
