#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "orhyp/hypergraph.hpp"
#include "orhyp/report.hpp"

namespace orhyp {

// The verifiable identities and bounds, one per law id.
enum class LawId {
    lemma_2_1,        // H(G*) = H(G)^T
    lemma_2_2,        // L(G) = H H^T, L(G*) = H^T H
    theorem_3_1,      // Lambda(G) = [[G*]]_2 for linear G
    corollary_3_3,    // Lambda(G*) = G for 2-uniform linear G
    corollary_3_7,    // Lambda(G) = G* for 2-regular linear G
    theorem_4_1,      // A(G) = A([[G]]_2) = A([G]_2)
    corollary_4_2,    // A(G*) = A(Lambda(G)) for linear G
    lemma_4_3,        // L(G*) = kI - A(G*) for k-uniform G
    theorem_4_4,      // lambda_max(A(Lambda(G))) <= k for k-uniform linear G
    lemma_4_5,        // L(G) = rI - A(G) for r-regular G
    theorem_4_6,      // lambda_max(A(G)) <= r for r-regular G
    lemma_4_7,        // L(G), L(G*) share nonzero eigenvalues
    proposition_4_8,  // trace gap forces an eigenvalue gap
    lemma_5_1,        // switching similarity identities
    theorem_5_2,      // switching preserves spectra
    corollary_5_3,    // independent switchings of G and G* share nonzero Laplacian spectra
    theorem_5_4,      // induced switchings on dual, 2-section and line graph
    theorem_6_1,      // L(G) = (r - lambda) I + lambda J for a design hypergraph
    corollary_6_2,    // C C^T = (r - lambda) I + lambda J
};

const std::vector<LawId>& all_laws();
std::string_view law_name(LawId id);

// Throws lookup_error for an unknown id.
LawId parse_law(std::string_view name);

struct LawContext {
    // Seeds the switching functions drawn by the switching laws.
    std::uint64_t seed = 0;
};

// Hypotheses are checked first; a report with hypothesis_met == false carries
// no verdict. Eigenvalue bounds use a 1e-8 slack, identities are exact.
LawReport check_law(LawId id, const OrientedHypergraph& g, const LawContext& ctx = {});
LawReport check_law(std::string_view id, const OrientedHypergraph& g, const LawContext& ctx = {});

} // namespace orhyp
