#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orhyp/hypergraph.hpp"
#include "orhyp/int_matrix.hpp"
#include "orhyp/report.hpp"

namespace orhyp {

struct DesignParameters {
    std::size_t v = 0;
    std::size_t b = 0;
    std::size_t r = 0;
    std::size_t k = 0;
    std::size_t lambda = 0;

    friend bool operator==(const DesignParameters&, const DesignParameters&) = default;
};

// "(v,b,r,k,lambda)"
std::string format_parameters(const DesignParameters& p);

struct BlockSpec {
    std::string label;
    std::vector<std::string> points;
};

struct Block {
    std::string label;
    std::vector<std::size_t> points;  // ascending point positions
};

struct DesignValidation;

// Infers (v, b, r, k, lambda) by counting and checks every BIBD requirement.
// When `declared` is given the inferred parameters must match it.
DesignValidation validate_design(const std::vector<std::string>& points, const std::vector<BlockSpec>& blocks,
                                 const std::optional<DesignParameters>& declared = std::nullopt);

// A validated balanced incomplete block design. Only validate_design builds one.
class BlockDesign {
public:
    const std::vector<std::string>& points() const noexcept { return points_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    const DesignParameters& parameters() const noexcept { return params_; }

private:
    friend DesignValidation validate_design(const std::vector<std::string>&, const std::vector<BlockSpec>&,
                                            const std::optional<DesignParameters>&);
    std::vector<std::string> points_;
    std::vector<Block> blocks_;
    DesignParameters params_;
};

struct DesignValidation {
    std::optional<BlockDesign> design;
    std::string violation;  // first violated requirement when design is absent

    bool ok() const noexcept { return design.has_value(); }
};

// Treats the vertices as points and the edges as blocks, ignoring signs.
DesignValidation design_of_hypergraph(const OrientedHypergraph& g);

// v x b 0/1 matrix C with c_ij = 1 when point i lies in block j.
IntMatrix design_incidence_matrix(const BlockDesign& d);

// All-positive oriented hypergraph with the points as vertices and blocks as edges.
OrientedHypergraph design_to_hypergraph(const BlockDesign& d);

// L(G) = H H^T = (r - lambda) I + lambda J for G = design_to_hypergraph(d), and
// C C^T = (r - lambda) I + lambda J, both exactly.
LawReport check_design_identity(const BlockDesign& d);

// Points 0..6, blocks {i, i+1, i+3} mod 7.
BlockDesign fano();

} // namespace orhyp
