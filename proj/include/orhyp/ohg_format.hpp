#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orhyp/designs.hpp"
#include "orhyp/hypergraph.hpp"

namespace orhyp {

// ohg v1, line oriented; '#' starts a comment, blank lines are ignored.
//
//   ohg 1
//   vertex <label>
//   edge <label> = <vertex>:<+|-> ...
//
// Vertices must be declared before edges reference them. Errors are
// parse_error with the offending line number.
OrientedHypergraph parse_ohg(std::string_view text);

// Canonical form: header, vertices in stored order, edges in stored order
// with memberships in vertex order and explicit signs.
std::string serialize_ohg(const OrientedHypergraph& g);

// bibd file, same lexical rules:
//
//   bibd
//   params <v> <b> <r> <k> <lambda>     (optional)
//   point <label>
//   block <label> = <point> ...
struct BibdDocument {
    std::vector<std::string> points;
    std::vector<BlockSpec> blocks;
    std::optional<DesignParameters> declared;
};

BibdDocument parse_bibd(std::string_view text);

// Header, params, points, then blocks with members in point order.
std::string serialize_bibd(const BlockDesign& d);

} // namespace orhyp
