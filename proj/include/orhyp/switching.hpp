#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "orhyp/hypergraph.hpp"
#include "orhyp/int_matrix.hpp"
#include "orhyp/report.hpp"
#include "orhyp/rng.hpp"

namespace orhyp {

using SwitchMap = std::map<std::string, Sign>;

// (zeta, xi): a vertex-switching and an edge-switching function. Both maps
// must be total over the target hypergraph; there are no default values.
struct SwitchingPair {
    SwitchMap vertex_switch;
    SwitchMap edge_switch;
};

// Positional sign vectors; throw coverage_error naming a missing or foreign label.
std::vector<Sign> vertex_switch_signs(const OrientedHypergraph& g, const SwitchMap& zeta);
std::vector<Sign> edge_switch_signs(const OrientedHypergraph& g, const SwitchMap& xi);

SwitchingPair identity_switch(const OrientedHypergraph& g);
SwitchingPair random_switch(const OrientedHypergraph& g, Rng& rng);

// The pair (xi, zeta) acting on the incidence dual.
SwitchingPair dual_switch(const SwitchingPair& s);

// sigma'(v, e) = zeta(v) * sigma(v, e) * xi(e)
OrientedHypergraph apply_switch(const OrientedHypergraph& g, const SwitchingPair& s);

// D_n(zeta) and D_m(xi) in stored vertex / edge order.
IntMatrix switch_diag_vertex(const SwitchingPair& s, const OrientedHypergraph& g);
IntMatrix switch_diag_edge(const SwitchingPair& s, const OrientedHypergraph& g);

// Edge switch on strict_k_section(g, k): each section edge takes the value of
// the edge it was cut from.
SwitchMap induced_section_switch(const OrientedHypergraph& g, const SwitchMap& xi, std::size_t k = 2);

// Edge switch on intersection_graph(g): edge "ei~ej" takes zeta of the shared
// vertex. Throws precondition_error for non-linear g.
SwitchMap induced_linegraph_switch(const OrientedHypergraph& g, const SwitchMap& zeta);

// The six incidence/adjacency/Laplacian similarity identities under (zeta, xi)
// and its dual action, spectral invariance of A, L, A*, L*, and the nonzero
// Laplacian spectrum match between G^(zeta,xi) and (G*)^(xi2,zeta2) where
// `other` supplies the independent (zeta2, xi2).
LawReport check_switch_identities(const OrientedHypergraph& g, const SwitchingPair& s, const SwitchingPair& other);

// Dual, strict 2-section and intersection graph of a switched linear
// hypergraph versus the switched constructions with induced switchings.
LawReport check_induced_switchings(const OrientedHypergraph& g, const SwitchingPair& s);

} // namespace orhyp
