#pragma once

#include "orhyp/hypergraph.hpp"
#include "orhyp/int_matrix.hpp"

namespace orhyp {

// n x m, entry (i, j) = sigma(vi, ej) when incident, else 0.
IntMatrix incidence_matrix(const OrientedHypergraph& g);

// n x n, entry (i, j) = sum over edges containing both of sgn_e(vi, vj).
IntMatrix adjacency_matrix(const OrientedHypergraph& g);

IntMatrix degree_matrix(const OrientedHypergraph& g);

// D(G) - A(G)
IntMatrix laplacian_matrix(const OrientedHypergraph& g);

} // namespace orhyp
