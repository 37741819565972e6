#include "orhyp/matrices.hpp"

namespace orhyp {

IntMatrix incidence_matrix(const OrientedHypergraph& g) {
    IntMatrix h(g.vertex_count(), g.edge_count());
    for (std::size_t j = 0; j < g.edge_count(); ++j)
        for (const auto& m : g.edge(j).members) h(m.vertex, j) = m.sign.value();
    return h;
}

IntMatrix adjacency_matrix(const OrientedHypergraph& g) {
    IntMatrix a(g.vertex_count(), g.vertex_count());
    for (const auto& e : g.edges()) {
        for (std::size_t p = 0; p < e.members.size(); ++p) {
            for (std::size_t q = p + 1; q < e.members.size(); ++q) {
                const auto& vi = e.members[p];
                const auto& vj = e.members[q];
                const int sgn = -(vi.sign * vj.sign).value();
                a(vi.vertex, vj.vertex) += sgn;
                a(vj.vertex, vi.vertex) += sgn;
            }
        }
    }
    return a;
}

IntMatrix degree_matrix(const OrientedHypergraph& g) {
    const auto d = degrees(g);
    std::vector<IntMatrix::value_type> diag(d.begin(), d.end());
    return IntMatrix::diagonal(diag);
}

IntMatrix laplacian_matrix(const OrientedHypergraph& g) { return degree_matrix(g) - adjacency_matrix(g); }

} // namespace orhyp
