#include "orhyp/switching.hpp"

#include <algorithm>

#include "orhyp/constructions.hpp"
#include "orhyp/errors.hpp"
#include "orhyp/matrices.hpp"
#include "orhyp/spectrum.hpp"

namespace orhyp {

namespace {

std::vector<Sign> total_signs(const std::vector<std::string>& labels, const SwitchMap& map, const char* what) {
    std::vector<Sign> out;
    out.reserve(labels.size());
    for (const auto& label : labels) {
        auto it = map.find(label);
        if (it == map.end()) throw coverage_error(std::string(what) + " switch has no value for '" + label + "'");
        out.push_back(it->second);
    }
    if (map.size() != labels.size()) {
        for (const auto& [label, sign] : map) {
            if (std::find(labels.begin(), labels.end(), label) == labels.end())
                throw coverage_error(std::string(what) + " switch names unknown element '" + label + "'");
        }
    }
    return out;
}

std::vector<std::string> edge_labels(const OrientedHypergraph& g) {
    std::vector<std::string> out;
    out.reserve(g.edge_count());
    for (const auto& e : g.edges()) out.push_back(e.label);
    return out;
}

IntMatrix sign_diagonal(const std::vector<Sign>& signs) {
    IntMatrix d(signs.size(), signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) d(i, i) = signs[i].value();
    return d;
}

SwitchMap constant_map(const std::vector<std::string>& labels, Sign s) {
    SwitchMap m;
    for (const auto& l : labels) m.emplace(l, s);
    return m;
}

} // namespace

std::vector<Sign> vertex_switch_signs(const OrientedHypergraph& g, const SwitchMap& zeta) {
    return total_signs(g.vertices(), zeta, "vertex");
}

std::vector<Sign> edge_switch_signs(const OrientedHypergraph& g, const SwitchMap& xi) {
    return total_signs(edge_labels(g), xi, "edge");
}

SwitchingPair identity_switch(const OrientedHypergraph& g) {
    return {constant_map(g.vertices(), Sign::plus()), constant_map(edge_labels(g), Sign::plus())};
}

SwitchingPair random_switch(const OrientedHypergraph& g, Rng& rng) {
    SwitchingPair s;
    for (const auto& v : g.vertices()) s.vertex_switch.emplace(v, rng.coin() ? Sign::minus() : Sign::plus());
    for (const auto& e : g.edges()) s.edge_switch.emplace(e.label, rng.coin() ? Sign::minus() : Sign::plus());
    return s;
}

SwitchingPair dual_switch(const SwitchingPair& s) { return {s.edge_switch, s.vertex_switch}; }

OrientedHypergraph apply_switch(const OrientedHypergraph& g, const SwitchingPair& s) {
    const auto zeta = vertex_switch_signs(g, s.vertex_switch);
    const auto xi = edge_switch_signs(g, s.edge_switch);
    std::vector<Edge> edges = g.edges();
    for (std::size_t j = 0; j < edges.size(); ++j)
        for (auto& m : edges[j].members) m.sign = zeta[m.vertex] * m.sign * xi[j];
    return OrientedHypergraph::from_edges(g.vertices(), std::move(edges));
}

IntMatrix switch_diag_vertex(const SwitchingPair& s, const OrientedHypergraph& g) {
    return sign_diagonal(vertex_switch_signs(g, s.vertex_switch));
}

IntMatrix switch_diag_edge(const SwitchingPair& s, const OrientedHypergraph& g) {
    return sign_diagonal(edge_switch_signs(g, s.edge_switch));
}

SwitchMap induced_section_switch(const OrientedHypergraph& g, const SwitchMap& xi, std::size_t k) {
    const auto signs = edge_switch_signs(g, xi);
    SwitchMap out;
    for (const auto& f : section_edges(g, k, true)) out.emplace(section_edge_label(g, f), signs[f.source]);
    return out;
}

SwitchMap induced_linegraph_switch(const OrientedHypergraph& g, const SwitchMap& zeta) {
    const auto signs = vertex_switch_signs(g, zeta);
    SwitchMap out;
    for (const auto& x : edge_intersections(g)) out.emplace(intersection_edge_label(g, x), signs[x.shared_vertex]);
    return out;
}

namespace {

void exact(LawReport& r, std::string name, const IntMatrix& lhs, const IntMatrix& rhs) {
    const bool ok = lhs == rhs;
    r.add(std::move(name), ok, ok ? std::string{} : describe_difference(lhs, rhs));
}

void same_spectrum(LawReport& r, std::string name, const IntMatrix& lhs, const IntMatrix& rhs) {
    const auto a = symmetric_eigenvalues(lhs);
    const auto b = symmetric_eigenvalues(rhs);
    r.add(std::move(name), spectra_equal(a, b));
}

} // namespace

LawReport check_switch_identities(const OrientedHypergraph& g, const SwitchingPair& s, const SwitchingPair& other) {
    LawReport r;
    r.law = "switching";
    const auto dn = switch_diag_vertex(s, g);
    const auto dm = switch_diag_edge(s, g);
    const auto switched = apply_switch(g, s);
    const auto dual = incidence_dual(g);
    const auto dual_switched = apply_switch(dual, dual_switch(s));

    exact(r, "lemma-5.1 (1) H(G^(z,x)) = Dn(z) H(G) Dm(x)", incidence_matrix(switched),
          dn * incidence_matrix(g) * dm);
    exact(r, "lemma-5.1 (2) A(G^(z,x)) = Dn(z) A(G) Dn(z)", adjacency_matrix(switched), dn * adjacency_matrix(g) * dn);
    exact(r, "lemma-5.1 (3) L(G^(z,x)) = Dn(z) L(G) Dn(z)", laplacian_matrix(switched), dn * laplacian_matrix(g) * dn);
    exact(r, "lemma-5.1 (4) H((G*)^(x,z)) = Dm(x) H(G*) Dn(z)", incidence_matrix(dual_switched),
          dm * incidence_matrix(dual) * dn);
    exact(r, "lemma-5.1 (5) A((G*)^(x,z)) = Dm(x) A(G*) Dm(x)", adjacency_matrix(dual_switched),
          dm * adjacency_matrix(dual) * dm);
    exact(r, "lemma-5.1 (6) L((G*)^(x,z)) = Dm(x) L(G*) Dm(x)", laplacian_matrix(dual_switched),
          dm * laplacian_matrix(dual) * dm);

    same_spectrum(r, "theorem-5.2 (1) spec A(G) = spec A(G^(z,x))", adjacency_matrix(g), adjacency_matrix(switched));
    same_spectrum(r, "theorem-5.2 (2) spec L(G) = spec L(G^(z,x))", laplacian_matrix(g), laplacian_matrix(switched));
    same_spectrum(r, "theorem-5.2 (3) spec A(G*) = spec A((G*)^(x,z))", adjacency_matrix(dual),
                  adjacency_matrix(dual_switched));
    same_spectrum(r, "theorem-5.2 (4) spec L(G*) = spec L((G*)^(x,z))", laplacian_matrix(dual),
                  laplacian_matrix(dual_switched));

    const auto lhs = symmetric_eigenvalues(laplacian_matrix(switched));
    const auto rhs = symmetric_eigenvalues(laplacian_matrix(apply_switch(dual, dual_switch(other))));
    r.add("corollary-5.3 nonzero spec L(G^(z1,x1)) = nonzero spec L((G*)^(x2,z2))", nonzero_spectra_equal(lhs, rhs));
    r.seal(g);
    return r;
}

LawReport check_induced_switchings(const OrientedHypergraph& g, const SwitchingPair& s) {
    LawReport r;
    r.law = "theorem-5.4";
    if (auto bad = find_nonlinear_pair(g)) {
        r.not_met("edges '" + g.edge(bad->first).label + "' and '" + g.edge(bad->second).label +
                  "' share more than one vertex");
        return r;
    }
    const auto switched = apply_switch(g, s);

    r.add("theorem-5.4 (1) (G^(z,x))* = (G*)^(x,z)",
          incidence_dual(switched) == apply_switch(incidence_dual(g), dual_switch(s)));

    const auto section = strict_k_section(g, 2);
    const SwitchingPair section_switch{s.vertex_switch, induced_section_switch(g, s.edge_switch, 2)};
    r.add("theorem-5.4 (2) [[G^(z,x)]]_2 = [[G]]_2^(z,x^)",
          strict_k_section(switched, 2) == apply_switch(section, section_switch));

    const auto line = intersection_graph(g);
    const SwitchingPair line_switch{s.edge_switch, induced_linegraph_switch(g, s.vertex_switch)};
    r.add("theorem-5.4 (3) Lambda(G^(z,x)) = Lambda(G)^(x,z^)",
          intersection_graph(switched) == apply_switch(line, line_switch));
    r.seal(g);
    return r;
}

} // namespace orhyp
