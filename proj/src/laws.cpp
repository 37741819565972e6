#include "orhyp/laws.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "orhyp/constructions.hpp"
#include "orhyp/designs.hpp"
#include "orhyp/errors.hpp"
#include "orhyp/matrices.hpp"
#include "orhyp/rng.hpp"
#include "orhyp/spectrum.hpp"
#include "orhyp/switching.hpp"

namespace orhyp {

namespace {

struct LawEntry {
    LawId id;
    std::string_view name;
};

constexpr std::array kLaws{
    LawEntry{LawId::lemma_2_1, "lemma-2.1"},         LawEntry{LawId::lemma_2_2, "lemma-2.2"},
    LawEntry{LawId::theorem_3_1, "theorem-3.1"},     LawEntry{LawId::corollary_3_3, "corollary-3.3"},
    LawEntry{LawId::corollary_3_7, "corollary-3.7"}, LawEntry{LawId::theorem_4_1, "theorem-4.1"},
    LawEntry{LawId::corollary_4_2, "corollary-4.2"}, LawEntry{LawId::lemma_4_3, "lemma-4.3"},
    LawEntry{LawId::theorem_4_4, "theorem-4.4"},     LawEntry{LawId::lemma_4_5, "lemma-4.5"},
    LawEntry{LawId::theorem_4_6, "theorem-4.6"},     LawEntry{LawId::lemma_4_7, "lemma-4.7"},
    LawEntry{LawId::proposition_4_8, "proposition-4.8"}, LawEntry{LawId::lemma_5_1, "lemma-5.1"},
    LawEntry{LawId::theorem_5_2, "theorem-5.2"},     LawEntry{LawId::corollary_5_3, "corollary-5.3"},
    LawEntry{LawId::theorem_5_4, "theorem-5.4"},     LawEntry{LawId::theorem_6_1, "theorem-6.1"},
    LawEntry{LawId::corollary_6_2, "corollary-6.2"},
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

void exact(LawReport& r, std::string name, const IntMatrix& lhs, const IntMatrix& rhs) {
    const bool ok = lhs == rhs;
    r.add(std::move(name), ok, ok ? std::string{} : describe_difference(lhs, rhs));
}

bool require_linear(LawReport& r, const OrientedHypergraph& g) {
    if (auto bad = find_nonlinear_pair(g)) {
        r.not_met("not linear: edges '" + g.edge(bad->first).label + "' and '" + g.edge(bad->second).label +
                  "' share more than one vertex");
        return false;
    }
    return true;
}

void check_upper_bound(LawReport& r, std::string name, const Spectrum& s, double bound) {
    if (s.empty()) {
        r.add(std::move(name), true, "empty spectrum");
        return;
    }
    const bool ok = s.max() <= bound + kSpectralTolerance;
    r.add(std::move(name), ok, "lambda_max = " + fmt(s.max()) + ", bound " + fmt(bound));
}

// Both switchings are drawn from the context seed so a witness replays exactly.
std::pair<SwitchingPair, SwitchingPair> switchings(const OrientedHypergraph& g, const LawContext& ctx) {
    Rng first(mix_seed(ctx.seed, 1));
    Rng second(mix_seed(ctx.seed, 2));
    return {random_switch(g, first), random_switch(g, second)};
}

LawReport filtered(const LawReport& full, std::string_view law) {
    LawReport r;
    r.law = std::string(law);
    const std::string prefix = std::string(law) + " ";
    for (const auto& c : full.checks)
        if (c.name.rfind(prefix, 0) == 0) r.checks.push_back(c);
    return r;
}

bool is_design_hypergraph(LawReport& r, const OrientedHypergraph& g, bool need_positive) {
    if (need_positive) {
        for (const auto& e : g.edges())
            for (const auto& m : e.members)
                if (!m.sign.positive()) {
                    r.not_met("incidence (" + g.vertices()[m.vertex] + "," + e.label + ") is not +1");
                    return false;
                }
    }
    return true;
}

} // namespace

const std::vector<LawId>& all_laws() {
    static const std::vector<LawId> ids = [] {
        std::vector<LawId> out;
        for (const auto& e : kLaws) out.push_back(e.id);
        return out;
    }();
    return ids;
}

std::string_view law_name(LawId id) {
    for (const auto& e : kLaws)
        if (e.id == id) return e.name;
    return "unknown";
}

LawId parse_law(std::string_view name) {
    for (const auto& e : kLaws)
        if (e.name == name) return e.id;
    throw lookup_error("unknown law id '" + std::string(name) + "'");
}

LawReport check_law(std::string_view id, const OrientedHypergraph& g, const LawContext& ctx) {
    return check_law(parse_law(id), g, ctx);
}

LawReport check_law(LawId id, const OrientedHypergraph& g, const LawContext& ctx) {
    LawReport r;
    r.law = std::string(law_name(id));

    switch (id) {
    case LawId::lemma_2_1:
        exact(r, "H(G*) = H(G)^T", incidence_matrix(incidence_dual(g)), mat_transpose(incidence_matrix(g)));
        break;

    case LawId::lemma_2_2: {
        const auto h = incidence_matrix(g);
        const auto dual = incidence_dual(g);
        exact(r, "L(G) = D(G) - A(G)", laplacian_matrix(g), degree_matrix(g) - adjacency_matrix(g));
        exact(r, "L(G) = H H^T", laplacian_matrix(g), h * mat_transpose(h));
        exact(r, "L(G*) = D(G*) - A(G*)", laplacian_matrix(dual), degree_matrix(dual) - adjacency_matrix(dual));
        exact(r, "L(G*) = H^T H", laplacian_matrix(dual), mat_transpose(h) * h);
        break;
    }

    case LawId::theorem_3_1:
        if (!require_linear(r, g)) break;
        r.add("Lambda(G) = [[G*]]_2 up to edge labels",
              same_up_to_edge_labels(intersection_graph(g), strict_k_section(incidence_dual(g), 2)));
        break;

    case LawId::corollary_3_3:
        if (uniformity(g) != std::size_t{2}) {
            r.not_met("not 2-uniform");
            break;
        }
        if (!require_linear(r, g)) break;
        r.add("Lambda(G*) = G up to edge labels", same_up_to_edge_labels(intersection_graph(incidence_dual(g)), g));
        break;

    case LawId::corollary_3_7:
        if (regularity(g) != std::size_t{2}) {
            r.not_met("not 2-regular");
            break;
        }
        if (!require_linear(r, g)) break;
        r.add("Lambda(G) = G* up to edge labels", same_up_to_edge_labels(intersection_graph(g), incidence_dual(g)));
        break;

    case LawId::theorem_4_1: {
        const auto a = adjacency_matrix(g);
        exact(r, "A(G) = A([[G]]_2)", a, adjacency_matrix(strict_k_section(g, 2)));
        exact(r, "A(G) = A([G]_2)", a, adjacency_matrix(k_section(g, 2)));
        break;
    }

    case LawId::corollary_4_2:
        if (!require_linear(r, g)) break;
        exact(r, "A(G*) = A(Lambda(G))", adjacency_matrix(incidence_dual(g)), adjacency_matrix(intersection_graph(g)));
        break;

    case LawId::lemma_4_3: {
        const auto k = uniformity(g);
        if (!k) {
            r.not_met("not uniform");
            break;
        }
        const auto h = incidence_matrix(g);
        const auto dual = incidence_dual(g);
        const auto kk = static_cast<IntMatrix::value_type>(*k);
        exact(r, "L(G*) = H^T H", laplacian_matrix(dual), mat_transpose(h) * h);
        exact(r, "L(G*) = kI - A(G*)", laplacian_matrix(dual),
              kk * IntMatrix::identity(g.edge_count()) - adjacency_matrix(dual));
        break;
    }

    case LawId::theorem_4_4: {
        const auto k = uniformity(g);
        if (!k) {
            r.not_met("not uniform");
            break;
        }
        if (!require_linear(r, g)) break;
        const double bound = static_cast<double>(*k);
        check_upper_bound(r, "eigenvalues of A(Lambda(G)) <= k",
                          symmetric_eigenvalues(adjacency_matrix(intersection_graph(g))), bound);
        check_upper_bound(r, "eigenvalues of A(G*) <= k", symmetric_eigenvalues(adjacency_matrix(incidence_dual(g))),
                          bound);
        break;
    }

    case LawId::lemma_4_5: {
        const auto rr = regularity(g);
        if (!rr) {
            r.not_met("not regular");
            break;
        }
        const auto h = incidence_matrix(g);
        const auto rv = static_cast<IntMatrix::value_type>(*rr);
        exact(r, "L(G) = H H^T", laplacian_matrix(g), h * mat_transpose(h));
        exact(r, "L(G) = rI - A(G)", laplacian_matrix(g),
              rv * IntMatrix::identity(g.vertex_count()) - adjacency_matrix(g));
        break;
    }

    case LawId::theorem_4_6: {
        const auto rr = regularity(g);
        if (!rr) {
            r.not_met("not regular");
            break;
        }
        check_upper_bound(r, "eigenvalues of A(G) <= r", symmetric_eigenvalues(adjacency_matrix(g)),
                          static_cast<double>(*rr));
        break;
    }

    case LawId::lemma_4_7: {
        const auto lg = symmetric_eigenvalues(laplacian_matrix(g));
        const auto ld = symmetric_eigenvalues(laplacian_matrix(incidence_dual(g)));
        r.add("nonzero spec L(G) = nonzero spec L(G*)", nonzero_spectra_equal(lg, ld));
        const bool psd = (lg.empty() || lg.min() >= -kSpectralTolerance) && (ld.empty() || ld.min() >= -kSpectralTolerance);
        r.add("L(G) and L(G*) positive semidefinite", psd,
              "min " + fmt(lg.empty() ? 0.0 : lg.min()) + ", " + fmt(ld.empty() ? 0.0 : ld.min()));
        break;
    }

    case LawId::proposition_4_8: {
        if (regularity(g) == std::size_t{2}) {
            r.not_met("G is 2-regular");
            break;
        }
        if (!require_linear(r, g)) break;
        const auto dual = incidence_dual(g);
        const auto line = intersection_graph(g);
        const auto lap_dual = laplacian_matrix(dual);
        const auto lap_line = laplacian_matrix(line);
        const auto tr_dual = trace(lap_dual);
        const auto tr_line = trace(lap_line);
        const auto s_dual = symmetric_eigenvalues(lap_dual);
        const auto s_line = symmetric_eigenvalues(lap_line);
        const double m = static_cast<double>(std::max<std::size_t>(g.edge_count(), 1));
        auto degree_sum = [](const OrientedHypergraph& h) {
            IntMatrix::value_type t = 0;
            for (auto d : degrees(h)) t += static_cast<IntMatrix::value_type>(d);
            return t;
        };
        r.add("tr L(G*) = sum of degrees of G*", tr_dual == degree_sum(dual));
        r.add("tr L(Lambda(G)) = sum of degrees of Lambda(G)", tr_line == degree_sum(line));
        r.add("sum of eigenvalues of L(G*) = trace",
              std::abs(s_dual.sum() - static_cast<double>(tr_dual)) <= kSpectralTolerance * m);
        r.add("sum of eigenvalues of L(Lambda(G)) = trace",
              std::abs(s_line.sum() - static_cast<double>(tr_line)) <= kSpectralTolerance * m);

        auto exists_above = [](const Spectrum& hi, const Spectrum& lo) {
            for (std::size_t j = 0; j < hi.size(); ++j)
                if (hi.values()[j] > lo.values()[j] - kSpectralTolerance) return true;
            return false;
        };
        const std::string traces = "tr L(G*) = " + std::to_string(tr_dual) + ", tr L(Lambda(G)) = " +
                                   std::to_string(tr_line);
        if (tr_dual > tr_line) {
            r.add("(1) some lambda_j(L(G*)) > lambda_j(L(Lambda(G)))", exists_above(s_dual, s_line), traces);
        } else if (tr_dual < tr_line) {
            r.add("(2) some lambda_j(L(G*)) < lambda_j(L(Lambda(G)))", exists_above(s_line, s_dual), traces);
        } else {
            r.add("equal traces, no eigenvalue gap implied", true, traces);
        }
        break;
    }

    case LawId::lemma_5_1:
    case LawId::theorem_5_2:
    case LawId::corollary_5_3: {
        const auto [s, other] = switchings(g, ctx);
        r = filtered(check_switch_identities(g, s, other), r.law);
        break;
    }

    case LawId::theorem_5_4: {
        r = check_induced_switchings(g, switchings(g, ctx).first);
        r.law = std::string(law_name(id));
        break;
    }

    case LawId::theorem_6_1:
    case LawId::corollary_6_2: {
        const bool positive = id == LawId::theorem_6_1;
        if (!is_design_hypergraph(r, g, positive)) break;
        const auto design = design_of_hypergraph(g);
        if (!design.ok()) {
            r.not_met("not a block design: " + design.violation);
            break;
        }
        const auto full = check_design_identity(*design.design);
        r = filtered(full, r.law);
        if (positive) {
            // design_to_hypergraph rebuilds G exactly when every sign is +1
            r.add("theorem-6.1 G = design_to_hypergraph(design of G)", design_to_hypergraph(*design.design) == g);
        }
        break;
    }
    }
    r.seal(g);
    return r;
}

} // namespace orhyp
