#include "orhyp/constructions.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "orhyp/errors.hpp"

namespace orhyp {

SignedGraph::SignedGraph(std::vector<std::string> vertices, const std::vector<SignedEdgeSpec>& edges)
    : vertices_(std::move(vertices)) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!is_valid_label(vertices_[i])) throw invalid_structure("invalid vertex label '" + vertices_[i] + "'");
        if (!index.emplace(vertices_[i], i).second)
            throw invalid_structure("duplicate vertex label '" + vertices_[i] + "'");
    }
    auto lookup = [&](const std::string& label) {
        auto it = index.find(label);
        if (it == index.end()) throw lookup_error("unknown vertex '" + label + "'");
        return it->second;
    };
    std::set<std::string> labels;
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& spec : edges) {
        if (!is_valid_label(spec.label)) throw invalid_structure("invalid edge label '" + spec.label + "'");
        if (!labels.insert(spec.label).second) throw invalid_structure("duplicate edge label '" + spec.label + "'");
        std::size_t a = lookup(spec.first);
        std::size_t b = lookup(spec.second);
        if (a == b) throw invalid_structure("edge '" + spec.label + "' is a loop");
        if (a > b) std::swap(a, b);
        if (!pairs.insert({a, b}).second)
            throw invalid_structure("edge '" + spec.label + "' repeats the pair {" + vertices_[a] + "," +
                                    vertices_[b] + "}");
        edges_.push_back({spec.label, a, b, spec.sign});
    }
}

OrientedHypergraph incidence_dual(const OrientedHypergraph& g) {
    std::vector<std::string> vertices;
    vertices.reserve(g.edge_count());
    for (const auto& e : g.edges()) vertices.push_back(e.label);

    std::vector<Edge> edges(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) edges[v].label = g.vertices()[v];
    for (std::size_t j = 0; j < g.edge_count(); ++j)
        for (const auto& m : g.edge(j).members) edges[m.vertex].members.push_back({j, m.sign});
    return OrientedHypergraph::from_edges(std::move(vertices), std::move(edges));
}

std::vector<SectionEdge> section_edges(const OrientedHypergraph& g, std::size_t k, bool strict) {
    if (k == 0) throw domain_error("k-section requires k >= 1");
    std::vector<SectionEdge> out;
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        const auto& members = g.edge(j).members;
        const std::size_t size = members.size();
        if (size < k) {
            if (strict) continue;
            SectionEdge f{j, {}};
            for (const auto& m : members) f.vertices.push_back(m.vertex);
            out.push_back(std::move(f));
            continue;
        }
        // k-subsets of member positions in lexicographic order
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            SectionEdge f{j, {}};
            f.vertices.reserve(k);
            for (std::size_t p : pick) f.vertices.push_back(members[p].vertex);
            out.push_back(std::move(f));

            std::size_t i = k;
            while (i > 0 && pick[i - 1] == size - k + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t t = i; t < k; ++t) pick[t] = pick[t - 1] + 1;
        }
    }
    return out;
}

std::string section_edge_label(const OrientedHypergraph& g, const SectionEdge& f) {
    std::string label = g.edge(f.source).label + "|{";
    for (std::size_t i = 0; i < f.vertices.size(); ++i) {
        if (i > 0) label += ',';
        label += g.vertices()[f.vertices[i]];
    }
    label += '}';
    return label;
}

namespace {

OrientedHypergraph build_section(const OrientedHypergraph& g, std::size_t k, bool strict) {
    std::vector<Edge> edges;
    for (const auto& f : section_edges(g, k, strict)) {
        const auto& source = g.edge(f.source);
        Edge e{section_edge_label(g, f), {}};
        for (std::size_t v : f.vertices) e.members.push_back({v, *source.sign_of(v)});
        edges.push_back(std::move(e));
    }
    return OrientedHypergraph::from_edges(g.vertices(), std::move(edges));
}

} // namespace

OrientedHypergraph k_section(const OrientedHypergraph& g, std::size_t k) { return build_section(g, k, false); }

OrientedHypergraph strict_k_section(const OrientedHypergraph& g, std::size_t k) {
    return build_section(g, k, true);
}

std::vector<EdgeIntersection> edge_intersections(const OrientedHypergraph& g) {
    if (auto bad = find_nonlinear_pair(g)) {
        throw precondition_error("hypergraph is not linear: edges '" + g.edge(bad->first).label + "' and '" +
                                 g.edge(bad->second).label + "' share more than one vertex");
    }
    std::vector<EdgeIntersection> out;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        for (std::size_t j = i + 1; j < g.edge_count(); ++j) {
            for (const auto& m : g.edge(i).members) {
                if (g.edge(j).sign_of(m.vertex)) {
                    out.push_back({i, j, m.vertex});
                    break;
                }
            }
        }
    }
    return out;
}

std::string intersection_edge_label(const OrientedHypergraph& g, const EdgeIntersection& x) {
    return g.edge(x.first).label + "~" + g.edge(x.second).label;
}

OrientedHypergraph intersection_graph(const OrientedHypergraph& g) {
    std::vector<std::string> vertices;
    vertices.reserve(g.edge_count());
    for (const auto& e : g.edges()) vertices.push_back(e.label);

    std::vector<Edge> edges;
    for (const auto& x : edge_intersections(g)) {
        Edge e{intersection_edge_label(g, x), {}};
        e.members.push_back({x.first, *g.edge(x.first).sign_of(x.shared_vertex)});
        e.members.push_back({x.second, *g.edge(x.second).sign_of(x.shared_vertex)});
        edges.push_back(std::move(e));
    }
    return OrientedHypergraph::from_edges(std::move(vertices), std::move(edges));
}

std::size_t EnlargementPlan::target_for(const Edge& e) const {
    if (const auto* k = std::get_if<std::size_t>(&targets_)) return *k;
    const auto& map = std::get<std::map<std::string, std::size_t>>(targets_);
    auto it = map.find(e.label);
    return it == map.end() ? e.size() : it->second;
}

OrientedHypergraph enlarge_edges(const OrientedHypergraph& g, const EnlargementPlan& plan) {
    if (const auto* map = plan.per_edge_targets()) {
        for (const auto& [label, target] : *map) {
            if (!g.has_edge(label)) throw lookup_error("enlargement plan names unknown edge '" + label + "'");
        }
    }
    std::vector<std::string> vertices = g.vertices();
    std::vector<Edge> edges = g.edges();
    for (auto& e : edges) {
        const std::size_t target = plan.target_for(e);
        if (target < e.size()) {
            throw precondition_error("edge '" + e.label + "' has size " + std::to_string(e.size()) +
                                     ", above enlargement target " + std::to_string(target));
        }
        const std::size_t pad = target - e.size();
        for (std::size_t k = 1; k <= pad; ++k) {
            e.members.push_back({vertices.size(), Sign::plus()});
            vertices.push_back(e.label + ".pad" + std::to_string(k));
        }
    }
    return OrientedHypergraph::from_edges(std::move(vertices), std::move(edges));
}

OrientedHypergraph orient_signed_graph(const SignedGraph& sigma) {
    std::vector<Edge> edges;
    edges.reserve(sigma.edges().size());
    for (const auto& se : sigma.edges())
        edges.push_back({se.label, {{se.first, Sign::plus()}, {se.second, -se.sign}}});
    return OrientedHypergraph::from_edges(sigma.vertices(), std::move(edges));
}

SignedGraph underlying_signed_graph(const OrientedHypergraph& g) {
    for (const auto& e : g.edges()) {
        if (e.size() != 2) {
            throw precondition_error("edge '" + e.label + "' has size " + std::to_string(e.size()) +
                                     "; a signed graph needs a 2-uniform hypergraph");
        }
    }
    if (auto bad = find_nonlinear_pair(g)) {
        throw precondition_error("edges '" + g.edge(bad->first).label + "' and '" + g.edge(bad->second).label +
                                 "' are parallel; a signed graph needs a linear hypergraph");
    }
    std::vector<SignedEdgeSpec> specs;
    for (const auto& e : g.edges()) {
        const auto& a = e.members[0];
        const auto& b = e.members[1];
        specs.push_back({e.label, g.vertices()[a.vertex], g.vertices()[b.vertex], -(a.sign * b.sign)});
    }
    return SignedGraph(g.vertices(), specs);
}

} // namespace orhyp
