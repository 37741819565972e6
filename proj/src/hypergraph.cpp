#include "orhyp/hypergraph.hpp"

#include <algorithm>
#include <cctype>

#include "orhyp/errors.hpp"

namespace orhyp {

std::optional<Sign> Edge::sign_of(std::size_t vertex) const noexcept {
    auto it = std::lower_bound(members.begin(), members.end(), vertex,
                               [](const Membership& m, std::size_t v) { return m.vertex < v; });
    if (it == members.end() || it->vertex != vertex) return std::nullopt;
    return it->sign;
}

bool is_valid_label(std::string_view label) noexcept {
    if (label.empty()) return false;
    return std::none_of(label.begin(), label.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == ':' || c == '#';
    });
}

OrientedHypergraph::OrientedHypergraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
    : vertices_(std::move(vertices)) {
    vertex_lookup_.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!is_valid_label(vertices_[i])) throw invalid_structure("invalid vertex label '" + vertices_[i] + "'");
        if (!vertex_lookup_.emplace(vertices_[i], i).second)
            throw invalid_structure("duplicate vertex label '" + vertices_[i] + "'");
    }
    edges_.reserve(edges.size());
    for (const auto& spec : edges) {
        Edge e{spec.label, {}};
        e.members.reserve(spec.members.size());
        for (const auto& [label, sign] : spec.members) {
            auto it = vertex_lookup_.find(label);
            if (it == vertex_lookup_.end())
                throw lookup_error("edge '" + spec.label + "' references unknown vertex '" + label + "'");
            e.members.push_back({it->second, sign});
        }
        edges_.push_back(std::move(e));
    }
    index_and_validate();
}

OrientedHypergraph OrientedHypergraph::from_edges(std::vector<std::string> vertices, std::vector<Edge> edges) {
    OrientedHypergraph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    g.vertex_lookup_.reserve(g.vertices_.size());
    for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
        if (!is_valid_label(g.vertices_[i]))
            throw invalid_structure("invalid vertex label '" + g.vertices_[i] + "'");
        if (!g.vertex_lookup_.emplace(g.vertices_[i], i).second)
            throw invalid_structure("duplicate vertex label '" + g.vertices_[i] + "'");
    }
    g.index_and_validate();
    return g;
}

void OrientedHypergraph::index_and_validate() {
    edge_lookup_.reserve(edges_.size());
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        auto& e = edges_[j];
        if (!is_valid_label(e.label)) throw invalid_structure("invalid edge label '" + e.label + "'");
        if (!edge_lookup_.emplace(e.label, j).second)
            throw invalid_structure("duplicate edge label '" + e.label + "'");
        std::sort(e.members.begin(), e.members.end(),
                  [](const Membership& a, const Membership& b) { return a.vertex < b.vertex; });
        for (std::size_t k = 0; k < e.members.size(); ++k) {
            if (e.members[k].vertex >= vertices_.size())
                throw lookup_error("edge '" + e.label + "' references vertex position " +
                                   std::to_string(e.members[k].vertex) + " out of range");
            if (k > 0 && e.members[k].vertex == e.members[k - 1].vertex)
                throw invalid_structure("edge '" + e.label + "' is incident to vertex '" +
                                        vertices_[e.members[k].vertex] + "' more than once");
        }
    }
}

std::size_t OrientedHypergraph::incidence_count() const noexcept {
    std::size_t total = 0;
    for (const auto& e : edges_) total += e.size();
    return total;
}

std::size_t OrientedHypergraph::vertex_index(std::string_view label) const {
    auto it = vertex_lookup_.find(std::string(label));
    if (it == vertex_lookup_.end()) throw lookup_error("unknown vertex '" + std::string(label) + "'");
    return it->second;
}

std::size_t OrientedHypergraph::edge_index(std::string_view label) const {
    auto it = edge_lookup_.find(std::string(label));
    if (it == edge_lookup_.end()) throw lookup_error("unknown edge '" + std::string(label) + "'");
    return it->second;
}

bool OrientedHypergraph::has_vertex(std::string_view label) const {
    return vertex_lookup_.count(std::string(label)) != 0;
}

bool OrientedHypergraph::has_edge(std::string_view label) const {
    return edge_lookup_.count(std::string(label)) != 0;
}

std::optional<Sign> OrientedHypergraph::orientation(std::size_t vertex, std::size_t edge) const {
    return edges_.at(edge).sign_of(vertex);
}

std::vector<Incidence> OrientedHypergraph::incidences() const {
    std::vector<Incidence> out;
    out.reserve(incidence_count());
    for (const auto& e : edges_)
        for (const auto& m : e.members) out.push_back({vertices_[m.vertex], e.label, m.sign});
    return out;
}

std::size_t degree(const OrientedHypergraph& g, std::string_view vertex) {
    const std::size_t v = g.vertex_index(vertex);
    std::size_t d = 0;
    for (const auto& e : g.edges())
        if (e.sign_of(v)) ++d;
    return d;
}

std::vector<std::size_t> degrees(const OrientedHypergraph& g) {
    std::vector<std::size_t> d(g.vertex_count(), 0);
    for (const auto& e : g.edges())
        for (const auto& m : e.members) ++d[m.vertex];
    return d;
}

std::size_t max_degree(const OrientedHypergraph& g) {
    if (g.vertex_count() == 0) throw domain_error("maximum degree of a hypergraph with no vertices");
    const auto d = degrees(g);
    return *std::max_element(d.begin(), d.end());
}

std::size_t edge_size(const OrientedHypergraph& g, std::string_view edge) {
    return g.edge(g.edge_index(edge)).size();
}

std::size_t rank(const OrientedHypergraph& g) {
    std::size_t r = 0;
    for (const auto& e : g.edges()) r = std::max(r, e.size());
    return r;
}

namespace {

std::size_t shared_count(const Edge& a, const Edge& b) {
    std::size_t count = 0;
    auto i = a.members.begin();
    auto j = b.members.begin();
    while (i != a.members.end() && j != b.members.end()) {
        if (i->vertex < j->vertex) {
            ++i;
        } else if (j->vertex < i->vertex) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

} // namespace

std::optional<std::pair<std::size_t, std::size_t>> find_nonlinear_pair(const OrientedHypergraph& g) {
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (shared_count(es[i], es[j]) > 1) return std::pair{i, j};
    return std::nullopt;
}

bool is_linear(const OrientedHypergraph& g) { return !find_nonlinear_pair(g).has_value(); }

std::optional<std::size_t> uniformity(const OrientedHypergraph& g) {
    if (g.edge_count() == 0) return std::nullopt;
    const std::size_t k = g.edge(0).size();
    if (k == 0) return std::nullopt;
    for (const auto& e : g.edges())
        if (e.size() != k) return std::nullopt;
    return k;
}

std::optional<std::size_t> regularity(const OrientedHypergraph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    const auto d = degrees(g);
    if (d.front() == 0) return std::nullopt;
    if (std::any_of(d.begin(), d.end(), [&](std::size_t x) { return x != d.front(); })) return std::nullopt;
    return d.front();
}

Sign adjacency_sign(const OrientedHypergraph& g, std::string_view edge, std::string_view vi, std::string_view vj) {
    const auto& e = g.edge(g.edge_index(edge));
    const std::size_t i = g.vertex_index(vi);
    const std::size_t j = g.vertex_index(vj);
    if (i == j) throw domain_error("adjacency sign needs two distinct vertices, got '" + std::string(vi) + "' twice");
    const auto si = e.sign_of(i);
    if (!si) throw lookup_error("vertex '" + std::string(vi) + "' is not incident to edge '" + e.label + "'");
    const auto sj = e.sign_of(j);
    if (!sj) throw lookup_error("vertex '" + std::string(vj) + "' is not incident to edge '" + e.label + "'");
    return -(*si * *sj);
}

std::vector<Adjacency> adjacencies(const OrientedHypergraph& g) {
    std::vector<Adjacency> out;
    for (const auto& e : g.edges())
        for (std::size_t a = 0; a < e.members.size(); ++a)
            for (std::size_t b = a + 1; b < e.members.size(); ++b)
                out.push_back({e.label, g.vertices()[e.members[a].vertex], g.vertices()[e.members[b].vertex]});
    return out;
}

bool same_up_to_edge_labels(const OrientedHypergraph& a, const OrientedHypergraph& b) {
    if (a.vertices() != b.vertices() || a.edge_count() != b.edge_count()) return false;
    auto key = [](const Edge& e) {
        std::vector<std::pair<std::size_t, int>> k;
        k.reserve(e.members.size());
        for (const auto& m : e.members) k.emplace_back(m.vertex, m.sign.value());
        return k;
    };
    std::vector<std::vector<std::pair<std::size_t, int>>> ka, kb;
    for (const auto& e : a.edges()) ka.push_back(key(e));
    for (const auto& e : b.edges()) kb.push_back(key(e));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

} // namespace orhyp
