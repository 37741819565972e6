#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orhyp/sign.hpp"

namespace orhyp {

// One signed incidence of an edge, by vertex position.
struct Membership {
    std::size_t vertex = 0;
    Sign sign;

    friend bool operator==(const Membership&, const Membership&) = default;
};

// An edge of the family E. Members are kept sorted by vertex position and are
// distinct, so each (vertex, edge) pair is incident at most once.
struct Edge {
    std::string label;
    std::vector<Membership> members;

    std::size_t size() const noexcept { return members.size(); }
    std::optional<Sign> sign_of(std::size_t vertex) const noexcept;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Label-based edge declaration used to build a hypergraph.
struct EdgeSpec {
    std::string label;
    std::vector<std::pair<std::string, Sign>> members;
};

struct Incidence {
    std::string vertex;
    std::string edge;
    Sign sign;

    friend bool operator==(const Incidence&, const Incidence&) = default;
};

// (e, {vi, vj}) with first preceding second in vertex order.
struct Adjacency {
    std::string edge;
    std::string first;
    std::string second;

    friend bool operator==(const Adjacency&, const Adjacency&) = default;
};

// Labels are nonempty and contain no whitespace, ':' or '#'.
bool is_valid_label(std::string_view label) noexcept;

// A simple oriented hypergraph G = (V, E, I, sigma).
//
// The vertex list fixes matrix row order and the edge list fixes column order.
// Values are immutable once built; construction rejects invalid labels,
// duplicate labels, unknown members and repeated incidences.
class OrientedHypergraph {
public:
    OrientedHypergraph() = default;
    OrientedHypergraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

    // Builds from position-based edges. Members may come in any order.
    static OrientedHypergraph from_edges(std::vector<std::string> vertices, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t incidence_count() const noexcept;

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t index) const { return edges_.at(index); }

    // Throw lookup_error naming the label when absent.
    std::size_t vertex_index(std::string_view label) const;
    std::size_t edge_index(std::string_view label) const;
    bool has_vertex(std::string_view label) const;
    bool has_edge(std::string_view label) const;

    std::optional<Sign> orientation(std::size_t vertex, std::size_t edge) const;

    // All incidences in edge order, then vertex order.
    std::vector<Incidence> incidences() const;

    friend bool operator==(const OrientedHypergraph& a, const OrientedHypergraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    void index_and_validate();

    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, std::size_t> vertex_lookup_;
    std::unordered_map<std::string, std::size_t> edge_lookup_;
};

std::size_t degree(const OrientedHypergraph& g, std::string_view vertex);
std::vector<std::size_t> degrees(const OrientedHypergraph& g);

// Throws domain_error on an empty vertex set.
std::size_t max_degree(const OrientedHypergraph& g);

std::size_t edge_size(const OrientedHypergraph& g, std::string_view edge);

// Maximum edge size; 0 for an edgeless hypergraph.
std::size_t rank(const OrientedHypergraph& g);

bool is_linear(const OrientedHypergraph& g);

// First pair of edge positions (i < j) sharing two or more vertices.
std::optional<std::pair<std::size_t, std::size_t>> find_nonlinear_pair(const OrientedHypergraph& g);

// k when every edge has size k > 0; absent for edgeless or mixed sizes.
std::optional<std::size_t> uniformity(const OrientedHypergraph& g);

// r when every vertex has degree r > 0; absent otherwise.
std::optional<std::size_t> regularity(const OrientedHypergraph& g);

// sgn_e(vi, vj) = -sigma(vi, e) * sigma(vj, e)
Sign adjacency_sign(const OrientedHypergraph& g, std::string_view edge, std::string_view vi,
                    std::string_view vj);

std::vector<Adjacency> adjacencies(const OrientedHypergraph& g);

// Equal vertex lists and equal multisets of signed member sets: edge labels
// and edge order are ignored.
bool same_up_to_edge_labels(const OrientedHypergraph& a, const OrientedHypergraph& b);

} // namespace orhyp
