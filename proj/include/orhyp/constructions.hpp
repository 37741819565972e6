#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "orhyp/hypergraph.hpp"

namespace orhyp {

struct SignedEdge {
    std::string label;
    std::size_t first = 0;   // first < second in vertex order
    std::size_t second = 0;
    Sign sign;

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

struct SignedEdgeSpec {
    std::string label;
    std::string first;
    std::string second;
    Sign sign;
};

// A simple signed graph: no loops, no repeated vertex pairs.
class SignedGraph {
public:
    SignedGraph() = default;
    SignedGraph(std::vector<std::string> vertices, const std::vector<SignedEdgeSpec>& edges);

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<SignedEdge>& edges() const noexcept { return edges_; }

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

private:
    std::vector<std::string> vertices_;
    std::vector<SignedEdge> edges_;
};

// Swaps the roles of vertices and edges; sigma*(e, v) = sigma(v, e).
OrientedHypergraph incidence_dual(const OrientedHypergraph& g);

// Result edges of a k-section in emission order: the source edge and the
// vertex positions of the qualifying subset.
struct SectionEdge {
    std::size_t source = 0;
    std::vector<std::size_t> vertices;
};

std::vector<SectionEdge> section_edges(const OrientedHypergraph& g, std::size_t k, bool strict);

// "e|{a,b}" for source edge e and members a, b in vertex order.
std::string section_edge_label(const OrientedHypergraph& g, const SectionEdge& f);

// [G]_k: every k-subset of every edge, plus every edge smaller than k.
// One result edge is emitted per (source edge, subset) pair.
OrientedHypergraph k_section(const OrientedHypergraph& g, std::size_t k);

// [[G]]_k: as k_section without the smaller whole edges.
OrientedHypergraph strict_k_section(const OrientedHypergraph& g, std::size_t k);

// Two edges of a linear hypergraph meeting in a single vertex.
struct EdgeIntersection {
    std::size_t first = 0;
    std::size_t second = 0;
    std::size_t shared_vertex = 0;
};

// Throws precondition_error naming an offending pair when g is not linear.
std::vector<EdgeIntersection> edge_intersections(const OrientedHypergraph& g);

std::string intersection_edge_label(const OrientedHypergraph& g, const EdgeIntersection& x);

// Lambda(G) on the edges of a linear G. Edge "ei~ej" carries
// sigma(ei) = sigma_G(v, ei) and sigma(ej) = sigma_G(v, ej) for the shared v.
OrientedHypergraph intersection_graph(const OrientedHypergraph& g);

// Target edge sizes for enlarge_edges: one size for every edge, or a
// per-edge map (edges absent from the map keep their size).
class EnlargementPlan {
public:
    static EnlargementPlan uniform(std::size_t target) { return EnlargementPlan(target); }
    static EnlargementPlan per_edge(std::map<std::string, std::size_t> targets) {
        return EnlargementPlan(std::move(targets));
    }

    std::size_t target_for(const Edge& e) const;
    const std::map<std::string, std::size_t>* per_edge_targets() const noexcept {
        return std::get_if<std::map<std::string, std::size_t>>(&targets_);
    }

private:
    explicit EnlargementPlan(std::variant<std::size_t, std::map<std::string, std::size_t>> t)
        : targets_(std::move(t)) {}

    std::variant<std::size_t, std::map<std::string, std::size_t>> targets_;
};

// Pads each edge with fresh degree-1 vertices "e.pad1", "e.pad2", ... signed +1.
OrientedHypergraph enlarge_edges(const OrientedHypergraph& g, const EnlargementPlan& plan);

// For edge {vi, vj} with i < j: beta(vi) = +1, beta(vj) = -sgn(e).
OrientedHypergraph orient_signed_graph(const SignedGraph& sigma);

// Requires g 2-uniform (or edgeless) and linear; edge signs are adjacency signs.
SignedGraph underlying_signed_graph(const OrientedHypergraph& g);

} // namespace orhyp
