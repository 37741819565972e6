#include "orhyp/designs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "orhyp/errors.hpp"
#include "orhyp/matrices.hpp"

namespace orhyp {

std::string format_parameters(const DesignParameters& p) {
    return "(" + std::to_string(p.v) + "," + std::to_string(p.b) + "," + std::to_string(p.r) + "," +
           std::to_string(p.k) + "," + std::to_string(p.lambda) + ")";
}

namespace {

// Most frequent value; ties go to the smaller value.
std::size_t mode(const std::vector<std::size_t>& xs) {
    std::map<std::size_t, std::size_t> counts;
    for (auto x : xs) ++counts[x];
    std::size_t best = 0;
    std::size_t best_count = 0;
    for (const auto& [value, count] : counts) {
        if (count > best_count) {
            best = value;
            best_count = count;
        }
    }
    return best;
}

DesignValidation reject(std::string why) { return {std::nullopt, std::move(why)}; }

} // namespace

DesignValidation validate_design(const std::vector<std::string>& points, const std::vector<BlockSpec>& blocks,
                                 const std::optional<DesignParameters>& declared) {
    if (points.empty()) return reject("design has no points");
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!is_valid_label(points[i])) return reject("invalid point label '" + points[i] + "'");
        if (!index.emplace(points[i], i).second) return reject("duplicate point '" + points[i] + "'");
    }
    if (blocks.empty()) return reject("design has no blocks");

    BlockDesign d;
    d.points_ = points;
    std::set<std::string> block_labels;
    for (const auto& spec : blocks) {
        if (!is_valid_label(spec.label)) return reject("invalid block label '" + spec.label + "'");
        if (!block_labels.insert(spec.label).second) return reject("duplicate block label '" + spec.label + "'");
        Block blk{spec.label, {}};
        for (const auto& p : spec.points) {
            auto it = index.find(p);
            if (it == index.end()) return reject("block '" + spec.label + "' names unknown point '" + p + "'");
            blk.points.push_back(it->second);
        }
        std::sort(blk.points.begin(), blk.points.end());
        if (std::adjacent_find(blk.points.begin(), blk.points.end()) != blk.points.end())
            return reject("block '" + spec.label + "' repeats a point");
        d.blocks_.push_back(std::move(blk));
    }

    const std::size_t v = points.size();
    const std::size_t b = d.blocks_.size();

    std::vector<std::size_t> sizes;
    for (const auto& blk : d.blocks_) sizes.push_back(blk.points.size());
    const std::size_t k = mode(sizes);
    for (const auto& blk : d.blocks_) {
        if (blk.points.size() != k)
            return reject("block '" + blk.label + "' has size " + std::to_string(blk.points.size()) +
                          ", expected " + std::to_string(k));
    }

    if (v < 2) return reject("a single point leaves the pair count lambda undefined");
    std::vector<std::size_t> pair_counts(v * v, 0);
    for (const auto& blk : d.blocks_)
        for (std::size_t a = 0; a < blk.points.size(); ++a)
            for (std::size_t c = a + 1; c < blk.points.size(); ++c) ++pair_counts[blk.points[a] * v + blk.points[c]];
    std::vector<std::size_t> upper;
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j) upper.push_back(pair_counts[i * v + j]);
    const std::size_t lambda = mode(upper);
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = i + 1; j < v; ++j) {
            const std::size_t c = pair_counts[i * v + j];
            if (c != lambda)
                return reject("pair {" + points[i] + "," + points[j] + "} lies in " + std::to_string(c) +
                              " blocks, expected " + std::to_string(lambda));
        }
    }

    std::vector<std::size_t> replication(v, 0);
    for (const auto& blk : d.blocks_)
        for (auto p : blk.points) ++replication[p];
    const std::size_t r = mode(replication);
    for (std::size_t i = 0; i < v; ++i) {
        if (replication[i] != r)
            return reject("point '" + points[i] + "' lies in " + std::to_string(replication[i]) +
                          " blocks, expected " + std::to_string(r));
    }

    if (b * k != v * r) return reject("b*k != v*r");
    if (k == 0) return reject("blocks are empty");
    if (lambda * (v - 1) != r * (k - 1)) return reject("lambda*(v-1) != r*(k-1)");

    d.params_ = {v, b, r, k, lambda};
    if (declared && *declared != d.params_)
        return reject("declared parameters " + format_parameters(*declared) + " differ from counted " +
                      format_parameters(d.params_));
    return {std::move(d), {}};
}

DesignValidation design_of_hypergraph(const OrientedHypergraph& g) {
    std::vector<BlockSpec> blocks;
    for (const auto& e : g.edges()) {
        BlockSpec spec{e.label, {}};
        for (const auto& m : e.members) spec.points.push_back(g.vertices()[m.vertex]);
        blocks.push_back(std::move(spec));
    }
    return validate_design(g.vertices(), blocks);
}

IntMatrix design_incidence_matrix(const BlockDesign& d) {
    IntMatrix c(d.points().size(), d.blocks().size());
    for (std::size_t j = 0; j < d.blocks().size(); ++j)
        for (auto p : d.blocks()[j].points) c(p, j) = 1;
    return c;
}

OrientedHypergraph design_to_hypergraph(const BlockDesign& d) {
    std::vector<Edge> edges;
    for (const auto& blk : d.blocks()) {
        Edge e{blk.label, {}};
        for (auto p : blk.points) e.members.push_back({p, Sign::plus()});
        edges.push_back(std::move(e));
    }
    return OrientedHypergraph::from_edges(d.points(), std::move(edges));
}

LawReport check_design_identity(const BlockDesign& d) {
    LawReport rep;
    rep.law = "bibd";
    const auto& p = d.parameters();
    const auto r = static_cast<IntMatrix::value_type>(p.r);
    const auto lambda = static_cast<IntMatrix::value_type>(p.lambda);
    const IntMatrix expected = (r - lambda) * IntMatrix::identity(p.v) + lambda * IntMatrix::ones(p.v, p.v);

    const auto g = design_to_hypergraph(d);
    const auto h = incidence_matrix(g);
    const auto lap = laplacian_matrix(g);
    const auto hht = h * mat_transpose(h);
    rep.add("theorem-6.1 L(G) = H(G) H(G)^T", lap == hht, describe_difference(lap, hht));
    rep.add("theorem-6.1 L(G) = (r-lambda) I + lambda J", lap == expected, describe_difference(lap, expected));
    const IntMatrix off = -lambda * (IntMatrix::ones(p.v, p.v) - IntMatrix::identity(p.v));
    const auto adj = adjacency_matrix(g);
    rep.add("theorem-6.1 A(G) = -lambda (J - I)", adj == off, describe_difference(adj, off));

    const auto c = design_incidence_matrix(d);
    const auto cct = c * mat_transpose(c);
    rep.add("corollary-6.2 C C^T = (r-lambda) I + lambda J", cct == expected, describe_difference(cct, expected));
    rep.add("corollary-6.2 C C^T = L(G)", cct == lap, describe_difference(cct, lap));
    rep.add("corollary-6.2 C = H(G)", c == h, describe_difference(c, h));
    rep.seal(g);
    return rep;
}

BlockDesign fano() {
    std::vector<std::string> points;
    for (int i = 0; i < 7; ++i) points.push_back(std::to_string(i));
    std::vector<BlockSpec> blocks;
    for (int i = 0; i < 7; ++i) {
        blocks.push_back({"b" + std::to_string(i),
                          {std::to_string(i), std::to_string((i + 1) % 7), std::to_string((i + 3) % 7)}});
    }
    auto result = validate_design(points, blocks);
    if (!result.ok()) throw invalid_structure("Fano construction failed: " + result.violation);
    return std::move(*result.design);
}

} // namespace orhyp
