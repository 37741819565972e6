#include "orhyp/generator.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "orhyp/designs.hpp"
#include "orhyp/errors.hpp"
#include "orhyp/rng.hpp"

namespace orhyp {

std::string describe(const GeneratorConstraints& c) {
    std::string out;
    auto add = [&](const std::string& s) { out += (out.empty() ? "" : ",") + s; };
    if (c.linear) add("linear");
    if (c.k_uniform) add("k-uniform(" + std::to_string(*c.k_uniform) + ")");
    if (c.r_regular) add("r-regular(" + std::to_string(*c.r_regular) + ")");
    if (c.two_regular) add("two-regular");
    if (c.all_positive) add("all-positive");
    if (c.bibd) add("bibd");
    return out.empty() ? "none" : out;
}

namespace {

std::optional<std::size_t> effective_regularity(const GeneratorConstraints& c) {
    if (c.two_regular) return std::size_t{2};
    return c.r_regular;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t out = 1;
    for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

// (n, m) pairs admitting the uniformity / regularity constraints.
std::vector<std::pair<std::size_t, std::size_t>> feasible_sizes(const GeneratorConfig& cfg) {
    const auto& c = cfg.constraints;
    const auto r = effective_regularity(c);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t n = 1; n <= cfg.max_vertices; ++n) {
        for (std::size_t m = 0; m <= cfg.max_edges; ++m) {
            if (c.k_uniform && (m == 0 || n < *c.k_uniform)) continue;
            if (r && m < *r) continue;
            if (c.k_uniform && r && n * *r != m * *c.k_uniform) continue;
            out.emplace_back(n, m);
        }
    }
    return out;
}

struct DesignFamily {
    std::size_t v;
    std::vector<std::vector<std::size_t>> blocks;
};

std::vector<DesignFamily> design_families(std::size_t max_v, std::size_t max_b) {
    std::vector<DesignFamily> base;
    for (std::size_t v = 2; v <= max_v; ++v) {
        for (std::size_t k = 2; k <= v; ++k) {
            if (binomial(v, k) > max_b) continue;
            DesignFamily f{v, {}};
            std::vector<bool> mask(v, false);
            std::fill(mask.end() - static_cast<std::ptrdiff_t>(k), mask.end(), true);
            do {
                std::vector<std::size_t> blk;
                for (std::size_t i = 0; i < v; ++i)
                    if (mask[i]) blk.push_back(i);
                f.blocks.push_back(std::move(blk));
            } while (std::next_permutation(mask.begin(), mask.end()));
            base.push_back(std::move(f));
        }
    }
    if (max_v >= 7 && max_b >= 7) {
        DesignFamily f{7, {}};
        for (std::size_t i = 0; i < 7; ++i) f.blocks.push_back({i, (i + 1) % 7, (i + 3) % 7});
        base.push_back(std::move(f));
    }
    std::vector<DesignFamily> out;
    for (const auto& f : base) {
        for (std::size_t copies = 1; copies * f.blocks.size() <= max_b; ++copies) {
            DesignFamily g{f.v, {}};
            for (std::size_t t = 0; t < copies; ++t) g.blocks.insert(g.blocks.end(), f.blocks.begin(), f.blocks.end());
            out.push_back(std::move(g));
        }
    }
    return out;
}

template <typename T>
void shuffle(std::vector<T>& xs, Rng& rng) {
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[rng.uniform(0, i - 1)]);
}

std::vector<std::size_t> random_subset(std::size_t n, std::size_t size, Rng& rng) {
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[rng.uniform(i, n - 1)]);
    pool.resize(size);
    return pool;
}

std::size_t overlap(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::size_t count = 0;
    for (auto x : a) count += static_cast<std::size_t>(std::count(b.begin(), b.end(), x));
    return count;
}

Sign draw_sign(const GeneratorConstraints& c, Rng& rng) {
    if (c.all_positive || c.bibd) return Sign::plus();
    return rng.coin() ? Sign::minus() : Sign::plus();
}

OrientedHypergraph assemble(std::size_t n, const std::vector<std::vector<std::size_t>>& member_sets,
                            const GeneratorConstraints& c, Rng& rng) {
    std::vector<std::string> vertices;
    for (std::size_t i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < member_sets.size(); ++j) {
        Edge e{"e" + std::to_string(j + 1), {}};
        auto sorted = member_sets[j];
        std::sort(sorted.begin(), sorted.end());
        for (auto v : sorted) e.members.push_back({v, draw_sign(c, rng)});
        edges.push_back(std::move(e));
    }
    return OrientedHypergraph::from_edges(std::move(vertices), std::move(edges));
}

bool satisfies(const OrientedHypergraph& g, const GeneratorConstraints& c) {
    if (c.linear && !is_linear(g)) return false;
    if (c.k_uniform && uniformity(g) != c.k_uniform) return false;
    if (auto r = effective_regularity(c); r && regularity(g) != r) return false;
    if (c.all_positive || c.bibd) {
        for (const auto& e : g.edges())
            for (const auto& m : e.members)
                if (!m.sign.positive()) return false;
    }
    if (c.bibd && !design_of_hypergraph(g).ok()) return false;
    return true;
}

// Each vertex joins r distinct edges; with k set, edge slots are dealt so every
// edge also receives exactly k vertices.
std::optional<std::vector<std::vector<std::size_t>>> regular_members(std::size_t n, std::size_t m, std::size_t r,
                                                                     std::optional<std::size_t> k, Rng& rng) {
    std::vector<std::vector<std::size_t>> sets(m);
    if (k) {
        std::vector<std::size_t> slots;
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t t = 0; t < *k; ++t) slots.push_back(j);
        shuffle(slots, rng);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t t = 0; t < r; ++t) {
                const std::size_t j = slots[v * r + t];
                if (std::find(sets[j].begin(), sets[j].end(), v) != sets[j].end()) return std::nullopt;
                sets[j].push_back(v);
            }
        }
        return sets;
    }
    for (std::size_t v = 0; v < n; ++v)
        for (auto j : random_subset(m, r, rng)) sets[j].push_back(v);
    return sets;
}

std::optional<std::vector<std::vector<std::size_t>>> free_members(std::size_t n, std::size_t m,
                                                                  const GeneratorConfig& cfg, Rng& rng) {
    const auto& c = cfg.constraints;
    const std::size_t hi = std::min(cfg.max_edge_size.value_or(cfg.max_vertices), n);
    const std::size_t lo = std::min(cfg.min_edge_size, hi);
    std::vector<std::vector<std::size_t>> sets;
    for (std::size_t j = 0; j < m; ++j) {
        bool placed = false;
        for (int tries = 0; tries < 100 && !placed; ++tries) {
            const std::size_t size = c.k_uniform ? *c.k_uniform : rng.uniform(lo, hi);
            auto candidate = random_subset(n, size, rng);
            if (c.linear && std::any_of(sets.begin(), sets.end(),
                                        [&](const auto& s) { return overlap(s, candidate) > 1; }))
                continue;
            sets.push_back(std::move(candidate));
            placed = true;
        }
        if (!placed) return std::nullopt;
    }
    return sets;
}

} // namespace

void check_satisfiable(const GeneratorConfig& cfg) {
    const auto& c = cfg.constraints;
    auto fail = [&](const std::string& why) {
        throw precondition_error("unsatisfiable generator constraints {" + describe(c) + "}: " + why);
    };
    if (cfg.max_vertices == 0) fail("max vertices must be positive");
    if (c.two_regular && c.r_regular && *c.r_regular != 2) fail("two-regular conflicts with r-regular");
    if (c.k_uniform && *c.k_uniform == 0) fail("k-uniform needs k >= 1");
    if (c.r_regular && *c.r_regular == 0) fail("r-regular needs r >= 1");
    if (cfg.max_edge_size && cfg.min_edge_size > *cfg.max_edge_size) fail("empty edge size range");
    if (c.bibd) {
        if (design_families(cfg.max_vertices, cfg.max_edges).empty()) fail("no block design fits the size bounds");
        return;
    }
    if (c.k_uniform && cfg.max_edge_size && *c.k_uniform > *cfg.max_edge_size) fail("k exceeds the edge size range");
    if (feasible_sizes(cfg).empty()) fail("no vertex/edge counts fit the size bounds");
}

OrientedHypergraph generate(const GeneratorConfig& cfg) {
    check_satisfiable(cfg);
    const auto& c = cfg.constraints;
    Rng rng(cfg.seed);

    if (c.bibd) {
        const auto families = design_families(cfg.max_vertices, cfg.max_edges);
        for (int attempt = 0; attempt < kGeneratorAttemptCap; ++attempt) {
            const auto& fam = families[rng.uniform(0, families.size() - 1)];
            std::vector<std::size_t> relabel(fam.v);
            std::iota(relabel.begin(), relabel.end(), 0);
            shuffle(relabel, rng);
            auto sets = fam.blocks;
            for (auto& s : sets)
                for (auto& p : s) p = relabel[p];
            shuffle(sets, rng);
            auto g = assemble(fam.v, sets, c, rng);
            if (satisfies(g, c)) return g;
        }
        throw generation_error("gave up after " + std::to_string(kGeneratorAttemptCap) +
                               " attempts for constraints {" + describe(c) + "}");
    }

    const auto sizes = feasible_sizes(cfg);
    const auto r = effective_regularity(c);
    for (int attempt = 0; attempt < kGeneratorAttemptCap; ++attempt) {
        const auto [n, m] = sizes[rng.uniform(0, sizes.size() - 1)];
        auto sets = r ? regular_members(n, m, *r, c.k_uniform, rng) : free_members(n, m, cfg, rng);
        if (!sets) continue;
        auto g = assemble(n, *sets, c, rng);
        if (satisfies(g, c)) return g;
    }
    throw generation_error("gave up after " + std::to_string(kGeneratorAttemptCap) + " attempts for constraints {" +
                           describe(c) + "}");
}

} // namespace orhyp
