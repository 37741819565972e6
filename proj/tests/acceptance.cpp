// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "orhyp/cli.hpp"
#include "orhyp/constructions.hpp"
#include "orhyp/designs.hpp"
#include "orhyp/laws.hpp"
#include "orhyp/matrices.hpp"
#include "orhyp/ohg_format.hpp"
#include "orhyp/rng.hpp"
#include "orhyp/spectrum.hpp"
#include "orhyp/switching.hpp"
#include "test_fixtures.hpp"

using namespace orhyp;

namespace {

struct Tally {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        if (failures++ == 0) first = what;
    }
    bool ok() const { return failures == 0; }
};

OrientedHypergraph draw(std::uint64_t seed, GeneratorConstraints c = {}) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.max_vertices = 10;
    cfg.max_edges = 8;
    cfg.constraints = c;
    return generate(cfg);
}

std::string tag(const char* what, std::uint64_t seed) { return std::string(what) + " (seed " + std::to_string(seed) + ")"; }

double max_eig(const IntMatrix& m) {
    const auto s = symmetric_eigenvalues(m);
    return s.empty() ? 0.0 : s.max();
}

bool psd(const IntMatrix& m) {
    const auto s = symmetric_eigenvalues(m);
    return s.empty() || s.min() >= -1e-8;
}

bool spectrum_near(const Spectrum& s, const std::vector<double>& want) {
    if (s.size() != want.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i)
        if (std::abs(s.values()[i] - want[i]) > 1e-8) return false;
    return true;
}

Tally identities() {
    Tally t;
    for (std::uint64_t i = 0; i < 500; ++i) {
        const auto seed = mix_seed(101, i);
        const auto g = draw(seed);
        const auto h = incidence_matrix(g);
        const auto d = incidence_dual(g);
        const auto ts = oracle::triples(g);
        const auto n = g.vertex_count(), m = g.edge_count();
        t.expect(h == fixtures::to_matrix(oracle::incidence(n, m, ts), n, m), tag("H matches oracle", seed));
        t.expect(incidence_matrix(d) == mat_transpose(h), tag("H(G*) = H^T", seed));
        t.expect(laplacian_matrix(g) == h * mat_transpose(h), tag("L = H H^T", seed));
        t.expect(laplacian_matrix(g) == fixtures::to_matrix(oracle::laplacian(n, ts), n, n), tag("L matches oracle", seed));
        t.expect(laplacian_matrix(d) == mat_transpose(h) * h, tag("L(G*) = H^T H", seed));
        const auto a = adjacency_matrix(g);
        t.expect(a == adjacency_matrix(strict_k_section(g, 2)), tag("A(G) = A([[G]]_2)", seed));
        t.expect(a == adjacency_matrix(k_section(g, 2)), tag("A(G) = A([G]_2)", seed));
    }
    return t;
}

Tally line_graphs() {
    Tally t;
    GeneratorConstraints lin;
    lin.linear = true;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto seed = mix_seed(202, i);
        const auto g = draw(seed, lin);
        const auto line = intersection_graph(g);
        const auto dual = incidence_dual(g);
        t.expect(same_up_to_edge_labels(line, strict_k_section(dual, 2)), tag("Lambda(G) = [[G*]]_2", seed));
        t.expect(adjacency_matrix(dual) == adjacency_matrix(line), tag("A(G*) = A(Lambda(G))", seed));
        const auto m = g.edge_count();
        t.expect(adjacency_matrix(line) == fixtures::to_matrix(oracle::adjacency(m, oracle::dual(oracle::triples(g))), m, m),
                 tag("A(Lambda(G)) matches oracle", seed));
    }
    GeneratorConstraints two_uniform = lin;
    two_uniform.k_uniform = 2;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto seed = mix_seed(203, i);
        const auto g = draw(seed, two_uniform);
        t.expect(uniformity(g) == std::optional<std::size_t>(2), tag("2-uniform instance", seed));
        t.expect(same_up_to_edge_labels(intersection_graph(incidence_dual(g)), g), tag("Lambda(G*) = G", seed));
    }
    GeneratorConstraints two_regular = lin;
    two_regular.two_regular = true;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const auto seed = mix_seed(204, i);
        const auto g = draw(seed, two_regular);
        t.expect(regularity(g) == std::optional<std::size_t>(2), tag("2-regular instance", seed));
        t.expect(same_up_to_edge_labels(intersection_graph(g), incidence_dual(g)), tag("Lambda(G) = G*", seed));
    }
    return t;
}

Tally spectral_bounds() {
    Tally t;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto seed = mix_seed(301, i);
        GeneratorConstraints c;
        c.linear = true;
        c.k_uniform = 2 + i % 3;
        const auto g = draw(seed, c);
        const double k = static_cast<double>(*c.k_uniform);
        t.expect(max_eig(adjacency_matrix(intersection_graph(g))) <= k + 1e-8, tag("lambda_max A(Lambda(G)) <= k", seed));
        t.expect(psd(laplacian_matrix(g)) && psd(laplacian_matrix(incidence_dual(g))), tag("Laplacians PSD", seed));
    }
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto seed = mix_seed(302, i);
        GeneratorConstraints c;
        c.r_regular = 2 + i % 2;
        const auto g = draw(seed, c);
        const double r = static_cast<double>(*c.r_regular);
        t.expect(max_eig(adjacency_matrix(g)) <= r + 1e-8, tag("lambda_max A(G) <= r", seed));
        t.expect(psd(laplacian_matrix(g)) && psd(laplacian_matrix(incidence_dual(g))), tag("Laplacians PSD", seed));
    }
    return t;
}

// Trace gap between L(G*) and L(Lambda(G)) forces a coordinatewise gap in
// the sorted spectra.
bool trace_implication(const OrientedHypergraph& g) {
    const auto ld = laplacian_matrix(incidence_dual(g));
    const auto ll = laplacian_matrix(intersection_graph(g));
    const auto sd = symmetric_eigenvalues(ld).values();
    const auto sl = symmetric_eigenvalues(ll).values();
    auto some_above = [](const std::vector<double>& hi, const std::vector<double>& lo) {
        for (std::size_t j = 0; j < hi.size(); ++j)
            if (hi[j] > lo[j] - 1e-8) return true;
        return false;
    };
    if (trace(ld) > trace(ll)) return some_above(sd, sl);
    if (trace(ld) < trace(ll)) return some_above(sl, sd);
    return true;
}

Tally duality_spectra(std::size_t& trace_cases) {
    Tally t;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto seed = mix_seed(401, i);
        const auto g = draw(seed);
        const auto lg = symmetric_eigenvalues(laplacian_matrix(g));
        const auto ld = symmetric_eigenvalues(laplacian_matrix(incidence_dual(g)));
        t.expect(nonzero_spectra_equal(lg, ld), tag("nonzero spec L(G) = nonzero spec L(G*)", seed));
    }
    GeneratorConstraints lin;
    lin.linear = true;
    trace_cases = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto seed = mix_seed(402, i);
        const auto g = draw(seed, lin);
        if (regularity(g) == std::size_t{2}) continue;
        ++trace_cases;
        t.expect(trace_implication(g), tag("trace gap implies eigenvalue gap", seed));
        t.expect(check_law(LawId::proposition_4_8, g).passed(), tag("proposition-4.8 law", seed));
    }
    t.expect(trace_cases >= 150, "too few instances for the trace implication");
    return t;
}

Tally switching() {
    Tally t;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto seed = mix_seed(501, i);
        const auto g = draw(seed);
        Rng rng(mix_seed(seed, 1));
        const auto s = random_switch(g, rng);
        const auto other = random_switch(g, rng);
        const auto r = check_switch_identities(g, s, other);
        for (const auto& c : r.checks) t.expect(c.passed, tag(c.name.c_str(), seed));
        t.expect(r.checks.size() == 11, tag("all switching checks ran", seed));
    }
    GeneratorConstraints lin;
    lin.linear = true;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto seed = mix_seed(502, i);
        const auto g = draw(seed, lin);
        Rng rng(mix_seed(seed, 1));
        const auto r = check_induced_switchings(g, random_switch(g, rng));
        t.expect(r.hypothesis_met && r.checks.size() == 3, tag("induced switchings ran", seed));
        for (const auto& c : r.checks) t.expect(c.passed, tag(c.name.c_str(), seed));
    }
    return t;
}

Tally fixture_p3() {
    Tally t;
    const auto g = fixtures::p3();
    const auto ts = oracle::triples(g);
    // hand values, cross-checked against the brute-force oracle first
    const IntMatrix a{{0, -1, 0}, {-1, 0, 1}, {0, 1, 0}};
    const IntMatrix l{{1, 1, 0}, {1, 2, -1}, {0, -1, 1}};
    t.expect(fixtures::to_matrix(oracle::adjacency(3, ts), 3, 3) == a, "oracle A");
    t.expect(fixtures::to_matrix(oracle::laplacian(3, ts), 3, 3) == l, "oracle L");
    const auto ld = fixtures::to_matrix(oracle::laplacian(2, oracle::dual(ts)), 2, 2);
    const auto dual_eigs = oracle::eig2(ld(0, 0), ld(0, 1), ld(1, 1));
    t.expect(std::abs(dual_eigs[0] - 3) < 1e-12 && std::abs(dual_eigs[1] - 1) < 1e-12, "oracle spec L(G*)");
    const auto eigs = oracle::eig3({{{1, 1, 0}, {1, 2, -1}, {0, -1, 1}}});
    t.expect(std::abs(eigs[0] - 3) < 1e-12 && std::abs(eigs[1] - 1) < 1e-12 && std::abs(eigs[2]) < 1e-12, "oracle spec L");

    t.expect(adjacency_matrix(g) == a, "A(P3)");
    t.expect(laplacian_matrix(g) == l, "L(P3)");
    t.expect(spectrum_near(symmetric_eigenvalues(laplacian_matrix(g)), eigs), "spec L(P3)");
    t.expect(spectrum_near(symmetric_eigenvalues(laplacian_matrix(incidence_dual(g))), dual_eigs), "spec L(P3*)");
    return t;
}

Tally designs() {
    Tally t;
    const auto d = fano();
    t.expect(d.parameters() == DesignParameters{7, 7, 3, 3, 1}, "Fano parameters");
    const IntMatrix expected = 2 * IntMatrix::identity(7) + IntMatrix::ones(7, 7);
    const auto c = design_incidence_matrix(d);
    t.expect(c * mat_transpose(c) == expected, "C C^T = 2I + J");
    t.expect(laplacian_matrix(design_to_hypergraph(d)) == expected, "L = 2I + J");
    t.expect(check_design_identity(d).passed(), "design identity report");

    std::vector<std::string> points;
    for (int i = 0; i < 7; ++i) points.push_back(std::to_string(i));
    for (std::size_t j = 0; j < 7; ++j) {
        for (std::size_t p = 0; p < 7; ++p) {
            std::vector<BlockSpec> blocks;
            for (const auto& b : d.blocks()) {
                BlockSpec s{b.label, {}};
                for (auto q : b.points) s.points.push_back(points[q]);
                blocks.push_back(s);
            }
            auto& mem = blocks[j].points;
            auto it = std::find(mem.begin(), mem.end(), points[p]);
            if (it != mem.end()) mem.erase(it);
            else mem.push_back(points[p]);
            t.expect(!validate_design(points, blocks).ok(),
                     "flip of point " + std::to_string(p) + " in block " + std::to_string(j) + " accepted");
        }
    }
    return t;
}

Tally eigensolver() {
    Tally t;
    auto solve = [&](const IntMatrix& m, const std::vector<double>& want) {
        const auto s = symmetric_eigenvalues(m);
        t.expect(spectrum_near(s, want), "eigenvalues of\n" + format_matrix(m));
        t.expect(std::abs(s.sum() - static_cast<double>(trace(m))) <= 1e-8 * static_cast<double>(m.rows()),
                 "trace of\n" + format_matrix(m));
    };
    for (int a = -5; a <= 5; ++a)
        for (int b = -5; b <= 5; ++b)
            for (int c = -5; c <= 5; ++c) solve(IntMatrix{{a, b}, {b, c}}, oracle::eig2(a, b, c));
    // corpus: every symmetric 3x3 with entries in [-2, 2], plus a strided sweep of [-9, 9]
    auto add3 = [&](int x0, int x1, int x2, int y0, int y1, int y2) {
        solve(IntMatrix{{x0, y0, y1}, {y0, x1, y2}, {y1, y2, x2}},
              oracle::eig3({{{x0, y0, y1}, {y0, x1, y2}, {y1, y2, x2}}}));
    };
    for (int x0 = -2; x0 <= 2; ++x0)
        for (int x1 = -2; x1 <= 2; ++x1)
            for (int x2 = -2; x2 <= 2; ++x2)
                for (int y0 = -2; y0 <= 2; ++y0)
                    for (int y1 = -2; y1 <= 2; ++y1)
                        for (int y2 = -2; y2 <= 2; ++y2) add3(x0, x1, x2, y0, y1, y2);
    Rng rng(808);
    auto pick = [&] { return static_cast<int>(rng.uniform(0, 18)) - 9; };
    for (int i = 0; i < 5000; ++i) {
        const int x0 = pick(), x1 = pick(), x2 = pick(), y0 = pick(), y1 = pick(), y2 = pick();
        add3(x0, x1, x2, y0, y1, y2);
    }
    return t;
}

Tally cli_end_to_end(double& seconds) {
    Tally t;
    auto run = [](std::vector<std::string> args, const std::string& input, std::string& out) {
        std::istringstream in(input);
        std::ostringstream o, e;
        const int code = run_cli(args, in, o, e);
        out = o.str();
        return code;
    };
    std::string out;
    const auto start = std::chrono::steady_clock::now();
    const auto witness_dir = (std::filesystem::temp_directory_path() / "orhyp-acceptance").string();
    const int code = run({"verify", "--all", "--trials", "200", "--seed", "7", "--witness-dir", witness_dir}, "", out);
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.expect(code == 0, "verify --all exit code " + std::to_string(code) + "\n" + out);
    t.expect(seconds < 60.0, "verify --all took " + std::to_string(seconds) + " s");

    const auto p3_text = fixtures::read_file("p3.ohg");
    t.expect(!p3_text.empty() && serialize_ohg(parse_ohg(p3_text)) == p3_text, "p3.ohg round trip");
    t.expect(run({"switch", "-"}, p3_text, out) == 0 && out == p3_text, "p3.ohg through the CLI");
    const auto fano_text = fixtures::read_file("fano.bibd");
    t.expect(run({"bibd", "fano"}, "", out) == 0 && out == fano_text, "bibd fano golden");
    const auto doc = parse_bibd(fano_text);
    const auto v = validate_design(doc.points, doc.blocks, doc.declared);
    t.expect(v.ok() && serialize_bibd(*v.design) == fano_text, "fano.bibd round trip");
    t.expect(run({"bibd", "check", "-"}, fano_text, out) == 0, "bibd check on fano.bibd");
    return t;
}

} // namespace

int main() {
    int failed = 0;
    auto report = [&](int n, const char* title, const std::function<Tally()>& body, const std::string& extra = {}) {
        Tally t;
        try {
            t = body();
        } catch (const std::exception& e) {
            t.expect(false, std::string("exception: ") + e.what());
        }
        std::printf("criterion %d: %s  %s (%zu checks%s)\n", n, t.ok() ? "PASS" : "FAIL", title, t.cases,
                    extra.c_str());
        if (!t.ok()) {
            std::printf("  %zu failed; first: %s\n", t.failures, t.first.c_str());
            ++failed;
        }
    };
    std::size_t trace_cases = 0;
    double seconds = 0;
    report(1, "exact identity suite", identities);
    report(2, "line-graph suite", line_graphs);
    report(3, "spectral bounds", spectral_bounds);
    report(4, "duality spectra", [&] { return duality_spectra(trace_cases); });
    std::printf("  trace implication checked on %zu instances\n", trace_cases);
    report(5, "switching suite", switching);
    report(6, "fixture P3", fixture_p3);
    report(7, "block designs", designs);
    report(8, "eigensolver oracle", eigensolver);
    report(9, "CLI end-to-end", [&] { return cli_end_to_end(seconds); });
    std::printf("  verify --all --trials 200 --seed 7 took %.2f s\n", seconds);
    return failed == 0 ? 0 : 1;
}
