#include "orhyp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "orhyp/constructions.hpp"
#include "orhyp/designs.hpp"
#include "orhyp/errors.hpp"
#include "orhyp/matrices.hpp"
#include "orhyp/ohg_format.hpp"
#include "orhyp/spectrum.hpp"
#include "orhyp/switching.hpp"
#include "orhyp/verify.hpp"

namespace orhyp {

namespace {

class io_error : public error {
public:
    explicit io_error(const std::string& msg) : error(msg) {}
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw io_error("cannot open '" + path + "'");
    buf << file.rdbuf();
    return buf.str();
}

Sign parse_switch_value(const std::string& tok) {
    if (tok == "+1" || tok == "1" || tok == "+") return Sign::plus();
    if (tok == "-1" || tok == "-") return Sign::minus();
    throw domain_error("switch value must be +1 or -1, got '" + tok + "'");
}

// "a=-1,b=+1" over `labels`; unlisted labels default to +1.
SwitchMap parse_switch_list(const std::string& text, const std::vector<std::string>& labels, const char* what) {
    SwitchMap map;
    for (const auto& l : labels) map.emplace(l, Sign::plus());
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw domain_error(std::string("expected label=sign in ") + what + " switch, got '" + item + "'");
        const std::string label = item.substr(0, eq);
        auto it = map.find(label);
        if (it == map.end()) throw coverage_error(std::string(what) + " switch names unknown element '" + label + "'");
        it->second = parse_switch_value(item.substr(eq + 1));
    }
    return map;
}

IntMatrix matrix_of_kind(const std::string& kind, const OrientedHypergraph& g) {
    if (kind == "incidence") return incidence_matrix(g);
    if (kind == "adjacency") return adjacency_matrix(g);
    if (kind == "degree") return degree_matrix(g);
    return laplacian_matrix(g);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string optional_count(const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : "no"; }

void print_info(const OrientedHypergraph& g, std::ostream& out) {
    out << "vertices " << g.vertex_count() << '\n';
    out << "edges " << g.edge_count() << '\n';
    out << "incidences " << g.incidence_count() << '\n';
    out << "max-degree " << (g.vertex_count() == 0 ? std::string("-") : std::to_string(max_degree(g))) << '\n';
    out << "rank " << rank(g) << '\n';
    out << "linear " << yes_no(is_linear(g)) << '\n';
    out << "uniform " << optional_count(uniformity(g)) << '\n';
    out << "regular " << optional_count(regularity(g)) << '\n';
}

int print_verify(const VerifyResult& result, bool file_mode, std::ostream& out, std::ostream& err) {
    for (const auto& s : result.laws) {
        switch (s.outcome) {
        case Outcome::pass:
            out << s.law << " pass";
            if (!file_mode) out << ' ' << s.passed_trials << " trials (" << s.attempts << " attempts)";
            out << '\n';
            break;
        case Outcome::hypothesis_not_met:
            out << s.law << " hypothesis-not-met: " << s.note << '\n';
            break;
        case Outcome::violation:
            out << s.law << " FAIL seed " << s.failure_seed;
            if (s.witness_file) out << " witness " << s.witness_file->string();
            out << '\n';
            err << render_report(*s.failure);
            if (s.failure->witness) err << witness_text(s.law, s.failure_seed, *s.failure->witness);
            break;
        }
    }
    return result.exit_code();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Oriented hypergraphs: duals, sections, line graphs, switching, spectra and law checks", "orhyp"};
    app.require_subcommand(1);

    std::string file;

    auto* info = app.add_subcommand("info", "Print size, degree and structure flags");
    info->add_option("file", file, "ohg file or -")->required();

    auto* dual = app.add_subcommand("dual", "Print the incidence dual");
    dual->add_option("file", file, "ohg file or -")->required();

    auto* linegraph = app.add_subcommand("linegraph", "Print the intersection graph (linear input only)");
    linegraph->add_option("file", file, "ohg file or -")->required();

    std::size_t k = 2;
    bool strict = false;
    auto* section = app.add_subcommand("section", "Print the k-section or strict k-section");
    section->add_option("-k", k, "subset size")->required()->check(CLI::PositiveNumber);
    section->add_flag("--strict", strict, "omit edges smaller than k");
    section->add_option("file", file, "ohg file or -")->required();

    std::string kind;
    bool use_dual = false;
    auto* matrix = app.add_subcommand("matrix", "Print an integer matrix");
    matrix->add_option("--kind", kind, "matrix kind")
        ->required()
        ->check(CLI::IsMember({"incidence", "adjacency", "degree", "laplacian"}));
    matrix->add_flag("--dual", use_dual, "use the incidence dual");
    matrix->add_option("file", file, "ohg file or -")->required();

    auto* spectrum = app.add_subcommand("spectrum", "Print eigenvalues in descending order");
    spectrum->add_option("--matrix", kind, "matrix kind")->required()->check(CLI::IsMember({"adjacency", "laplacian"}));
    spectrum->add_flag("--dual", use_dual, "use the incidence dual");
    spectrum->add_option("file", file, "ohg file or -")->required();

    std::string vertex_switch;
    std::string edge_switch;
    auto* sw = app.add_subcommand("switch", "Print the switched hypergraph");
    sw->add_option("--vertex-switch", vertex_switch, "label=+1|-1,... (unlisted vertices +1)");
    sw->add_option("--edge-switch", edge_switch, "label=+1|-1,... (unlisted edges +1)");
    sw->add_option("file", file, "ohg file or -")->required();

    VerifyOptions vopts;
    bool all = false;
    std::string witness_dir = ".";
    auto* verify = app.add_subcommand("verify", "Check laws on a file or on generated instances");
    auto* law_opt = verify->add_option("--law", vopts.laws, "law id (repeatable)")->allow_extra_args(false);
    auto* all_opt = verify->add_flag("--all", all, "check every law");
    law_opt->excludes(all_opt);
    verify->add_option("--trials", vopts.trials, "instances per law meeting the hypothesis")->check(CLI::PositiveNumber);
    verify->add_option("--seed", vopts.seed, "base seed");
    verify->add_option("--max-vertices", vopts.max_vertices, "generator vertex bound")->check(CLI::PositiveNumber);
    verify->add_option("--max-edges", vopts.max_edges, "generator edge bound");
    verify->add_option("--witness-dir", witness_dir, "directory for witness files on failure");
    verify->add_option("file", file, "ohg file or - (omit to generate instances)");

    auto* bibd = app.add_subcommand("bibd", "Block design commands");
    bibd->require_subcommand(1);
    auto* bibd_check = bibd->add_subcommand("check", "Validate a design and its incidence identities");
    bibd_check->add_option("file", file, "bibd file or -")->required();
    auto* bibd_fano = bibd->add_subcommand("fano", "Print the Fano plane");

    std::vector<std::string> argv{"orhyp"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<const char*> cargv;
    for (const auto& a : argv) cargv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        auto load = [&] { return parse_ohg(read_input(file, in)); };

        if (info->parsed()) {
            print_info(load(), out);
        } else if (dual->parsed()) {
            out << serialize_ohg(incidence_dual(load()));
        } else if (linegraph->parsed()) {
            out << serialize_ohg(intersection_graph(load()));
        } else if (section->parsed()) {
            const auto g = load();
            out << serialize_ohg(strict ? strict_k_section(g, k) : k_section(g, k));
        } else if (matrix->parsed()) {
            auto g = load();
            if (use_dual) g = incidence_dual(g);
            out << matrix_of_kind(kind, g);
        } else if (spectrum->parsed()) {
            auto g = load();
            if (use_dual) g = incidence_dual(g);
            out << format_spectrum(symmetric_eigenvalues(matrix_of_kind(kind, g)));
        } else if (sw->parsed()) {
            const auto g = load();
            std::vector<std::string> edges;
            for (const auto& e : g.edges()) edges.push_back(e.label);
            const SwitchingPair s{parse_switch_list(vertex_switch, g.vertices(), "vertex"),
                                  parse_switch_list(edge_switch, edges, "edge")};
            out << serialize_ohg(apply_switch(g, s));
        } else if (verify->parsed()) {
            if (!all && vopts.laws.empty()) {
                err << "verify: one of --law or --all is required\n";
                return exit_usage;
            }
            for (const auto& name : vopts.laws) parse_law(name);
            if (!file.empty()) vopts.instance = load();
            vopts.witness_dir = witness_dir;
            return print_verify(run_verify(vopts), vopts.instance.has_value(), out, err);
        } else if (bibd_fano->parsed()) {
            out << serialize_bibd(fano());
        } else if (bibd_check->parsed()) {
            const auto doc = parse_bibd(read_input(file, in));
            const auto validation = validate_design(doc.points, doc.blocks, doc.declared);
            if (!validation.ok()) {
                err << "design violation: " << validation.violation << '\n';
                return exit_violation;
            }
            out << "parameters " << format_parameters(validation.design->parameters()) << '\n';
            const auto report = check_design_identity(*validation.design);
            if (report.failed()) {
                out << "identities FAIL\n";
                err << render_report(report);
                return exit_violation;
            }
            out << "identities pass\n";
        }
    } catch (const precondition_error& e) {
        err << "hypothesis not met: " << e.what() << '\n';
        return exit_hypothesis;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}

} // namespace orhyp
