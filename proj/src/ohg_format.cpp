#include "orhyp/ohg_format.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>

#include "orhyp/errors.hpp"

namespace orhyp {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = text.find('\n', pos);
        std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        Line line{number, {}};
        for (std::string tok; in >> tok;) line.tokens.push_back(std::move(tok));
        if (!line.tokens.empty()) out.push_back(std::move(line));
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return out;
}

void require_label(const Line& line, const std::string& label, const char* what) {
    if (!is_valid_label(label)) throw parse_error(line.number, std::string("invalid ") + what + " label '" + label + "'");
}

std::size_t parse_count(const Line& line, const std::string& tok) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw parse_error(line.number, "expected a nonnegative integer, got '" + tok + "'");
    return value;
}

} // namespace

OrientedHypergraph parse_ohg(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw parse_error(1, "missing 'ohg 1' header");
    const auto& header = lines.front();
    if (header.tokens[0] != "ohg" || header.tokens.size() != 2)
        throw parse_error(header.number, "expected header 'ohg 1'");
    if (header.tokens[1] != "1")
        throw parse_error(header.number, "unsupported ohg version '" + header.tokens[1] + "', expected 1");

    std::vector<std::string> vertices;
    std::unordered_map<std::string, std::size_t> vertex_index;
    std::vector<Edge> edges;
    std::set<std::string> edge_labels;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& line = lines[li];
        const auto& t = line.tokens;
        if (t[0] == "vertex") {
            if (t.size() != 2) throw parse_error(line.number, "expected 'vertex <label>'");
            require_label(line, t[1], "vertex");
            if (!vertex_index.emplace(t[1], vertices.size()).second)
                throw parse_error(line.number, "duplicate vertex label '" + t[1] + "'");
            vertices.push_back(t[1]);
        } else if (t[0] == "edge") {
            if (t.size() < 3 || t[2] != "=") throw parse_error(line.number, "expected 'edge <label> = <v>:<s> ...'");
            require_label(line, t[1], "edge");
            if (!edge_labels.insert(t[1]).second) throw parse_error(line.number, "duplicate edge label '" + t[1] + "'");
            Edge e{t[1], {}};
            std::set<std::size_t> seen;
            for (std::size_t k = 3; k < t.size(); ++k) {
                const auto& tok = t[k];
                const auto colon = tok.rfind(':');
                if (colon == std::string::npos)
                    throw parse_error(line.number, "membership '" + tok + "' lacks ':<sign>'");
                const std::string label = tok.substr(0, colon);
                const std::string sign = tok.substr(colon + 1);
                auto it = vertex_index.find(label);
                if (it == vertex_index.end())
                    throw parse_error(line.number, "edge '" + e.label + "' references unknown vertex '" + label + "'");
                if (sign != "+" && sign != "-")
                    throw parse_error(line.number, "bad sign token '" + sign + "' (expected + or -)");
                if (!seen.insert(it->second).second)
                    throw parse_error(line.number, "duplicate membership of vertex '" + label + "' in edge '" +
                                                       e.label + "'");
                e.members.push_back({it->second, sign == "+" ? Sign::plus() : Sign::minus()});
            }
            edges.push_back(std::move(e));
        } else if (t[0] == "ohg") {
            throw parse_error(line.number, "repeated header");
        } else {
            throw parse_error(line.number, "unknown directive '" + t[0] + "'");
        }
    }
    return OrientedHypergraph::from_edges(std::move(vertices), std::move(edges));
}

std::string serialize_ohg(const OrientedHypergraph& g) {
    std::string out = "ohg 1\n";
    for (const auto& v : g.vertices()) out += "vertex " + v + "\n";
    for (const auto& e : g.edges()) {
        out += "edge " + e.label + " =";
        for (const auto& m : e.members) {
            out += ' ';
            out += g.vertices()[m.vertex];
            out += ':';
            out += m.sign.symbol();
        }
        out += '\n';
    }
    return out;
}

BibdDocument parse_bibd(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty() || lines.front().tokens.size() != 1 || lines.front().tokens[0] != "bibd")
        throw parse_error(lines.empty() ? 1 : lines.front().number, "expected header 'bibd'");

    BibdDocument doc;
    std::set<std::string> points;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& line = lines[li];
        const auto& t = line.tokens;
        if (t[0] == "point") {
            if (t.size() != 2) throw parse_error(line.number, "expected 'point <label>'");
            require_label(line, t[1], "point");
            if (!points.insert(t[1]).second) throw parse_error(line.number, "duplicate point '" + t[1] + "'");
            doc.points.push_back(t[1]);
        } else if (t[0] == "block") {
            if (t.size() < 3 || t[2] != "=") throw parse_error(line.number, "expected 'block <label> = <p> ...'");
            require_label(line, t[1], "block");
            BlockSpec spec{t[1], {}};
            for (std::size_t k = 3; k < t.size(); ++k) {
                if (!points.count(t[k]))
                    throw parse_error(line.number, "block '" + t[1] + "' references unknown point '" + t[k] + "'");
                spec.points.push_back(t[k]);
            }
            doc.blocks.push_back(std::move(spec));
        } else if (t[0] == "params") {
            if (t.size() != 6) throw parse_error(line.number, "expected 'params v b r k lambda'");
            if (doc.declared) throw parse_error(line.number, "repeated params line");
            doc.declared = DesignParameters{parse_count(line, t[1]), parse_count(line, t[2]), parse_count(line, t[3]),
                                            parse_count(line, t[4]), parse_count(line, t[5])};
        } else {
            throw parse_error(line.number, "unknown directive '" + t[0] + "'");
        }
    }
    return doc;
}

std::string serialize_bibd(const BlockDesign& d) {
    const auto& p = d.parameters();
    std::string out = "bibd\n";
    out += "params " + std::to_string(p.v) + " " + std::to_string(p.b) + " " + std::to_string(p.r) + " " +
           std::to_string(p.k) + " " + std::to_string(p.lambda) + "\n";
    for (const auto& pt : d.points()) out += "point " + pt + "\n";
    for (const auto& blk : d.blocks()) {
        out += "block " + blk.label + " =";
        for (auto i : blk.points) out += " " + d.points()[i];
        out += '\n';
    }
    return out;
}

} // namespace orhyp
