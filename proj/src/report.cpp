#include "orhyp/report.hpp"

#include <algorithm>

namespace orhyp {

void LawReport::merge(const LawReport& other) {
    if (!other.hypothesis_met && hypothesis_met) not_met(other.hypothesis_note);
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool LawReport::failed() const noexcept {
    return hypothesis_met && std::any_of(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
}

LawReport& LawReport::seal(const OrientedHypergraph& g) {
    if (failed()) witness = g;
    return *this;
}

std::string render_report(const LawReport& r) {
    std::string out = r.law + ": ";
    if (!r.hypothesis_met) {
        out += "hypothesis not met (" + r.hypothesis_note + ")\n";
        return out;
    }
    out += r.failed() ? "FAIL\n" : "pass\n";
    for (const auto& c : r.checks) {
        out += "  [" + std::string(c.passed ? "ok" : "FAIL") + "] " + c.name;
        if (!c.detail.empty()) out += ": " + c.detail;
        out += '\n';
    }
    return out;
}

} // namespace orhyp
