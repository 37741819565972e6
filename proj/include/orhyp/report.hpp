#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orhyp/hypergraph.hpp"

namespace orhyp {

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
};

// Outcome of verifying one law on one instance.
//
// A report whose hypothesis is not met carries no verdict. A failing report
// always carries the offending instance as a witness.
struct LawReport {
    std::string law;
    bool hypothesis_met = true;
    std::string hypothesis_note;
    std::vector<Check> checks;
    std::optional<OrientedHypergraph> witness;

    void not_met(std::string reason) {
        hypothesis_met = false;
        hypothesis_note = std::move(reason);
    }
    void add(std::string name, bool passed, std::string detail = {}) {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }
    // Appends the checks of another report on the same instance.
    void merge(const LawReport& other);

    bool failed() const noexcept;
    bool passed() const noexcept { return hypothesis_met && !failed(); }

    // Attaches g as the witness if any check failed.
    LawReport& seal(const OrientedHypergraph& g);
};

// Multi-line human-readable rendering: header line plus one line per check.
std::string render_report(const LawReport& r);

} // namespace orhyp
