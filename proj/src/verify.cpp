#include "orhyp/verify.hpp"

#include <fstream>

#include "orhyp/errors.hpp"
#include "orhyp/ohg_format.hpp"
#include "orhyp/rng.hpp"

namespace orhyp {

namespace {

std::uint64_t name_tag(const std::string& name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::size_t choose(std::uint64_t trial_seed, std::size_t lo, std::size_t hi) {
    Rng rng(mix_seed(trial_seed, 7));
    return static_cast<std::size_t>(rng.uniform(lo, hi));
}

GeneratorConstraints constraints_for(LawId id, std::uint64_t trial_seed) {
    GeneratorConstraints c;
    switch (id) {
    case LawId::theorem_3_1:
    case LawId::corollary_4_2:
    case LawId::proposition_4_8:
    case LawId::theorem_5_4:
        c.linear = true;
        break;
    case LawId::corollary_3_3:
        c.linear = true;
        c.k_uniform = 2;
        break;
    case LawId::corollary_3_7:
        c.linear = true;
        c.two_regular = true;
        break;
    case LawId::lemma_4_3:
        c.k_uniform = choose(trial_seed, 2, 4);
        break;
    case LawId::theorem_4_4:
        c.linear = true;
        c.k_uniform = choose(trial_seed, 2, 4);
        break;
    case LawId::lemma_4_5:
    case LawId::theorem_4_6:
        c.r_regular = choose(trial_seed, 2, 3);
        break;
    case LawId::theorem_6_1:
    case LawId::corollary_6_2:
        c.bibd = true;
        break;
    default:
        break;
    }
    return c;
}

void write_witness(LawSummary& s, const VerifyOptions& options) {
    if (!options.witness_dir || !s.failure || !s.failure->witness) return;
    std::filesystem::create_directories(*options.witness_dir);
    auto path = *options.witness_dir / ("witness-" + s.law + "-" + std::to_string(s.failure_seed) + ".ohg");
    std::ofstream out(path);
    out << witness_text(s.law, s.failure_seed, *s.failure->witness);
    s.witness_file = path;
}

LawSummary verify_instance(const LawSpec& spec, const VerifyOptions& options) {
    LawSummary s;
    s.law = spec.name;
    s.attempts = 1;
    auto report = spec.check(*options.instance, LawContext{options.seed});
    if (!report.hypothesis_met) {
        s.outcome = Outcome::hypothesis_not_met;
        s.note = report.hypothesis_note;
    } else if (report.failed()) {
        s.outcome = Outcome::violation;
        s.failure_seed = options.seed;
        s.failure = std::move(report);
        write_witness(s, options);
    } else {
        s.passed_trials = 1;
    }
    return s;
}

LawSummary verify_generated(const LawSpec& spec, const VerifyOptions& options) {
    LawSummary s;
    s.law = spec.name;
    const std::uint64_t law_seed = mix_seed(options.seed, name_tag(spec.name));
    const std::size_t cap = 100 * options.trials;
    std::string last_note;
    while (s.passed_trials < options.trials && s.attempts < cap) {
        const std::uint64_t trial_seed = mix_seed(law_seed, s.attempts);
        ++s.attempts;
        GeneratorConfig config;
        config.seed = trial_seed;
        config.max_vertices = options.max_vertices;
        config.max_edges = options.max_edges;
        config.constraints = spec.constraints(trial_seed);
        OrientedHypergraph g;
        try {
            g = generate(config);
        } catch (const generation_error& e) {
            last_note = e.what();
            continue;
        } catch (const precondition_error& e) {
            s.outcome = Outcome::hypothesis_not_met;
            s.note = e.what();
            return s;
        }
        auto report = spec.check(g, LawContext{trial_seed});
        if (!report.hypothesis_met) {
            last_note = report.hypothesis_note;
            continue;
        }
        if (report.failed()) {
            s.outcome = Outcome::violation;
            s.failure_seed = trial_seed;
            s.failure = std::move(report);
            write_witness(s, options);
            return s;
        }
        ++s.passed_trials;
    }
    if (s.passed_trials < options.trials) {
        s.outcome = Outcome::hypothesis_not_met;
        s.note = "only " + std::to_string(s.passed_trials) + " of " + std::to_string(options.trials) +
                 " instances met the hypothesis in " + std::to_string(s.attempts) + " attempts" +
                 (last_note.empty() ? "" : " (last: " + last_note + ")");
    }
    return s;
}

} // namespace

std::vector<LawSpec> default_law_specs() {
    std::vector<LawSpec> specs;
    for (LawId id : all_laws()) {
        specs.push_back({std::string(law_name(id)),
                         [id](std::uint64_t seed) { return constraints_for(id, seed); },
                         [id](const OrientedHypergraph& g, const LawContext& ctx) { return check_law(id, g, ctx); }});
    }
    return specs;
}

int VerifyResult::exit_code() const noexcept {
    bool not_met = false;
    for (const auto& s : laws) {
        if (s.outcome == Outcome::violation) return 3;
        if (s.outcome == Outcome::hypothesis_not_met) not_met = true;
    }
    return not_met ? 2 : 0;
}

VerifyResult run_verify(const VerifyOptions& options, const std::vector<LawSpec>& specs) {
    std::vector<const LawSpec*> selected;
    if (options.laws.empty()) {
        for (const auto& s : specs) selected.push_back(&s);
    } else {
        for (const auto& name : options.laws) {
            const LawSpec* found = nullptr;
            for (const auto& s : specs)
                if (s.name == name) found = &s;
            if (!found) throw lookup_error("unknown law id '" + name + "'");
            selected.push_back(found);
        }
    }
    VerifyResult result;
    for (const auto* spec : selected)
        result.laws.push_back(options.instance ? verify_instance(*spec, options) : verify_generated(*spec, options));
    return result;
}

std::string witness_text(const std::string& law, std::uint64_t seed, const OrientedHypergraph& g) {
    return "# witness for " + law + "\n# replay: orhyp verify --law " + law + " --seed " + std::to_string(seed) +
           " <this file>\n" + serialize_ohg(g);
}

} // namespace orhyp
