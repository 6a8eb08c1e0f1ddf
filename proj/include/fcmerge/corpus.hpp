#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "arbitration.hpp"
#include "errors.hpp"
#include "merging.hpp"
#include "postulates.hpp"
#include "strategy.hpp"
#include "textio.hpp"

// Regression corpus of known postulate verdicts and operator outputs.
//
// A corpus directory holds program files in the text format and a
// `corpus.json` manifest:
//
//   {"entries": [
//     {"name": "...", "kind": "postulate", "postulate": "SA5",
//      "strategies": ["rk", "h", "eh"],
//      "programs": {"P1": "sa5/P1.fc", ...}, "profiles": {"Phi": "x/Phi.fcp"},
//      "expect": "Violated",
//      "witness": {"arb(P1,Q1)": "a, b, c", ...}},
//     {"name": "...", "kind": "arbitrate",
//      "programs": {"A": "...", "B": "..."},
//      "expect": {"rk": "", "h": "d", "eh": "d, e"}},
//     {"name": "...", "kind": "merge",
//      "programs": {"constraint": "..."}, "profiles": {"profile": "..."},
//      "expect": {"rk": "a, b", ...}}
//   ]}
//
// Expected literal sets use the rendered form ("a, -b", "" or "#bottom").
// For postulate entries only the listed witness labels are compared.

namespace fcmerge {

struct CorpusEntry {
    enum class Kind { Postulate, Arbitrate, Merge };

    std::string name;
    Kind kind = Kind::Postulate;
    std::vector<Strategy> strategies;
    std::map<std::string, Program> programs;
    std::map<std::string, Profile> profiles;
    // Postulate entries.
    PostulateId postulate{};
    Status expect_status = Status::Holds;
    std::map<std::string, ClosedSet> expect_witness;
    // Arbitrate and merge entries.
    std::map<Strategy, ClosedSet> expect_result;
};

struct Corpus {
    std::vector<CorpusEntry> entries;
};

struct CorpusResult {
    std::string name;
    Strategy strategy;
    std::string expected;
    std::string actual;
    bool matched;
};

struct CorpusReport {
    std::vector<CorpusResult> results;

    bool success() const {
        return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.matched; });
    }
};

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace detail

inline Program load_program(const std::filesystem::path& path) {
    try {
        return parse_program(detail::read_file(path));
    } catch (const SourceError& e) {
        throw e.in(path.string());
    }
}

inline Profile load_profile(const std::filesystem::path& path) {
    try {
        return parse_profile(detail::read_file(path));
    } catch (const SourceError& e) {
        throw e.in(path.string());
    }
}

inline Corpus parse_corpus(const nlohmann::json& manifest, const std::filesystem::path& dir) {
    auto strategy = [](const std::string& name) {
        auto s = parse_strategy(name);
        if (!s) throw Error("corpus: unknown strategy '" + name + "'");
        return *s;
    };
    Corpus corpus;
    for (const auto& j : manifest.at("entries")) {
        CorpusEntry e;
        e.name = j.at("name").get<std::string>();
        std::string kind = j.at("kind").get<std::string>();
        if (j.contains("programs"))
            for (const auto& [var, file] : j.at("programs").items()) e.programs[var] = load_program(dir / file.get<std::string>());
        if (j.contains("profiles"))
            for (const auto& [var, file] : j.at("profiles").items())
                e.profiles.emplace(var, load_profile(dir / file.get<std::string>()));

        if (kind == "postulate") {
            e.kind = CorpusEntry::Kind::Postulate;
            auto id = parse_postulate(j.at("postulate").get<std::string>());
            if (!id) throw Error("corpus: unknown postulate in entry " + e.name);
            e.postulate = *id;
            auto st = parse_status(j.at("expect").get<std::string>());
            if (!st) throw Error("corpus: unknown status in entry " + e.name);
            e.expect_status = *st;
            for (const auto& s : j.at("strategies")) e.strategies.push_back(strategy(s.get<std::string>()));
            if (j.contains("witness"))
                for (const auto& [label, set] : j.at("witness").items())
                    e.expect_witness.emplace(label, parse_closed_set(set.get<std::string>()));
        } else if (kind == "arbitrate" || kind == "merge") {
            e.kind = kind == "merge" ? CorpusEntry::Kind::Merge : CorpusEntry::Kind::Arbitrate;
            for (const auto& [name, set] : j.at("expect").items()) {
                Strategy s = strategy(name);
                e.strategies.push_back(s);
                e.expect_result.emplace(s, parse_closed_set(set.get<std::string>()));
            }
        } else {
            throw Error("corpus: unknown entry kind '" + kind + "'");
        }
        corpus.entries.push_back(std::move(e));
    }
    return corpus;
}

/// Reads `dir/corpus.json` and every file it references.
inline Corpus load_corpus(const std::filesystem::path& dir) {
    std::string text = detail::read_file(dir / "corpus.json");
    try {
        return parse_corpus(nlohmann::json::parse(text), dir);
    } catch (const nlohmann::json::exception& e) {
        throw Error("corpus: " + std::string(e.what()));
    }
}

/// Evaluates every entry under each of its strategies.
inline CorpusReport run_corpus(const Corpus& corpus, const EnumerationLimits& limits = {}) {
    CorpusReport report;
    for (const auto& e : corpus.entries) {
        for (Strategy s : e.strategies) {
            CorpusResult r{e.name, s, "", "", true};
            if (e.kind == CorpusEntry::Kind::Postulate) {
                Instance inst{e.programs, e.profiles, s};
                Verdict v = check(e.postulate, inst, limits);
                r.expected = std::string(to_string(e.expect_status));
                r.actual = std::string(to_string(v.status));
                r.matched = v.status == e.expect_status;
                for (const auto& [label, want] : e.expect_witness) {
                    const ClosedSet* got = v.find(label);
                    r.expected += "; " + label + " = {" + to_string(want) + "}";
                    r.actual += "; " + label + " = " + (got ? "{" + to_string(*got) + "}" : "n/a");
                    if (!got || *got != want) r.matched = false;
                }
            } else {
                ClosedSet got;
                if (e.kind == CorpusEntry::Kind::Arbitrate) {
                    got = arbitrate(e.programs.at("A"), e.programs.at("B"), s, limits);
                } else {
                    got = merge(e.programs.at("constraint"), e.profiles.at("profile"), s, limits);
                }
                const ClosedSet& want = e.expect_result.at(s);
                r.expected = "{" + to_string(want) + "}";
                r.actual = "{" + to_string(got) + "}";
                r.matched = got == want;
            }
            report.results.push_back(std::move(r));
        }
    }
    return report;
}

inline CorpusReport run_corpus(const std::filesystem::path& dir, const EnumerationLimits& limits = {}) {
    return run_corpus(load_corpus(dir), limits);
}

}  // namespace fcmerge
