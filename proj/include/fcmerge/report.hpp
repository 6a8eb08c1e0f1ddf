#pragma once

#include <cstdio>
#include <string>

#include "corpus.hpp"
#include "fuzz.hpp"
#include "postulates.hpp"
#include "textio.hpp"

namespace fcmerge {

namespace detail {

inline std::string indent(const std::string& text, const std::string& pad) {
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        out += pad + text.substr(pos, eol - pos) + "\n";
        pos = eol + 1;
    }
    return out;
}

}  // namespace detail

inline std::string render(const Instance& inst) {
    std::string out = "strategy " + std::string(to_string(inst.strategy)) + "\n";
    for (const auto& [name, p] : inst.programs) {
        out += name + ":" + (p.empty() ? " (empty)\n" : "\n");
        out += detail::indent(render(p), "  ");
    }
    for (const auto& [name, f] : inst.profiles) {
        out += name + ":\n";
        out += detail::indent(render(f), "  ");
    }
    return out;
}

inline std::string render(const Verdict& v) {
    std::string out(to_string(v.status));
    if (!v.reason.empty()) out += " (" + v.reason + ")";
    out += "\n";
    for (const auto& [label, set] : v.witness) out += "  " + label + " = {" + to_string(set) + "}\n";
    return out;
}

inline std::string render(const FuzzReport& r) {
    const auto& c = r.config;
    std::string out = "seed " + std::to_string(c.seed) + ", " + std::to_string(c.trials) + " trials, atoms " +
                      std::to_string(c.atoms) + ", rules " + std::to_string(c.rules) + ", body_len " +
                      std::to_string(c.body_len) + ", neg_prob " + std::to_string(c.neg_prob) + "\n";
    char line[160];
    std::snprintf(line, sizeof line, "%-5s %-3s %-10s %8s %8s %8s %8s\n", "post", "op", "guaranteed", "holds",
                  "violated", "vacuous", "skipped");
    out += line;
    for (const auto& t : r.tallies) {
        std::snprintf(line, sizeof line, "%-5s %-3s %-10s %8zu %8zu %8zu %8zu\n", to_string(t.postulate).c_str(),
                      std::string(to_string(t.strategy)).c_str(), t.guaranteed ? "yes" : "no", t.holds, t.violated,
                      t.vacuous, t.skipped);
        out += line;
    }
    for (const auto& w : r.witnesses) {
        out += "\nviolation of " + to_string(w.postulate) + " under " + std::string(to_string(w.strategy)) +
               " at trial " + std::to_string(w.position) + " (shrunk from " + std::to_string(w.original.rule_count()) +
               " to " + std::to_string(w.shrunk.rule_count()) + " rules)\n";
        out += render(w.shrunk);
        out += render(w.verdict);
    }
    out += "\nviolations of guaranteed postulates: " + std::to_string(r.guaranteed_violations()) + "\n";
    return out;
}

inline std::string render(const CorpusReport& r) {
    std::string out;
    std::size_t matched = 0;
    for (const auto& e : r.results) {
        out += std::string(e.matched ? "ok   " : "FAIL ") + e.name + " [" + std::string(to_string(e.strategy)) + "]";
        if (e.matched) {
            out += " " + e.actual + "\n";
            ++matched;
        } else {
            out += "\n  expected: " + e.expected + "\n  actual:   " + e.actual + "\n";
        }
    }
    out += std::to_string(matched) + "/" + std::to_string(r.results.size()) + " entries match\n";
    return out;
}

}  // namespace fcmerge
