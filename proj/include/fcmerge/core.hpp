#pragma once

#include <span>
#include <vector>

#include "closed_set.hpp"
#include "detail/engine.hpp"
#include "errors.hpp"
#include "syntax.hpp"

namespace fcmerge {

/// Forward-chaining consequences of `p`, or Bottom if they contain two
/// opposed literals.
inline ClosedSet closure(const Program& p) {
    detail::Engine engine(p.rules());
    auto derived = engine.run_all();
    if (!derived) return ClosedSet::bottom();
    return ClosedSet(engine.literals(*derived));
}

inline bool is_consistent(const Program& p) { return closure(p).is_consistent(); }

/// True iff `literals` together with `p` is consistent.
inline bool consistent_with(std::span<const Literal> literals, const Program& p) {
    return is_consistent(p | facts_of(literals));
}

/// Closure of a literal set read as facts, added to `p`. Bottom stays Bottom.
inline ClosedSet conjoin(const ClosedSet& s, const Program& p) {
    if (s.is_bottom()) return ClosedSet::bottom();
    return closure(p | facts_of(s.literals()));
}

/// `p` entails `q` iff closure(q) is included in closure(p).
inline bool entails(const Program& p, const Program& q) { return closure(q).subset_of(closure(p)); }

/// Layers of a consistent closure: layer 0 holds the facts, layer i the
/// literals first derivable from the union of the earlier layers.
struct Stratification {
    std::vector<std::vector<Literal>> layers;

    std::size_t literal_count() const {
        std::size_t n = 0;
        for (const auto& l : layers) n += l.size();
        return n;
    }
    friend bool operator==(const Stratification&, const Stratification&) = default;
};

inline Stratification stratify(const Program& p) {
    if (!is_consistent(p)) throw InconsistentProgram();

    std::vector<Literal> known;  // sorted union of the layers so far
    for (const auto& r : p)
        if (r.is_fact()) known.push_back(r.head());
    std::sort(known.begin(), known.end());
    known.erase(std::unique(known.begin(), known.end()), known.end());

    Stratification out;
    out.layers.push_back(known);
    for (;;) {
        std::vector<Literal> next;
        for (const auto& r : p) {
            if (r.is_fact() || std::binary_search(known.begin(), known.end(), r.head())) continue;
            if (std::includes(known.begin(), known.end(), r.body().begin(), r.body().end()))
                next.push_back(r.head());
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.empty()) break;
        std::vector<Literal> merged;
        std::merge(known.begin(), known.end(), next.begin(), next.end(), std::back_inserter(merged));
        known = std::move(merged);
        out.layers.push_back(std::move(next));
    }
    return out;
}

}  // namespace fcmerge
