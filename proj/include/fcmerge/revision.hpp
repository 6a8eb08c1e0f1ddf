#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "closed_set.hpp"
#include "core.hpp"
#include "detail/engine.hpp"
#include "errors.hpp"
#include "strategy.hpp"
#include "syntax.hpp"

namespace fcmerge {

/// Bounds on the exponential maximal-subset search.
struct EnumerationLimits {
    static constexpr std::size_t default_max_candidates = 24;
    std::size_t max_candidates = default_max_candidates;
};

/// Rules of `p` whose body is inconsistent with `p`. Every rule of an
/// inconsistent program is exceptional.
inline Program exceptional_rules(const Program& p) {
    if (!is_consistent(p)) return p;
    Program out;
    for (const auto& r : p)
        if (!consistent_with(r.body(), p)) out.insert(r);
    return out;
}

/// The decreasing sequence P_0 = P, P_{i+1} = exceptional_rules(P_i), cut at
/// its first fixpoint and closed with an empty level. The last level is
/// always empty.
struct Base {
    std::vector<Program> levels;

    std::size_t last_index() const noexcept { return levels.size() - 1; }
    friend bool operator==(const Base&, const Base&) = default;
};

inline Base base(const Program& p) {
    Base b;
    b.levels.push_back(p);
    for (;;) {
        Program next = exceptional_rules(b.levels.back());
        if (next == b.levels.back()) break;
        b.levels.push_back(std::move(next));
    }
    if (!b.levels.back().empty()) b.levels.emplace_back();
    return b;
}

/// Index of the first level of `b` (the base of `p`) consistent with `q`
/// when both programs are consistent; the last index otherwise.
inline std::size_t rank(const Base& b, const Program& p, const Program& q) {
    if (is_consistent(p) && is_consistent(q)) {
        for (std::size_t i = 0; i < b.levels.size(); ++i)
            if (is_consistent(b.levels[i] | q)) return i;
    }
    return b.last_index();
}

inline std::size_t rank(const Program& p, const Program& q) { return rank(base(p), p, q); }

/// `q` added to the least exceptional level of `p` consistent with it.
inline Program revise_rank(const Program& p, const Program& q) {
    Base b = base(p);
    return b.levels[rank(b, p, q)] | q;
}

namespace detail {

/// Depth-first search for the maximal consistent selections of the first
/// `candidates` rules of `engine`; the remaining rules are always active.
/// Any superset of an inconsistent selection is inconsistent, so an include
/// branch is cut as soon as it fails, and a rule is only left out when the
/// current selection, the rule and every undecided rule together clash.
class MaximalSubsetSearch {
  public:
    MaximalSubsetSearch(const Engine& engine, std::size_t candidates)
        : engine_(engine), candidates_(candidates), active_(engine.rule_count(), 1), usable_(candidates, 0) {
        std::fill(active_.begin(), active_.begin() + static_cast<std::ptrdiff_t>(candidates_), 0);
        for (std::size_t c = 0; c < candidates_; ++c) {
            active_[c] = 1;
            usable_[c] = engine_.consistent(active_);
            active_[c] = 0;
        }
    }

    std::vector<std::vector<std::uint8_t>> run() {
        visit(0);
        return std::move(found_);
    }

  private:
    void visit(std::size_t i) {
        if (i == candidates_) {
            if (maximal()) found_.emplace_back(active_.begin(), active_.begin() + static_cast<std::ptrdiff_t>(candidates_));
            return;
        }
        if (!usable_[i]) {
            visit(i + 1);
            return;
        }
        active_[i] = 1;
        if (engine_.consistent(active_)) {
            visit(i + 1);
            if (!blocked_later(i)) {
                active_[i] = 0;
                return;
            }
        }
        active_[i] = 0;
        visit(i + 1);
    }

    /// Whether rule i, already active, clashes once every undecided rule is added.
    bool blocked_later(std::size_t i) {
        for (std::size_t c = i + 1; c < candidates_; ++c) active_[c] = usable_[c];
        bool blocked = !engine_.consistent(active_);
        for (std::size_t c = i + 1; c < candidates_; ++c) active_[c] = 0;
        return blocked;
    }

    bool maximal() {
        for (std::size_t c = 0; c < candidates_; ++c) {
            if (active_[c] || !usable_[c]) continue;
            active_[c] = 1;
            bool ok = engine_.consistent(active_);
            active_[c] = 0;
            if (ok) return false;
        }
        return true;
    }

    const Engine& engine_;
    std::size_t candidates_;
    std::vector<std::uint8_t> active_;
    std::vector<std::uint8_t> usable_;
    std::vector<std::vector<std::uint8_t>> found_;
};

inline void sort_canonically(std::vector<Program>& programs) {
    std::vector<std::pair<std::string, Program>> keyed;
    keyed.reserve(programs.size());
    for (auto& p : programs) keyed.emplace_back(to_string(p), std::move(p));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    programs.clear();
    for (auto& [_, p] : keyed) programs.push_back(std::move(p));
}

}  // namespace detail

/// The maximal subsets of `p` that contain the rank level of `p` with
/// respect to `q` and stay consistent with `q`, ordered by rendered text.
/// Empty exactly when `q` is inconsistent.
inline std::vector<Program> maximal_extensions(const Program& p, const Program& q,
                                               const EnumerationLimits& limits = {}) {
    if (!is_consistent(q)) return {};
    if (is_consistent(p | q)) return {p};

    Base b = base(p);
    const Program& fixed = b.levels[rank(b, p, q)];
    Program candidates = p - fixed;
    if (candidates.size() > limits.max_candidates)
        throw SizeLimitExceeded(candidates.size(), limits.max_candidates);

    std::vector<Rule> pool(candidates.begin(), candidates.end());
    pool.insert(pool.end(), fixed.begin(), fixed.end());
    pool.insert(pool.end(), q.begin(), q.end());
    detail::Engine engine(pool);

    std::vector<Program> out;
    for (const auto& selection : detail::MaximalSubsetSearch(engine, candidates.size()).run()) {
        Program h = fixed;
        for (std::size_t i = 0; i < selection.size(); ++i)
            if (selection[i]) h.insert(pool[i]);
        out.push_back(std::move(h));
    }
    detail::sort_canonically(out);
    return out;
}

/// Intersection of the maximal extensions; empty when there are none.
inline Program hull(const Program& p, const Program& q, const EnumerationLimits& limits = {}) {
    auto extensions = maximal_extensions(p, q, limits);
    if (extensions.empty()) return {};
    Program out = extensions.front();
    for (std::size_t i = 1; i < extensions.size(); ++i) out = out & extensions[i];
    return out;
}

inline Program revise_hull(const Program& p, const Program& q, const EnumerationLimits& limits = {}) {
    return hull(p, q, limits) | q;
}

/// A nonempty ordered sequence of programs. Its consequences are the
/// literals every member derives.
class Flock {
  public:
    Flock(Program p) : members_{std::move(p)} {}
    explicit Flock(std::vector<Program> members) : members_(std::move(members)) {
        if (members_.empty()) throw std::invalid_argument("a flock needs at least one program");
    }

    const std::vector<Program>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }

    friend Flock concat(const Flock& a, const Flock& b) {
        std::vector<Program> all = a.members_;
        all.insert(all.end(), b.members_.begin(), b.members_.end());
        return Flock(std::move(all));
    }

    friend bool operator==(const Flock&, const Flock&) = default;

  private:
    std::vector<Program> members_;
};

inline ClosedSet flock_closure(const Flock& f) {
    ClosedSet out = closure(f.members().front());
    for (std::size_t i = 1; i < f.size(); ++i) out = intersect(out, closure(f.members()[i]));
    return out;
}

/// One member `H | q` per maximal extension H of each flock member, in
/// member order; a member without extensions contributes `q` alone.
inline Flock revise_extended_hull(const Flock& a, const Program& q, const EnumerationLimits& limits = {}) {
    std::vector<Program> out;
    for (const auto& member : a.members()) {
        auto extensions = maximal_extensions(member, q, limits);
        if (extensions.empty()) out.push_back(q);
        for (const auto& h : extensions) out.push_back(h | q);
    }
    return Flock(std::move(out));
}

/// Consequences of revising `p` by `q` under strategy `s`.
inline ClosedSet revised_closure(const Program& p, const Program& q, Strategy s,
                                 const EnumerationLimits& limits = {}) {
    switch (s) {
        case Strategy::Rank: return closure(revise_rank(p, q));
        case Strategy::Hull: return closure(revise_hull(p, q, limits));
        case Strategy::ExtendedHull: return flock_closure(revise_extended_hull(Flock(p), q, limits));
    }
    return ClosedSet::bottom();
}

}  // namespace fcmerge
