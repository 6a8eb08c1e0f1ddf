#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "../syntax.hpp"

namespace fcmerge::detail {

/// Rules over dense literal ids, ready for repeated closure runs over
/// different subsets of the same rule pool.
///
/// Closure counts the unsatisfied body literals of every active rule and
/// fires a rule when its count drops to zero, so one run is linear in the
/// total size of the active rules.
class Engine {
  public:
    using Derived = std::vector<std::uint8_t>;

    explicit Engine(std::span<const Rule> rules) {
        for (const auto& r : rules) {
            universe_.push_back(r.head());
            universe_.insert(universe_.end(), r.body().begin(), r.body().end());
        }
        std::sort(universe_.begin(), universe_.end());
        universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());

        complement_.assign(universe_.size(), -1);
        for (std::size_t i = 1; i < universe_.size(); ++i) {
            if (universe_[i - 1].opposes(universe_[i])) {
                complement_[i - 1] = static_cast<int>(i);
                complement_[i] = static_cast<int>(i - 1);
            }
        }

        watchers_.resize(universe_.size());
        rules_.reserve(rules.size());
        for (const auto& r : rules) {
            CompiledRule cr;
            cr.head = id(r.head());
            for (const auto& l : r.body()) cr.body.push_back(id(l));
            for (int b : cr.body) watchers_[b].push_back(static_cast<int>(rules_.size()));
            rules_.push_back(std::move(cr));
        }
    }

    std::size_t rule_count() const noexcept { return rules_.size(); }
    const std::vector<Literal>& universe() const noexcept { return universe_; }

    /// Closure of the rules whose `active` flag is set; nullopt means Bottom.
    std::optional<Derived> run(std::span<const std::uint8_t> active) const {
        Derived derived(universe_.size(), 0);
        std::vector<int> counts(rules_.size());
        std::vector<int> queue;
        queue.reserve(universe_.size());
        auto derive = [&](int l) {
            if (derived[l]) return true;
            derived[l] = 1;
            if (complement_[l] >= 0 && derived[complement_[l]]) return false;
            queue.push_back(l);
            return true;
        };
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            counts[i] = static_cast<int>(rules_[i].body.size());
            if (active[i] && counts[i] == 0 && !derive(rules_[i].head)) return std::nullopt;
        }
        for (std::size_t q = 0; q < queue.size(); ++q) {
            for (int ri : watchers_[queue[q]]) {
                if (!active[ri]) continue;
                if (--counts[ri] == 0 && !derive(rules_[ri].head)) return std::nullopt;
            }
        }
        return derived;
    }

    std::optional<Derived> run_all() const {
        std::vector<std::uint8_t> active(rules_.size(), 1);
        return run(active);
    }

    bool consistent(std::span<const std::uint8_t> active) const { return run(active).has_value(); }

    std::vector<Literal> literals(const Derived& derived) const {
        std::vector<Literal> out;
        for (std::size_t i = 0; i < derived.size(); ++i)
            if (derived[i]) out.push_back(universe_[i]);
        return out;
    }

  private:
    struct CompiledRule {
        std::vector<int> body;
        int head = 0;
    };

    int id(const Literal& l) const {
        return static_cast<int>(std::lower_bound(universe_.begin(), universe_.end(), l) - universe_.begin());
    }

    std::vector<Literal> universe_;
    std::vector<int> complement_;
    std::vector<CompiledRule> rules_;
    std::vector<std::vector<int>> watchers_;
};

}  // namespace fcmerge::detail
