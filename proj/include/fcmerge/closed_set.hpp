#pragma once

#include <algorithm>
#include <iterator>
#include <string>
#include <vector>

#include "syntax.hpp"

namespace fcmerge {

/// The value of forward-chaining closure: a consistent set of literals, or
/// Bottom standing for the whole literal set. Bottom is the top element of
/// the inclusion order, so it contains every literal and every other set.
class ClosedSet {
  public:
    /// The empty consistent set.
    ClosedSet() = default;

    /// Collapses to Bottom when `literals` holds two opposed literals.
    explicit ClosedSet(std::vector<Literal> literals) : literals_(std::move(literals)) {
        std::sort(literals_.begin(), literals_.end());
        literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
        // Opposed literals are adjacent under the (atom, polarity) order.
        for (std::size_t i = 1; i < literals_.size(); ++i) {
            if (literals_[i - 1].opposes(literals_[i])) {
                *this = bottom();
                return;
            }
        }
    }
    ClosedSet(std::initializer_list<Literal> literals) : ClosedSet(std::vector<Literal>(literals)) {}

    static ClosedSet bottom() {
        ClosedSet s;
        s.bottom_ = true;
        return s;
    }

    bool is_bottom() const noexcept { return bottom_; }
    bool is_consistent() const noexcept { return !bottom_; }

    /// Literals of a consistent set; empty for Bottom.
    const std::vector<Literal>& literals() const noexcept { return literals_; }
    std::size_t size() const noexcept { return literals_.size(); }

    bool contains(const Literal& l) const {
        return bottom_ || std::binary_search(literals_.begin(), literals_.end(), l);
    }

    bool subset_of(const ClosedSet& other) const {
        if (other.bottom_) return true;
        if (bottom_) return false;
        return std::includes(other.literals_.begin(), other.literals_.end(), literals_.begin(),
                             literals_.end());
    }

    friend ClosedSet intersect(const ClosedSet& a, const ClosedSet& b) {
        if (a.bottom_) return b;
        if (b.bottom_) return a;
        ClosedSet out;
        std::set_intersection(a.literals_.begin(), a.literals_.end(), b.literals_.begin(),
                              b.literals_.end(), std::back_inserter(out.literals_));
        return out;
    }

    /// Set union; Bottom when the union holds opposed literals.
    friend ClosedSet unite(const ClosedSet& a, const ClosedSet& b) {
        if (a.bottom_ || b.bottom_) return bottom();
        std::vector<Literal> all = a.literals_;
        all.insert(all.end(), b.literals_.begin(), b.literals_.end());
        return ClosedSet(std::move(all));
    }

    friend bool operator==(const ClosedSet&, const ClosedSet&) = default;

  private:
    std::vector<Literal> literals_;
    bool bottom_ = false;
};

/// "a, b, -c" in literal order; Bottom renders as "#bottom".
inline std::string to_string(const ClosedSet& s) {
    if (s.is_bottom()) return "#bottom";
    std::string out;
    for (std::size_t i = 0; i < s.literals().size(); ++i) {
        if (i) out += ", ";
        out += to_string(s.literals()[i]);
    }
    return out;
}

}  // namespace fcmerge
