#pragma once

#include <vector>

#include "closed_set.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "revision.hpp"
#include "strategy.hpp"

namespace fcmerge {

/// A finite nonempty multiset of nonempty programs, kept in insertion order.
class Profile {
  public:
    explicit Profile(std::vector<Program> members) : members_(std::move(members)) {
        if (members_.empty()) throw EmptyProfile();
        for (const auto& m : members_)
            if (m.empty()) throw std::invalid_argument("profile members must be nonempty programs");
    }
    Profile(std::initializer_list<Program> members) : Profile(std::vector<Program>(members)) {}

    const std::vector<Program>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }

    /// Union of every member.
    Program joined() const {
        Program out;
        for (const auto& m : members_) out = out | m;
        return out;
    }

    /// Multiset sum; multiplicities add up.
    friend Profile multiset_sum(const Profile& a, const Profile& b) {
        std::vector<Program> all = a.members_;
        all.insert(all.end(), b.members_.begin(), b.members_.end());
        return Profile(std::move(all));
    }

    friend bool operator==(const Profile&, const Profile&) = default;

  private:
    std::vector<Program> members_;
};

/// Merges `profile` under `constraint`: the closure of everything together
/// when that is consistent, otherwise the literals shared by every member
/// revised by the constraint.
inline ClosedSet merge(const Program& constraint, const Profile& profile, Strategy s,
                       const EnumerationLimits& limits = {}) {
    ClosedSet together = closure(constraint | profile.joined());
    if (together.is_consistent()) return together;
    ClosedSet out = revised_closure(profile.members().front(), constraint, s, limits);
    for (std::size_t i = 1; i < profile.size(); ++i)
        out = intersect(out, revised_closure(profile.members()[i], constraint, s, limits));
    return out;
}

}  // namespace fcmerge
