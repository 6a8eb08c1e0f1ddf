#pragma once

#include "closed_set.hpp"
#include "core.hpp"
#include "revision.hpp"
#include "strategy.hpp"

namespace fcmerge {

/// Program-level conjunction: closure of the union.
inline ClosedSet conj(const Program& a, const Program& b) { return closure(a | b); }

/// Program-level disjunction: literals both programs derive.
inline ClosedSet disj(const Program& a, const Program& b) { return intersect(closure(a), closure(b)); }

/// Symmetric combination of the two cross-revisions:
/// closure(a revised by b) intersected with closure(b revised by a).
inline ClosedSet arbitrate(const Program& a, const Program& b, Strategy s,
                           const EnumerationLimits& limits = {}) {
    return intersect(revised_closure(a, b, s, limits), revised_closure(b, a, s, limits));
}

}  // namespace fcmerge
