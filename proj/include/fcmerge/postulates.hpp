#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arbitration.hpp"
#include "closed_set.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "merging.hpp"
#include "revision.hpp"
#include "strategy.hpp"

namespace fcmerge {

/// SA1..SA8 (arbitration) and FP0..FP8 (constrained merging).
struct PostulateId {
    enum class Family { SA, FP };
    Family family;
    int index;

    friend bool operator==(const PostulateId&, const PostulateId&) = default;
    friend auto operator<=>(const PostulateId&, const PostulateId&) = default;
};

inline constexpr std::array<PostulateId, 17> all_postulates = [] {
    std::array<PostulateId, 17> out{};
    for (int i = 0; i < 8; ++i) out[i] = {PostulateId::Family::SA, i + 1};
    for (int i = 0; i < 9; ++i) out[8 + i] = {PostulateId::Family::FP, i};
    return out;
}();

inline std::string to_string(PostulateId id) {
    return (id.family == PostulateId::Family::SA ? "SA" : "FP") + std::to_string(id.index);
}

inline std::optional<PostulateId> parse_postulate(std::string_view name) {
    for (auto id : all_postulates)
        if (to_string(id) == name) return id;
    return std::nullopt;
}

/// Postulates the operators are proven to satisfy. FP4 holds for the rank
/// strategy only.
inline bool guaranteed(PostulateId id, Strategy s) {
    using F = PostulateId::Family;
    if (id.family == F::SA) return id.index != 5 && id.index != 6;
    if (id.index <= 2) return true;
    return id.index == 4 && s == Strategy::Rank;
}

/// Programs and profiles bound to a postulate's variables.
struct Instance {
    std::map<std::string, Program> programs;
    std::map<std::string, Profile> profiles;
    Strategy strategy = Strategy::Rank;

    std::size_t rule_count() const {
        std::size_t n = 0;
        for (const auto& [_, p] : programs) n += p.size();
        for (const auto& [_, f] : profiles)
            for (const auto& m : f.members()) n += m.size();
        return n;
    }

    friend bool operator==(const Instance&, const Instance&) = default;
};

enum class Status { Holds, Violated, Vacuous, Skipped };

constexpr std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::Holds: return "Holds";
        case Status::Violated: return "Violated";
        case Status::Vacuous: return "Vacuous";
        case Status::Skipped: return "Skipped";
    }
    return "?";
}

inline std::optional<Status> parse_status(std::string_view name) {
    for (auto s : {Status::Holds, Status::Violated, Status::Vacuous, Status::Skipped})
        if (to_string(s) == name) return s;
    return std::nullopt;
}

/// Outcome of evaluating one postulate on one instance. The witness lists
/// every sub-expression evaluated, labelled, in evaluation order.
struct Verdict {
    Status status = Status::Holds;
    std::string reason;
    std::vector<std::pair<std::string, ClosedSet>> witness;

    const ClosedSet* find(std::string_view label) const {
        for (const auto& [l, s] : witness)
            if (l == label) return &s;
        return nullptr;
    }
};

namespace detail {

class Evaluation {
  public:
    Evaluation(const Instance& inst, const EnumerationLimits& limits) : inst_(inst), limits_(limits) {}

    const Program& prog(const char* name) const { return inst_.programs.at(name); }
    const Profile& profile(const char* name) const { return inst_.profiles.at(name); }
    Strategy strategy() const { return inst_.strategy; }
    const EnumerationLimits& limits() const { return limits_; }

    const ClosedSet& note(std::string label, ClosedSet s) {
        verdict_.witness.emplace_back(std::move(label), std::move(s));
        return verdict_.witness.back().second;
    }

    ClosedSet arb(const Program& a, const Program& b) const { return arbitrate(a, b, strategy(), limits_); }
    ClosedSet merged(const Program& c, const Profile& f) const { return merge(c, f, strategy(), limits_); }

    Verdict conclude(bool holds) {
        verdict_.status = holds ? Status::Holds : Status::Violated;
        return std::move(verdict_);
    }
    Verdict vacuous() {
        verdict_.status = Status::Vacuous;
        return std::move(verdict_);
    }
    Verdict skipped(std::string reason) {
        verdict_.status = Status::Skipped;
        verdict_.reason = std::move(reason);
        return std::move(verdict_);
    }

  private:
    const Instance& inst_;
    const EnumerationLimits& limits_;
    Verdict verdict_;
};

/// A literal set as a fact program. Bottom becomes {x. -x.} over the first
/// atom of `vocabulary`, which must be nonempty.
inline Program as_program(const ClosedSet& s, const Program& vocabulary) {
    if (s.is_consistent()) return facts_of(s.literals());
    auto atoms = atoms_of(vocabulary);
    return Program{Rule::fact(Literal(atoms.front())), Rule::fact(Literal(atoms.front(), true))};
}

// Arbitration postulates. Each copies the witness values it needs, since
// later notes may reallocate the witness vector.

inline Verdict sa1(Evaluation& e) {
    const auto& p = e.prog("P");
    const auto& q = e.prog("Q");
    ClosedSet pq = e.note("arb(P,Q)", e.arb(p, q));
    ClosedSet qp = e.note("arb(Q,P)", e.arb(q, p));
    return e.conclude(pq == qp);
}

inline Verdict sa2(Evaluation& e) {
    ClosedSet a = e.note("arb(P,Q)", e.arb(e.prog("P"), e.prog("Q")));
    ClosedSet c = e.note("conj(P,Q)", conj(e.prog("P"), e.prog("Q")));
    return e.conclude(a.subset_of(c));
}

inline Verdict sa3(Evaluation& e) {
    ClosedSet c = e.note("conj(P,Q)", conj(e.prog("P"), e.prog("Q")));
    if (c.is_bottom()) return e.vacuous();
    ClosedSet a = e.note("arb(P,Q)", e.arb(e.prog("P"), e.prog("Q")));
    return e.conclude(c.subset_of(a));
}

inline Verdict sa4(Evaluation& e) {
    ClosedSet a = e.note("arb(P,Q)", e.arb(e.prog("P"), e.prog("Q")));
    ClosedSet cp = e.note("cns(P)", closure(e.prog("P")));
    ClosedSet cq = e.note("cns(Q)", closure(e.prog("Q")));
    return e.conclude(a.is_bottom() == (cp.is_bottom() && cq.is_bottom()));
}

inline Verdict sa5(Evaluation& e) {
    ClosedSet p1 = e.note("cns(P1)", closure(e.prog("P1")));
    ClosedSet p2 = e.note("cns(P2)", closure(e.prog("P2")));
    ClosedSet q1 = e.note("cns(Q1)", closure(e.prog("Q1")));
    ClosedSet q2 = e.note("cns(Q2)", closure(e.prog("Q2")));
    if (p1 != p2 || q1 != q2) return e.vacuous();
    ClosedSet a1 = e.note("arb(P1,Q1)", e.arb(e.prog("P1"), e.prog("Q1")));
    ClosedSet a2 = e.note("arb(P2,Q2)", e.arb(e.prog("P2"), e.prog("Q2")));
    return e.conclude(a1 == a2);
}

/// Satisfied when the left side equals any one of the three alternatives.
inline Verdict sa6(Evaluation& e) {
    const auto& p = e.prog("P");
    const auto& q1 = e.prog("Q1");
    const auto& q2 = e.prog("Q2");
    ClosedSet d = e.note("disj(Q1,Q2)", disj(q1, q2));
    ClosedSet lhs = e.note("arb(P,disj(Q1,Q2))", e.arb(p, as_program(d, q1 | q2)));
    ClosedSet o1 = e.note("arb(P,Q1)", e.arb(p, q1));
    ClosedSet o2 = e.note("arb(P,Q2)", e.arb(p, q2));
    ClosedSet o3 = e.note("disj(arb(P,Q1),arb(P,Q2))", intersect(o1, o2));
    return e.conclude(lhs == o1 || lhs == o2 || lhs == o3);
}

inline Verdict sa7(Evaluation& e) {
    ClosedSet d = e.note("disj(P,Q)", disj(e.prog("P"), e.prog("Q")));
    ClosedSet a = e.note("arb(P,Q)", e.arb(e.prog("P"), e.prog("Q")));
    return e.conclude(d.subset_of(a));
}

inline Verdict sa8(Evaluation& e) {
    ClosedSet cp = e.note("cns(P)", closure(e.prog("P")));
    if (cp.is_bottom()) return e.vacuous();
    ClosedSet a = e.note("arb(P,Q)", e.arb(e.prog("P"), e.prog("Q")));
    ClosedSet c = e.note("conj(arb(P,Q),P)", conjoin(a, e.prog("P")));
    return e.conclude(c.is_consistent());
}

// Merging postulates. "X u Q" for a merge result X and program Q is the
// closure of X read as facts together with Q; "A |- B" is inclusion of
// closures, and a consistent literal set is its own closure.

inline Verdict fp0(Evaluation& e) {
    ClosedSet m = e.note("merge(P,Phi)", e.merged(e.prog("P"), e.profile("Phi")));
    ClosedSet cp = e.note("cns(P)", closure(e.prog("P")));
    return e.conclude(cp.subset_of(m));
}

inline Verdict fp1(Evaluation& e) {
    ClosedSet cp = e.note("cns(P)", closure(e.prog("P")));
    if (cp.is_bottom()) return e.vacuous();
    ClosedSet m = e.note("merge(P,Phi)", e.merged(e.prog("P"), e.profile("Phi")));
    return e.conclude(m.is_consistent());
}

inline Verdict fp2(Evaluation& e) {
    ClosedSet all = e.note("cns(P u UPhi)", closure(e.prog("P") | e.profile("Phi").joined()));
    if (all.is_bottom()) return e.vacuous();
    ClosedSet m = e.note("merge(P,Phi)", e.merged(e.prog("P"), e.profile("Phi")));
    return e.conclude(m == all);
}

/// Profiles are paired index-wise in their stored order.
inline Verdict fp3(Evaluation& e) {
    const auto& phi1 = e.profile("Phi1");
    const auto& phi2 = e.profile("Phi2");
    ClosedSet cp = e.note("cns(P)", closure(e.prog("P")));
    ClosedSet cq = e.note("cns(Q)", closure(e.prog("Q")));
    bool same = cp == cq && phi1.size() == phi2.size();
    for (std::size_t i = 0; same && i < phi1.size(); ++i)
        same = closure(phi1.members()[i]) == closure(phi2.members()[i]);
    if (!same) return e.vacuous();
    ClosedSet m1 = e.note("merge(P,Phi1)", e.merged(e.prog("P"), phi1));
    ClosedSet m2 = e.note("merge(Q,Phi2)", e.merged(e.prog("Q"), phi2));
    return e.conclude(m1 == m2);
}

inline Verdict fp4(Evaluation& e) {
    const auto& p = e.prog("P");
    const auto& p1 = e.prog("P1");
    const auto& p2 = e.prog("P2");
    ClosedSet cp = e.note("cns(P)", closure(p));
    ClosedSet c1 = e.note("cns(P1)", closure(p1));
    ClosedSet c2 = e.note("cns(P2)", closure(p2));
    if (c1.is_bottom() || c2.is_bottom() || !cp.subset_of(c1) || !cp.subset_of(c2)) return e.vacuous();
    if (p1.empty() || p2.empty()) return e.skipped("profile members must be nonempty programs");
    ClosedSet m = e.note("merge(P,{P1,P2})", e.merged(p, Profile{p1, p2}));
    ClosedSet u1 = e.note("merge(P,{P1,P2}) u P1", conjoin(m, p1));
    ClosedSet u2 = e.note("merge(P,{P1,P2}) u P2", conjoin(m, p2));
    return e.conclude(u1.is_bottom() || u2.is_consistent());
}

struct SubgroupMerges {
    ClosedSet both;   // union of the two subgroup results
    ClosedSet whole;  // merge of the multiset sum
};

inline SubgroupMerges subgroups(Evaluation& e) {
    const auto& p = e.prog("P");
    ClosedSet m1 = e.note("merge(P,Phi1)", e.merged(p, e.profile("Phi1")));
    ClosedSet m2 = e.note("merge(P,Phi2)", e.merged(p, e.profile("Phi2")));
    ClosedSet both = e.note("merge(P,Phi1) u merge(P,Phi2)", unite(m1, m2));
    ClosedSet whole =
        e.note("merge(P,Phi1+Phi2)", e.merged(p, multiset_sum(e.profile("Phi1"), e.profile("Phi2"))));
    return {std::move(both), std::move(whole)};
}

inline Verdict fp5(Evaluation& e) {
    auto s = subgroups(e);
    return e.conclude(s.whole.subset_of(s.both));
}

inline Verdict fp6(Evaluation& e) {
    auto s = subgroups(e);
    if (s.both.is_bottom()) return e.vacuous();
    return e.conclude(s.both.subset_of(s.whole));
}

inline Verdict fp7(Evaluation& e) {
    ClosedSet m = e.note("merge(P,Phi)", e.merged(e.prog("P"), e.profile("Phi")));
    ClosedSet lhs = e.note("merge(P,Phi) u Q", conjoin(m, e.prog("Q")));
    ClosedSet rhs = e.note("merge(P u Q,Phi)", e.merged(e.prog("P") | e.prog("Q"), e.profile("Phi")));
    return e.conclude(rhs.subset_of(lhs));
}

inline Verdict fp8(Evaluation& e) {
    ClosedSet m = e.note("merge(P,Phi)", e.merged(e.prog("P"), e.profile("Phi")));
    ClosedSet lhs = e.note("merge(P,Phi) u Q", conjoin(m, e.prog("Q")));
    if (lhs.is_bottom()) return e.vacuous();
    ClosedSet rhs = e.note("merge(P u Q,Phi)", e.merged(e.prog("P") | e.prog("Q"), e.profile("Phi")));
    return e.conclude(lhs.subset_of(rhs));
}

}  // namespace detail

/// A postulate as data: the variables it mentions and its evaluator.
struct PostulateSpec {
    PostulateId id;
    std::vector<std::string> program_vars;
    std::vector<std::string> profile_vars;
    Verdict (*evaluate)(detail::Evaluation&);
};

inline const std::vector<PostulateSpec>& postulate_table() {
    using F = PostulateId::Family;
    static const std::vector<PostulateSpec> table{
        {{F::SA, 1}, {"P", "Q"}, {}, detail::sa1},
        {{F::SA, 2}, {"P", "Q"}, {}, detail::sa2},
        {{F::SA, 3}, {"P", "Q"}, {}, detail::sa3},
        {{F::SA, 4}, {"P", "Q"}, {}, detail::sa4},
        {{F::SA, 5}, {"P1", "P2", "Q1", "Q2"}, {}, detail::sa5},
        {{F::SA, 6}, {"P", "Q1", "Q2"}, {}, detail::sa6},
        {{F::SA, 7}, {"P", "Q"}, {}, detail::sa7},
        {{F::SA, 8}, {"P", "Q"}, {}, detail::sa8},
        {{F::FP, 0}, {"P"}, {"Phi"}, detail::fp0},
        {{F::FP, 1}, {"P"}, {"Phi"}, detail::fp1},
        {{F::FP, 2}, {"P"}, {"Phi"}, detail::fp2},
        {{F::FP, 3}, {"P", "Q"}, {"Phi1", "Phi2"}, detail::fp3},
        {{F::FP, 4}, {"P", "P1", "P2"}, {}, detail::fp4},
        {{F::FP, 5}, {"P"}, {"Phi1", "Phi2"}, detail::fp5},
        {{F::FP, 6}, {"P"}, {"Phi1", "Phi2"}, detail::fp6},
        {{F::FP, 7}, {"P", "Q"}, {"Phi"}, detail::fp7},
        {{F::FP, 8}, {"P", "Q"}, {"Phi"}, detail::fp8},
    };
    return table;
}

inline const PostulateSpec& spec_of(PostulateId id) {
    for (const auto& s : postulate_table())
        if (s.id == id) return s;
    throw std::invalid_argument("unknown postulate " + to_string(id));
}

/// Evaluates `id` on `inst`. Enumeration beyond the limits yields Skipped.
inline Verdict check(PostulateId id, const Instance& inst, const EnumerationLimits& limits = {}) {
    const auto& spec = spec_of(id);
    auto require_exact = [&](const auto& bound, const std::vector<std::string>& wanted, const char* kind) {
        for (const auto& v : wanted)
            if (!bound.contains(v))
                throw IncompleteBinding(to_string(id) + " needs " + kind + " '" + v + "'");
        for (const auto& [name, _] : bound)
            if (std::find(wanted.begin(), wanted.end(), name) == wanted.end())
                throw IncompleteBinding(to_string(id) + " does not mention " + kind + " '" + name + "'");
    };
    require_exact(inst.programs, spec.program_vars, "program");
    require_exact(inst.profiles, spec.profile_vars, "profile");

    detail::Evaluation e(inst, limits);
    try {
        return spec.evaluate(e);
    } catch (const SizeLimitExceeded& ex) {
        return e.skipped(ex.what());
    }
}

inline Verdict check_sa(PostulateId id, const Instance& inst, const EnumerationLimits& limits = {}) {
    if (id.family != PostulateId::Family::SA) throw std::invalid_argument(to_string(id) + " is not an SA postulate");
    return check(id, inst, limits);
}

inline Verdict check_fp(PostulateId id, const Instance& inst, const EnumerationLimits& limits = {}) {
    if (id.family != PostulateId::Family::FP) throw std::invalid_argument(to_string(id) + " is not an FP postulate");
    return check(id, inst, limits);
}

}  // namespace fcmerge
