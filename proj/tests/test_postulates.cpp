#include <gtest/gtest.h>

#include "support.hpp"

using namespace fcmerge;
using namespace fcmerge::testing;

namespace {

PostulateId id(const char* name) { return *parse_postulate(name); }

Instance programs(std::map<std::string, Program> p, Strategy s = Strategy::Rank) {
    Instance i;
    i.programs = std::move(p);
    i.strategy = s;
    return i;
}

Instance with_profiles(std::map<std::string, Program> p, std::map<std::string, Profile> f,
                       Strategy s = Strategy::Rank) {
    Instance i = programs(std::move(p), s);
    i.profiles = std::move(f);
    return i;
}

}  // namespace

TEST(PostulateId, SeventeenNamesRoundTrip) {
    EXPECT_EQ(all_postulates.size(), 17u);
    EXPECT_EQ(postulate_table().size(), 17u);
    for (auto p : all_postulates) {
        EXPECT_EQ(parse_postulate(to_string(p)), p);
        EXPECT_EQ(spec_of(p).id, p);
    }
    EXPECT_EQ(to_string(all_postulates.front()), "SA1");
    EXPECT_EQ(to_string(all_postulates.back()), "FP8");
    EXPECT_FALSE(parse_postulate("SA0").has_value());
    EXPECT_FALSE(parse_postulate("FP9").has_value());
    EXPECT_FALSE(parse_postulate("sa1").has_value());
}

TEST(PostulateId, GuaranteedTable) {
    for (auto s : all_strategies) {
        for (const char* n : {"SA1", "SA2", "SA3", "SA4", "SA7", "SA8", "FP0", "FP1", "FP2"})
            EXPECT_TRUE(guaranteed(id(n), s)) << n;
        for (const char* n : {"SA5", "SA6", "FP3", "FP5", "FP6", "FP7", "FP8"}) EXPECT_FALSE(guaranteed(id(n), s)) << n;
    }
    EXPECT_TRUE(guaranteed(id("FP4"), Strategy::Rank));
    EXPECT_FALSE(guaranteed(id("FP4"), Strategy::Hull));
    EXPECT_FALSE(guaranteed(id("FP4"), Strategy::ExtendedHull));
}

TEST(Status, NamesRoundTrip) {
    for (auto s : {Status::Holds, Status::Violated, Status::Vacuous, Status::Skipped})
        EXPECT_EQ(parse_status(to_string(s)), s);
}

TEST(CheckSa, Sa5SyntaxDependence) {
    for (auto s : all_strategies) {
        auto v = check_sa(id("SA5"), programs({{"P1", prog("a -> c. b.")},
                                               {"P2", prog("b.")},
                                               {"Q1", prog("b -> c. a.")},
                                               {"Q2", prog("a.")}},
                                              s));
        EXPECT_EQ(v.status, Status::Violated);
        ASSERT_NE(v.find("arb(P1,Q1)"), nullptr);
        EXPECT_EQ(*v.find("arb(P1,Q1)"), lits("a, b, c"));
        EXPECT_EQ(*v.find("arb(P2,Q2)"), lits("a, b"));
    }
}

TEST(CheckSa, Sa6Counterexample) {
    for (auto s : all_strategies) {
        auto v = check_sa(id("SA6"),
                          programs({{"P", prog("a -> b. a -> c. e.")}, {"Q1", prog("a.")}, {"Q2", prog("b.")}}, s));
        EXPECT_EQ(v.status, Status::Violated);
        EXPECT_EQ(*v.find("arb(P,disj(Q1,Q2))"), lits("e"));
        EXPECT_EQ(*v.find("arb(P,Q1)"), lits("a, b, c, e"));
        EXPECT_EQ(*v.find("arb(P,Q2)"), lits("b, e"));
    }
}

TEST(CheckSa, Sa6BottomDisjunctionBecomesContradiction) {
    auto v = check_sa(id("SA6"), programs({{"P", prog("c.")}, {"Q1", prog("a. -a.")}, {"Q2", prog("b. -b.")}}));
    EXPECT_TRUE(v.find("disj(Q1,Q2)")->is_bottom());
    EXPECT_EQ(v.status, Status::Holds);
}

TEST(CheckSa, Sa1HoldsOnClashingPair) {
    for (auto s : all_strategies)
        EXPECT_EQ(check_sa(id("SA1"), programs({{"P", clash_p()}, {"Q", clash_q()}}, s)).status, Status::Holds);
}

TEST(CheckSa, VacuousAntecedents) {
    EXPECT_EQ(check_sa(id("SA3"), programs({{"P", clash_p()}, {"Q", clash_q()}})).status, Status::Vacuous);
    EXPECT_EQ(check_sa(id("SA8"), programs({{"P", prog("a. -a.")}, {"Q", prog("b.")}})).status, Status::Vacuous);
    EXPECT_EQ(check_sa(id("SA3"), programs({{"P", prog("a.")}, {"Q", prog("a -> b.")}})).status, Status::Holds);
}

TEST(CheckFp, Fp3Counterexample) {
    auto v = check_fp(id("FP3"), with_profiles({{"P", prog("a.")}, {"Q", prog("a.")}},
                                               {{"Phi1", Profile{prog("a -> b.")}}, {"Phi2", Profile{prog("a -> c.")}}}));
    EXPECT_EQ(v.status, Status::Violated);
    EXPECT_EQ(*v.find("merge(P,Phi1)"), lits("a, b"));
    EXPECT_EQ(*v.find("merge(Q,Phi2)"), lits("a, c"));
}

TEST(CheckFp, Fp3RequiresEquivalentConstraints) {
    auto v = check_fp(id("FP3"), with_profiles({{"P", prog("a.")}, {"Q", prog("b.")}},
                                               {{"Phi1", Profile{prog("a -> b.")}}, {"Phi2", Profile{prog("a -> c.")}}}));
    EXPECT_EQ(v.status, Status::Vacuous);
    EXPECT_EQ(v.find("merge(P,Phi1)"), nullptr);
}

TEST(CheckFp, Fp7Counterexample) {
    auto v = check_fp(id("FP7"),
                      with_profiles({{"P", prog("c.")}, {"Q", prog("a.")}}, {{"Phi", Profile{prog("a -> b.")}}}));
    EXPECT_EQ(v.status, Status::Violated);
    EXPECT_EQ(*v.find("merge(P,Phi) u Q"), lits("a, c"));
    EXPECT_EQ(*v.find("merge(P u Q,Phi)"), lits("a, b, c"));
}

TEST(CheckFp, Fp0Holds) {
    for (auto s : all_strategies)
        EXPECT_EQ(check_fp(id("FP0"), with_profiles({{"P", prog("a.")}}, {{"Phi", Profile{prog("a -> b.")}}}, s)).status,
                  Status::Holds);
}

TEST(CheckFp, Fp4VacuousUnlessBothEntailTheConstraint) {
    auto v = check_fp(id("FP4"), programs({{"P", prog("a.")}, {"P1", prog("b.")}, {"P2", prog("a.")}}));
    EXPECT_EQ(v.status, Status::Vacuous);
}

TEST(CheckFp, Fp4HullCounterexample) {
    Instance i = programs({{"P", prog("a. b -> c. d -> c.")},
                           {"P1", prog("a. a -> d. a, d -> c.")},
                           {"P2", prog("a. b. c -> -b. a -> d.")}});
    EXPECT_EQ(check_fp(id("FP4"), i).status, Status::Holds);
    for (auto s : {Strategy::Hull, Strategy::ExtendedHull}) {
        i.strategy = s;
        auto v = check_fp(id("FP4"), i);
        EXPECT_EQ(v.status, Status::Violated);
        EXPECT_EQ(*v.find("merge(P,{P1,P2})"), lits("a, c, d"));
        EXPECT_TRUE(v.find("merge(P,{P1,P2}) u P2")->is_bottom());
    }
}

TEST(CheckFp, Fp4EmptyMemberIsSkipped) {
    auto v = check_fp(id("FP4"), programs({{"P", Program{}}, {"P1", Program{}}, {"P2", prog("a.")}}));
    EXPECT_EQ(v.status, Status::Skipped);
    EXPECT_FALSE(v.reason.empty());
}

TEST(Check, BindingsMustBeExact) {
    EXPECT_THROW(check(id("SA1"), programs({{"P", prog("a.")}})), IncompleteBinding);
    EXPECT_THROW(check(id("SA1"), programs({{"P", prog("a.")}, {"Q", prog("a.")}, {"Q1", prog("a.")}})),
                 IncompleteBinding);
    EXPECT_THROW(check(id("FP0"), programs({{"P", prog("a.")}})), IncompleteBinding);
    EXPECT_THROW(check_sa(id("FP0"), programs({{"P", prog("a.")}})), std::invalid_argument);
    EXPECT_THROW(check_fp(id("SA1"), programs({{"P", prog("a.")}, {"Q", prog("a.")}})), std::invalid_argument);
}

TEST(Check, SizeLimitBecomesSkipped) {
    Program p;
    for (int i = 0; i < 12; ++i) p.insert(Rule({Literal("x")}, Literal("y" + std::to_string(i))));
    p.insert(Rule({Literal("x")}, Literal("z", true)));
    Instance i = programs({{"P", p}, {"Q", prog("x. z.")}}, Strategy::Hull);
    auto v = check(id("SA1"), i, EnumerationLimits{4});
    EXPECT_EQ(v.status, Status::Skipped);
    EXPECT_NE(v.reason.find("4"), std::string::npos);
}

TEST(Check, ViolationsCarryWitnesses) {
    for (const auto& e : load_corpus(FCMERGE_CORPUS_DIR).entries) {
        if (e.kind != CorpusEntry::Kind::Postulate) continue;
        for (auto s : e.strategies) {
            Instance inst{e.programs, e.profiles, s};
            auto v = check(e.postulate, inst);
            if (v.status == Status::Violated) EXPECT_FALSE(v.witness.empty()) << e.name;
        }
    }
}
