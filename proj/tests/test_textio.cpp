#include <gtest/gtest.h>

#include "support.hpp"

using namespace fcmerge;
using namespace fcmerge::testing;

namespace {

SourceError error_of(std::string_view text) {
    try {
        parse_program(text);
    } catch (const SourceError& e) {
        return e;
    }
    ADD_FAILURE() << "no error for: " << text;
    return SourceError(0, 0, "");
}

}  // namespace

TEST(ParseProgram, Taxonomy) {
    Program p = parse_program("a. u. a -> b. a -> c. b -> t. c -> s. t -> s. s -> w. u -> h.");
    EXPECT_EQ(p.size(), 9u);
    EXPECT_EQ(closure(p), lits("a, u, b, c, h, t, s, w"));
}

TEST(ParseProgram, Empty) {
    EXPECT_TRUE(parse_program("").empty());
    EXPECT_TRUE(parse_program("  % only a comment\n\n").empty());
}

TEST(ParseProgram, RuleWithNegatedHead) {
    Program p = parse_program("a, b -> -c.");
    ASSERT_EQ(p.size(), 1u);
    const Rule& r = p.rules().front();
    EXPECT_EQ(r.body(), (std::vector<Literal>{"a", "b"}));
    EXPECT_EQ(r.head(), Literal("c", true));
}

TEST(ParseProgram, DuplicatesCollapseAndOpposedBodiesAreLegal) {
    EXPECT_EQ(parse_program("a. a. b -> c. b -> c.").size(), 2u);
    Program p = parse_program("a, -a -> b.");
    EXPECT_EQ(p.rules().front().body().size(), 2u);
}

TEST(ParseProgram, WhitespaceAndComments) {
    EXPECT_EQ(parse_program("a,b->c.%x\n  d .\t"), parse_program("a, b -> c. d."));
}

TEST(ParseProgram, MissingDot) {
    auto e = error_of("a -> b");
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 6u);
    EXPECT_NE(std::string(e.what()).find("expected '.'"), std::string::npos);
}

TEST(ParseProgram, MalformedLiteral) {
    auto e = error_of("a.\n-> b.");
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 1u);
    auto f = error_of("a, -.");
    EXPECT_EQ(f.column(), 5u);
}

TEST(ParseProgram, BodyWithoutArrow) {
    auto e = error_of("a, b.");
    EXPECT_EQ(e.column(), 5u);
}

TEST(ParseProgram, UnknownToken) {
    auto e = error_of("a.\n  b & c.");
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 5u);
    auto f = error_of("1a.");
    EXPECT_EQ(f.column(), 1u);
}

TEST(ParseProgram, PositionsStayInsideInput) {
    for (std::string_view bad : {"a", "a ->", "a,", "-", "a -> b\n\n"}) {
        auto e = error_of(bad);
        EXPECT_GE(e.line(), 1u);
        EXPECT_GE(e.column(), 1u);
        EXPECT_LE(e.line(), 3u);
    }
    auto e = error_of("a -> b\n\n");
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 6u);
}

TEST(ParseProfile, TwoPrograms) {
    Profile f = parse_profile("a -> b.\n---\nb -> c.");
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f.members()[0], prog("a -> b."));
    EXPECT_EQ(f.members()[1], prog("b -> c."));
}

TEST(ParseProfile, SingleProgram) {
    Profile f = parse_profile("a. b -> c.");
    ASSERT_EQ(f.size(), 1u);
}

TEST(ParseProfile, KeepsMultiplicity) {
    Profile f = parse_profile("a.\n---\na.\n");
    EXPECT_EQ(f.size(), 2u);
}

TEST(ParseProfile, SeparatorAloneIsEmpty) {
    EXPECT_THROW(parse_profile("---"), EmptyProfile);
    EXPECT_THROW(parse_profile(""), EmptyProfile);
    EXPECT_THROW(parse_profile("% nothing\n---\n\n"), EmptyProfile);
}

TEST(ParseProfile, ErrorsReportFileLines) {
    try {
        parse_profile("a.\n---\nb.\nc -> .\n");
        FAIL();
    } catch (const SourceError& e) {
        EXPECT_EQ(e.line(), 4u);
        EXPECT_EQ(e.column(), 6u);
    }
}

TEST(Render, ClosedSets) {
    EXPECT_EQ(render(ClosedSet({"b", "a", Literal("c", true)})), "a, b, -c");
    EXPECT_EQ(render(ClosedSet({Literal("a", true), "b"})), "-a, b");
    EXPECT_EQ(render(ClosedSet::bottom()), "#bottom");
    EXPECT_EQ(render(ClosedSet{}), "");
    EXPECT_EQ(render(arbitrate(clash_p(), clash_q(), Strategy::ExtendedHull)), "d, e");
}

TEST(Render, ProgramsAreCanonical) {
    EXPECT_EQ(render(prog("b -> -c. a. a, b -> c.")), "a.\na, b -> c.\nb -> -c.\n");
    EXPECT_EQ(render(prog("x. y.")), render(prog("y. x.")));
    EXPECT_EQ(render(Program{}), "");
}

TEST(Render, ProfilesAndFlocks) {
    Profile f{prog("a."), prog("b -> c.")};
    EXPECT_EQ(render(f), "a.\n---\nb -> c.\n");
    EXPECT_EQ(parse_profile(render(f)), f);
    Flock k(std::vector<Program>{prog("a."), prog("b.")});
    EXPECT_EQ(render(k), "a.\n---\nb.\n");
}

TEST(ParseClosedSet, RoundTrip) {
    for (std::string_view s : {"", "a", "a, b, -c", "#bottom", "-a, b"}) EXPECT_EQ(render(parse_closed_set(s)), s);
    EXPECT_THROW(parse_closed_set("a, 1"), SourceError);
}

TEST(TextioProperties, RoundTripAndInjectivity) {
    FuzzConfig cfg;
    RandomStream rng(51);
    std::map<std::string, Program> seen;
    for (int i = 0; i < 500; ++i) {
        Program p = gen_program(cfg, rng);
        std::string text = render(p);
        EXPECT_EQ(parse_program(text), p) << text;
        auto [it, fresh] = seen.emplace(text, p);
        if (!fresh) EXPECT_EQ(it->second, p);
        std::vector<Rule> reversed(p.rules().rbegin(), p.rules().rend());
        EXPECT_EQ(render(Program(reversed)), text);
    }
}
