#pragma once

#include <ostream>
#include <string_view>

#include "fcmerge/fcmerge.hpp"

namespace fcmerge::testing {

inline Program prog(std::string_view text) { return parse_program(text); }
inline ClosedSet lits(std::string_view text) { return parse_closed_set(text); }
inline Profile prof(std::string_view text) { return parse_profile(text); }

// Programs shared across suites.
inline Program taxonomy() { return prog("a. u. a -> b. a -> c. b -> t. c -> s. t -> s. s -> w. u -> h."); }
inline Program mollusks() { return prog("m -> s. c -> m. c -> -s. n -> c. n -> s."); }
inline Program all_exceptional() { return prog("a -> b. b -> -c. -c -> -a. -c -> b. -a -> -b. -a -> -c."); }
inline Program clash_p() { return prog("a, b -> -c. b -> d. b -> -c. -c -> e. a, -c -> f. a."); }
inline Program clash_q() { return prog("a, b -> c. a -> e. a, e -> c. a, e -> d. c -> d. c -> f. b."); }

}  // namespace fcmerge::testing

namespace fcmerge {

// Readable gtest failure messages.
inline void PrintTo(const Literal& l, std::ostream* os) { *os << to_string(l); }
inline void PrintTo(const Rule& r, std::ostream* os) { *os << to_string(r); }
inline void PrintTo(const Program& p, std::ostream* os) { *os << "{" << to_string(p) << "}"; }
inline void PrintTo(const ClosedSet& s, std::ostream* os) { *os << "{" << to_string(s) << "}"; }
inline void PrintTo(const Profile& f, std::ostream* os) { *os << "[" << render(f) << "]"; }
inline void PrintTo(const Flock& f, std::ostream* os) { *os << "<" << render(f) << ">"; }

}  // namespace fcmerge
