#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace fcmerge {

/// Which revision operator drives arbitration and merging.
enum class Strategy { Rank, Hull, ExtendedHull };

inline constexpr std::array<Strategy, 3> all_strategies{Strategy::Rank, Strategy::Hull,
                                                        Strategy::ExtendedHull};

/// Short command-line name: "rk", "h" or "eh".
constexpr std::string_view to_string(Strategy s) noexcept {
    switch (s) {
        case Strategy::Rank: return "rk";
        case Strategy::Hull: return "h";
        case Strategy::ExtendedHull: return "eh";
    }
    return "?";
}

constexpr std::optional<Strategy> parse_strategy(std::string_view name) noexcept {
    if (name == "rk") return Strategy::Rank;
    if (name == "h") return Strategy::Hull;
    if (name == "eh") return Strategy::ExtendedHull;
    return std::nullopt;
}

}  // namespace fcmerge
