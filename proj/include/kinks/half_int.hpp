#pragma once

#include <compare>
#include <string>

namespace kinks {

/// Exact half-integer arithmetic for Euler characteristics, genera and the
/// raw right-hand sides of the kinkiness bounds. Stored as twice the value.
struct half_int {
    int twice = 0;

    static constexpr half_int whole(int v) { return half_int{2 * v}; }
    static constexpr half_int halves(int t) { return half_int{t}; }

    constexpr bool integral() const { return twice % 2 == 0; }
    constexpr int floor() const { return twice >= 0 ? twice / 2 : (twice - 1) / 2; }
    constexpr int ceil() const { return twice >= 0 ? (twice + 1) / 2 : twice / 2; }
    constexpr double value() const { return twice / 2.0; }

    /// Exact integer value; callers must check integral() first.
    constexpr int as_int() const { return twice / 2; }

    friend constexpr auto operator<=>(half_int, half_int) = default;
    friend constexpr half_int operator+(half_int a, half_int b) { return half_int{a.twice + b.twice}; }
    friend constexpr half_int operator-(half_int a, half_int b) { return half_int{a.twice - b.twice}; }
    friend constexpr half_int operator-(half_int a) { return half_int{-a.twice}; }

    std::string str() const {
        if (integral()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

} // namespace kinks
