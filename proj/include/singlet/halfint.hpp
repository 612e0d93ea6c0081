// Half-integer angular momentum quantum numbers, stored doubled.

#pragma once

#include <compare>
#include <string>

namespace singlet {

// j = 3/2 is stored as twice == 3. Doubled storage keeps keys, hashes and
// orderings exact for half-integers.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int twice_value) : twice(twice_value) {}

    static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr bool is_negative() const { return twice < 0; }

    // Only meaningful when is_integer().
    constexpr int as_int() const { return twice / 2; }
    constexpr double as_double() const { return 0.5 * static_cast<double>(twice); }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.twice); }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    HalfInt& operator+=(HalfInt o) {
        twice += o.twice;
        return *this;
    }
    HalfInt& operator-=(HalfInt o) {
        twice -= o.twice;
        return *this;
    }

    // "2" for integers, "3/2" otherwise.
    std::string to_string() const {
        if (is_integer()) return std::to_string(as_int());
        return std::to_string(twice) + "/2";
    }
};

// (j, m) can label a state iff |m| <= j and j - m is an integer.
constexpr bool valid_jm(HalfInt j, HalfInt m) {
    const int abs_m = m.twice < 0 ? -m.twice : m.twice;
    return j.twice >= 0 && abs_m <= j.twice && (j.twice - m.twice) % 2 == 0;
}

inline constexpr HalfInt kSpinHalf{1};
inline constexpr HalfInt kSpinOne{2};

}  // namespace singlet
