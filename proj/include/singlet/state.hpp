// Coupled angular-momentum states over a product basis of identical spins.

#pragma once

#include "singlet/halfint.hpp"
#include "singlet/radical.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace singlet {

// Per-particle magnetic labels, each stored doubled (spin-1/2: -1/+1,
// spin-1: -2/0/+2). Map ordering is lexicographic from most-negative to
// most-positive letter, which is also the export order.
struct BasisWord {
    std::vector<std::int8_t> letters_twice;

    BasisWord() = default;
    explicit BasisWord(std::vector<std::int8_t> letters) : letters_twice(std::move(letters)) {}

    friend auto operator<=>(const BasisWord&, const BasisWord&) = default;

    int size() const { return static_cast<int>(letters_twice.size()); }

    HalfInt letter(int site) const { return HalfInt(letters_twice[static_cast<std::size_t>(site)]); }

    HalfInt letter_sum() const {
        int s = 0;
        for (const auto v : letters_twice) s += v;
        return HalfInt(s);
    }

    BasisWord appended(HalfInt letter) const {
        BasisWord w(*this);
        w.letters_twice.push_back(static_cast<std::int8_t>(letter.twice));
        return w;
    }
};

using AmplitudeMap = std::map<BasisWord, RadicalSum>;

// dst += scale * src, dropping exact zeros.
void accumulate_scaled(AmplitudeMap& dst, const AmplitudeMap& src, const RadicalSum& scale);

// Real amplitudes: <a|b> = sum_w a(w) b(w), exact.
RadicalSum inner_product(const AmplitudeMap& a, const AmplitudeMap& b);

RadicalSum norm_squared(const AmplitudeMap& a);

// One state |h, j, m, i>: quantum labels plus a sparse amplitude map.
struct CoupledState {
    int particles = 0;
    HalfInt spin{};  // per-particle spin of the chain
    HalfInt j{};
    HalfInt m{};
    int index = 1;  // 1-based position within the (particles, j, m) cell
    AmplitudeMap amps;
};

// All states of a fixed particle count, grouped by (j, m) in enumeration order.
struct Layer {
    int particles = 0;
    std::map<std::pair<HalfInt, HalfInt>, std::vector<CoupledState>> cells;

    const std::vector<CoupledState>* cell(HalfInt j, HalfInt m) const {
        auto it = cells.find({j, m});
        return it == cells.end() ? nullptr : &it->second;
    }
};

// Ordered, mutually orthogonal j = m = 0 states of n particles.
struct SingletBasis {
    int particles = 0;
    HalfInt spin{};
    std::vector<CoupledState> states;

    std::size_t size() const { return states.size(); }
};

}  // namespace singlet
