// Shared helpers for the test suites: exact-amplitude literals, random draws,
// and independent oracles kept apart from the library implementation paths.

#pragma once

#include "singlet/builder.hpp"
#include "singlet/cg.hpp"
#include "singlet/correlations.hpp"
#include "singlet/export.hpp"
#include "singlet/radical.hpp"
#include "singlet/state.hpp"

#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace test_support {

using singlet::AmplitudeMap;
using singlet::BasisWord;
using singlet::BigInt;
using singlet::HalfInt;
using singlet::RadicalSum;
using singlet::Rational;

// (num/den) * sqrt(radicand), e.g. rs(-1, 6, 3) == -1/(2*sqrt(3)).
inline RadicalSum rs(long num, long den, long radicand = 1) {
    return RadicalSum::term(Rational(num, den), BigInt(radicand));
}

struct AmpLiteral {
    const char* word;
    long num;
    long den;
    long radicand;
};

// Amplitude map from word literals ("++--" or "-1,0,1" depending on spin).
inline AmplitudeMap make_amps(HalfInt spin, const std::vector<AmpLiteral>& literals) {
    AmplitudeMap amps;
    for (const AmpLiteral& lit : literals) {
        amps.emplace(singlet::word_from_string(lit.word, spin), rs(lit.num, lit.den, lit.radicand));
    }
    return amps;
}

// Independent square-free decomposition via a smallest-prime-factor sieve.
struct SpfSieve {
    std::vector<int> spf;
    explicit SpfSieve(int limit) : spf(static_cast<std::size_t>(limit) + 1, 0) {
        for (int i = 2; i <= limit; ++i) {
            if (spf[static_cast<std::size_t>(i)] != 0) continue;
            for (long j = i; j <= limit; j += i) {
                if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = i;
            }
        }
    }
    std::pair<long, long> decompose(long n) const {
        long root = 1, radicand = 1;
        while (n > 1) {
            const int p = spf[static_cast<std::size_t>(n)];
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            for (int i = 0; i < e / 2; ++i) root *= p;
            if (e % 2 == 1) radicand *= p;
        }
        return {root, radicand};
    }
};

// Double-precision Clebsch-Gordan oracle via the Racah sum with lgamma-based
// factorials; structured independently of the exact engine.
inline double cg_oracle(double j1, double m1, double j2, double m2, double j, double m) {
    if (std::abs(m1 + m2 - m) > 1e-9) return 0.0;
    if (j < std::abs(j1 - j2) - 1e-9 || j > j1 + j2 + 1e-9) return 0.0;
    auto lf = [](double x) { return std::lgamma(x + 1.0); };
    const double pre =
        0.5 * (std::log(2 * j + 1) + lf(j1 + j2 - j) + lf(j1 - j2 + j) + lf(-j1 + j2 + j) -
               lf(j1 + j2 + j + 1) + lf(j1 + m1) + lf(j1 - m1) + lf(j2 + m2) + lf(j2 - m2) +
               lf(j + m) + lf(j - m));
    const int k_min = static_cast<int>(std::lround(std::max({0.0, j2 - j - m1, j1 - j + m2})));
    const int k_max = static_cast<int>(std::lround(std::min({j1 + j2 - j, j1 - m1, j2 + m2})));
    double sum = 0.0;
    for (int k = k_min; k <= k_max; ++k) {
        const double logden = lf(k) + lf(j1 + j2 - j - k) + lf(j1 - m1 - k) + lf(j2 + m2 - k) +
                              lf(j - j2 + m1 + k) + lf(j - j1 - m2 + k);
        sum += (k % 2 == 0 ? 1.0 : -1.0) * std::exp(pre - logden);
    }
    return sum;
}

// Hook-length dimension oracle for S_n irreducible representations.
inline BigInt hook_length_dimension(const std::vector<int>& parts) {
    int n = 0;
    for (const int p : parts) n += p;
    BigInt numerator = singlet::factorial(n);
    BigInt hooks = 1;
    const int rows = static_cast<int>(parts.size());
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < parts[static_cast<std::size_t>(r)]; ++c) {
            int below = 0;
            for (int r2 = r + 1; r2 < rows; ++r2) {
                if (parts[static_cast<std::size_t>(r2)] > c) ++below;
            }
            hooks *= parts[static_cast<std::size_t>(r)] - c + below;
        }
    }
    return numerator / hooks;
}

inline std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

// Seeded parameter draws for the correlation cross-checks.
struct AngleDraws {
    std::mt19937_64 rng;
    explicit AngleDraws(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    singlet::corr::Direction direction() {
        return {uniform(0.0, std::acos(-1.0)), uniform(0.0, 2.0 * std::acos(-1.0))};
    }
    singlet::corr::DirectionSet direction_set() { return {direction(), direction(), direction(), direction()}; }
    singlet::corr::DirectionSet theta_only_set() {
        return {{uniform(0.0, std::acos(-1.0)), 0.0},
                {uniform(0.0, std::acos(-1.0)), 0.0},
                {uniform(0.0, std::acos(-1.0)), 0.0},
                {uniform(0.0, std::acos(-1.0)), 0.0}};
    }
    singlet::corr::DirectionSet equatorial_set() {
        const double half_pi = 0.5 * std::acos(-1.0);
        return {{half_pi, uniform(0.0, 2 * std::acos(-1.0))},
                {half_pi, uniform(0.0, 2 * std::acos(-1.0))},
                {half_pi, uniform(0.0, 2 * std::acos(-1.0))},
                {half_pi, uniform(0.0, 2 * std::acos(-1.0))}};
    }
    // Haar-like SU(2) draw: [[a, -conj(b)], [b, conj(a)]], |a|^2 + |b|^2 = 1.
    singlet::corr::CMatrix su2() {
        const double alpha = uniform(0.0, 0.5 * std::acos(-1.0));
        const double beta = uniform(0.0, 2 * std::acos(-1.0));
        const double gamma = uniform(0.0, 2 * std::acos(-1.0));
        const singlet::corr::Complex a = std::polar(std::cos(alpha), beta);
        const singlet::corr::Complex b = std::polar(std::sin(alpha), gamma);
        singlet::corr::CMatrix u(2, 2);
        u.at(0, 0) = a;
        u.at(0, 1) = -std::conj(b);
        u.at(1, 0) = b;
        u.at(1, 1) = std::conj(a);
        return u;
    }
};

}  // namespace test_support
