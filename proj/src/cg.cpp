#include "singlet/cg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace singlet {

BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    static std::mutex mutex;
    static std::vector<BigInt> cache{BigInt(1)};
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(cache.size()) <= n) {
        cache.push_back(cache.back() * static_cast<int>(cache.size()));
    }
    return cache[static_cast<std::size_t>(n)];
}

namespace {

// Exponent of prime p in n! (Legendre).
long factorial_prime_exponent(int n, int p) {
    long e = 0;
    for (long q = p; q <= n; q *= p) e += n / q;
    return e;
}

void add_factorial_exponents(std::map<int, long>& exps, int n, int sign) {
    for (int p = 2; p <= n; ++p) {
        bool prime = true;
        for (int d = 2; d * d <= p; ++d) {
            if (p % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) exps[p] += sign * factorial_prime_exponent(n, p);
    }
}

void add_integer_exponents(std::map<int, long>& exps, int n, int sign) {
    for (int p = 2; p <= n; ++p) {
        while (n % p == 0) {
            exps[p] += sign;
            n /= p;
        }
    }
}

void require_valid(HalfInt j, HalfInt m, const char* what) {
    if (!valid_jm(j, m)) throw std::domain_error(std::string("clebsch_gordan: malformed (j, m) pair for ") + what);
}

}  // namespace

RadicalSum clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
    require_valid(j1, m1, "j1");
    require_valid(j2, m2, "j2");
    require_valid(j, m, "j");

    if (m1 + m2 != m) return RadicalSum();
    const HalfInt jmin = HalfInt(std::abs(j1.twice - j2.twice));
    const HalfInt jmax = j1 + j2;
    if (j < jmin || j > jmax) return RadicalSum();
    // Valid pairs plus m1 + m2 == m force j1 + j2 + j to be an integer.

    const int a = (j1 + j2 - j).as_int();   // j1+j2-j
    const int b = (j1 - j2 + j).as_int();   // j1-j2+j
    const int c = ((-j1) + j2 + j).as_int();  // -j1+j2+j

    // Racah sum: an exact rational.
    const int k_min = std::max({0, (j2 - j - m1).as_int(), (j1 - j + m2).as_int()});
    const int k_max = std::min({a, (j1 - m1).as_int(), (j2 + m2).as_int()});
    Rational sum = 0;
    for (int k = k_min; k <= k_max; ++k) {
        const BigInt den = factorial(k) * factorial(a - k) * factorial((j1 - m1).as_int() - k) *
                           factorial((j2 + m2).as_int() - k) * factorial((j - j2 + m1).as_int() + k) *
                           factorial((j - j1 - m2).as_int() + k);
        Rational t(1, den);
        if (k % 2 != 0) t = -t;
        sum += t;
    }
    if (sum == 0) return RadicalSum();

    // Prefactor under the square root, assembled as prime exponents so the
    // root splits exactly into a rational part and a square-free radicand.
    std::map<int, long> exps;
    add_integer_exponents(exps, j.twice + 1, +1);
    add_factorial_exponents(exps, a, +1);
    add_factorial_exponents(exps, b, +1);
    add_factorial_exponents(exps, c, +1);
    add_factorial_exponents(exps, (j1 + j2 + j).as_int() + 1, -1);
    add_factorial_exponents(exps, (j1 + m1).as_int(), +1);
    add_factorial_exponents(exps, (j1 - m1).as_int(), +1);
    add_factorial_exponents(exps, (j2 + m2).as_int(), +1);
    add_factorial_exponents(exps, (j2 - m2).as_int(), +1);
    add_factorial_exponents(exps, (j + m).as_int(), +1);
    add_factorial_exponents(exps, (j - m).as_int(), +1);

    Rational rational_part = 1;
    BigInt radicand = 1;
    for (const auto& [p, e] : exps) {
        const long rem = ((e % 2) + 2) % 2;
        const long half = (e - rem) / 2;
        if (half >= 0) {
            for (long i = 0; i < half; ++i) rational_part *= p;
        } else {
            for (long i = 0; i < -half; ++i) rational_part /= p;
        }
        if (rem == 1) radicand *= p;
    }

    return RadicalSum::term(sum * rational_part, radicand);
}

bool cg_sign_flip_check(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
    const RadicalSum flipped = clebsch_gordan(j1, -m1, j2, -m2, j, -m);
    RadicalSum original = clebsch_gordan(j1, m1, j2, m2, j, m);
    const int phase_exponent = (j1 + j2 - j).as_int();
    if (phase_exponent % 2 != 0) original = -original;
    return flipped == original;
}

}  // namespace singlet
