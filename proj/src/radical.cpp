#include "singlet/radical.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace singlet {

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << rational_num(q);
    if (rational_den(q) != 1) os << '/' << rational_den(q);
    return os.str();
}

SquareFreeParts square_free_decompose(const BigInt& n) {
    if (n < 1) throw std::domain_error("square_free_decompose: argument must be >= 1");
    BigInt rest = n;
    BigInt root = 1;
    BigInt radicand = 1;
    for (BigInt d = 2; d * d <= rest; ++d) {
        if (rest % d != 0) continue;
        int exp = 0;
        while (rest % d == 0) {
            rest /= d;
            ++exp;
        }
        for (int i = 0; i < exp / 2; ++i) root *= d;
        if (exp % 2 == 1) radicand *= d;
    }
    radicand *= rest;  // leftover factor is prime (or 1)
    return {root, radicand};
}

RadicalSum::RadicalSum(const Rational& q) {
    if (q != 0) terms_.emplace(BigInt(1), q);
}

RadicalSum RadicalSum::term(const Rational& coeff, const BigInt& radicand) {
    RadicalSum r;
    if (coeff == 0) return r;
    const SquareFreeParts sf = square_free_decompose(radicand);
    r.terms_.emplace(sf.radicand, coeff * Rational(sf.root));
    return r;
}

RadicalSum RadicalSum::sqrt_of(const Rational& q) {
    if (q < 0) throw std::domain_error("RadicalSum::sqrt_of: negative argument");
    if (q == 0) return RadicalSum();
    // sqrt(p/q) = sqrt(p*q)/q
    const BigInt p = rational_num(q);
    const BigInt d = rational_den(q);
    return term(Rational(1, d), p * d);
}

void RadicalSum::add_reduced(const BigInt& radicand, const Rational& q) {
    if (q == 0) return;
    auto it = terms_.find(radicand);
    if (it == terms_.end()) {
        terms_.emplace(radicand, q);
        return;
    }
    it->second += q;
    if (it->second == 0) terms_.erase(it);
}

RadicalSum RadicalSum::operator-() const {
    RadicalSum r;
    for (const auto& [n, q] : terms_) r.terms_.emplace(n, -q);
    return r;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& o) {
    for (const auto& [n, q] : o.terms_) add_reduced(n, q);
    return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& o) {
    for (const auto& [n, q] : o.terms_) add_reduced(n, -q);
    return *this;
}

RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
    RadicalSum r;
    for (const auto& [m, p] : a.terms_) {
        for (const auto& [n, q] : b.terms_) {
            // sqrt(m)*sqrt(n) = g*sqrt((m/g)*(n/g)) with g = gcd(m, n); the
            // residual product of two coprime square-free integers is square-free.
            const BigInt g = boost::multiprecision::gcd(m, n);
            r.add_reduced((m / g) * (n / g), p * q * Rational(g));
        }
    }
    return r;
}

RadicalSum& RadicalSum::operator*=(const RadicalSum& o) {
    *this = *this * o;
    return *this;
}

double RadicalSum::to_double() const {
    double value = 0.0;
    for (const auto& [n, q] : terms_) value += singlet::to_double(q) * std::sqrt(singlet::to_double(n));
    return value;
}

std::string RadicalSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, q] : terms_) {
        Rational coeff = q;
        if (first) {
            first = false;
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        os << rational_to_string(coeff);
        if (n != 1) os << "*sqrt(" << n << ')';
    }
    return os.str();
}

}  // namespace singlet
