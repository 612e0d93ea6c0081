// Exact arithmetic over finite sums  sum_i q_i * sqrt(n_i)  with rational q_i
// and square-free positive integer radicands n_i.

#pragma once

#include "singlet/rational.hpp"

#include <map>
#include <string>

namespace singlet {

struct SquareFreeParts {
    BigInt root;      // s
    BigInt radicand;  // r, square-free
};

// n = s^2 * r with r square-free; requires n >= 1.
SquareFreeParts square_free_decompose(const BigInt& n);

// Canonical invariants: at most one term per radicand, no zero coefficients,
// every radicand square-free and >= 1. The empty sum is 0, and 1/sqrt(n) is
// stored as (1/n)*sqrt(n), so structural equality is value equality
// (sqrt of distinct square-free integers are linearly independent over Q).
class RadicalSum {
  public:
    RadicalSum() = default;
    RadicalSum(const Rational& q);  // NOLINT: implicit rational -> q*sqrt(1)
    RadicalSum(long q) : RadicalSum(Rational(q)) {}
    RadicalSum(int q) : RadicalSum(Rational(q)) {}

    // coeff * sqrt(radicand); the radicand is reduced to square-free form.
    static RadicalSum term(const Rational& coeff, const BigInt& radicand);

    // sqrt(q) for q >= 0, canonicalized (rationalized denominator).
    static RadicalSum sqrt_of(const Rational& q);

    bool is_zero() const { return terms_.empty(); }
    const std::map<BigInt, Rational>& terms() const { return terms_; }

    // For values known to be single-term (e.g. Clebsch-Gordan coefficients).
    bool is_single_term() const { return terms_.size() <= 1; }

    RadicalSum operator-() const;
    RadicalSum& operator+=(const RadicalSum& o);
    RadicalSum& operator-=(const RadicalSum& o);
    RadicalSum& operator*=(const RadicalSum& o);

    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
    friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
    friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b);

    friend bool operator==(const RadicalSum& a, const RadicalSum& b) { return a.terms_ == b.terms_; }

    double to_double() const;

    // "q1*sqrt(n1) + q2*sqrt(n2) + ..." with plain "q" for radicand 1; "0" when empty.
    std::string to_string() const;

  private:
    std::map<BigInt, Rational> terms_;

    void add_reduced(const BigInt& square_free_radicand, const Rational& q);
};

inline RadicalSum rad_add(const RadicalSum& a, const RadicalSum& b) { return a + b; }
inline RadicalSum rad_mul(const RadicalSum& a, const RadicalSum& b) { return a * b; }
inline RadicalSum rad_neg(const RadicalSum& a) { return -a; }
inline double rad_to_float(const RadicalSum& a) { return a.to_double(); }

}  // namespace singlet
