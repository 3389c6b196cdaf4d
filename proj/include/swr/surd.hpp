#pragma once

#include <compare>
#include <string>
#include <variant>

#include "swr/bigint.hpp"

namespace swr {

/// a + b*sqrt(d) with d squarefree, d >= 2 and b != 0.
struct QuadraticSurd {
    Rational a;
    Rational b;
    BigInt d;

    QuadraticSurd conjugate() const { return {a, -b, d}; }
    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// A rational or a quadratic surd; every real root of an integer quadratic
/// fits here.
using ExactReal = std::variant<Rational, QuadraticSurd>;

/// Normalizes a + b*sqrt(radicand) (radicand >= 0): square factors move into
/// b, and the result collapses to a Rational when the radical vanishes.
ExactReal make_quadratic(const Rational& a, const Rational& b, const BigInt& radicand);

/// Real roots of x^2 + p*x + q when the discriminant is nonnegative, larger
/// root first.
std::pair<ExactReal, ExactReal> quadratic_roots(const Rational& p, const Rational& q);

int sign(const ExactReal& x);
ExactReal negate(const ExactReal& x);
std::strong_ordering compare(const ExactReal& x, const ExactReal& y);
long double approx(const ExactReal& x);

/// "p/q" for rationals, "a + b*sqrt(d)" (or "a - |b|*sqrt(d)") for surds.
std::string to_string(const ExactReal& x);
std::string to_string(const QuadraticSurd& s);

}  // namespace swr
