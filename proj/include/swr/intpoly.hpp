#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "swr/bigint.hpp"
#include "swr/bigmatrix.hpp"

namespace swr {

/**
 * Univariate polynomial with arbitrary-precision integer coefficients,
 * stored in ascending degree with no trailing zeros. The zero polynomial has
 * no coefficients and degree -1.
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> ascending);
    IntPoly(std::initializer_list<long> ascending);

    static IntPoly constant(const BigInt& c);
    /// c * x^d
    static IntPoly monomial(std::size_t d, const BigInt& c = 1);
    /// x - r
    static IntPoly linear_root(const BigInt& r);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const std::vector<BigInt>& coeffs() const { return c_; }
    /// Coefficient of x^i; zero past the degree.
    BigInt coeff(std::size_t i) const;
    const BigInt& leading() const { return c_.back(); }

    BigInt operator()(const BigInt& x) const;
    Rational operator()(const Rational& x) const;

    IntPoly derivative() const;
    /// gcd of the coefficients, nonnegative.
    BigInt content() const;
    /// Divided by content, with positive leading coefficient.
    IntPoly primitive_part() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const BigInt& s);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    /// e.g. "x^3 - 5*x - 2"
    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

struct DivMod {
    IntPoly quotient;
    IntPoly remainder;
};

/// p = q * quotient + remainder with deg(remainder) < deg(q). Throws
/// std::invalid_argument unless q is monic.
DivMod poly_divmod(const IntPoly& p, const IntPoly& q);

/// Exact quotient p / q for monic q; throws std::logic_error on a nonzero
/// remainder.
IntPoly exact_div(const IntPoly& p, const IntPoly& q);

/// x^ell mod h by repeated squaring. Requires h monic of degree >= 1.
IntPoly polymod_pow(unsigned long ell, const IntPoly& h);

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// p / gcd(p, p') made primitive. For monic p the result is monic.
/// Throws std::invalid_argument on the zero polynomial.
IntPoly squarefree_part(const IntPoly& p);

/// det(xI - a) by the Faddeev-LeVerrier recurrence with exact divisions.
IntPoly char_poly(const BigMatrix& a);

/// p(a) by Horner's rule.
BigMatrix evaluate(const IntPoly& p, const BigMatrix& a);

/// Polynomial whose roots are the negated roots of h: (-1)^deg h * h(-x).
IntPoly negate_roots(const IntPoly& h);

}  // namespace swr
