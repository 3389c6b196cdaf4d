#pragma once

#include <vector>

#include "swr/bigint.hpp"
#include "swr/intpoly.hpp"

namespace swr {

/// Polynomial over the rationals, ascending coefficients, no trailing zeros.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> ascending);
    explicit RatPoly(const IntPoly& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& x) const;
    RatPoly derivative() const;
    RatPoly monic() const;

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a);
    friend bool operator==(const RatPoly&, const RatPoly&) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

struct RatDivMod {
    RatPoly quotient;
    RatPoly remainder;
};

/// Long division over Q; throws std::invalid_argument for a zero divisor.
RatDivMod divmod(const RatPoly& p, const RatPoly& q);

}  // namespace swr
