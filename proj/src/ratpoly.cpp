#include "swr/ratpoly.hpp"

#include <stdexcept>
#include <utility>

namespace swr {

RatPoly::RatPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

RatPoly::RatPoly(const IntPoly& p) {
    for (const auto& x : p.coeffs()) c_.emplace_back(x);
}

void RatPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational RatPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
    if (c_.empty()) return {};
    std::vector<Rational> out = c_;
    const Rational lc = c_.back();
    for (auto& x : out) x /= lc;
    return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a) {
    std::vector<Rational> out = a.c_;
    for (auto& x : out) x = -x;
    return RatPoly(std::move(out));
}

RatDivMod divmod(const RatPoly& p, const RatPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("divmod: zero divisor");
    if (p.degree() < q.degree()) return {RatPoly{}, p};
    std::vector<Rational> rem = p.coeffs();
    std::vector<Rational> quot(p.degree() - q.degree() + 1);
    const int dq = q.degree();
    for (int i = p.degree(); i >= dq; --i) {
        const Rational t = rem[i] / q.leading();
        quot[i - dq] = t;
        if (sgn(t) == 0) continue;
        for (int j = 0; j <= dq; ++j) rem[i - dq + j] -= t * q.coeffs()[j];
    }
    rem.resize(dq);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

}  // namespace swr
