#include "swr/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace swr {

namespace {

// Sign of u + w*sqrt(d) for d >= 2 squarefree.
int sign_of(const Rational& u, const Rational& w, const BigInt& d) {
    const int su = sgn(u);
    const int sw = sgn(w);
    if (sw == 0) return su;
    if (su == 0 || su == sw) return sw;
    const Rational lhs = u * u;
    const Rational rhs = w * w * Rational(d);
    const int c = cmp(lhs, rhs);
    if (c == 0) return 0;
    return c > 0 ? su : sw;
}

struct Parts {
    Rational a;
    Rational b;
    BigInt d;
};

Parts parts(const ExactReal& x) {
    if (const auto* r = std::get_if<Rational>(&x)) return {*r, 0, 1};
    const auto& s = std::get<QuadraticSurd>(x);
    return {s.a, s.b, s.d};
}

}  // namespace

ExactReal make_quadratic(const Rational& a, const Rational& b, const BigInt& radicand) {
    if (sgn(radicand) < 0) throw std::domain_error("make_quadratic: negative radicand");
    if (sgn(b) == 0 || sgn(radicand) == 0) return a;
    BigInt d = radicand;
    BigInt square_root = 1;
    for (unsigned long p = 2;; ++p) {
        const BigInt pp = BigInt(p) * p;
        if (pp > d) break;
        while (mpz_divisible_p(d.get_mpz_t(), pp.get_mpz_t())) {
            d /= pp;
            square_root *= p;
        }
    }
    if (mpz_perfect_square_p(d.get_mpz_t())) {
        BigInt r;
        mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
        square_root *= r;
        d = 1;
    }
    const Rational coeff = b * Rational(square_root);
    if (d == 1) {
        Rational sum = a + coeff;
        sum.canonicalize();
        return sum;
    }
    return QuadraticSurd{a, coeff, d};
}

std::pair<ExactReal, ExactReal> quadratic_roots(const Rational& p, const Rational& q) {
    // roots -p/2 +- sqrt(p^2 - 4q)/2; scale the discriminant to an integer
    const Rational disc = p * p - 4 * q;
    if (sgn(disc) < 0) throw std::domain_error("quadratic_roots: complex roots");
    const BigInt den = disc.get_den();
    const BigInt radicand = disc.get_num() * den;  // disc = radicand / den^2
    const Rational half_width = Rational(1, 2) / Rational(den);
    const Rational centre = -p / 2;
    return {make_quadratic(centre, half_width, radicand), make_quadratic(centre, -half_width, radicand)};
}

int sign(const ExactReal& x) {
    const auto [a, b, d] = parts(x);
    return sign_of(a, b, d);
}

ExactReal negate(const ExactReal& x) {
    if (const auto* r = std::get_if<Rational>(&x)) return Rational(-*r);
    const auto& s = std::get<QuadraticSurd>(x);
    return QuadraticSurd{-s.a, -s.b, s.d};
}

std::strong_ordering compare(const ExactReal& x, const ExactReal& y) {
    const Parts px = parts(x);
    const Parts py = parts(y);
    int s = 0;
    if (px.d == py.d || sgn(px.b) == 0 || sgn(py.b) == 0) {
        const BigInt d = sgn(px.b) != 0 ? px.d : py.d;
        s = sign_of(px.a - py.a, px.b - py.b, d);
    } else {
        // compare P = u + b1*sqrt(d1) against Q = b2*sqrt(d2)
        const Rational u = px.a - py.a;
        const int sp = sign_of(u, px.b, px.d);
        const int sq = sgn(py.b);
        if (sp != sq) {
            s = sp > sq ? 1 : -1;
        } else {
            // same sign: compare P^2 with Q^2, flipped when both are negative
            const Rational rest = u * u + px.b * px.b * Rational(px.d) - py.b * py.b * Rational(py.d);
            const int sq2 = sign_of(rest, 2 * u * px.b, px.d);
            s = sp >= 0 ? sq2 : -sq2;
        }
    }
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

long double approx(const ExactReal& x) {
    const auto [a, b, d] = parts(x);
    const long double root = std::sqrt(static_cast<long double>(d.get_d()));
    return static_cast<long double>(a.get_d()) + static_cast<long double>(b.get_d()) * root;
}

std::string to_string(const QuadraticSurd& s) {
    const std::string mag = Rational(abs(s.b)).get_str();
    return s.a.get_str() + (sgn(s.b) < 0 ? " - " : " + ") + mag + "*sqrt(" + s.d.get_str() + ")";
}

std::string to_string(const ExactReal& x) {
    if (const auto* r = std::get_if<Rational>(&x)) return r->get_str();
    return to_string(std::get<QuadraticSurd>(x));
}

}  // namespace swr
