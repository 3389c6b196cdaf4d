#include "swr/intpoly.hpp"

#include <stdexcept>
#include <utility>

namespace swr {

IntPoly::IntPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
    for (long x : ascending) c_.emplace_back(x);
    trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(std::size_t d, const BigInt& c) {
    std::vector<BigInt> v(d + 1);
    v[d] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const BigInt& r) { return IntPoly(std::vector<BigInt>{-r, 1}); }

void IntPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

BigInt IntPoly::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& x : c_) g = gcd(g, x);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (c_.empty()) return {};
    BigInt g = content();
    if (sgn(c_.back()) < 0) g = -g;
    std::vector<BigInt> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(IntPoly a, const BigInt& s) {
    for (auto& x : a.c_) x *= s;
    a.trim();
    return a;
}

std::string IntPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = c_[i];
        if (sgn(c) == 0) continue;
        const BigInt mag = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        const bool unit = mag == 1;
        if (i == 0) {
            out += mag.get_str();
        } else {
            if (!unit) out += mag.get_str() + "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

DivMod poly_divmod(const IntPoly& p, const IntPoly& q) {
    if (!q.is_monic()) throw std::invalid_argument("poly_divmod: divisor must be monic, got " + q.to_string());
    const int dq = q.degree();
    std::vector<BigInt> rem = p.coeffs();
    if (p.degree() < dq) return {IntPoly{}, p};
    std::vector<BigInt> quot(p.degree() - dq + 1);
    const auto& qc = q.coeffs();
    for (int i = p.degree(); i >= dq; --i) {
        const BigInt t = rem[i];
        quot[i - dq] = t;
        if (sgn(t) == 0) continue;
        for (int j = 0; j <= dq; ++j) mpz_submul(rem[i - dq + j].get_mpz_t(), t.get_mpz_t(), qc[j].get_mpz_t());
    }
    rem.resize(dq);
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
    auto [quot, rem] = poly_divmod(p, q);
    if (!rem.is_zero()) {
        throw std::logic_error("exact_div: " + q.to_string() + " does not divide " + p.to_string());
    }
    return quot;
}

IntPoly polymod_pow(unsigned long ell, const IntPoly& h) {
    if (!h.is_monic() || h.degree() < 1) {
        throw std::invalid_argument("polymod_pow: modulus must be monic of degree >= 1, got " + h.to_string());
    }
    IntPoly result = poly_divmod(IntPoly{1}, h).remainder;
    IntPoly base = poly_divmod(IntPoly::monomial(1), h).remainder;
    while (ell > 0) {
        if (ell & 1UL) result = poly_divmod(result * base, h).remainder;
        ell >>= 1;
        if (ell > 0) base = poly_divmod(base * base, h).remainder;
    }
    return result;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
    if (a.degree() < b.degree()) return a;
    const BigInt lc = b.leading();
    const int db = b.degree();
    std::vector<BigInt> r = a.coeffs();
    for (int i = a.degree(); i >= db; --i) {
        // r <- lc * r - r[i] * x^(i - db) * b
        const BigInt t = r[i];
        for (auto& x : r) x *= lc;
        for (int j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), t.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
    r.resize(db);
    return IntPoly(std::move(r));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly x = a.primitive_part();
    IntPoly y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    const IntPoly pp = p.primitive_part();
    if (pp.degree() <= 0) return pp;
    const IntPoly g = poly_gcd(pp, pp.derivative());
    if (g.degree() == 0) return pp;
    if (g.is_monic()) return exact_div(pp, g).primitive_part();
    // Non-monic divisor: divide over the integers after scaling.
    const int shift = pp.degree() - g.degree() + 1;
    BigInt scale = 1;
    mpz_pow_ui(scale.get_mpz_t(), g.leading().get_mpz_t(), static_cast<unsigned long>(shift));
    IntPoly num = pp * scale;
    std::vector<BigInt> quot(pp.degree() - g.degree() + 1);
    std::vector<BigInt> rem = num.coeffs();
    for (int i = num.degree(); i >= g.degree(); --i) {
        BigInt t;
        mpz_divexact(t.get_mpz_t(), rem[i].get_mpz_t(), g.leading().get_mpz_t());
        quot[i - g.degree()] = t;
        for (int j = 0; j <= g.degree(); ++j) {
            mpz_submul(rem[i - g.degree() + j].get_mpz_t(), t.get_mpz_t(), g.coeffs()[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(quot)).primitive_part();
}

IntPoly char_poly(const BigMatrix& a) {
    const std::size_t n = a.dim();
    // c[n] = 1; M_k = a M_{k-1} + c[n-k+1] I; c[n-k] = -tr(a M_k) / k
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    BigMatrix m(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        BigInt t = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) mpz_submul(t.get_mpz_t(), a(i, j).get_mpz_t(), m(j, i).get_mpz_t());
        }
        if (!mpz_divisible_ui_p(t.get_mpz_t(), k)) {
            throw std::logic_error("char_poly: non-integral Faddeev-LeVerrier coefficient");
        }
        mpz_divexact_ui(c[n - k].get_mpz_t(), t.get_mpz_t(), k);
    }
    return IntPoly(std::move(c));
}

BigMatrix evaluate(const IntPoly& p, const BigMatrix& a) {
    const std::size_t n = a.dim();
    BigMatrix acc(n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * a;
        for (std::size_t j = 0; j < n; ++j) acc(j, j) += p.coeffs()[i];
    }
    return acc;
}

IntPoly negate_roots(const IntPoly& h) {
    std::vector<BigInt> c = h.coeffs();
    const int d = h.degree();
    for (int i = 0; i <= d; ++i) {
        if ((d - i) % 2 != 0) c[i] = -c[i];
    }
    return IntPoly(std::move(c));
}

}  // namespace swr
