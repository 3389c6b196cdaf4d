#include "swr/eigen_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "swr/engine.hpp"
#include "swr/ratpoly.hpp"

namespace swr {

namespace {

Rational rpow(const Rational& x, unsigned long e) {
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), x.get_num_mpz_t(), e);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), x.get_den_mpz_t(), e);
    return out;
}

Rational floor_of(const Rational& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rational(q);
}

bool is_integer_positive(const Rational& x) { return x.get_den() == 1 && sgn(x) > 0; }

std::optional<std::array<BigInt, 3>> positive_integers(const std::array<Rational, 3>& m) {
    std::array<BigInt, 3> out;
    for (int i = 0; i < 3; ++i) {
        if (!is_integer_positive(m[i])) return std::nullopt;
        out[i] = m[i].get_num();
    }
    return out;
}

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

Rational eq3_value(const std::array<Rational, 3>& t, unsigned long ell) {
    return (t[1] - t[2]) * rpow(t[0], ell) + (t[2] - t[0]) * rpow(t[1], ell) + (t[0] - t[1]) * rpow(t[2], ell);
}

std::vector<std::array<long, 3>> search_integer_triples(unsigned long ell, long lo, long hi, SearchOptions options) {
    if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("search_integer_triples: ell must be odd and >= 3");
    if (lo >= hi) throw std::invalid_argument("search_integer_triples: need lo < hi");
    std::vector<std::array<long, 3>> hits;
    for (long t1 = lo; t1 <= hi; ++t1) {
        for (long t2 = lo; t2 < t1; ++t2) {
            for (long t3 = lo; t3 < t2; ++t3) {
                if (options.negative_theta3_only && t3 >= 0) break;
                const auto h = HoffmanCubic::from_roots(BigInt(t1), BigInt(t2), BigInt(t3));
                if (sgn(alpha(h, ell)) == 0) hits.push_back({t1, t2, t3});
            }
        }
    }
    return hits;
}

ThirdRoot third_eigenvalue(unsigned long ell, const Rational& theta2, const Rational& theta3, const Rational& tol,
                           unsigned long max_denominator) {
    if (ell < 3 || ell % 2 == 0) {
        throw std::invalid_argument("third_eigenvalue: ell must be odd and >= 3 (even ell leaves no third real root)");
    }
    if (theta2 == theta3) throw std::invalid_argument("third_eigenvalue: theta2 and theta3 must differ");
    if (sgn(tol) <= 0) throw std::invalid_argument("third_eigenvalue: tolerance must be positive");

    // (t2 - t3) x^ell + (t3 - x) t2^ell + (x - t2) t3^ell as a polynomial in x
    std::vector<Rational> c(ell + 1);
    const Rational p2 = rpow(theta2, ell);
    const Rational p3 = rpow(theta3, ell);
    c[ell] = theta2 - theta3;
    c[1] = p3 - p2;
    c[0] = theta3 * p2 - theta2 * p3;
    const RatPoly trivial(std::vector<Rational>{theta2 * theta3, -(theta2 + theta3), 1});
    auto [q, rem] = divmod(RatPoly(std::move(c)), trivial);
    if (!rem.is_zero()) throw std::logic_error("third_eigenvalue: trivial roots did not divide out");
    const RatPoly reduced = q.monic();

    ThirdRoot out;
    for (const Rational& t : {theta2, theta3}) {
        if (sgn(reduced(t)) == 0) {
            out.lower = out.upper = out.approximation = t;
            out.exact = true;
            out.degenerate = true;
            return out;
        }
    }

    // odd degree, monic: negative at -B, positive at B
    Rational bound = 1;
    for (int i = 0; i < reduced.degree(); ++i) bound = std::max(bound, Rational(abs(reduced.coeffs()[i]) + 1));
    Rational lo = -bound;
    Rational hi = bound;
    while (hi - lo >= tol) {
        Rational mid = (lo + hi) / 2;
        const int s = sgn(reduced(mid));
        if (s == 0) {
            out.lower = out.upper = out.approximation = mid;
            out.exact = true;
            return out;
        }
        (s < 0 ? lo : hi) = mid;
    }
    out.lower = lo;
    out.upper = hi;
    out.approximation = (lo + hi) / 2;

    for (unsigned long den = 1; den <= max_denominator; ++den) {
        const Rational d(den);
        const Rational first = floor_of(lo * d);
        for (Rational num = first; num <= hi * d; num += 1) {
            const Rational cand = num / d;
            if (cand < lo || cand > hi) continue;
            if (sgn(reduced(cand)) == 0) {
                out.approximation = cand;
                out.exact = true;
                return out;
            }
        }
    }
    return out;
}

int count_real_roots_trinomial(unsigned long ell, const Rational& e, const Rational& f) {
    if (ell < 2) throw std::invalid_argument("count_real_roots_trinomial: ell must be >= 2");
    const bool odd = ell % 2 == 1;
    if (sgn(e) == 0) {
        if (odd) return 1;
        return sgn(f) < 0 ? 2 : sgn(f) == 0 ? 1 : 0;
    }
    if (odd && sgn(e) > 0) return 1;

    // At a critical point x_c, |x_c|^(ell-1) = |e| / ell and
    // p(x_c) = f -+ K with K = |e| (ell-1)/ell |x_c| > 0.
    // Compare |f| with K through (ell-1)-th powers.
    const Rational abs_e = abs(e);
    const Rational crit_pow = abs_e / Rational(ell);
    const Rational k_pow = rpow(abs_e * Rational(ell - 1) / Rational(ell), ell - 1) * crit_pow;
    auto cmp_abs_f = [&]() { return cmp(rpow(abs(f), ell - 1), k_pow); };

    if (odd) {
        // local max f + K at -x_c, local min f - K at +x_c
        const int c = cmp_abs_f();
        return c < 0 ? 3 : c == 0 ? 2 : 1;
    }
    // even: single minimum f - K
    if (sgn(f) <= 0) return 2;
    const int c = cmp_abs_f();
    return c < 0 ? 2 : c == 0 ? 1 : 0;
}

std::optional<std::array<BigInt, 3>> feasible_multiplicities(const FeasibilityInput& input) {
    const auto& [v, k, triple] = input;
    if (v < 5) throw std::invalid_argument("feasible_multiplicities: need v >= 5");
    if (k >= v) throw std::invalid_argument("feasible_multiplicities: need k < v");
    const std::array<ExactReal, 3> t{triple.theta1, triple.theta2, triple.theta3};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (compare(t[i], t[j]) == 0) throw std::invalid_argument("feasible_multiplicities: eigenvalues must be distinct");
        }
    }
    const Rational vv(v);
    const Rational kk(k);
    const Rational rhs0 = vv - 1;
    const Rational rhs1 = -kk;
    const Rational rhs2 = vv * kk - kk * kk;

    std::vector<int> surds;
    for (int i = 0; i < 3; ++i) {
        if (std::holds_alternative<QuadraticSurd>(t[i])) surds.push_back(i);
    }
    if (surds.empty()) {
        std::array<Rational, 3> r;
        for (int i = 0; i < 3; ++i) r[i] = std::get<Rational>(t[i]);
        const std::array<std::array<Rational, 3>, 3> m{{{1, 1, 1}, {r[0], r[1], r[2]}, {r[0] * r[0], r[1] * r[1], r[2] * r[2]}}};
        const std::array<Rational, 3> rhs{rhs0, rhs1, rhs2};
        const Rational det = det3(m);
        std::array<Rational, 3> sol;
        for (int col = 0; col < 3; ++col) {
            auto mc = m;
            for (int row = 0; row < 3; ++row) mc[row][col] = rhs[row];
            sol[col] = det3(mc) / det;
        }
        return positive_integers(sol);
    }
    if (surds.size() != 2) {
        throw std::invalid_argument("feasible_multiplicities: a surd eigenvalue needs its conjugate in the triple");
    }
    const auto& s = std::get<QuadraticSurd>(t[surds[0]]);
    if (!(std::get<QuadraticSurd>(t[surds[1]]) == s.conjugate())) {
        throw std::invalid_argument("feasible_multiplicities: the two surds must be conjugates");
    }
    const int ri = 3 - surds[0] - surds[1];
    const Rational r = std::get<Rational>(t[ri]);
    // unknowns (m_r, m_p): rows are the three moment equations, pair sums
    // 2a and 2(a^2 + b^2 d) are rational.
    const std::array<std::array<Rational, 2>, 3> rows{{{1, 2}, {r, 2 * s.a}, {r * r, 2 * (s.a * s.a + s.b * s.b * Rational(s.d))}}};
    const std::array<Rational, 3> rhs{rhs0, rhs1, rhs2};
    std::optional<std::array<Rational, 2>> sol;
    for (int i = 0; i < 3 && !sol; ++i) {
        for (int j = i + 1; j < 3 && !sol; ++j) {
            const Rational det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
            if (sgn(det) == 0) continue;
            sol = std::array<Rational, 2>{(rhs[i] * rows[j][1] - rows[i][1] * rhs[j]) / det,
                                          (rows[i][0] * rhs[j] - rhs[i] * rows[j][0]) / det};
        }
    }
    if (!sol) throw std::logic_error("feasible_multiplicities: singular moment system");
    for (int i = 0; i < 3; ++i) {
        if (rows[i][0] * (*sol)[0] + rows[i][1] * (*sol)[1] != rhs[i]) return std::nullopt;
    }
    std::array<Rational, 3> m;
    m[ri] = (*sol)[0];
    m[surds[0]] = m[surds[1]] = (*sol)[1];
    return positive_integers(m);
}

}  // namespace swr
