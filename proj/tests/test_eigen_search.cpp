#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "swr/eigen_search.hpp"
#include "swr/engine.hpp"

using namespace swr;

namespace {

using Triple = std::array<long, 3>;

Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// x^ell + e x + f
RatPoly trinomial(unsigned long ell, const Rational& e, const Rational& f) {
    std::vector<Rational> c(ell + 1);
    c[ell] = 1;
    c[1] += e;
    c[0] += f;
    return RatPoly(std::move(c));
}

ExactReal surd(const Rational& a, const Rational& b, long d) { return make_quadratic(a, b, BigInt(d)); }

void check_moments(const FeasibilityInput& in, const std::array<BigInt, 3>& m) {
    // traces of I, A and A^2; conjugate pairs share a multiplicity so the
    // irrational parts cancel and approx() is only used for the rational total
    const std::array<ExactReal, 3> t{in.triple.theta1, in.triple.theta2, in.triple.theta3};
    Rational s0 = 1, s1 = in.k, s2 = Rational(in.k) * in.k;
    for (int i = 0; i < 3; ++i) {
        s0 += m[i];
        if (const auto* r = std::get_if<Rational>(&t[i])) {
            s1 += Rational(m[i]) * *r;
            s2 += Rational(m[i]) * *r * *r;
        } else {
            const auto& q = std::get<QuadraticSurd>(t[i]);
            s1 += Rational(m[i]) * q.a;
            s2 += Rational(m[i]) * (q.a * q.a + q.b * q.b * Rational(q.d));
        }
    }
    CHECK(s0 == in.v);
    CHECK(s1 == 0);
    CHECK(s2 == Rational(in.v) * in.k);
}

}  // namespace

TEST_CASE("eq3_value") {
    CHECK(eq3_value({2, 0, -2}, 5) == 0);
    CHECK(eq3_value({1, -1, -2}, 3) == -12);
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> dist(-50, 50);
    for (int t = 0; t < 50; ++t) {
        const std::array<Rational, 3> th{frac(dist(rng), 7), frac(dist(rng), 3), Rational(dist(rng))};
        CHECK(eq3_value(th, 1) == 0);
        for (unsigned long ell = 3; ell <= 9; ell += 2) {
            CHECK(eq3_value(th, ell) == eq3_value({-th[0], -th[1], -th[2]}, ell));
        }
    }
}

TEST_CASE("search_integer_triples") {
    const auto three = search_integer_triples(3, -5, 5);
    std::vector<Triple> zero_sum;
    for (long a = 5; a >= -5; --a) {
        for (long b = -5; b < a; ++b) {
            const long c = -a - b;
            if (c < b && c >= -5) zero_sum.push_back({a, b, c});
        }
    }
    std::sort(zero_sum.begin(), zero_sum.end());
    CHECK(three == zero_sum);
    CHECK(std::find(three.begin(), three.end(), Triple{4, 1, -5}) != three.end());
    CHECK(std::find(three.begin(), three.end(), Triple{3, -1, -2}) != three.end());

    const auto five = search_integer_triples(5, -6, 6);
    std::vector<Triple> symmetric;
    for (long t = 1; t <= 6; ++t) symmetric.push_back({t, 0, -t});
    CHECK(five == symmetric);

    CHECK(search_integer_triples(5, 0, 3, {.negative_theta3_only = false}).empty());
    CHECK(search_integer_triples(5, 0, 3).empty());

    for (const Triple& t : search_integer_triples(7, -8, 8)) {
        CHECK(eq3_value({t[0], t[1], t[2]}, 7) == 0);
        CHECK(alpha(HoffmanCubic::from_roots(t[0], t[1], t[2]), 7) == 0);
    }

    CHECK_THROWS_AS(search_integer_triples(4, -3, 3), std::invalid_argument);
    CHECK_THROWS_AS(search_integer_triples(1, -3, 3), std::invalid_argument);
    CHECK_THROWS_AS(search_integer_triples(3, 3, 3), std::invalid_argument);
}

TEST_CASE("search pruning flag") {
    // with theta3 >= 0 allowed, every hit from the pruned search still appears
    const auto pruned = search_integer_triples(3, -4, 4);
    const auto full = search_integer_triples(3, -4, 4, {.negative_theta3_only = false});
    CHECK(full == pruned);
}

TEST_CASE("third_eigenvalue") {
    const ThirdRoot a = third_eigenvalue(3, 2, -3, Rational(1, 1000000));
    CHECK(a.exact);
    CHECK_FALSE(a.degenerate);
    CHECK(a.approximation == 1);

    const Rational tol(1, 1000000000);
    const ThirdRoot b = third_eigenvalue(5, -1, -2, tol);
    CHECK_FALSE(b.exact);
    CHECK(b.upper - b.lower < tol);
    CHECK(b.approximation.get_d() == doctest::Approx(2.5568).epsilon(1e-3));
    // bracket straddles the root of x^3 - 3x^2 + 7x - 15
    const RatPoly cubic(std::vector<Rational>{-15, 7, -3, 1});
    CHECK(sgn(cubic(b.lower)) < 0);
    CHECK(sgn(cubic(b.upper)) > 0);
    CHECK(abs(eq3_value({b.approximation, -1, -2}, 5)) < Rational(1, 1000000));

    const ThirdRoot c = third_eigenvalue(3, 1, -2, Rational(1, 1000));
    CHECK(c.degenerate);
    CHECK(c.approximation == 1);

    const ThirdRoot d = third_eigenvalue(3, Rational(1, 3), Rational(-1, 2), Rational(1, 1000));
    CHECK(d.exact);
    CHECK(d.approximation == Rational(1, 6));

    for (unsigned long ell = 3; ell <= 11; ell += 2) {
        const ThirdRoot r = third_eigenvalue(ell, 1, -4, Rational(1, 100000));
        if (r.exact) CHECK(eq3_value({r.approximation, 1, -4}, ell) == 0);
        CHECK(sgn(eq3_value({r.lower, 1, -4}, ell)) * sgn(eq3_value({r.upper, 1, -4}, ell)) <= 0);
    }

    CHECK_THROWS_AS(third_eigenvalue(4, 1, -2, tol), std::invalid_argument);
    CHECK_THROWS_AS(third_eigenvalue(5, 1, 1, tol), std::invalid_argument);
    CHECK_THROWS_AS(third_eigenvalue(5, 1, -1, 0), std::invalid_argument);
}

TEST_CASE("count_real_roots_trinomial") {
    CHECK(count_real_roots_trinomial(3, -3, 2) == 2);
    CHECK(count_real_roots_trinomial(2, 0, 1) == 0);
    CHECK(count_real_roots_trinomial(5, -16, 0) == 3);
    CHECK(count_real_roots_trinomial(2, 0, 0) == 1);
    CHECK(count_real_roots_trinomial(4, -4, 3) == 1);  // (x-1)^2 (x^2+2x+3)
    CHECK_THROWS_AS(count_real_roots_trinomial(1, 1, 1), std::invalid_argument);

    std::mt19937 rng(37);
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 4);
    for (int t = 0; t < 400; ++t) {
        const unsigned long ell = 2 + rng() % 8;
        const Rational e = frac(num(rng), den(rng));
        const Rational f = frac(num(rng), den(rng));
        const int n = count_real_roots_trinomial(ell, e, f);
        CHECK(n == oracle::sturm_count(trinomial(ell, e, f)));
        CHECK(n <= (ell % 2 == 0 ? 2 : 3));
    }
    // boundary cases where a critical value is exactly zero
    for (unsigned long ell = 2; ell <= 9; ++ell) {
        // (x - 1)^2 divides x^ell - ell x + (ell - 1)
        const Rational e(-static_cast<long>(ell));
        const Rational f(static_cast<long>(ell) - 1);
        CHECK(count_real_roots_trinomial(ell, e, f) == oracle::sturm_count(trinomial(ell, e, f)));
    }
}

TEST_CASE("feasible_multiplicities") {
    const FeasibilityInput a{8, 4, {Rational(2), Rational(0), Rational(-2)}};
    const auto ma = feasible_multiplicities(a);
    REQUIRE(ma);
    CHECK(*ma == std::array<BigInt, 3>{1, 3, 3});
    check_moments(a, *ma);

    const FeasibilityInput b{27, 6, {Rational(3), Rational(0), Rational(-3)}};
    const auto mb = feasible_multiplicities(b);
    REQUIRE(mb);
    CHECK(*mb == std::array<BigInt, 3>{6, 12, 8});
    check_moments(b, *mb);

    CHECK_FALSE(feasible_multiplicities({10, 3, {Rational(2), Rational(0), Rational(-2)}}));

    const FeasibilityInput lh{21, 4, {surd(1, 1, 2), surd(1, -1, 2), Rational(-2)}};
    const auto ml = feasible_multiplicities(lh);
    REQUIRE(ml);
    CHECK(*ml == std::array<BigInt, 3>{6, 6, 8});
    check_moments(lh, *ml);

    const FeasibilityInput ce{15, 8, {surd(Rational(1, 2), Rational(3, 2), 5), Rational(-1), surd(Rational(1, 2), Rational(-3, 2), 5)}};
    const auto mc = feasible_multiplicities(ce);
    REQUIRE(mc);
    CHECK(*mc == std::array<BigInt, 3>{2, 10, 2});
    check_moments(ce, *mc);

    CHECK_THROWS_AS(feasible_multiplicities({4, 2, {Rational(1), Rational(0), Rational(-1)}}), std::invalid_argument);
    CHECK_THROWS_AS(feasible_multiplicities({8, 8, {Rational(1), Rational(0), Rational(-1)}}), std::invalid_argument);
    CHECK_THROWS_AS(feasible_multiplicities({8, 4, {Rational(1), Rational(1), Rational(-1)}}), std::invalid_argument);
    CHECK_THROWS_AS(feasible_multiplicities({8, 4, {surd(0, 1, 2), Rational(0), Rational(-1)}}), std::invalid_argument);
    CHECK_THROWS_AS(feasible_multiplicities({8, 4, {surd(0, 1, 2), Rational(0), surd(0, -1, 3)}}), std::invalid_argument);
}

TEST_CASE("feasible multiplicities satisfy the moment equations") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> dist(-6, 6);
    int found = 0;
    for (int t = 0; t < 3000; ++t) {
        std::array<long, 3> r{dist(rng), dist(rng), dist(rng)};
        std::sort(r.rbegin(), r.rend());
        if (r[0] == r[1] || r[1] == r[2]) continue;
        const unsigned long v = 5 + rng() % 40;
        const unsigned long k = 1 + rng() % (v - 1);
        const FeasibilityInput in{v, k, {Rational(r[0]), Rational(r[1]), Rational(r[2])}};
        if (const auto m = feasible_multiplicities(in)) {
            ++found;
            check_moments(in, *m);
            for (const BigInt& x : *m) CHECK(sgn(x) > 0);
        }
    }
    CHECK(found > 0);
}
