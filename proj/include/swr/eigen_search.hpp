#pragma once

#include <array>
#include <optional>
#include <vector>

#include "swr/bigint.hpp"
#include "swr/surd.hpp"

namespace swr {

/// Three candidate eigenvalues k > theta1 > theta2 > theta3 (k omitted).
struct EigenTriple {
    ExactReal theta1;
    ExactReal theta2;
    ExactReal theta3;
};

/// (t2 - t3) t1^ell + (t3 - t1) t2^ell + (t1 - t2) t3^ell
Rational eq3_value(const std::array<Rational, 3>& thetas, unsigned long ell);

struct SearchOptions {
    /// Skip triples with theta3 >= 0; any graph with an edge has a negative
    /// eigenvalue.
    bool negative_theta3_only = true;
};

/// Integer triples t1 > t2 > t3 in [lo, hi] whose cubic (x-t1)(x-t2)(x-t3)
/// has alpha_ell = 0, in lexicographic order. Requires odd ell >= 3 and
/// lo < hi (std::invalid_argument otherwise).
std::vector<std::array<long, 3>> search_integer_triples(unsigned long ell, long lo, long hi,
                                                        SearchOptions options = {});

struct ThirdRoot {
    Rational lower;          ///< bracket, upper - lower < tol
    Rational upper;
    Rational approximation;  ///< midpoint of the bracket, or the exact value
    bool exact = false;
    /// The only remaining root coincides with theta2 or theta3.
    bool degenerate = false;
};

/**
 * The real theta1 solving eq3 for given theta2 != theta3 and odd ell >= 3,
 * other than theta2 and theta3 themselves. Eq3 is treated as a polynomial in
 * theta1, the two trivial roots are divided out exactly, and the remaining
 * real root is bracketed by bisection. A rational root with denominator at
 * most max_denominator is confirmed exactly.
 */
ThirdRoot third_eigenvalue(unsigned long ell, const Rational& theta2, const Rational& theta3, const Rational& tol,
                           unsigned long max_denominator = 64);

/// Number of distinct real roots of x^ell + e x + f (ell >= 2), decided
/// exactly from the sign of p at the critical points of p.
int count_real_roots_trinomial(unsigned long ell, const Rational& e, const Rational& f);

struct FeasibilityInput {
    unsigned long v = 0;
    unsigned long k = 0;
    EigenTriple triple;
};

/**
 * Multiplicities (m1, m2, m3) solving
 *   1 + m1 + m2 + m3 = v,  k + sum m_i t_i = 0,  k^2 + sum m_i t_i^2 = v k
 * when they are all positive integers. A conjugate surd pair is forced to
 * share one multiplicity. Throws std::invalid_argument for v < 5, k >= v,
 * repeated eigenvalues, or surds without their conjugate.
 */
std::optional<std::array<BigInt, 3>> feasible_multiplicities(const FeasibilityInput& input);

}  // namespace swr
