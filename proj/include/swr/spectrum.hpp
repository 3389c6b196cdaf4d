#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "swr/bigint.hpp"
#include "swr/graph.hpp"
#include "swr/intpoly.hpp"
#include "swr/surd.hpp"

namespace swr {

/// One distinct eigenvalue, or one unresolved squarefree factor standing for
/// deg(factor) distinct eigenvalues that share the multiplicity.
struct SpectrumEntry {
    std::variant<Rational, QuadraticSurd, IntPoly> value;
    std::size_t multiplicity = 0;

    bool resolved() const { return !std::holds_alternative<IntPoly>(value); }
    std::size_t distinct() const;
};

/// Exact spectrum, sorted descending with unresolved factors last.
struct Spectrum {
    std::vector<SpectrumEntry> entries;

    std::size_t distinct_count() const;
    /// Sum of multiplicities, unresolved factors counted deg times.
    std::size_t total() const;
    bool fully_resolved() const;
    /// e.g. "{3^1, 1^5, -2^4}"
    std::string to_string() const;
};

/**
 * Splits p (monic, nonzero) into squarefree factors s_1, s_2, ... where the
 * roots of s_j are exactly the roots of p of multiplicity j. Factors equal
 * to 1 are omitted.
 */
std::vector<std::pair<IntPoly, std::size_t>> multiplicity_layers(const IntPoly& p);

/// Integer roots of a monic polynomial with absolute value at most bound,
/// descending. Candidates are the divisors of the lowest nonzero coefficient.
std::vector<BigInt> integer_roots(const IntPoly& p, const BigInt& bound);

/// Cauchy bound 1 + max |a_i| on the roots of a monic polynomial.
BigInt cauchy_bound(const IntPoly& p);

/**
 * Exact spectrum of a monic polynomial with all roots real. Integer roots and
 * real quadratic factors are resolved; whatever remains of each multiplicity
 * layer is carried as one unresolved factor. root_bound (default: Cauchy)
 * limits the integer-root and quadratic-factor searches.
 */
Spectrum spectrum_of(const IntPoly& char_poly, std::optional<BigInt> root_bound = std::nullopt);

/// Spectrum of the adjacency matrix; roots are bounded by the maximum degree.
Spectrum spectrum(const Graph& g);

/// Minimal polynomial of the adjacency matrix (squarefree part of its
/// characteristic polynomial; valid because A is symmetric).
IntPoly minimal_poly(const Graph& g);

}  // namespace swr
