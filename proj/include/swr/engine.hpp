#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "swr/bigint.hpp"
#include "swr/bigmatrix.hpp"
#include "swr/graph.hpp"
#include "swr/intpoly.hpp"
#include "swr/spectrum.hpp"

namespace swr {

/**
 * Walk counts (lambda, mu, nu) for adjacent, non-adjacent and identical
 * vertex pairs at walk length ell. A field is nullopt ("unconstrained") when
 * its pair class is empty, e.g. mu for a complete graph.
 */
struct SwrParams {
    unsigned long ell = 2;
    std::optional<BigInt> lambda;
    std::optional<BigInt> mu;
    std::optional<BigInt> nu;

    bool fully_constrained() const { return lambda && mu && nu; }
    /// "(5, 2, 0)" with "*" for unconstrained fields.
    std::string to_string() const;
    friend bool operator==(const SwrParams&, const SwrParams&) = default;
};

enum class PairClass { Identical, Adjacent, NonAdjacent };
std::string to_string(PairClass c);

/// Two vertex pairs of the same class with different walk counts.
struct WalkWitness {
    PairClass pair_class;
    Vertex u1, v1;
    BigInt count1;
    Vertex u2, v2;
    BigInt count2;

    std::string to_string() const;
};

using DirectResult = std::variant<SwrParams, WalkWitness>;

/// Exact A^ell.
BigMatrix walk_matrix(const Graph& g, unsigned long ell);

/// Combinatorial test: is every entry of A^ell constant on its pair class?
/// Throws std::invalid_argument for ell < 2.
DirectResult swr_params_direct(const Graph& g, unsigned long ell);

/// Same test against a precomputed walks = A^ell.
DirectResult swr_params_from_walks(const Graph& g, const BigMatrix& walks, unsigned long ell);

struct IdentityViolation {
    std::size_t i = 0;
    std::size_t j = 0;
    BigInt lhs;  // (A^ell + (mu - lambda) A + (mu - nu) I)_ij
    BigInt rhs;  // (mu J)_ij
};

struct IdentityReport {
    bool pass = false;
    std::optional<IdentityViolation> violation;
};

/// Checks A^ell + (mu - lambda) A + (mu - nu) I = mu J entrywise. Throws
/// std::invalid_argument if a field is unconstrained.
IdentityReport verify_identity(const Graph& g, const SwrParams& params);

/**
 * Monic Hoffman polynomial: the minimal polynomial divided by (x - k).
 * Checks v * h(A) = h(k) * J before returning (std::logic_error if not).
 * Throws std::invalid_argument unless g is connected, regular and has at
 * least two distinct eigenvalues.
 */
IntPoly hoffman_poly(const Graph& g);

/// (e, f) with h | x^ell + e x + f.
struct TrinomialTail {
    BigInt e;
    BigInt f;
    friend bool operator==(const TrinomialTail&, const TrinomialTail&) = default;
};

/// Reduces x^ell modulo h; a remainder of degree <= 1 yields the tail.
/// Requires h monic with 1 <= deg h <= 3 (std::invalid_argument otherwise).
std::optional<TrinomialTail> divides_trinomial(const IntPoly& h, unsigned long ell);

/// mu = (k^ell + e k + f) / v, lambda = mu - e, nu = mu - f. Divisibility
/// and nonnegativity failures throw std::logic_error.
SwrParams params_from_tail(const Graph& g, unsigned long ell, const TrinomialTail& tail);

/// Spectral route for a connected regular graph: Hoffman polynomial,
/// trinomial divisibility, then params_from_tail.
std::optional<SwrParams> swr_params_spectral(const Graph& g, unsigned long ell);

/// Fills unconstrained fields with 0. Any value satisfies the identity for an
/// empty pair class, so this only fixes a canonical choice.
SwrParams resolve_unconstrained(const Graph& g, const SwrParams& params);

/// h(x) = x^3 + a x^2 + b x + c
struct HoffmanCubic {
    BigInt a;
    BigInt b;
    BigInt c;

    /// Throws std::invalid_argument unless h is monic of degree 3.
    static HoffmanCubic from_poly(const IntPoly& h);
    static HoffmanCubic from_roots(const BigInt& t1, const BigInt& t2, const BigInt& t3);
    IntPoly poly() const;
    /// a = c = 0, i.e. the roots are t, 0, -t.
    bool symmetric() const { return sgn(a) == 0 && sgn(c) == 0; }
};

/// alpha_0 = alpha_1 = 0, alpha_2 = 1,
/// alpha_i = -(a alpha_{i-1} + b alpha_{i-2} + c alpha_{i-3}); returns alpha_ell.
BigInt alpha(const HoffmanCubic& h, unsigned long ell);
std::vector<BigInt> alpha_sequence(const HoffmanCubic& h, unsigned long ell);

struct AllEll {};
struct AllOddEll {};
struct SingleEll {
    unsigned long ell;
};
struct NoneUpTo {
    unsigned long bound;
};
struct NotApplicable {
    std::string reason;
};
using SwrProfile = std::variant<AllEll, AllOddEll, SingleEll, NoneUpTo, NotApplicable>;

std::string to_string(const SwrProfile& p);

inline constexpr unsigned long kDefaultScanBound = 99;

/// Which walk lengths ell >= 2 make g strongly walk-regular. Single-ell
/// hits are searched over odd ell <= scan_bound only.
SwrProfile swr_profile(const Graph& g, unsigned long scan_bound = kDefaultScanBound);

struct EmptyClass {};
struct CompleteClass {
    std::size_t n;
};
struct StronglyRegular {
    std::size_t v, k;
    BigInt lambda, mu;
};
struct CompleteMultiKnSameOrder {
    std::size_t order, copies;
};
struct BipartiteUnionSameEdgeCount {
    std::size_t edges, isolated;
};
struct RegularFourEigenvalue {
    Spectrum spectrum;
};
struct OtherClass {};
using Classification = std::variant<EmptyClass, CompleteClass, StronglyRegular, CompleteMultiKnSameOrder,
                                    BipartiteUnionSameEdgeCount, RegularFourEigenvalue, OtherClass>;

std::string to_string(const Classification& c);
/// Short tag, e.g. "StronglyRegular".
std::string class_name(const Classification& c);

/// First matching family in the order listed in Classification.
Classification classify(const Graph& g);

/// Every component is complete and all have the same order.
bool is_complete_union_same_order(const Graph& g);
/// Every component with an edge is complete bipartite, all with the same
/// edge count; returns (edge count, isolated vertices). Needs >= 1 edge.
std::optional<std::pair<std::size_t, std::size_t>> bipartite_union_same_edges(const Graph& g);

/// Tests A^ell = lambda A + nu I directly for odd ell; returns
/// (lambda, 0, nu). Throws std::invalid_argument for even ell.
std::optional<SwrParams> check_mu0(const Graph& g, unsigned long ell);

}  // namespace swr
