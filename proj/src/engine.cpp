#include "swr/engine.hpp"

#include <stdexcept>

namespace swr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::string field(const std::optional<BigInt>& x) { return x ? x->get_str() : "*"; }

std::size_t distinct_eigenvalue_count(const Graph& g) {
    return static_cast<std::size_t>(std::max(0, minimal_poly(g).degree()));
}

}  // namespace

std::string SwrParams::to_string() const {
    return "(" + field(lambda) + ", " + field(mu) + ", " + field(nu) + ")";
}

std::string to_string(PairClass c) {
    switch (c) {
        case PairClass::Identical: return "identical";
        case PairClass::Adjacent: return "adjacent";
        case PairClass::NonAdjacent: return "non-adjacent";
    }
    return "?";
}

std::string WalkWitness::to_string() const {
    return swr::to_string(pair_class) + " pairs (" + std::to_string(u1) + "," + std::to_string(v1) + ")=" +
           count1.get_str() + " vs (" + std::to_string(u2) + "," + std::to_string(v2) + ")=" + count2.get_str();
}

BigMatrix walk_matrix(const Graph& g, unsigned long ell) { return mat_pow(BigMatrix::adjacency(g), ell); }

DirectResult swr_params_from_walks(const Graph& g, const BigMatrix& walks, unsigned long ell) {
    if (ell < 2) throw std::invalid_argument("walk length must be >= 2 (ell = 1 holds for every graph)");
    struct Slot {
        const BigInt* value = nullptr;
        Vertex u = 0, v = 0;
    };
    Slot slots[3];
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u; v < n; ++v) {
            const PairClass cls = u == v ? PairClass::Identical
                                  : g.adjacent(u, v) ? PairClass::Adjacent
                                                     : PairClass::NonAdjacent;
            Slot& s = slots[static_cast<int>(cls)];
            const BigInt& w = walks(u, v);
            if (s.value == nullptr) {
                s = {&w, u, v};
            } else if (*s.value != w) {
                return WalkWitness{cls, s.u, s.v, *s.value, u, v, w};
            }
        }
    }
    auto get = [&](PairClass c) -> std::optional<BigInt> {
        const Slot& s = slots[static_cast<int>(c)];
        if (s.value == nullptr) return std::nullopt;
        return *s.value;
    };
    return SwrParams{ell, get(PairClass::Adjacent), get(PairClass::NonAdjacent), get(PairClass::Identical)};
}

DirectResult swr_params_direct(const Graph& g, unsigned long ell) {
    if (ell < 2) throw std::invalid_argument("walk length must be >= 2 (ell = 1 holds for every graph)");
    return swr_params_from_walks(g, walk_matrix(g, ell), ell);
}

IdentityReport verify_identity(const Graph& g, const SwrParams& params) {
    if (!params.fully_constrained()) {
        throw std::invalid_argument("verify_identity: resolve unconstrained parameters first");
    }
    const BigInt& lambda = *params.lambda;
    const BigInt& mu = *params.mu;
    const BigInt& nu = *params.nu;
    const BigMatrix a = BigMatrix::adjacency(g);
    const BigMatrix walks = mat_pow(a, params.ell);
    const BigInt ca = mu - lambda;
    const BigInt ci = mu - nu;
    for (std::size_t i = 0; i < g.order(); ++i) {
        for (std::size_t j = 0; j < g.order(); ++j) {
            BigInt lhs = walks(i, j) + ca * a(i, j);
            if (i == j) lhs += ci;
            if (lhs != mu) return {false, IdentityViolation{i, j, lhs, mu}};
        }
    }
    return {true, std::nullopt};
}

IntPoly hoffman_poly(const Graph& g) {
    const auto k = is_regular(g);
    if (!k) throw std::invalid_argument("hoffman_poly: graph is not regular");
    if (!is_connected(g)) throw std::invalid_argument("hoffman_poly: graph is not connected");
    const BigMatrix a = BigMatrix::adjacency(g);
    const IntPoly minimal = squarefree_part(char_poly(a));
    if (minimal.degree() < 2) throw std::invalid_argument("hoffman_poly: needs at least two distinct eigenvalues");
    const BigInt valency(static_cast<unsigned long>(*k));
    const IntPoly h = exact_div(minimal, IntPoly::linear_root(valency));

    const BigMatrix lhs = evaluate(h, a) * BigInt(static_cast<unsigned long>(g.order()));
    if (lhs != BigMatrix::ones(g.order()) * h(valency)) {
        throw std::logic_error("hoffman_poly: v*h(A) != h(k)*J for h = " + h.to_string());
    }
    return h;
}

std::optional<TrinomialTail> divides_trinomial(const IntPoly& h, unsigned long ell) {
    if (!h.is_monic() || h.degree() < 1 || h.degree() > 3) {
        throw std::invalid_argument("divides_trinomial: need monic h of degree 1..3, got " + h.to_string());
    }
    const IntPoly r = polymod_pow(ell, h);
    if (r.degree() > 1) return std::nullopt;
    return TrinomialTail{-r.coeff(1), -r.coeff(0)};
}

SwrParams params_from_tail(const Graph& g, unsigned long ell, const TrinomialTail& tail) {
    const auto k = is_regular(g);
    if (!k || !is_connected(g)) throw std::invalid_argument("params_from_tail: graph must be connected and regular");
    const BigInt kk(static_cast<unsigned long>(*k));
    BigInt k_pow;
    mpz_pow_ui(k_pow.get_mpz_t(), kk.get_mpz_t(), ell);
    const BigInt numerator = k_pow + tail.e * kk + tail.f;
    const BigInt v(static_cast<unsigned long>(g.order()));
    if (!mpz_divisible_p(numerator.get_mpz_t(), v.get_mpz_t())) {
        throw std::logic_error("params_from_tail: v does not divide k^ell + e k + f");
    }
    BigInt mu;
    mpz_divexact(mu.get_mpz_t(), numerator.get_mpz_t(), v.get_mpz_t());
    BigInt lambda = mu - tail.e;
    BigInt nu = mu - tail.f;
    if (sgn(mu) < 0 || sgn(lambda) < 0 || sgn(nu) < 0) {
        throw std::logic_error("params_from_tail: negative walk count");
    }
    return SwrParams{ell, lambda, mu, nu};
}

std::optional<SwrParams> swr_params_spectral(const Graph& g, unsigned long ell) {
    if (ell < 2) throw std::invalid_argument("walk length must be >= 2 (ell = 1 holds for every graph)");
    const IntPoly h = hoffman_poly(g);
    if (h.degree() > 3) return std::nullopt;
    const auto tail = divides_trinomial(h, ell);
    if (!tail) return std::nullopt;
    return params_from_tail(g, ell, *tail);
}

SwrParams resolve_unconstrained(const Graph& g, const SwrParams& params) {
    if (params.fully_constrained()) return params;
    // An empty pair class is missing from every entry of the identity; for
    // K_n that is because J = A + I absorbs mu.
    SwrParams out = params;
    if (!out.lambda) out.lambda = BigInt(0);
    if (!out.mu) out.mu = BigInt(0);
    if (!out.nu) out.nu = BigInt(0);
    if (!verify_identity(g, out).pass) throw std::logic_error("resolve_unconstrained: zero fill breaks the identity");
    return out;
}

HoffmanCubic HoffmanCubic::from_poly(const IntPoly& h) {
    if (!h.is_monic() || h.degree() != 3) throw std::invalid_argument("HoffmanCubic: need monic cubic, got " + h.to_string());
    return {h.coeff(2), h.coeff(1), h.coeff(0)};
}

HoffmanCubic HoffmanCubic::from_roots(const BigInt& t1, const BigInt& t2, const BigInt& t3) {
    return {-(t1 + t2 + t3), t1 * t2 + t1 * t3 + t2 * t3, -(t1 * t2 * t3)};
}

IntPoly HoffmanCubic::poly() const { return IntPoly(std::vector<BigInt>{c, b, a, 1}); }

std::vector<BigInt> alpha_sequence(const HoffmanCubic& h, unsigned long ell) {
    std::vector<BigInt> seq(std::max(ell, 2UL) + 1);
    seq[2] = 1;
    for (unsigned long i = 3; i <= ell; ++i) {
        BigInt t = h.a * seq[i - 1];
        mpz_addmul(t.get_mpz_t(), h.b.get_mpz_t(), seq[i - 2].get_mpz_t());
        mpz_addmul(t.get_mpz_t(), h.c.get_mpz_t(), seq[i - 3].get_mpz_t());
        seq[i] = -t;
    }
    seq.resize(ell + 1);
    return seq;
}

BigInt alpha(const HoffmanCubic& h, unsigned long ell) { return alpha_sequence(h, ell).back(); }

std::string to_string(const SwrProfile& p) {
    return std::visit(overloaded{
                          [](const AllEll&) -> std::string { return "AllEll"; },
                          [](const AllOddEll&) -> std::string { return "AllOddEll"; },
                          [](const SingleEll& s) { return "SingleEll(" + std::to_string(s.ell) + ")"; },
                          [](const NoneUpTo& s) { return "NoneUpTo(" + std::to_string(s.bound) + ")"; },
                          [](const NotApplicable& s) { return "NotApplicable(" + s.reason + ")"; },
                      },
                      p);
}

bool is_complete_union_same_order(const Graph& g) {
    const auto comps = component_vertices(g);
    for (const auto& c : comps) {
        if (c.size() != comps.front().size()) return false;
        for (Vertex v : c) {
            if (g.degree(v) + 1 != c.size()) return false;
        }
    }
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> bipartite_union_same_edges(const Graph& g) {
    std::size_t isolated = 0;
    std::optional<std::size_t> edges;
    for (const Graph& c : components(g)) {
        if (c.order() == 1) {
            ++isolated;
            continue;
        }
        const auto parts = complete_bipartite_parts(c);
        if (!parts) return std::nullopt;
        const std::size_t m = parts->first * parts->second;
        if (edges && *edges != m) return std::nullopt;
        edges = m;
    }
    if (!edges) return std::nullopt;
    return std::make_pair(*edges, isolated);
}

SwrProfile swr_profile(const Graph& g, unsigned long scan_bound) {
    if (g.order() == 0) return AllEll{};
    const auto k = is_regular(g);
    if (k && is_connected(g)) {
        const std::size_t distinct = distinct_eigenvalue_count(g);
        if (distinct <= 3) return AllEll{};
        if (distinct >= 5) return NotApplicable{std::to_string(distinct) + " distinct eigenvalues"};
        const HoffmanCubic h = HoffmanCubic::from_poly(hoffman_poly(g));
        if (h.symmetric()) return AllOddEll{};
        const auto seq = alpha_sequence(h, std::max(scan_bound, 3UL));
        for (unsigned long ell = 3; ell <= scan_bound; ell += 2) {
            if (sgn(seq[ell]) == 0) return SingleEll{ell};
        }
        return NoneUpTo{scan_bound};
    }
    if (is_complete_union_same_order(g)) return AllEll{};
    if (bipartite_union_same_edges(g)) return AllOddEll{};
    // Nothing else can pass; a hit here would contradict the classification.
    for (unsigned long ell = 2; ell <= 7; ++ell) {
        if (std::holds_alternative<SwrParams>(swr_params_direct(g, ell))) {
            throw std::logic_error("swr_profile: unexpected strongly walk-regular graph at ell = " + std::to_string(ell));
        }
    }
    return NotApplicable{k ? "disconnected" : "not regular"};
}

std::string class_name(const Classification& c) {
    return std::visit(overloaded{
                          [](const EmptyClass&) -> std::string { return "Empty"; },
                          [](const CompleteClass&) -> std::string { return "Complete"; },
                          [](const StronglyRegular&) -> std::string { return "StronglyRegular"; },
                          [](const CompleteMultiKnSameOrder&) -> std::string { return "CompleteMultiKnSameOrder"; },
                          [](const BipartiteUnionSameEdgeCount&) -> std::string { return "BipartiteUnionSameEdgeCount"; },
                          [](const RegularFourEigenvalue&) -> std::string { return "RegularFourEigenvalue"; },
                          [](const OtherClass&) -> std::string { return "Other"; },
                      },
                      c);
}

std::string to_string(const Classification& c) {
    return std::visit(
        overloaded{
            [](const EmptyClass&) -> std::string { return "Empty"; },
            [](const CompleteClass& x) { return "Complete(" + std::to_string(x.n) + ")"; },
            [](const StronglyRegular& x) {
                return "StronglyRegular(" + std::to_string(x.v) + "," + std::to_string(x.k) + "," + x.lambda.get_str() +
                       "," + x.mu.get_str() + ")";
            },
            [](const CompleteMultiKnSameOrder& x) {
                return "CompleteMultiKnSameOrder(" + std::to_string(x.copies) + "xK" + std::to_string(x.order) + ")";
            },
            [](const BipartiteUnionSameEdgeCount& x) {
                return "BipartiteUnionSameEdgeCount(" + std::to_string(x.edges) + ", isolated=" +
                       std::to_string(x.isolated) + ")";
            },
            [](const RegularFourEigenvalue& x) { return "RegularFourEigenvalue" + x.spectrum.to_string(); },
            [](const OtherClass&) -> std::string { return "Other"; },
        },
        c);
}

Classification classify(const Graph& g) {
    if (g.size() == 0) return EmptyClass{};
    if (is_complete(g)) return CompleteClass{g.order()};
    const auto k = is_regular(g);
    const bool connected = is_connected(g);
    std::size_t distinct = 0;
    if (k && connected) {
        distinct = distinct_eigenvalue_count(g);
        if (distinct == 3) {
            const auto direct = swr_params_direct(g, 2);
            const auto* p = std::get_if<SwrParams>(&direct);
            if (p == nullptr || !p->fully_constrained()) {
                throw std::logic_error("classify: three-eigenvalue graph failed the ell = 2 walk test");
            }
            return StronglyRegular{g.order(), *k, *p->lambda, *p->mu};
        }
    }
    if (!connected && is_complete_union_same_order(g)) {
        const auto comps = component_vertices(g);
        return CompleteMultiKnSameOrder{comps.front().size(), comps.size()};
    }
    if (const auto bu = bipartite_union_same_edges(g)) return BipartiteUnionSameEdgeCount{bu->first, bu->second};
    if (k && connected && distinct == 4) return RegularFourEigenvalue{spectrum(g)};
    return OtherClass{};
}

std::optional<SwrParams> check_mu0(const Graph& g, unsigned long ell) {
    if (ell % 2 == 0) {
        throw std::invalid_argument("check_mu0: ell must be odd; even ell with mu = 0 only allows unions of equal cliques");
    }
    const BigMatrix walks = walk_matrix(g, ell);
    std::optional<BigInt> lambda;
    std::optional<BigInt> nu;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u; v < g.order(); ++v) {
            const BigInt& w = walks(u, v);
            if (u == v) {
                if (nu && *nu != w) return std::nullopt;
                nu = w;
            } else if (g.adjacent(u, v)) {
                if (lambda && *lambda != w) return std::nullopt;
                lambda = w;
            } else if (sgn(w) != 0) {
                return std::nullopt;
            }
        }
    }
    return SwrParams{ell, lambda, BigInt(0), nu};
}

}  // namespace swr
