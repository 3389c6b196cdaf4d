#include "swr/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace swr {

namespace {

ExactReal as_real(const SpectrumEntry& e) {
    if (const auto* r = std::get_if<Rational>(&e.value)) return *r;
    return std::get<QuadraticSurd>(e.value);
}

// Monic quadratic factors x^2 + p x + t of q with two real irrational roots.
std::vector<IntPoly> quadratic_factors(IntPoly& q, const BigInt& bound) {
    std::vector<IntPoly> found;
    if (q.degree() == 2) {
        const BigInt disc = q.coeff(1) * q.coeff(1) - 4 * q.coeff(0);
        if (sgn(disc) > 0) {
            found.push_back(q);
            q = IntPoly{1};
        }
        return found;
    }
    const BigInt max_t = bound * bound;
    const BigInt max_p = 2 * bound;
    // |t| <= bound^2 and |p| <= 2 bound since both roots lie in [-bound, bound]
    for (BigInt t = -max_t; t <= max_t && q.degree() >= 4; ++t) {
        if (sgn(t) == 0) continue;
        if (!mpz_divisible_p(q.coeff(0).get_mpz_t(), t.get_mpz_t())) continue;
        for (BigInt p = -max_p; p <= max_p && q.degree() >= 4; ++p) {
            const BigInt disc = p * p - 4 * t;
            if (sgn(disc) <= 0 || mpz_perfect_square_p(disc.get_mpz_t())) continue;
            const IntPoly candidate(std::vector<BigInt>{t, p, 1});
            for (DivMod dm = poly_divmod(q, candidate); dm.remainder.is_zero() && q.degree() >= 2;
                 dm = poly_divmod(q, candidate)) {
                found.push_back(candidate);
                q = dm.quotient;
            }
        }
    }
    if (q.degree() == 2) {
        const BigInt disc = q.coeff(1) * q.coeff(1) - 4 * q.coeff(0);
        if (sgn(disc) > 0) {
            found.push_back(q);
            q = IntPoly{1};
        }
    }
    return found;
}

}  // namespace

std::size_t SpectrumEntry::distinct() const {
    if (const auto* f = std::get_if<IntPoly>(&value)) return static_cast<std::size_t>(f->degree());
    return 1;
}

std::size_t Spectrum::distinct_count() const {
    std::size_t c = 0;
    for (const auto& e : entries) c += e.distinct();
    return c;
}

std::size_t Spectrum::total() const {
    std::size_t c = 0;
    for (const auto& e : entries) c += e.distinct() * e.multiplicity;
    return c;
}

bool Spectrum::fully_resolved() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.resolved(); });
}

std::string Spectrum::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) out += ", ";
        const auto& e = entries[i];
        if (const auto* f = std::get_if<IntPoly>(&e.value)) {
            out += "roots(" + f->to_string() + ")";
        } else {
            const std::string v = swr::to_string(as_real(e));
            out += std::holds_alternative<QuadraticSurd>(e.value) ? "(" + v + ")" : v;
        }
        out += "^" + std::to_string(e.multiplicity);
    }
    return out + "}";
}

std::vector<std::pair<IntPoly, std::size_t>> multiplicity_layers(const IntPoly& p) {
    if (!p.is_monic()) throw std::invalid_argument("multiplicity_layers: polynomial must be monic");
    // r_j = squarefree part of f_j, f_{j+1} = f_j / r_j; roots of r_j have
    // multiplicity > j in p, so r_j / r_{j+1} isolates multiplicity j + 1.
    std::vector<IntPoly> radicals;
    IntPoly f = p;
    while (f.degree() > 0) {
        IntPoly r = squarefree_part(f);
        f = exact_div(f, r);
        radicals.push_back(std::move(r));
    }
    std::vector<std::pair<IntPoly, std::size_t>> layers;
    for (std::size_t j = 0; j < radicals.size(); ++j) {
        IntPoly s = j + 1 < radicals.size() ? exact_div(radicals[j], radicals[j + 1]) : radicals[j];
        if (s.degree() > 0) layers.emplace_back(std::move(s), j + 1);
    }
    return layers;
}

BigInt cauchy_bound(const IntPoly& p) {
    BigInt m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, BigInt(abs(p.coeffs()[i])));
    return m + 1;
}

std::vector<BigInt> integer_roots(const IntPoly& p, const BigInt& bound) {
    if (!p.is_monic()) throw std::invalid_argument("integer_roots: polynomial must be monic");
    std::vector<BigInt> roots;
    std::size_t low = 0;
    while (low < p.coeffs().size() && sgn(p.coeffs()[low]) == 0) ++low;
    if (low > 0) roots.push_back(0);
    if (low >= p.coeffs().size() - 1) return roots;
    const BigInt c = abs(p.coeffs()[low]);
    const BigInt limit = std::min(c, bound);
    for (BigInt r = 1; r <= limit; ++r) {
        if (!mpz_divisible_p(c.get_mpz_t(), r.get_mpz_t())) continue;
        if (sgn(p(r)) == 0) roots.push_back(r);
        if (sgn(p(BigInt(-r))) == 0) roots.push_back(-r);
    }
    std::sort(roots.begin(), roots.end(), [](const BigInt& x, const BigInt& y) { return x > y; });
    return roots;
}

Spectrum spectrum_of(const IntPoly& cp, std::optional<BigInt> root_bound) {
    if (!cp.is_monic()) throw std::invalid_argument("spectrum_of: polynomial must be monic");
    Spectrum sp;
    std::vector<SpectrumEntry> unresolved;
    for (auto& [layer, mult] : multiplicity_layers(cp)) {
        const BigInt bound = root_bound ? *root_bound : cauchy_bound(layer);
        IntPoly rest = layer;
        for (const auto& r : integer_roots(layer, bound)) {
            rest = exact_div(rest, IntPoly::linear_root(r));
            sp.entries.push_back({Rational(r), mult});
        }
        for (const auto& quad : quadratic_factors(rest, bound)) {
            auto [hi, lo] = quadratic_roots(Rational(quad.coeff(1)), Rational(quad.coeff(0)));
            for (const auto& root : {hi, lo}) {
                if (const auto* s = std::get_if<QuadraticSurd>(&root)) {
                    sp.entries.push_back({*s, mult});
                } else {
                    sp.entries.push_back({std::get<Rational>(root), mult});
                }
            }
        }
        if (rest.degree() > 0) unresolved.push_back({rest, mult});
    }
    std::sort(sp.entries.begin(), sp.entries.end(),
              [](const SpectrumEntry& x, const SpectrumEntry& y) { return compare(as_real(x), as_real(y)) > 0; });
    std::sort(unresolved.begin(), unresolved.end(), [](const SpectrumEntry& x, const SpectrumEntry& y) {
        return x.multiplicity > y.multiplicity;
    });
    sp.entries.insert(sp.entries.end(), unresolved.begin(), unresolved.end());
    return sp;
}

Spectrum spectrum(const Graph& g) {
    BigInt max_degree = 0;
    for (Vertex v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, BigInt(g.degree(v)));
    return spectrum_of(char_poly(BigMatrix::adjacency(g)), max_degree);
}

IntPoly minimal_poly(const Graph& g) { return squarefree_part(char_poly(BigMatrix::adjacency(g))); }

}  // namespace swr
