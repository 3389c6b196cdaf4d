#include "swr/cli.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "swr/eigen_search.hpp"
#include "swr/families.hpp"
#include "swr/graph6.hpp"
#include "swr/spectrum.hpp"

namespace swr::cli {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

json opt_int(const std::optional<BigInt>& x) { return x ? json(x->get_str()) : json(nullptr); }

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

/// Fixed-point decimal with the given number of fractional digits.
std::string decimal(const Rational& x, int digits) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const Rational scaled = x * Rational(scale);
    // round half away from zero
    BigInt num = abs(scaled.get_num()) * 2 + scaled.get_den();
    BigInt den = scaled.get_den() * 2;
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    std::string s = q.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return (sgn(scaled) < 0 && sgn(q) != 0 ? "-" : "") + s;
}

std::string field_text(const json& x) { return x.is_null() ? "*" : x.get<std::string>(); }

std::string params_text(const json& p) {
    return "(" + field_text(p["lambda"]) + ", " + field_text(p["mu"]) + ", " + field_text(p["nu"]) + ")";
}

std::string real_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.contains("poly")) return "roots(" + v["poly_text"].get<std::string>() + ")";
    const std::string b = v["b"].get<std::string>();
    const bool neg = !b.empty() && b[0] == '-';
    return "(" + v["a"].get<std::string>() + (neg ? " - " + b.substr(1) : " + " + b) + "*sqrt(" +
           v["d"].dump() + "))";
}

std::string spectrum_text(const json& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += ", ";
        out += real_text(s[i]["value"]) + "^" + std::to_string(s[i]["multiplicity"].get<std::size_t>());
    }
    return out + "}";
}

std::string classification_text(const json& c) {
    const std::string type = c["type"];
    if (type == "Complete") return "Complete(" + c["n"].dump() + ")";
    if (type == "StronglyRegular") {
        return "StronglyRegular(" + c["v"].dump() + "," + c["k"].dump() + "," + c["lambda"].get<std::string>() + "," +
               c["mu"].get<std::string>() + ")";
    }
    if (type == "CompleteMultiKnSameOrder") return "CompleteMultiKnSameOrder(" + c["copies"].dump() + "xK" + c["order"].dump() + ")";
    if (type == "BipartiteUnionSameEdgeCount") {
        return "BipartiteUnionSameEdgeCount(" + c["edges"].dump() + ", isolated=" + c["isolated"].dump() + ")";
    }
    return type;
}

std::string profile_text(const json& p) {
    const std::string type = p["type"];
    if (type == "SingleEll") return "SingleEll(" + p["ell"].dump() + ")";
    if (type == "NoneUpTo") return "NoneUpTo(" + p["bound"].dump() + ")";
    if (type == "NotApplicable") return "NotApplicable(" + p["reason"].get<std::string>() + ")";
    return type;
}

std::string witness_text(const json& w) {
    return w["class"].get<std::string>() + " pairs (" + w["u1"].dump() + "," + w["v1"].dump() + ")=" +
           w["count1"].get<std::string>() + " vs (" + w["u2"].dump() + "," + w["v2"].dump() + ")=" +
           w["count2"].get<std::string>();
}

/// Iterates graph6 records, reporting parse failures; returns the exit code
/// contribution (kOk or kParseFailure).
template <class Fn>
int for_each_record(std::istream& in, std::ostream& out, std::ostream& err, bool json_mode, Fn&& fn) {
    int status = kOk;
    std::string line;
    std::size_t line_no = 0;
    std::size_t index = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        ++index;
        Graph g;
        try {
            g = parse_graph6(text);
        } catch (const Graph6Error& e) {
            status = std::max(status, static_cast<int>(kParseFailure));
            err << "line " << line_no << ": " << e.what() << "\n";
            if (json_mode) out << json{{"index", index}, {"line", line_no}, {"error", e.what()}}.dump() << "\n";
            continue;
        }
        try {
            fn(g, index, text);
        } catch (const std::logic_error& e) {
            status = kCrossCheck;
            err << "line " << line_no << ": internal cross-check failed: " << e.what() << "\n";
            if (json_mode) out << json{{"index", index}, {"line", line_no}, {"internal_error", e.what()}}.dump() << "\n";
        }
    }
    return status;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty number");
    if (const auto slash = s.find('/'); slash != std::string::npos) {
        Rational r;
        if (r.set_str(s, 10) != 0 || sgn(r.get_den()) == 0) throw std::invalid_argument("bad rational '" + s + "'");
        r.canonicalize();
        return r;
    }
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    std::string digits;
    long frac = 0;
    bool seen_dot = false;
    for (; pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'); ++pos) {
        if (s[pos] == '.') {
            if (seen_dot) throw std::invalid_argument("bad number '" + s + "'");
            seen_dot = true;
        } else {
            digits += s[pos];
            if (seen_dot) ++frac;
        }
    }
    if (digits.empty()) throw std::invalid_argument("bad number '" + s + "'");
    long exponent = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        try {
            std::size_t used = 0;
            exponent = std::stol(s.substr(pos + 1), &used);
            pos += 1 + used;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad exponent in '" + s + "'");
        }
    }
    if (pos != s.size()) throw std::invalid_argument("bad number '" + s + "'");
    Rational r{BigInt(digits)};
    const long shift = exponent - frac;
    BigInt p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift < 0) {
        r /= Rational(p10);
    } else {
        r *= Rational(p10);
    }
    return negative ? Rational(-r) : r;
}

ExactReal parse_exact_real(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    const auto at = s.find("sqrt(");
    if (at == std::string::npos) return parse_rational(s);
    const auto close = s.find(')', at);
    if (close == std::string::npos || close + 1 != s.size()) throw std::invalid_argument("bad surd '" + s + "'");
    const Rational d = parse_rational(s.substr(at + 5, close - at - 5));
    if (d.get_den() != 1 || sgn(d) < 0) throw std::invalid_argument("radicand must be a nonnegative integer");
    std::string prefix = s.substr(0, at);
    if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = prefix.size(); i-- > 1;) {
        if ((prefix[i] == '+' || prefix[i] == '-') && prefix[i - 1] != 'e' && prefix[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    Rational a = 0;
    std::string coeff = prefix;
    if (split != std::string::npos) {
        a = parse_rational(prefix.substr(0, split));
        coeff = prefix.substr(split);
    }
    Rational b = 1;
    if (coeff == "-") {
        b = -1;
    } else if (!coeff.empty() && coeff != "+") {
        b = parse_rational(coeff);
    }
    return make_quadratic(a, b, d.get_num());
}

json to_json(const ExactReal& x) {
    if (const auto* r = std::get_if<Rational>(&x)) return r->get_str();
    const auto& s = std::get<QuadraticSurd>(x);
    json d = s.d.fits_slong_p() ? json(s.d.get_si()) : json(s.d.get_str());
    return {{"a", s.a.get_str()}, {"b", s.b.get_str()}, {"d", d}};
}

json to_json(const Spectrum& s) {
    json out = json::array();
    for (const auto& e : s.entries) {
        json value = std::visit(overloaded{
                                    [](const Rational& r) { return to_json(ExactReal(r)); },
                                    [](const QuadraticSurd& q) { return to_json(ExactReal(q)); },
                                    [](const IntPoly& p) {
                                        json coeffs = json::array();
                                        for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
                                        return json{{"poly", coeffs}, {"poly_text", p.to_string()}};
                                    },
                                },
                                e.value);
        out.push_back({{"value", value}, {"multiplicity", e.multiplicity}});
    }
    return out;
}

json to_json(const Classification& c) {
    json out{{"type", class_name(c)}};
    std::visit(overloaded{
                   [](const EmptyClass&) {},
                   [&](const CompleteClass& x) { out["n"] = x.n; },
                   [&](const StronglyRegular& x) {
                       out["v"] = x.v;
                       out["k"] = x.k;
                       out["lambda"] = x.lambda.get_str();
                       out["mu"] = x.mu.get_str();
                   },
                   [&](const CompleteMultiKnSameOrder& x) {
                       out["order"] = x.order;
                       out["copies"] = x.copies;
                   },
                   [&](const BipartiteUnionSameEdgeCount& x) {
                       out["edges"] = x.edges;
                       out["isolated"] = x.isolated;
                   },
                   [&](const RegularFourEigenvalue& x) { out["spectrum"] = to_json(x.spectrum); },
                   [](const OtherClass&) {},
               },
               c);
    return out;
}

json to_json(const SwrProfile& p) {
    return std::visit(overloaded{
                          [](const AllEll&) { return json{{"type", "AllEll"}}; },
                          [](const AllOddEll&) { return json{{"type", "AllOddEll"}}; },
                          [](const SingleEll& s) { return json{{"type", "SingleEll"}, {"ell", s.ell}}; },
                          [](const NoneUpTo& s) { return json{{"type", "NoneUpTo"}, {"bound", s.bound}}; },
                          [](const NotApplicable& s) { return json{{"type", "NotApplicable"}, {"reason", s.reason}}; },
                      },
                      p);
}

json to_json(const SwrParams& p) {
    return {{"ell", p.ell}, {"lambda", opt_int(p.lambda)}, {"mu", opt_int(p.mu)}, {"nu", opt_int(p.nu)}};
}

json to_json(const WalkWitness& w) {
    return {{"class", to_string(w.pair_class)}, {"u1", w.u1}, {"v1", w.v1}, {"count1", w.count1.get_str()},
            {"u2", w.u2}, {"v2", w.v2}, {"count2", w.count2.get_str()}};
}

json analysis_record(const Graph& g, std::size_t index, const std::string& graph6, const AnalyzeOptions& options) {
    json r;
    r["index"] = index;
    r["graph6"] = graph6;
    r["n"] = g.order();
    const auto k = is_regular(g);
    r["regular"] = k.has_value();
    r["k"] = k ? json(*k) : json(nullptr);
    r["connected"] = is_connected(g);
    const Spectrum sp = spectrum(g);
    r["distinct_eigenvalues"] = sp.distinct_count();
    r["spectrum"] = to_json(sp);
    r["classification"] = to_json(classify(g));
    r["profile"] = to_json(swr_profile(g, options.scan_bound));
    json params = json::array();
    for (unsigned long ell : options.ells) {
        const auto direct = swr_params_direct(g, ell);
        if (const auto* p = std::get_if<SwrParams>(&direct)) {
            json entry = to_json(*p);
            entry["swr"] = true;
            params.push_back(entry);
        } else {
            params.push_back({{"ell", ell}, {"swr", false}, {"witness", to_json(std::get<WalkWitness>(direct))}});
        }
    }
    r["params"] = params;
    return r;
}

std::string render_text(const json& r) {
    std::ostringstream os;
    os << "#" << r["index"].get<std::size_t>() << " " << r["graph6"].get<std::string>() << "  n=" << r["n"].dump();
    if (r["regular"].get<bool>()) {
        os << " regular k=" << r["k"].dump();
    } else {
        os << " irregular";
    }
    os << (r["connected"].get<bool>() ? " connected" : " disconnected") << "\n";
    os << "  spectrum: " << spectrum_text(r["spectrum"]) << " (" << r["distinct_eigenvalues"].dump() << " distinct)\n";
    os << "  classification: " << classification_text(r["classification"]) << "\n";
    os << "  profile: " << profile_text(r["profile"]) << "\n";
    for (const auto& p : r["params"]) {
        os << "  ell=" << p["ell"].dump() << ": ";
        if (p["swr"].get<bool>()) {
            os << params_text(p) << "\n";
        } else {
            os << "not SWR, " << witness_text(p["witness"]) << "\n";
        }
    }
    return os.str();
}

int run_analyze(std::istream& in, std::ostream& out, std::ostream& err, const AnalyzeOptions& options) {
    for (unsigned long ell : options.ells) {
        if (ell < 2) {
            err << "error: --ell-list values must be >= 2\n";
            return kUsage;
        }
    }
    return for_each_record(in, out, err, options.json, [&](const Graph& g, std::size_t index, const std::string& text) {
        const json record = analysis_record(g, index, text, options);
        if (options.json) {
            out << record.dump() << "\n";
        } else {
            out << render_text(record);
        }
    });
}

int run_verify(std::istream& in, std::ostream& out, std::ostream& err, const VerifyOptions& options) {
    if (options.ell < 2) {
        err << "error: --ell must be >= 2\n";
        return kUsage;
    }
    bool disagreement = false;
    const int status = for_each_record(in, out, err, options.json, [&](const Graph& g, std::size_t index, const std::string& text) {
        json r{{"index", index}, {"graph6", text}, {"ell", options.ell}};
        const auto direct = swr_params_direct(g, options.ell);
        std::optional<SwrParams> direct_params;
        if (const auto* p = std::get_if<SwrParams>(&direct)) {
            direct_params = *p;
            const SwrParams resolved = resolve_unconstrained(g, *p);
            const IdentityReport report = verify_identity(g, resolved);
            r["params"] = to_json(*p);
            r["resolved"] = to_json(resolved);
            r["pass"] = report.pass;
            if (!report.pass) {
                const auto& v = *report.violation;
                r["violation"] = {{"i", v.i}, {"j", v.j}, {"lhs", v.lhs.get_str()}, {"rhs", v.rhs.get_str()}};
                r["route_disagreement"] = "walk counts are class-constant but the matrix identity fails";
            }
        } else {
            r["pass"] = false;
            r["witness"] = to_json(std::get<WalkWitness>(direct));
        }

        r["spectral_route"] = "n/a";
        if (g.order() >= 2 && is_regular(g) && is_connected(g)) {
            const auto spectral = swr_params_spectral(g, options.ell);
            bool agree = spectral.has_value() == direct_params.has_value();
            if (agree && spectral) {
                auto same = [](const std::optional<BigInt>& a, const std::optional<BigInt>& b) { return !a || *a == *b; };
                agree = same(direct_params->lambda, spectral->lambda) && same(direct_params->mu, spectral->mu) &&
                        same(direct_params->nu, spectral->nu);
            }
            r["spectral_route"] = agree ? "agree" : "disagree";
            if (spectral) r["spectral_params"] = to_json(*spectral);
            if (!agree) r["route_disagreement"] = "direct and Hoffman-divisibility routes differ";
        }
        if (r.contains("route_disagreement")) disagreement = true;

        if (options.json) {
            out << r.dump() << "\n";
            return;
        }
        out << "#" << index << " " << text << " ell=" << options.ell << " ";
        if (r["pass"].get<bool>()) {
            out << "PASS " << params_text(r["params"]);
            if (r["params"] != r["resolved"]) out << " resolved " << params_text(r["resolved"]);
        } else if (r.contains("witness")) {
            out << "FAIL " << witness_text(r["witness"]);
        } else {
            out << "FAIL identity";
        }
        out << " [spectral route: " << r["spectral_route"].get<std::string>() << "]\n";
        if (r.contains("route_disagreement")) err << "#" << index << ": " << r["route_disagreement"].get<std::string>() << "\n";
    });
    return disagreement ? static_cast<int>(kCrossCheck) : status;
}

int run_construct(const std::vector<std::string>& tokens, std::ostream& out, std::ostream& err) {
    try {
        out << write_graph6(construct_family(tokens)) << "\n";
        return kOk;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

int run_search(const SearchCommand& cmd, std::ostream& out, std::ostream& err) {
    std::vector<std::array<long, 3>> hits;
    try {
        hits = search_integer_triples(cmd.ell, cmd.min, cmd.max, SearchOptions{!cmd.all_signs});
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (cmd.json) {
        json arr = json::array();
        for (const auto& t : hits) arr.push_back({t[0], t[1], t[2]});
        out << json{{"ell", cmd.ell}, {"min", cmd.min}, {"max", cmd.max}, {"hits", arr}}.dump() << "\n";
        return kOk;
    }
    out << "ell=" << cmd.ell << " range [" << cmd.min << ", " << cmd.max << "]: " << hits.size() << " triple(s)\n";
    for (const auto& t : hits) out << "(" << t[0] << ", " << t[1] << ", " << t[2] << ")\n";
    return kOk;
}

int run_solve_third(const SolveThirdCommand& cmd, std::ostream& out, std::ostream& err) {
    ThirdRoot root;
    Rational t2;
    Rational t3;
    try {
        t2 = parse_rational(cmd.theta2);
        t3 = parse_rational(cmd.theta3);
        if (!(cmd.tol > 0)) throw std::invalid_argument("--tol must be positive");
        root = third_eigenvalue(cmd.ell, t2, t3, Rational(cmd.tol), cmd.max_denominator);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    // enough digits to show the bracket resolution, at least 6
    int digits = 6;
    for (BigInt p = 1000000; digits < 60 && Rational(1) / Rational(p) > Rational(cmd.tol); p *= 10) ++digits;
    const std::string approx = decimal(root.approximation, digits);
    if (cmd.json) {
        json r{{"ell", cmd.ell},         {"theta2", t2.get_str()},       {"theta3", t3.get_str()},
               {"approximation", approx}, {"lower", root.lower.get_str()}, {"upper", root.upper.get_str()},
               {"exact", root.exact},     {"degenerate", root.degenerate}};
        if (root.exact) r["value"] = root.approximation.get_str();
        out << r.dump() << "\n";
        return kOk;
    }
    if (root.exact) {
        out << "theta1 = " << root.approximation.get_str() << " (exact)";
    } else {
        out << "theta1 ~= " << approx << " (not exact; bracket width < " << cmd.tol << ")";
    }
    if (root.degenerate) out << " degenerate: coincides with theta2 or theta3";
    out << "\n";
    return kOk;
}

int run_feasible(const FeasibleCommand& cmd, std::ostream& out, std::ostream& err) {
    std::optional<std::array<BigInt, 3>> m;
    try {
        if (cmd.thetas.size() != 3) throw std::invalid_argument("--thetas needs exactly three values");
        FeasibilityInput input{cmd.v, cmd.k,
                               EigenTriple{parse_exact_real(cmd.thetas[0]), parse_exact_real(cmd.thetas[1]),
                                           parse_exact_real(cmd.thetas[2])}};
        m = feasible_multiplicities(input);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (cmd.json) {
        json r{{"v", cmd.v}, {"k", cmd.k}, {"thetas", cmd.thetas}, {"feasible", m.has_value()}};
        if (m) r["multiplicities"] = {(*m)[0].get_str(), (*m)[1].get_str(), (*m)[2].get_str()};
        out << r.dump() << "\n";
        return kOk;
    }
    if (m) {
        out << "(" << (*m)[0] << ", " << (*m)[1] << ", " << (*m)[2] << ")\n";
    } else {
        out << "infeasible\n";
    }
    return kOk;
}

}  // namespace swr::cli
