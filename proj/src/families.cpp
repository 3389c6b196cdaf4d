#include "swr/families.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace swr {

namespace {

bool is_prime(std::size_t q) {
    if (q < 2) return false;
    for (std::size_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

class FamilyParser {
public:
    explicit FamilyParser(std::span<const std::string> tokens) : tokens_(tokens) {}

    Graph parse_all() {
        Graph g = parse();
        if (pos_ != tokens_.size()) fail("unexpected trailing token '" + tokens_[pos_] + "'");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw std::invalid_argument("family: " + msg); }

    std::string next_name() {
        if (pos_ >= tokens_.size()) fail("expected a family name");
        std::string name = tokens_[pos_++];
        for (auto& c : name) {
            if (c == '_') c = '-';
        }
        return name;
    }

    std::size_t next_number(std::string_view what) {
        if (pos_ >= tokens_.size()) fail("missing parameter " + std::string(what));
        const auto& tok = tokens_[pos_++];
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            fail("parameter " + std::string(what) + " must be a nonnegative integer, got '" + tok + "'");
        }
        return value;
    }

    Graph parse() {
        const std::string name = next_name();
        if (name == "empty") return empty_graph(next_number("n"));
        if (name == "complete") return complete_graph(next_number("n"));
        if (name == "complete-bipartite") {
            const auto a = next_number("a");
            return complete_bipartite(a, next_number("b"));
        }
        if (name == "cycle") return cycle_graph(next_number("n"));
        if (name == "path") return path_graph(next_number("n"));
        if (name == "petersen") return petersen_graph();
        if (name == "paley") return paley_graph(next_number("q"));
        if (name == "hamming") {
            const auto d = next_number("d");
            return hamming_graph(d, next_number("q"));
        }
        if (name == "heawood") return heawood_graph();
        if (name == "complement-kmm-km") return complement_kmm_km(next_number("m"));
        if (name == "line-graph" || name == "line-graph-of") return line_graph(parse());
        if (name == "complement") return complement(parse());
        if (name == "clique-ext") {
            Graph inner = parse();
            return clique_extension(inner, next_number("s"));
        }
        fail("unknown family '" + name + "'");
    }

    std::span<const std::string> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u) {
        for (std::size_t v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
    }
    return Graph(a + b, edges);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("family: cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, static_cast<Vertex>((u + 1) % n));
    return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph(n, edges);
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
}

Graph paley_graph(std::size_t q) {
    if (!is_prime(q) || q % 4 != 1) {
        throw std::invalid_argument("family: paley needs a prime q with q = 1 (mod 4), got " + std::to_string(q));
    }
    std::vector<bool> square(q, false);
    for (std::size_t x = 1; x < q; ++x) square[x * x % q] = true;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < q; ++u) {
        for (Vertex v = u + 1; v < q; ++v) {
            if (square[v - u]) edges.emplace_back(u, v);
        }
    }
    return Graph(q, edges);
}

Graph hamming_graph(std::size_t d, std::size_t q) {
    if (d < 1 || q < 2) throw std::invalid_argument("family: hamming needs d >= 1 and q >= 2");
    std::size_t n = 1;
    for (std::size_t i = 0; i < d; ++i) n *= q;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        std::size_t place = 1;
        for (std::size_t pos = 0; pos < d; ++pos, place *= q) {
            const std::size_t digit = (u / place) % q;
            for (std::size_t other = digit + 1; other < q; ++other) {
                edges.emplace_back(u, static_cast<Vertex>(u + (other - digit) * place));
            }
        }
    }
    return Graph(n, edges);
}

Graph heawood_graph() {
    std::vector<Edge> edges;
    for (Vertex p = 1; p <= 7; ++p) {
        for (Vertex l = 1; l <= 7; ++l) {
            if (__builtin_popcount(p & l) % 2 == 0) edges.emplace_back(p - 1, 7 + l - 1);
        }
    }
    return Graph(14, edges);
}

Graph complement_kmm_km(std::size_t m) {
    return complement(cartesian_product(complete_bipartite(m, m), complete_graph(m)));
}

Graph construct_family(std::span<const std::string> tokens) { return FamilyParser(tokens).parse_all(); }

Graph construct_family(std::string_view expression) {
    std::istringstream in{std::string(expression)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    return construct_family(tokens);
}

}  // namespace swr
