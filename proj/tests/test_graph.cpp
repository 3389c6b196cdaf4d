#include <doctest.h>

#include <random>

#include "swr/families.hpp"
#include "swr/graph.hpp"
#include "swr/graph6.hpp"
#include "swr/spectrum.hpp"

using namespace swr;

namespace {

std::vector<std::size_t> degrees(const Graph& g) {
    std::vector<std::size_t> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

// (value as string, multiplicity) pairs of a fully resolved spectrum
std::vector<std::pair<std::string, std::size_t>> spec(const Graph& g) {
    std::vector<std::pair<std::string, std::size_t>> out;
    for (const auto& e : spectrum(g).entries) {
        if (const auto* r = std::get_if<Rational>(&e.value)) {
            out.emplace_back(r->get_str(), e.multiplicity);
        } else {
            out.emplace_back(to_string(std::get<QuadraticSurd>(e.value)), e.multiplicity);
        }
    }
    return out;
}

using Spec = std::vector<std::pair<std::string, std::size_t>>;

}  // namespace

TEST_CASE("graph rejects loops and out-of-range endpoints") {
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
    const std::vector<Edge> far{{0, 3}};
    CHECK_THROWS_AS(Graph(3, far), std::invalid_argument);
    const std::vector<Edge> dup{{0, 1}, {1, 0}};
    CHECK(Graph(2, dup).size() == 1);
}

TEST_CASE("graph6 decoding") {
    SUBCASE("K2") {
        const Graph g = parse_graph6("A_");
        CHECK(g.order() == 2);
        CHECK(g.size() == 1);
        CHECK(g.adjacent(0, 1));
    }
    SUBCASE("empty record") { CHECK(parse_graph6("?").order() == 0); }
    SUBCASE("header and newline are stripped") { CHECK(parse_graph6(">>graph6<<A_\n") == complete_graph(2)); }
    SUBCASE("DQc round-trips") {
        const Graph g = parse_graph6("DQc");
        CHECK(g.order() == 5);
        CHECK(write_graph6(g) == "DQc");
    }
    SUBCASE("long header") {
        const Graph g = cycle_graph(100);
        const std::string s = write_graph6(g);
        CHECK(s.substr(0, 4) == std::string{126, 63 + 0, 63 + 1, 63 + 36});
        CHECK(parse_graph6(s) == g);
    }
}

TEST_CASE("graph6 errors name the byte offset") {
    auto offset_of = [](std::string_view s) -> std::size_t {
        try {
            parse_graph6(s);
        } catch (const Graph6Error& e) {
            return e.offset();
        }
        return SIZE_MAX;
    };
    CHECK(offset_of("A ") == 1);                       // character outside [63,126]
    CHECK(offset_of("A`") == 1);                       // padding bit set (n=2 uses 1 of 6 bits)
    CHECK(offset_of("C") != SIZE_MAX);                 // truncated: n=4 needs one data byte
    CHECK(offset_of("A__") != SIZE_MAX);               // extra data
    CHECK(offset_of("~??@") == 0);                     // non-canonical long header for n = 1
    CHECK(offset_of("") == 0);
    CHECK_THROWS_AS(parse_graph6("~~??????"), Graph6Error);
}

TEST_CASE("graph6 writer") {
    CHECK(write_graph6(complete_graph(2)) == "A_");
    CHECK(write_graph6(Graph(0)) == "?");
    CHECK(write_graph6(complete_graph(1)) == "@");
    CHECK_THROWS_AS(write_graph6(Graph(kGraph6MaxOrder + 1)), std::length_error);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = rng() % 80;
        const Graph g = random_graph(rng, n, 0.3);
        const std::string s = write_graph6(g);
        CHECK(parse_graph6(s) == g);
        CHECK(write_graph6(parse_graph6(s)) == s);
    }
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(4)) == empty_graph(4));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(rng, rng() % 12, 0.5);
        CHECK(complement(complement(g)) == g);
        CHECK(complement(g).size() + g.size() == g.order() * (g.order() - (g.order() ? 1 : 0)) / 2);
    }
    const Graph c = complement_kmm_km(2);
    CHECK(c.order() == 8);
    CHECK(is_regular(c) == 4u);
    CHECK(spec(c) == Spec{{"4", 1}, {"2", 1}, {"0", 3}, {"-2", 3}});
}

TEST_CASE("disjoint union") {
    const std::vector<Graph> two_triangles{complete_graph(3), complete_graph(3)};
    const Graph g = disjoint_union(two_triangles);
    CHECK(g.order() == 6);
    CHECK(spec(g) == Spec{{"2", 2}, {"-1", 4}});
    CHECK(disjoint_union(std::vector<Graph>{}).order() == 0);

    const std::vector<Graph> parts{complete_bipartite(2, 3), complete_bipartite(1, 6), complete_graph(1)};
    const Graph u = disjoint_union(parts);
    CHECK(u.order() == 13);
    CHECK(u.size() == 12);
    CHECK(spec(u) == Spec{{"0 + 1*sqrt(6)", 2}, {"0", 9}, {"0 - 1*sqrt(6)", 2}});
}

TEST_CASE("cartesian product") {
    CHECK(cartesian_product(complete_graph(2), complete_graph(2)).edges() ==
          std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    const Graph cube = cartesian_product(complete_bipartite(2, 2), complete_graph(2));
    CHECK(cube.order() == 8);
    CHECK(is_regular(cube) == 3u);
    CHECK(spec(cube) == Spec{{"3", 1}, {"1", 3}, {"-1", 3}, {"-3", 1}});
    CHECK(cartesian_product(petersen_graph(), Graph(0)).order() == 0);
}

TEST_CASE("clique extension") {
    const Graph p = petersen_graph();
    CHECK(clique_extension(p, 1) == p);
    CHECK(clique_extension(complete_graph(1), 4) == complete_graph(4));
    CHECK_THROWS_AS(clique_extension(p, 0), std::invalid_argument);
    for (std::size_t s = 1; s <= 4; ++s) {
        const Graph g = clique_extension(p, s);
        CHECK(g.order() == 10 * s);
        CHECK(is_regular(g) == 3 * s + s - 1);
    }
    const Graph c = clique_extension(cycle_graph(5), 3);
    CHECK(c.order() == 15);
    CHECK(is_regular(c) == 8u);
    // eigenvalues 3*theta + 2 for theta in spec(C5), plus -1 on the n*(s-1) clique-internal vectors
    CHECK(spec(c) == Spec{{"8", 1}, {"1/2 + 3/2*sqrt(5)", 2}, {"-1", 10}, {"1/2 - 3/2*sqrt(5)", 2}});
}

TEST_CASE("line graph") {
    CHECK(line_graph(complete_graph(3)) == complete_graph(3));
    CHECK(line_graph(path_graph(3)) == complete_graph(2));
    const Graph l = line_graph(heawood_graph());
    CHECK(l.order() == 21);
    CHECK(is_regular(l) == 4u);
    CHECK(spec(l) == Spec{{"4", 1}, {"1 + 1*sqrt(2)", 6}, {"1 - 1*sqrt(2)", 6}, {"-2", 8}});
}

TEST_CASE("regularity and connectivity") {
    const Graph p = petersen_graph();
    CHECK(is_regular(p) == 3u);
    CHECK(is_connected(p));
    CHECK_FALSE(is_regular(path_graph(3)).has_value());
    const std::vector<Graph> tt{complete_graph(3), complete_graph(3)};
    const Graph u = disjoint_union(tt);
    CHECK(is_regular(u) == 2u);
    CHECK_FALSE(is_connected(u));
    CHECK(components(u).size() == 2);
    CHECK(components(u)[0] == complete_graph(3));
    CHECK_FALSE(is_regular(Graph(0)).has_value());
    CHECK(is_connected(Graph(0)));
    CHECK(is_regular(Graph(1)) == 0u);
    CHECK(is_connected(Graph(1)));
}

TEST_CASE("families") {
    CHECK(paley_graph(5) == cycle_graph(5));
    CHECK_THROWS_AS(paley_graph(7), std::invalid_argument);
    CHECK_THROWS_AS(paley_graph(9), std::invalid_argument);
    CHECK_THROWS_AS(hamming_graph(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(hamming_graph(2, 1), std::invalid_argument);

    const Graph h = hamming_graph(3, 3);
    CHECK(h.order() == 27);
    CHECK(is_regular(h) == 6u);
    CHECK(spec(h) == Spec{{"6", 1}, {"3", 6}, {"0", 12}, {"-3", 8}});
    for (auto [d, q] : {std::pair{1, 4}, {2, 3}, {4, 2}, {2, 5}}) {
        const Graph g = hamming_graph(d, q);
        CHECK(g.order() == static_cast<std::size_t>(std::pow(q, d)));
        CHECK(is_regular(g) == static_cast<std::size_t>(d * (q - 1)));
    }

    const Graph hw = heawood_graph();
    CHECK(hw.order() == 14);
    CHECK(is_regular(hw) == 3u);
    CHECK(complete_bipartite_parts(hw) == std::nullopt);  // bipartite but not complete

    CHECK(degrees(petersen_graph()) == std::vector<std::size_t>(10, 3));
}

TEST_CASE("construct_family expressions") {
    CHECK(construct_family("paley 5") == cycle_graph(5));
    CHECK(construct_family("clique-ext paley 5 3") == clique_extension(cycle_graph(5), 3));
    CHECK(construct_family("line_graph_of heawood") == line_graph(heawood_graph()));
    CHECK(construct_family("complement complete-bipartite 2 3") == complement(complete_bipartite(2, 3)));
    CHECK(construct_family("complement-kmm-km 2") ==
          complement(cartesian_product(complete_bipartite(2, 2), complete_graph(2))));
    CHECK(write_graph6(construct_family("complete 1")) == "@");
    CHECK_THROWS_AS(construct_family("dodecahedron"), std::invalid_argument);
    CHECK_THROWS_AS(construct_family("paley 7"), std::invalid_argument);
    CHECK_THROWS_AS(construct_family("paley"), std::invalid_argument);
    CHECK_THROWS_AS(construct_family("cycle 5 5"), std::invalid_argument);
    CHECK_THROWS_AS(construct_family("cycle x"), std::invalid_argument);
}
