#include "swr/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace swr {

Graph::Graph(std::size_t n) : adj_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") out of range for " + std::to_string(n) + " vertices");
        }
        if (u == v) {
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        }
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        degree_sum += nb.size();
    }
    edge_count_ = degree_sum / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph complement(const Graph& g) {
    const auto n = g.order();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph disjoint_union(std::span<const Graph> gs) {
    std::size_t offset = 0;
    std::vector<Edge> edges;
    for (const auto& g : gs) {
        for (auto [u, v] : g.edges()) {
            edges.emplace_back(static_cast<Vertex>(u + offset), static_cast<Vertex>(v + offset));
        }
        offset += g.order();
    }
    return Graph(offset, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const auto m = h.order();
    auto id = [m](Vertex u, Vertex v) { return static_cast<Vertex>(u * m + v); };
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (auto [a, b] : h.edges()) edges.emplace_back(id(u, a), id(u, b));
    }
    for (auto [a, b] : g.edges()) {
        for (Vertex v = 0; v < m; ++v) edges.emplace_back(id(a, v), id(b, v));
    }
    return Graph(g.order() * m, edges);
}

Graph clique_extension(const Graph& g, std::size_t s) {
    if (s == 0) throw std::invalid_argument("clique extension needs clique size s >= 1");
    auto id = [s](Vertex v, std::size_t i) { return static_cast<Vertex>(v * s + i); };
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.order(); ++v) {
        for (std::size_t i = 0; i < s; ++i) {
            for (std::size_t j = i + 1; j < s; ++j) edges.emplace_back(id(v, i), id(v, j));
        }
    }
    for (auto [u, v] : g.edges()) {
        for (std::size_t i = 0; i < s; ++i) {
            for (std::size_t j = 0; j < s; ++j) edges.emplace_back(id(u, i), id(v, j));
        }
    }
    return Graph(g.order() * s, edges);
}

Graph line_graph(const Graph& g) {
    const auto es = g.edges();
    std::vector<std::vector<Vertex>> incident(g.order());
    for (Vertex i = 0; i < es.size(); ++i) {
        incident[es[i].first].push_back(i);
        incident[es[i].second].push_back(i);
    }
    std::vector<Edge> edges;
    for (const auto& inc : incident) {
        for (std::size_t a = 0; a < inc.size(); ++a) {
            for (std::size_t b = a + 1; b < inc.size(); ++b) edges.emplace_back(inc[a], inc[b]);
        }
    }
    return Graph(es.size(), edges);
}

std::optional<std::size_t> is_regular(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    const auto k = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) {
        if (g.degree(v) != k) return std::nullopt;
    }
    return k;
}

std::vector<std::vector<Vertex>> component_vertices(const Graph& g) {
    const auto n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return component_vertices(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < vertices.size(); ++i) {
        for (Vertex j = i + 1; j < vertices.size(); ++j) {
            if (g.adjacent(vertices[i], vertices[j])) edges.emplace_back(i, j);
        }
    }
    return Graph(vertices.size(), edges);
}

std::vector<Graph> components(const Graph& g) {
    std::vector<Graph> out;
    for (const auto& comp : component_vertices(g)) out.push_back(induced_subgraph(g, comp));
    return out;
}

bool is_complete(const Graph& g) {
    const auto n = g.order();
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g) {
    const auto n = g.order();
    if (n < 2 || !is_connected(g)) return std::nullopt;
    // 2-color from vertex 0, then count edges against the full bipartite count.
    std::vector<int> color(n, -1);
    std::vector<Vertex> stack{0};
    color[0] = 0;
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (color[w] < 0) {
                color[w] = 1 - color[u];
                stack.push_back(w);
            } else if (color[w] == color[u]) {
                return std::nullopt;
            }
        }
    }
    const auto a = static_cast<std::size_t>(std::count(color.begin(), color.end(), 0));
    const auto b = n - a;
    if (g.size() != a * b) return std::nullopt;
    return std::make_pair(std::min(a, b), std::max(a, b));
}

}  // namespace swr
