#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace swr {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Neighbor lists are kept sorted, so two graphs compare equal exactly when
 * they have the same labeled edge set. Instances are immutable once built.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    /// Duplicate edges are merged. Throws std::invalid_argument on loops or
    /// endpoints outside [0, n).
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

Graph complement(const Graph& g);
Graph disjoint_union(std::span<const Graph> gs);

/// Vertex (u, v) is numbered u * h.order() + v.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Vertex v becomes s consecutive vertices v*s .. v*s + s - 1.
/// Throws std::invalid_argument when s == 0.
Graph clique_extension(const Graph& g, std::size_t s);

/// Vertex i of the result is the i-th edge of g.edges().
Graph line_graph(const Graph& g);

/// Common valency, or nullopt for an irregular or 0-vertex graph.
std::optional<std::size_t> is_regular(const Graph& g);

/// The 0-vertex graph counts as connected.
bool is_connected(const Graph& g);

/// Vertex sets of the connected components, each sorted, ordered by
/// smallest vertex.
std::vector<std::vector<Vertex>> component_vertices(const Graph& g);

/// Induced subgraphs of the components, relabeled in vertex order.
std::vector<Graph> components(const Graph& g);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

bool is_complete(const Graph& g);

/// Part sizes (a, b) with a <= b when g is K_{a,b} with a, b >= 1.
std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g);

}  // namespace swr
