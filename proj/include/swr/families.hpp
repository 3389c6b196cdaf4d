#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "swr/graph.hpp"

namespace swr {

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Parts are 0..a-1 and a..a+b-1.
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Requires n >= 3.
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5+i -- 5+(i+2)%5.
Graph petersen_graph();
/// Vertices Z_q, adjacent iff the difference is a nonzero square mod q.
/// Requires q prime with q % 4 == 1.
Graph paley_graph(std::size_t q);
/// Words of length d over {0..q-1} in base-q order, adjacent iff they
/// differ in exactly one position.
Graph hamming_graph(std::size_t d, std::size_t q);
/// Incidence graph of the Fano plane: vertices 0..6 are the points
/// (nonzero vectors 1..7 of GF(2)^3), 7..13 the lines (also 1..7), a point
/// is on a line iff the two vectors are orthogonal.
Graph heawood_graph();
/// Complement of the Cartesian product K_{m,m} x K_m.
Graph complement_kmm_km(std::size_t m);

/**
 * Builds a graph from a family expression such as
 *
 *   paley 5
 *   clique-ext paley 5 3
 *   line-graph heawood
 *   complement complete-bipartite 2 3
 *
 * Grammar (underscores are accepted in place of dashes):
 *
 *   F := empty n | complete n | complete-bipartite a b | cycle n | path n
 *      | petersen | paley q | hamming d q | heawood | complement-kmm-km m
 *      | line-graph F | line-graph-of F | complement F | clique-ext F s
 *
 * Throws std::invalid_argument for unknown names, missing, extra or
 * malformed arguments, and violated parameter constraints.
 */
Graph construct_family(std::span<const std::string> tokens);
Graph construct_family(std::string_view expression);

}  // namespace swr
