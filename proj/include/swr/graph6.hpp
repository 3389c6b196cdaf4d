#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "swr/graph.hpp"

namespace swr {

/// Largest order the 4-byte graph6 size header can carry.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(std::size_t offset, const std::string& what);
    /// Byte offset into the record (after any ">>graph6<<" header).
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Decodes one graph6 record. An optional ">>graph6<<" prefix and trailing
/// CR/LF are ignored. Non-shortest size headers and nonzero padding bits are
/// rejected so that write_graph6(parse_graph6(s)) == s for every accepted s.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding. Throws std::length_error past kGraph6MaxOrder.
std::string write_graph6(const Graph& g);

}  // namespace swr
