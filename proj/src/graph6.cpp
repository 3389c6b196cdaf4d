#include "swr/graph6.hpp"

#include <vector>

namespace swr {

namespace {

constexpr int kBias = 63;
constexpr char kLongSize = 126;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph6Error::Graph6Error(std::size_t offset, const std::string& what)
    : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw Graph6Error(i, "character outside [63,126]");
    }
    auto six = [&](std::size_t i) { return static_cast<std::size_t>(text[i] - kBias); };

    if (text.empty()) throw Graph6Error(0, "missing size header");
    std::size_t n = 0;
    std::size_t pos = 0;
    if (text[0] != kLongSize) {
        n = six(0);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != kLongSize) {
        if (text.size() < 4) throw Graph6Error(text.size(), "truncated 4-byte size header");
        n = (six(1) << 12) | (six(2) << 6) | six(3);
        if (n <= 62) throw Graph6Error(0, "non-canonical size header for n=" + std::to_string(n));
        pos = 4;
    } else {
        if (text.size() < 8) throw Graph6Error(text.size(), "truncated 8-byte size header");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | six(i);
        if (n <= kGraph6MaxOrder) throw Graph6Error(0, "non-canonical size header for n=" + std::to_string(n));
        throw Graph6Error(0, "order " + std::to_string(n) + " exceeds supported limit " +
                                 std::to_string(kGraph6MaxOrder));
    }

    const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes) {
        throw Graph6Error(text.size() < pos + bytes ? text.size() : pos + bytes,
                          "expected " + std::to_string(bytes) + " data bytes for n=" + std::to_string(n) +
                              ", found " + std::to_string(text.size() - pos));
    }

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            if ((six(pos + k / 6) >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
        }
    }
    if (bits % 6 != 0) {
        const std::size_t pad_mask = (1U << (6 - bits % 6)) - 1;
        if (six(pos + bytes - 1) & pad_mask) throw Graph6Error(pos + bytes - 1, "nonzero padding bits");
    }
    return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder) {
        throw std::length_error("graph6 cannot encode " + std::to_string(n) + " vertices");
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(kLongSize);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

}  // namespace swr
