#pragma once

#include <string>
#include <string_view>

#include "evade/finite_graph.hpp"

namespace evade {

// graph6 text codec for n <= 62: one byte n+63, then the upper triangle in
// column order (j = 1..n-1, i < j), 6 bits per byte offset by 63, zero-padded.

inline std::string graph6_encode(const FiniteGraph& g) {
    int n = g.vertex_count();
    if (n > 62) throw Graph6Error("graph6_encode: only n <= 62 supported");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int bitpos = 0;
    int current = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            current = (current << 1) | (g.has_edge(Vertex(i), Vertex(j)) ? 1 : 0);
            if (++bitpos == 6) {
                out.push_back(static_cast<char>(current + 63));
                bitpos = 0;
                current = 0;
            }
        }
    }
    if (bitpos > 0) {
        current <<= (6 - bitpos);
        out.push_back(static_cast<char>(current + 63));
    }
    return out;
}

inline FiniteGraph graph6_decode(std::string_view text) {
    if (text.empty()) throw Graph6Error("graph6: empty input");
    for (char c : text) {
        int b = static_cast<unsigned char>(c);
        if (b < 63 || b > 126)
            throw Graph6Error("graph6: byte value " + std::to_string(b) +
                              " outside printable range 63..126");
    }
    int n = static_cast<unsigned char>(text[0]) - 63;
    if (n == 63)
        throw Graph6Error("graph6: multi-byte vertex counts (n > 62) not supported");
    long pair_bits = static_cast<long>(n) * (n - 1) / 2;
    long body_bytes = (pair_bits + 5) / 6;
    if (static_cast<long>(text.size()) != 1 + body_bytes)
        throw Graph6Error("graph6: malformed length, expected " +
                          std::to_string(1 + body_bytes) + " bytes for n=" + std::to_string(n) +
                          ", got " + std::to_string(text.size()));
    FiniteGraph g(n);
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(Vertex(i), Vertex(j));
        }
    }
    // trailing padding bits must be zero
    for (long b = bit; b < body_bytes * 6; ++b) {
        int byte = static_cast<unsigned char>(text[1 + b / 6]) - 63;
        if ((byte >> (5 - b % 6)) & 1) throw Graph6Error("graph6: nonzero padding bits");
    }
    return g;
}

}  // namespace evade
