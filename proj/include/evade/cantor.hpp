#pragma once

#include <string>
#include <vector>

#include "evade/core.hpp"

namespace evade {

// Vertex ids for the graph of finite 0-1 strings, breadth-first:
// "" = 0, "0" = 1, "1" = 2, "00" = 3, ... In binary, id+1 reads as a leading
// 1 followed by the string's bits, so prefix tests are shift comparisons.
namespace cantor {

inline int depth(Vertex v) {
    int d = 0;
    std::uint64_t x = std::uint64_t(v) + 1;
    while (x > 1) {
        x >>= 1;
        ++d;
    }
    return d;
}

inline std::string to_string(Vertex v) {
    int d = depth(v);
    std::string s(d, '0');
    std::uint64_t x = std::uint64_t(v) + 1;
    for (int i = d - 1; i >= 0; --i) {
        s[i] = (x & 1) ? '1' : '0';
        x >>= 1;
    }
    return s;
}

inline Vertex from_string(const std::string& s) {
    std::uint64_t x = 1;
    for (char c : s) {
        if (c != '0' && c != '1') throw SpecParseError("cantor vertex: bits must be 0/1");
        x = (x << 1) | (c == '1' ? 1 : 0);
    }
    return Vertex(x - 1);
}

// a is a strict prefix of b
inline bool strict_ancestor(Vertex a, Vertex b) {
    int da = depth(a), db = depth(b);
    if (da >= db) return false;
    return ((std::uint64_t(b) + 1) >> (db - da)) == std::uint64_t(a) + 1;
}

inline bool comparable(Vertex a, Vertex b) {
    return a != b && (strict_ancestor(a, b) || strict_ancestor(b, a));
}

inline Vertex parent(Vertex v) { return Vertex(((std::uint64_t(v) + 1) >> 1) - 1); }

inline std::vector<Vertex> ancestors(Vertex v) {
    std::vector<Vertex> out;
    while (v != 0) {
        v = parent(v);
        out.push_back(v);
    }
    return out;  // nearest first, root (empty string) last
}

// descendants of root at relative depth j occupy [(root+1)<<j - 1, (root+1)<<j + (1<<j) - 2]
inline std::uint64_t level_first(Vertex root, int j) {
    return ((std::uint64_t(root) + 1) << j) - 1;
}
inline std::uint64_t level_last(Vertex root, int j) {
    return ((std::uint64_t(root) + 1) << j) + (std::uint64_t(1) << j) - 2;
}

// all ids of absolute depth d: [2^d - 1, 2^{d+1} - 2]
inline std::uint64_t depth_first(int d) { return (std::uint64_t(1) << d) - 1; }
inline std::uint64_t depth_last(int d) { return (std::uint64_t(1) << (d + 1)) - 2; }

}  // namespace cantor

}  // namespace evade
