#pragma once

#include <optional>

#include "evade/finite_graph.hpp"

namespace evade {

// Witness for a scorpion graph: sting adjacent only to the tail, tail
// adjacent only to sting and body, body adjacent to everything but the sting.
struct ScorpionWitness {
    Vertex sting = 0;
    Vertex tail = 0;
    Vertex body = 0;
};

inline bool is_scorpion_witness(const FiniteGraph& g, Vertex s, Vertex t, Vertex b) {
    if (s == t || s == b || t == b) return false;
    if (g.degree(s) != 1 || !g.has_edge(s, t)) return false;
    if (g.degree(t) != 2 || !g.has_edge(t, b)) return false;
    // body: adjacent to every vertex except the sting (and itself)
    if (g.has_edge(s, b)) return false;
    if (g.degree(b) != g.vertex_count() - 2) return false;
    for (Vertex x = 0; x < static_cast<Vertex>(g.vertex_count()); ++x)
        if (x != s && x != b && !g.has_edge(x, b)) return false;
    return true;
}

// Brute-force scan over ordered triples. The definition is applied literally
// for every |V| >= 3; tiny boards may be vacuous by degree arithmetic.
inline std::optional<ScorpionWitness> recognize_scorpion(const FiniteGraph& g) {
    int n = g.vertex_count();
    for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
        if (g.degree(s) != 1) continue;
        Vertex t = g.neighbors(s)[0];
        if (g.degree(t) != 2) continue;
        Vertex b = g.neighbors(t)[0] == s ? g.neighbors(t)[1] : g.neighbors(t)[0];
        if (is_scorpion_witness(g, s, t, b)) return ScorpionWitness{s, t, b};
    }
    return std::nullopt;
}

inline bool is_scorpion(const FiniteGraph& g) { return recognize_scorpion(g).has_value(); }

// The classic picture: sting-tail-body chain, body joined to a row of n-3
// further vertices, optionally with extra row edges.
inline FiniteGraph scorpion_example_graph() {
    FiniteGraph g(8);
    g.add_edge(0, 1);  // sting - tail
    g.add_edge(1, 2);  // tail - body
    for (Vertex r = 3; r < 8; ++r) g.add_edge(2, r);
    g.add_edge(3, 4);
    g.add_edge(5, 6);
    return g;
}

}  // namespace evade
