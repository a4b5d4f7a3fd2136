#pragma once

#include <map>
#include <vector>

#include "evade/canonical.hpp"
#include "evade/finite_graph.hpp"

namespace evade {

inline std::vector<Pair> all_pairs(int n) {
    std::vector<Pair> out;
    for (Vertex u = 0; u + 1 < static_cast<Vertex>(n); ++u)
        for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) out.emplace_back(u, v);
    return out;
}

inline FiniteGraph graph_from_mask(int n, const std::vector<Pair>& pairs, std::uint64_t mask) {
    FiniteGraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) g.add_edge(pairs[i]);
    return g;
}

// All graphs on n labeled vertices, one representative per isomorphism class.
inline std::vector<FiniteGraph> all_graphs_up_to_iso(int n) {
    auto pairs = all_pairs(n);
    std::map<std::string, FiniteGraph> reps;
    for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
        FiniteGraph g = graph_from_mask(n, pairs, mask);
        reps.emplace(canonical_graph_key(g), std::move(g));
    }
    std::vector<FiniteGraph> out;
    out.reserve(reps.size());
    for (auto& [key, g] : reps) out.push_back(std::move(g));
    return out;
}

}  // namespace evade
