#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <vector>

#include "evade/core.hpp"

namespace evade {

// Finite simple graph on dense vertex ids 0..n-1.
class FiniteGraph {
public:
    FiniteGraph() = default;
    explicit FiniteGraph(int n) : n_(n), adj_(n) {}
    FiniteGraph(int n, const std::vector<Pair>& edges) : FiniteGraph(n) {
        for (const Pair& e : edges) add_edge(e);
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::set<Pair>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(const Pair& p) const { return edges_.count(p) > 0; }
    bool has_edge(Vertex a, Vertex b) const { return a != b && has_edge(Pair(a, b)); }

    void add_edge(const Pair& p) {
        if (p.v >= static_cast<Vertex>(n_))
            throw std::invalid_argument("add_edge: endpoint out of range");
        if (edges_.insert(p).second) {
            adj_[p.u].push_back(p.v);
            adj_[p.v].push_back(p.u);
        }
    }
    void add_edge(Vertex a, Vertex b) { add_edge(Pair(a, b)); }

    friend bool operator==(const FiniteGraph& a, const FiniteGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

    static FiniteGraph complete(int n) {
        FiniteGraph g(n);
        for (Vertex u = 0; u + 1 < static_cast<Vertex>(n); ++u)
            for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) g.add_edge(u, v);
        return g;
    }
    static FiniteGraph cycle(int n) {
        FiniteGraph g(n);
        for (int i = 0; i < n; ++i) g.add_edge(Vertex(i), Vertex((i + 1) % n));
        return g;
    }
    static FiniteGraph path(int n) {
        FiniteGraph g(n);
        for (int i = 0; i + 1 < n; ++i) g.add_edge(Vertex(i), Vertex(i + 1));
        return g;
    }

private:
    int n_ = 0;
    std::set<Pair> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// Union-find over 0..n-1.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    // Returns false if already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }
    bool same(int a, int b) { return find(a) == find(b); }
    int component_size(int a) { return size_[find(a)]; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

inline bool has_cycle(const FiniteGraph& g) {
    UnionFind uf(g.vertex_count());
    for (const Pair& e : g.edges())
        if (!uf.unite(static_cast<int>(e.u), static_cast<int>(e.v))) return true;
    return false;
}

inline std::vector<std::vector<Vertex>> components(const FiniteGraph& g) {
    int n = g.vertex_count();
    UnionFind uf(n);
    for (const Pair& e : g.edges()) uf.unite(static_cast<int>(e.u), static_cast<int>(e.v));
    std::vector<std::vector<Vertex>> by_root(n);
    for (int v = 0; v < n; ++v) by_root[uf.find(v)].push_back(Vertex(v));
    std::vector<std::vector<Vertex>> out;
    for (auto& c : by_root)
        if (!c.empty()) out.push_back(std::move(c));
    return out;
}

// BFS from v, stopping as soon as m vertices are reached.
inline bool component_size_at_least(const FiniteGraph& g, Vertex v, int m) {
    if (m <= 1) return true;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> queue{v};
    seen[v] = true;
    int found = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        if (found >= m) return true;
        for (Vertex w : g.neighbors(queue[i])) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
                if (++found >= m) return true;
            }
        }
    }
    return found >= m;
}

inline bool is_connected(const FiniteGraph& g) {
    if (g.vertex_count() <= 1) return true;
    return component_size_at_least(g, 0, g.vertex_count());
}

// Bridges via DFS lowpoints (iterative to be safe on paths of any length).
inline std::vector<Pair> bridges(const FiniteGraph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent_edge_from(n, -1);
    std::vector<Pair> result;
    int timer = 0;
    for (int start = 0; start < n; ++start) {
        if (disc[start] != -1) continue;
        // stack of (vertex, neighbor index)
        std::vector<std::pair<int, std::size_t>> stack;
        disc[start] = low[start] = timer++;
        stack.emplace_back(start, 0);
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            const auto& nb = g.neighbors(Vertex(v));
            if (idx < nb.size()) {
                int w = static_cast<int>(nb[idx]);
                ++idx;
                if (disc[w] == -1) {
                    parent_edge_from[w] = v;
                    disc[w] = low[w] = timer++;
                    stack.emplace_back(w, 0);
                } else if (w != parent_edge_from[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) result.emplace_back(Vertex(p), Vertex(v));
                }
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

inline bool is_bridge(const FiniteGraph& g, const Pair& e) {
    auto b = bridges(g);
    return std::find(b.begin(), b.end(), e) != b.end();
}

// True iff no component contains a bridge. Singletons qualify; a lone edge
// does not (the edge itself is a bridge).
inline bool all_components_two_edge_connected(const FiniteGraph& g) {
    return bridges(g).empty();
}

// H-pregraph: determined edges/nonedges within an allowed graph.
class FinitePregraph {
public:
    FinitePregraph() = default;
    explicit FinitePregraph(FiniteGraph allowed) : allowed_(std::move(allowed)) {}
    FinitePregraph(FiniteGraph allowed, std::set<Pair> edges, std::set<Pair> nonedges)
        : allowed_(std::move(allowed)), edges_(std::move(edges)), nonedges_(std::move(nonedges)) {
        for (const Pair& e : edges_)
            if (!allowed_.has_edge(e)) throw std::invalid_argument("pregraph: edge not allowed");
        for (const Pair& e : nonedges_) {
            if (!allowed_.has_edge(e)) throw std::invalid_argument("pregraph: nonedge not allowed");
            if (edges_.count(e)) throw std::invalid_argument("pregraph: edge and nonedge overlap");
        }
    }

    const FiniteGraph& allowed() const { return allowed_; }
    const std::set<Pair>& edges() const { return edges_; }
    const std::set<Pair>& nonedges() const { return nonedges_; }
    int vertex_count() const { return allowed_.vertex_count(); }

    bool determined(const Pair& p) const { return edges_.count(p) || nonedges_.count(p); }
    bool undetermined(const Pair& p) const { return allowed_.has_edge(p) && !determined(p); }

    std::size_t determined_count() const { return edges_.size() + nonedges_.size(); }
    std::size_t undetermined_count() const { return allowed_.edge_count() - determined_count(); }

    std::vector<Pair> undetermined_pairs() const {
        std::vector<Pair> out;
        for (const Pair& e : allowed_.edges())
            if (!determined(e)) out.push_back(e);
        return out;
    }

    void set_edge(const Pair& p) {
        require_free(p);
        edges_.insert(p);
    }
    void set_nonedge(const Pair& p) {
        require_free(p);
        nonedges_.insert(p);
    }

private:
    void require_free(const Pair& p) {
        if (!allowed_.has_edge(p)) throw std::invalid_argument("pregraph: pair not allowed");
        if (determined(p)) throw std::invalid_argument("pregraph: pair already determined");
    }

    FiniteGraph allowed_;
    std::set<Pair> edges_;
    std::set<Pair> nonedges_;
};

inline FiniteGraph gmin(const FinitePregraph& g) {
    FiniteGraph out(g.vertex_count());
    for (const Pair& e : g.edges()) out.add_edge(e);
    return out;
}

// gmax = edges plus every undetermined allowed pair.
inline FiniteGraph gmax(const FinitePregraph& g) {
    FiniteGraph out(g.vertex_count());
    for (const Pair& e : g.allowed().edges())
        if (!g.nonedges().count(e)) out.add_edge(e);
    return out;
}

}  // namespace evade
