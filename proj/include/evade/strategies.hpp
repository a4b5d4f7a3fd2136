#pragma once

#include <memory>

#include "evade/engine.hpp"

namespace evade {

namespace detail {

// Union-find over sparse vertex ids.
class SparseDsu {
public:
    Vertex find(Vertex x) {
        auto it = parent_.find(x);
        if (it == parent_.end()) return x;
        Vertex root = find(it->second);
        parent_[x] = root;
        return root;
    }
    void unite(Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[a] = b;
    }
    bool same(Vertex a, Vertex b) { return find(a) == find(b); }

private:
    std::unordered_map<Vertex, Vertex> parent_;
};

}  // namespace detail

// Answers edge exactly while the edge graph stays a forest. Keeps a union-find
// accelerator fed from the state's edge log; paranoid mode recomputes from
// scratch each turn and cross-checks.
inline HiderStrategy hider_cycle_forest(bool paranoid = false) {
    struct Accel {
        detail::SparseDsu dsu;
        std::size_t consumed = 0;
    };
    auto accel = std::make_shared<Accel>();
    HiderStrategy h;
    h.name = "cycle-forest";
    h.answer = [accel, paranoid](const GameState& state, const Pair& probe) {
        const auto& log = state.edge_log();
        if (accel->consumed > log.size()) *accel = {};  // fresh game reused the strategy
        while (accel->consumed < log.size()) {
            const Pair& e = log[accel->consumed++];
            accel->dsu.unite(e.u, e.v);
        }
        bool edge = !accel->dsu.same(probe.u, probe.v);
        if (paranoid) {
            detail::SparseDsu fresh;
            for (const Pair& e : state.edges()) fresh.unite(e.u, e.v);
            if (fresh.same(probe.u, probe.v) == edge)
                throw std::logic_error("cycle-forest accelerator out of sync");
        }
        return edge;
    };
    return h;
}

// The degree adversary: for a probe {i,j} with i < j it answers edge iff
// (a) one endpoint is a small id (<= n) of edge-degree below n, or
// (b) deg_E(j) plus the undetermined below-pairs at j exactly meets n.
inline HiderStrategy hider_degree(int n) {
    if (n < 1) throw SpecParseError("degree:<n> requires n >= 1");
    HiderStrategy h;
    h.name = "degree:" + std::to_string(n);
    h.answer = [n](const GameState& state, const Pair& probe) {
        Vertex i = probe.u, j = probe.v;
        if ((int(i) <= n && state.deg_e(i) < n) || (int(j) <= n && state.deg_e(j) < n))
            return true;  // rule (a)
        return std::uint64_t(state.deg_e(j)) + state.below_undetermined_count(j) ==
               std::uint64_t(n);  // rule (b)
    };
    return h;
}

// true iff rule (a) of the degree adversary fires for this probe in this state
inline bool degree_rule_a_fires(int n, const GameState& state, const Pair& probe) {
    return (int(probe.u) <= n && state.deg_e(probe.u) < n) ||
           (int(probe.v) <= n && state.deg_e(probe.v) < n);
}

// The connectivity adversary: joins two components only when both are finite,
// distinct, and every allowed pair between them is already determined (or is
// the probe itself).
inline HiderStrategy hider_connect() {
    HiderStrategy h;
    h.name = "connect";
    h.answer = [](const GameState& state, const Pair& probe) {
        auto a = state.component_of(probe.u);
        auto b = state.component_of(probe.v);
        for (Vertex x : a)
            if (x == probe.v) return false;  // same component
        for (Vertex x : a)
            for (Vertex y : b) {
                if (x == y) continue;
                Pair cross(x, y);
                if (!state.allowed(cross)) continue;
                if (cross == probe) continue;
                if (!state.determined(cross)) return false;
            }
        return true;
    };
    return h;
}

// The star adversary: edge iff both endpoints still have edge-degree < n-1.
inline HiderStrategy hider_star(int n) {
    if (n < 1) throw SpecParseError("star:<n> requires n >= 1");
    HiderStrategy h;
    h.name = "star:" + std::to_string(n);
    h.answer = [n](const GameState& state, const Pair& probe) {
        return state.deg_e(probe.u) < n - 1 && state.deg_e(probe.v) < n - 1;
    };
    return h;
}

// Ground-truth opponent answering from a fixed hidden graph.
inline HiderStrategy hider_oblivious(FiniteGraph hidden) {
    auto g = std::make_shared<FiniteGraph>(std::move(hidden));
    HiderStrategy h;
    h.name = "oblivious:g6:" + graph6_encode(*g);
    h.answer = [g](const GameState&, const Pair& probe) {
        if (probe.v >= Vertex(g->vertex_count()))
            throw ProtocolViolation("probe " + to_string(probe) +
                                    " outside the hidden graph's domain");
        return g->has_edge(probe);
    };
    return h;
}

inline HiderStrategy hider_oblivious(HiddenTemplate hidden) {
    auto t = std::make_shared<HiddenTemplate>(std::move(hidden));
    HiderStrategy h;
    h.name = "oblivious:" + t->spec();
    h.answer = [t](const GameState&, const Pair& probe) { return t->contains(probe); };
    return h;
}

// Probes in sorted pair order on finite boards and in colex order (by larger
// endpoint) on infinite ones, skipping determined pairs.
inline SeekerStrategy seeker_lexicographic() {
    SeekerStrategy s;
    s.name = "lex";
    s.next = [](const GameState& state) -> std::optional<Pair> {
        if (!state.board().is_infinite()) {
            for (const Pair& p : state.board().finite().edges())
                if (!state.determined(p)) return p;
            return std::nullopt;
        }
        for (Vertex v = 1;; ++v) {
            for (Vertex u = 0; u < v; ++u) {
                Pair p(u, v);
                if (state.allowed(p) && !state.determined(p)) return p;
            }
            if (v > 1u << 20) return std::nullopt;
        }
    };
    return s;
}

// Reproducible random probe order.
inline SeekerStrategy seeker_random(std::uint64_t seed) {
    struct Impl {
        Rng rng;
        std::vector<Pair> schedule;  // finite boards
        bool scheduled = false;
        explicit Impl(std::uint64_t s) : rng(s) {}
    };
    auto impl = std::make_shared<Impl>(seed);
    SeekerStrategy s;
    s.name = "random:" + std::to_string(seed);
    s.next = [impl](const GameState& state) -> std::optional<Pair> {
        if (!state.board().is_infinite()) {
            if (!impl->scheduled) {
                impl->scheduled = true;
                impl->schedule.assign(state.board().finite().edges().begin(),
                                      state.board().finite().edges().end());
                for (std::size_t i = impl->schedule.size(); i > 1; --i)
                    std::swap(impl->schedule[i - 1], impl->schedule[impl->rng.below(i)]);
            }
            for (const Pair& p : impl->schedule)
                if (!state.determined(p)) return p;
            return std::nullopt;
        }
        // growing random window
        std::uint64_t window = 4 + state.determined_count();
        for (int attempts = 0; attempts < 10000; ++attempts) {
            Vertex a = Vertex(impl->rng.below(window));
            Vertex b = Vertex(impl->rng.below(window));
            if (a == b) continue;
            Pair p(a, b);
            if (state.allowed(p) && !state.determined(p)) return p;
        }
        return std::nullopt;
    };
    return s;
}

// Enumerates every allowed pair with the designated bridge last; the argument
// must actually be a bridge of the allowed graph.
inline SeekerStrategy seeker_bridge_last(const FiniteGraph& h, const Pair& bridge) {
    if (!is_bridge(h, bridge))
        throw SpecParseError("bridge-last: " + to_string(bridge) +
                             " is not a bridge of the allowed graph");
    auto schedule = std::make_shared<std::vector<Pair>>();
    for (const Pair& p : h.edges())
        if (p != bridge) schedule->push_back(p);
    schedule->push_back(bridge);
    SeekerStrategy s;
    s.name = "bridge-last:" + std::to_string(bridge.u) + "-" + std::to_string(bridge.v);
    s.next = [schedule](const GameState& state) -> std::optional<Pair> {
        for (const Pair& p : *schedule)
            if (!state.determined(p)) return p;
        return std::nullopt;
    };
    return s;
}

}  // namespace evade
