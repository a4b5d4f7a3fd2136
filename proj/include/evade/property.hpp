#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "evade/enumerate.hpp"
#include "evade/scorpion.hpp"

namespace evade {

enum class PropertyKind {
    Cycle,
    MinDegree,
    MinComponentSize,
    Connected,
    Scorpion,
    ContainsStar,
    ContainsClique,
    ContainsP3,
    NotBipartite,
};

enum class TerminalStatus { ForcedTrue, ForcedFalse, Open };

inline const char* to_string(TerminalStatus s) {
    switch (s) {
        case TerminalStatus::ForcedTrue: return "forced-true";
        case TerminalStatus::ForcedFalse: return "forced-false";
        default: return "open";
    }
}

struct Property {
    PropertyKind kind = PropertyKind::Cycle;
    int param = 0;

    bool monotone() const { return kind != PropertyKind::Scorpion; }

    std::string spec() const {
        switch (kind) {
            case PropertyKind::Cycle: return "cycle";
            case PropertyKind::MinDegree: return "dmin:" + std::to_string(param);
            case PropertyKind::MinComponentSize: return "cmin:" + std::to_string(param);
            case PropertyKind::Connected: return "connected";
            case PropertyKind::Scorpion: return "scorpion";
            case PropertyKind::ContainsStar: return "star:" + std::to_string(param);
            case PropertyKind::ContainsClique: return "clique:" + std::to_string(param);
            case PropertyKind::ContainsP3: return "p3";
            case PropertyKind::NotBipartite: return "notbipartite";
        }
        return "?";
    }

    static Property parse(std::string_view s);
};

namespace detail {

inline int parse_int_param(std::string_view s, std::string_view prefix, int min_value) {
    std::string num(s.substr(prefix.size()));
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(num, &pos);
    } catch (const std::exception&) {
        throw SpecParseError("bad parameter in '" + std::string(s) + "'");
    }
    if (pos != num.size()) throw SpecParseError("bad parameter in '" + std::string(s) + "'");
    if (value < min_value)
        throw SpecParseError("parameter in '" + std::string(s) + "' must be >= " +
                             std::to_string(min_value));
    return value;
}

inline bool clique_extend(const FiniteGraph& g, std::vector<Vertex>& clique, Vertex from,
                          int want) {
    if (static_cast<int>(clique.size()) == want) return true;
    for (Vertex v = from; v < static_cast<Vertex>(g.vertex_count()); ++v) {
        bool ok = true;
        for (Vertex c : clique)
            if (!g.has_edge(c, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        clique.push_back(v);
        if (clique_extend(g, clique, v + 1, want)) return true;
        clique.pop_back();
    }
    return false;
}

inline bool is_bipartite(const FiniteGraph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::vector<Vertex> queue{Vertex(start)};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            Vertex v = queue[i];
            for (Vertex w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace detail

inline Property Property::parse(std::string_view s) {
    if (s == "cycle") return {PropertyKind::Cycle, 0};
    if (s == "connected") return {PropertyKind::Connected, 0};
    if (s == "scorpion") return {PropertyKind::Scorpion, 0};
    if (s == "p3") return {PropertyKind::ContainsP3, 0};
    if (s == "notbipartite") return {PropertyKind::NotBipartite, 0};
    if (s.rfind("dmin:", 0) == 0)
        return {PropertyKind::MinDegree, detail::parse_int_param(s, "dmin:", 1)};
    if (s.rfind("cmin:", 0) == 0)
        return {PropertyKind::MinComponentSize, detail::parse_int_param(s, "cmin:", 2)};
    if (s.rfind("star:", 0) == 0)
        return {PropertyKind::ContainsStar, detail::parse_int_param(s, "star:", 1)};
    if (s.rfind("clique:", 0) == 0)
        return {PropertyKind::ContainsClique, detail::parse_int_param(s, "clique:", 3)};
    throw SpecParseError(
        "unknown property '" + std::string(s) +
        "', expected one of: cycle, dmin:<n>, cmin:<m>, connected, scorpion, star:<n>, "
        "clique:<k>, p3, notbipartite");
}

inline bool holds(const Property& p, const FiniteGraph& g) {
    switch (p.kind) {
        case PropertyKind::Cycle: return has_cycle(g);
        case PropertyKind::MinDegree: {
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.degree(Vertex(v)) < p.param) return false;
            return true;
        }
        case PropertyKind::MinComponentSize: {
            for (int v = 0; v < g.vertex_count(); ++v)
                if (!component_size_at_least(g, Vertex(v), p.param)) return false;
            return true;
        }
        case PropertyKind::Connected: return is_connected(g);
        case PropertyKind::Scorpion: return is_scorpion(g);
        case PropertyKind::ContainsStar: {
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.degree(Vertex(v)) >= p.param) return true;
            return false;
        }
        case PropertyKind::ContainsClique: {
            std::vector<Vertex> clique;
            return detail::clique_extend(g, clique, 0, p.param);
        }
        case PropertyKind::ContainsP3: {
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.degree(Vertex(v)) >= 2) return true;
            return false;
        }
        case PropertyKind::NotBipartite: return !detail::is_bipartite(g);
    }
    return false;
}

inline constexpr int kDefaultExtensionBound = 20;

// Tri-state terminal evaluator. Monotone kinds compare gmin/gmax; the
// non-monotone scorpion kind uses the determined-triple shortcut and falls
// back to enumerating all 2^|U| extensions while |U| stays within the bound.
inline TerminalStatus terminal_status(const Property& p, const FinitePregraph& g,
                                      int extension_bound = kDefaultExtensionBound) {
    if (p.monotone()) {
        FiniteGraph lo = gmin(g);
        if (holds(p, lo)) return TerminalStatus::ForcedTrue;
        FiniteGraph hi = gmax(g);
        if (!holds(p, hi)) return TerminalStatus::ForcedFalse;
        return TerminalStatus::Open;
    }

    // Scorpion shortcut: a witness triple whose incident allowed pairs are all
    // determined survives every extension (extensions only touch other pairs).
    {
        FiniteGraph lo = gmin(g);
        auto w = recognize_scorpion(lo);
        if (w) {
            bool swept = true;
            for (Vertex x : {w->sting, w->tail, w->body}) {
                for (int y = 0; y < g.vertex_count() && swept; ++y) {
                    if (Vertex(y) == x) continue;
                    Pair q(x, Vertex(y));
                    if (g.allowed().has_edge(q) && !g.determined(q)) swept = false;
                }
            }
            if (swept) return TerminalStatus::ForcedTrue;
        }
    }

    auto undet = g.undetermined_pairs();
    if (static_cast<int>(undet.size()) > extension_bound)
        throw SizeBoundError("terminal_status: undecidable at this bound (|U|=" +
                             std::to_string(undet.size()) + " > " +
                             std::to_string(extension_bound) + ")");
    bool all = true, none = true;
    FiniteGraph base = gmin(g);
    for (std::uint64_t mask = 0; mask < (1ULL << undet.size()); ++mask) {
        FiniteGraph ext = base;
        for (std::size_t i = 0; i < undet.size(); ++i)
            if (mask >> i & 1) ext.add_edge(undet[i]);
        if (holds(p, ext)) none = false;
        else all = false;
        if (!all && !none) return TerminalStatus::Open;
    }
    return all ? TerminalStatus::ForcedTrue : TerminalStatus::ForcedFalse;
}

struct MonotoneCounterexample {
    FiniteGraph graph;
    Pair added{0, 1};
};

// Randomized/exhaustive monotonicity validator: sample graphs satisfying the
// property, add edges, and look for a violation.
inline bool monotonicity_check(const Property& p, int sample_budget,
                               MonotoneCounterexample* counterexample = nullptr,
                               std::uint64_t seed = 1) {
    int spent = 0;
    // exhaustive over small graphs first
    for (int n = 2; n <= 6 && spent < sample_budget; ++n) {
        for (const FiniteGraph& g : all_graphs_up_to_iso(n)) {
            if (spent >= sample_budget) break;
            if (!holds(p, g)) continue;
            ++spent;
            for (const Pair& q : all_pairs(n)) {
                if (g.has_edge(q)) continue;
                FiniteGraph bigger = g;
                bigger.add_edge(q);
                if (!holds(p, bigger)) {
                    if (counterexample) *counterexample = {g, q};
                    return false;
                }
            }
        }
    }
    Rng rng(seed);
    while (spent < sample_budget) {
        ++spent;
        int n = 5 + static_cast<int>(rng.below(5));
        auto pairs = all_pairs(n);
        FiniteGraph g(n);
        for (const Pair& q : pairs)
            if (rng.coin()) g.add_edge(q);
        if (!holds(p, g)) continue;
        for (const Pair& q : pairs) {
            if (g.has_edge(q)) continue;
            FiniteGraph bigger = g;
            bigger.add_edge(q);
            if (!holds(p, bigger)) {
                if (counterexample) *counterexample = {g, q};
                return false;
            }
        }
    }
    return true;
}

}  // namespace evade
