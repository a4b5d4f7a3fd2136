#pragma once

#include <sstream>
#include <string>

#include "evade/finite_graph.hpp"

namespace evade {

inline std::string to_dot(const FiniteGraph& g, const std::string& name = "G") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const Pair& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

// Edges solid, nonedges dashed, undetermined allowed pairs dotted.
inline std::string to_dot(const FinitePregraph& g, const std::string& name = "G") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const Pair& e : g.allowed().edges()) {
        const char* style = "dotted";
        if (g.edges().count(e)) style = "solid";
        else if (g.nonedges().count(e)) style = "dashed";
        out << "  " << e.u << " -- " << e.v << " [style=" << style << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace evade
