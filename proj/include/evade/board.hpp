#pragma once

#include <string>
#include <string_view>

#include "evade/finite_graph.hpp"
#include "evade/graph6.hpp"
#include "evade/vset.hpp"

namespace evade {

// The allowed-edge graph H: complete on omega, a Turan graph, the graph of
// finite 0-1 strings under strict extension, or an explicit finite graph.
//
// Turan vertices (col, cls) are encoded as id = col*k + cls, so the edge rule
// "classes differ" is a residue test. Cantor string ids follow cantor.hpp.
class AllowedBoard {
public:
    enum class Kind { CompleteOmega, Turan, Cantor, FiniteExplicit };

    static AllowedBoard komega() { return AllowedBoard(Kind::CompleteOmega, 0, {}); }
    static AllowedBoard turan(int k) {
        if (k < 2) throw SpecParseError("turan:<k> requires k >= 2");
        return AllowedBoard(Kind::Turan, k, {});
    }
    static AllowedBoard cantor() { return AllowedBoard(Kind::Cantor, 0, {}); }
    static AllowedBoard finite_graph(FiniteGraph g) {
        return AllowedBoard(Kind::FiniteExplicit, 0, std::move(g));
    }

    static AllowedBoard parse(std::string_view s) {
        if (s == "komega") return komega();
        if (s == "cantor") return cantor();
        if (s.rfind("turan:", 0) == 0) {
            try {
                return turan(std::stoi(std::string(s.substr(6))));
            } catch (const SpecParseError&) {
                throw;
            } catch (const std::exception&) {
                throw SpecParseError("bad turan spec '" + std::string(s) + "'");
            }
        }
        if (s.rfind("g6:", 0) == 0) return finite_graph(graph6_decode(s.substr(3)));
        throw SpecParseError("unknown allowed-graph '" + std::string(s) +
                             "', expected komega | turan:<k> | cantor | g6:<graph6>");
    }

    std::string spec() const {
        switch (kind_) {
            case Kind::CompleteOmega: return "komega";
            case Kind::Turan: return "turan:" + std::to_string(turan_k_);
            case Kind::Cantor: return "cantor";
            case Kind::FiniteExplicit: return "g6:" + graph6_encode(finite_);
        }
        return "?";
    }

    Kind kind() const { return kind_; }
    int turan_k() const { return turan_k_; }
    const FiniteGraph& finite() const { return finite_; }
    bool is_infinite() const { return kind_ != Kind::FiniteExplicit; }

    bool allows(const Pair& p) const {
        switch (kind_) {
            case Kind::CompleteOmega: return true;
            case Kind::Turan: return p.u % turan_k_ != p.v % turan_k_;
            case Kind::Cantor: return cantor::comparable(p.u, p.v);
            case Kind::FiniteExplicit: return finite_.has_edge(p);
        }
        return false;
    }

    VSet neighborhood(Vertex v) const {
        switch (kind_) {
            case Kind::CompleteOmega: return VSet::all().erase(v);
            case Kind::Turan: {
                std::uint64_t mask = ((std::uint64_t(1) << turan_k_) - 1) &
                                     ~(std::uint64_t(1) << (v % turan_k_));
                return VSet::residue_tail(0, std::uint32_t(turan_k_), mask);
            }
            case Kind::Cantor:
                return VSet::of(cantor::ancestors(v)).unite(VSet::cantor_descendants(v));
            case Kind::FiniteExplicit: {
                if (v >= Vertex(finite_.vertex_count())) return VSet::empty();
                return VSet::of(finite_.neighbors(v));
            }
        }
        return VSet::empty();
    }

    // |{i < j : {i,j} allowed}| — degree of j towards smaller ids
    std::uint64_t below_allowed_count(Vertex j) const {
        switch (kind_) {
            case Kind::CompleteOmega: return j;
            case Kind::Turan: {
                std::uint64_t same = (std::uint64_t(j) - j % turan_k_ + turan_k_ - 1) / turan_k_;
                return j - same;
            }
            case Kind::Cantor: return std::uint64_t(cantor::depth(j));
            case Kind::FiniteExplicit: {
                std::uint64_t c = 0;
                if (j < Vertex(finite_.vertex_count()))
                    for (Vertex u : finite_.neighbors(j))
                        if (u < j) ++c;
                return c;
            }
        }
        return 0;
    }

    // Restriction of the board to vertex ids 0..size-1.
    FiniteGraph truncate(int size) const {
        if (kind_ == Kind::FiniteExplicit) {
            FiniteGraph g(std::min(size, finite_.vertex_count()));
            for (const Pair& e : finite_.edges())
                if (int(e.v) < g.vertex_count()) g.add_edge(e);
            return g;
        }
        FiniteGraph g(size);
        for (Vertex u = 0; u + 1 < Vertex(size); ++u)
            for (Vertex v = u + 1; v < Vertex(size); ++v)
                if (allows(Pair(u, v))) g.add_edge(u, v);
        return g;
    }

private:
    AllowedBoard(Kind kind, int k, FiniteGraph g)
        : kind_(kind), turan_k_(k), finite_(std::move(g)) {}

    Kind kind_;
    int turan_k_;
    FiniteGraph finite_;
};

}  // namespace evade
