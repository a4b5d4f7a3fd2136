#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "evade/board.hpp"

namespace evade {

// Describable hidden graph: a structured base pattern plus finite edge edits.
// Oblivious hiders answer from these; batch probes against them complete to
// representable symbolic positions.
struct HiddenTemplate {
    enum class Base { Empty, Complete, BlockCliques, ScorpionPattern, StarCenters, ModClassDistinct };

    Base base = Base::Empty;
    int block = 0;                  // BlockCliques
    int mod = 0;                    // ModClassDistinct
    Vertex s = 0, t = 1, b = 2;     // ScorpionPattern
    std::vector<Vertex> centers;    // StarCenters
    std::set<Pair> add, remove;

    bool base_contains(const Pair& p) const {
        switch (base) {
            case Base::Empty: return false;
            case Base::Complete: return true;
            case Base::BlockCliques: return p.u / block == p.v / block;
            case Base::ScorpionPattern:
                if (p == Pair(s, t)) return true;
                return p.contains(b) && !p.contains(s);
            case Base::StarCenters:
                for (Vertex c : centers)
                    if (p.contains(c)) return true;
                return false;
            case Base::ModClassDistinct: return p.u % mod != p.v % mod;
        }
        return false;
    }

    bool contains(const Pair& p) const {
        if (add.count(p)) return true;
        if (remove.count(p)) return false;
        return base_contains(p);
    }

    // neighborhood of v in the template alone (no board restriction)
    VSet base_neighborhood(Vertex v) const {
        switch (base) {
            case Base::Empty: return VSet::empty();
            case Base::Complete: return VSet::all().erase(v);
            case Base::BlockCliques: {
                std::vector<Vertex> nb;
                Vertex lo = v - v % block;
                for (Vertex u = lo; u < lo + Vertex(block); ++u)
                    if (u != v) nb.push_back(u);
                return VSet::of(nb);
            }
            case Base::ScorpionPattern: {
                if (v == s) return VSet::single(t);
                if (v == t) return VSet::of({s, b});
                if (v == b) return VSet::all().erase(s).erase(b);
                return VSet::single(b);
            }
            case Base::StarCenters: {
                for (Vertex c : centers)
                    if (c == v) return VSet::all().erase(v);
                std::vector<Vertex> nb;
                for (Vertex c : centers) nb.push_back(c);
                return VSet::of(nb);
            }
            case Base::ModClassDistinct: {
                std::uint64_t mask = ((std::uint64_t(1) << mod) - 1) &
                                     ~(std::uint64_t(1) << (v % mod));
                return VSet::residue_tail(0, std::uint32_t(mod), mask);
            }
        }
        return VSet::empty();
    }

    // hidden-graph neighborhood on the board: (base +/- edits) ∩ allowed
    VSet neighborhood(Vertex v, const AllowedBoard& board) const {
        VSet nb = base_neighborhood(v).intersect(board.neighborhood(v));
        for (const Pair& p : add)
            if (p.contains(v) && board.allows(p)) nb = nb.insert(p.other(v));
        for (const Pair& p : remove)
            if (p.contains(v)) nb = nb.erase(p.other(v));
        return nb;
    }

    // finite ids that behave specially (edit endpoints, pattern vertices)
    std::vector<Vertex> special_vertices() const {
        std::vector<Vertex> out;
        if (base == Base::ScorpionPattern) out = {s, t, b};
        if (base == Base::StarCenters) out = centers;
        for (const Pair& p : add) {
            out.push_back(p.u);
            out.push_back(p.v);
        }
        for (const Pair& p : remove) {
            out.push_back(p.u);
            out.push_back(p.v);
        }
        return out;
    }

    // period of the base pattern's far behavior in vertex ids
    std::uint32_t period() const {
        switch (base) {
            case Base::BlockCliques: return std::uint32_t(block);
            case Base::ModClassDistinct: return std::uint32_t(mod);
            default: return 1;
        }
    }

    std::string spec() const {
        std::string out;
        switch (base) {
            case Base::Empty: out = "empty"; break;
            case Base::Complete: out = "complete"; break;
            case Base::BlockCliques: out = "blocks:" + std::to_string(block); break;
            case Base::ScorpionPattern:
                out = "scorpion:" + std::to_string(s) + "," + std::to_string(t) + "," +
                      std::to_string(b);
                break;
            case Base::StarCenters: {
                out = "stars:";
                for (std::size_t i = 0; i < centers.size(); ++i)
                    out += (i ? "," : "") + std::to_string(centers[i]);
                break;
            }
            case Base::ModClassDistinct: out = "modclass:" + std::to_string(mod); break;
        }
        for (const Pair& p : add)
            out += ";+" + std::to_string(p.u) + "," + std::to_string(p.v);
        for (const Pair& p : remove)
            out += ";-" + std::to_string(p.u) + "," + std::to_string(p.v);
        return out;
    }

    static HiddenTemplate parse(std::string_view text);
};

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            break;
        }
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

inline Vertex parse_vertex(const std::string& s) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size() || v < 0) throw std::invalid_argument("");
        return Vertex(v);
    } catch (const std::exception&) {
        throw SpecParseError("bad vertex id '" + s + "'");
    }
}

}  // namespace detail

inline HiddenTemplate HiddenTemplate::parse(std::string_view text) {
    auto parts = detail::split(text, ';');
    HiddenTemplate t;
    const std::string& head = parts[0];
    if (head == "empty") t.base = Base::Empty;
    else if (head == "complete") t.base = Base::Complete;
    else if (head.rfind("blocks:", 0) == 0) {
        t.base = Base::BlockCliques;
        t.block = int(detail::parse_vertex(head.substr(7)));
        if (t.block < 2) throw SpecParseError("blocks:<b> requires b >= 2");
    } else if (head.rfind("scorpion:", 0) == 0) {
        auto ids = detail::split(head.substr(9), ',');
        if (ids.size() != 3) throw SpecParseError("scorpion:<s>,<t>,<b> takes three ids");
        t.base = Base::ScorpionPattern;
        t.s = detail::parse_vertex(ids[0]);
        t.t = detail::parse_vertex(ids[1]);
        t.b = detail::parse_vertex(ids[2]);
        if (t.s == t.t || t.s == t.b || t.t == t.b)
            throw SpecParseError("scorpion template needs distinct sting/tail/body");
    } else if (head.rfind("stars:", 0) == 0) {
        t.base = Base::StarCenters;
        for (const std::string& id : detail::split(head.substr(6), ','))
            t.centers.push_back(detail::parse_vertex(id));
        if (t.centers.empty()) throw SpecParseError("stars:<v,...> needs at least one center");
    } else if (head.rfind("modclass:", 0) == 0) {
        t.base = Base::ModClassDistinct;
        t.mod = int(detail::parse_vertex(head.substr(9)));
        if (t.mod < 2) throw SpecParseError("modclass:<k> requires k >= 2");
    } else {
        throw SpecParseError("unknown template '" + std::string(head) +
                             "', expected empty | complete | blocks:<b> | scorpion:<s>,<t>,<b> "
                             "| stars:<v,..> | modclass:<k> with ;+u,v ;-u,v edits");
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const std::string& e = parts[i];
        if (e.size() < 4 || (e[0] != '+' && e[0] != '-'))
            throw SpecParseError("bad template edit '" + e + "', expected +u,v or -u,v");
        auto ids = detail::split(e.substr(1), ',');
        if (ids.size() != 2) throw SpecParseError("bad template edit '" + e + "'");
        Pair p(detail::parse_vertex(ids[0]), detail::parse_vertex(ids[1]));
        if (e[0] == '+') {
            // only store genuine flips so spec() stays canonical
            if (!t.base_contains(p)) t.add.insert(p);
            t.remove.erase(p);
        } else {
            if (t.base_contains(p)) t.remove.insert(p);
            t.add.erase(p);
        }
    }
    return t;
}

}  // namespace evade
