#pragma once

#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "evade/board.hpp"
#include "evade/property.hpp"
#include "evade/template.hpp"

namespace evade {

enum class Winner { Alice, Bob, Undecided };
enum class TerminalReason { ForcedTrue, ForcedFalse, FuelExhausted };

inline const char* to_string(Winner w) {
    switch (w) {
        case Winner::Alice: return "alice";
        case Winner::Bob: return "bob";
        default: return "undecided";
    }
}
inline const char* to_string(TerminalReason r) {
    switch (r) {
        case TerminalReason::ForcedTrue: return "forced-true";
        case TerminalReason::ForcedFalse: return "forced-false";
        default: return "fuel-exhausted";
    }
}

// Upward-closed families of determined-pair sets.
struct LargeFamily {
    enum class Kind { AllPairs, InfiniteClique, JN, SmallComplement };
    Kind kind = Kind::AllPairs;
    int n = 0;

    static LargeFamily all_pairs() { return {Kind::AllPairs, 0}; }
    static LargeFamily infinite_clique() { return {Kind::InfiniteClique, 0}; }
    static LargeFamily jn(int n) {
        if (n < 1) throw SpecParseError("jn:<n> requires n >= 1");
        return {Kind::JN, n};
    }
    static LargeFamily small_complement(int n) {
        if (n < 1) throw SpecParseError("smallcomp:<n> requires n >= 1");
        return {Kind::SmallComplement, n};
    }

    static LargeFamily parse(std::string_view s) {
        if (s == "allpairs") return all_pairs();
        if (s == "infclique") return infinite_clique();
        if (s.rfind("jn:", 0) == 0) return jn(detail::parse_int_param(s, "jn:", 1));
        if (s.rfind("smallcomp:", 0) == 0)
            return small_complement(detail::parse_int_param(s, "smallcomp:", 1));
        throw SpecParseError("unknown family '" + std::string(s) +
                             "', expected allpairs | infclique | jn:<n> | smallcomp:<n>");
    }

    std::string spec() const {
        switch (kind) {
            case Kind::AllPairs: return "allpairs";
            case Kind::InfiniteClique: return "infclique";
            case Kind::JN: return "jn:" + std::to_string(n);
            case Kind::SmallComplement: return "smallcomp:" + std::to_string(n);
        }
        return "?";
    }
};

enum class FamilyVerdict { True, False, Unknown };

inline const char* to_string(FamilyVerdict v) {
    switch (v) {
        case FamilyVerdict::True: return "true";
        case FamilyVerdict::False: return "false";
        default: return "unknown";
    }
}

struct FamilyReport {
    std::string family;
    FamilyVerdict verdict = FamilyVerdict::Unknown;
    std::vector<Vertex> complement_cover;   // witness B for the small-complement family
    int determined_clique = 0;              // finite proxy for the infinite-clique family
    std::vector<Vertex> infinite_degree;    // witnesses for the JN family
    bool infinite_degree_unbounded = false;
};

struct MoveRecord {
    std::uint64_t turn = 0;
    Pair pair{0, 1};
    bool edge = false;
};

struct BatchRecord {
    std::string stage;
    std::string region;
    std::uint64_t concrete_probes = 0;
    bool completed = false;  // symbolic completion applied
};

struct Transcript {
    std::vector<MoveRecord> moves;
    std::vector<BatchRecord> batches;
    TerminalReason reason = TerminalReason::FuelExhausted;
    Winner winner = Winner::Undecided;
    std::uint64_t determined_count = 0;
    FamilyReport family_report;
    bool unknown_exhausted = false;
    std::optional<Pair> undetermined_witness;
    std::string verdict_note;
};

// Position of a single-pair game: the determined pairs over an allowed board,
// kept sparse so infinite boards work the same as finite ones.
class GameState {
public:
    explicit GameState(AllowedBoard board) : board_(std::move(board)) {}

    const AllowedBoard& board() const { return board_; }

    bool allowed(const Pair& p) const { return board_.allows(p); }
    bool determined(const Pair& p) const { return edges_.count(p) || nonedges_.count(p); }
    bool is_edge(const Pair& p) const { return edges_.count(p) > 0; }
    bool is_nonedge(const Pair& p) const { return nonedges_.count(p) > 0; }
    bool undetermined(const Pair& p) const { return allowed(p) && !determined(p); }

    const std::set<Pair>& edges() const { return edges_; }
    const std::set<Pair>& nonedges() const { return nonedges_; }
    const std::vector<Pair>& edge_log() const { return edge_log_; }
    std::size_t determined_count() const { return edges_.size() + nonedges_.size(); }

    int deg_e(Vertex v) const { return lookup(e_adj_, v); }
    int deg_n(Vertex v) const { return lookup(n_adj_, v); }
    int deg_p(Vertex v) const { return deg_e(v) + deg_n(v); }

    std::vector<Vertex> e_neighbors(Vertex v) const {
        auto it = e_adj_.find(v);
        return it == e_adj_.end() ? std::vector<Vertex>{} : it->second;
    }

    std::uint64_t below_determined_count(Vertex j) const {
        std::uint64_t c = 0;
        auto count_below = [&](const std::unordered_map<Vertex, std::vector<Vertex>>& adj) {
            auto it = adj.find(j);
            if (it == adj.end()) return;
            for (Vertex u : it->second)
                if (u < j) ++c;
        };
        count_below(e_adj_);
        count_below(n_adj_);
        return c;
    }
    // |{i < j : {i,j} allowed and undetermined}|
    std::uint64_t below_undetermined_count(Vertex j) const {
        return board_.below_allowed_count(j) - below_determined_count(j);
    }

    // connected component of v in gmin (always finite: only touched vertices)
    std::vector<Vertex> component_of(Vertex v) const {
        std::set<Vertex> seen{v};
        std::vector<Vertex> queue{v};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Vertex w : e_neighbors(queue[i]))
                if (seen.insert(w).second) queue.push_back(w);
        return std::vector<Vertex>(seen.begin(), seen.end());
    }

    void apply(const Pair& p, bool edge) {
        if (!allowed(p)) throw ProtocolViolation("pair " + to_string(p) + " is not allowed");
        if (determined(p)) throw ProtocolViolation("pair " + to_string(p) + " already determined");
        if (edge) {
            edges_.insert(p);
            edge_log_.push_back(p);
            e_adj_[p.u].push_back(p.v);
            e_adj_[p.v].push_back(p.u);
        } else {
            nonedges_.insert(p);
            n_adj_[p.u].push_back(p.v);
            n_adj_[p.v].push_back(p.u);
        }
        touched_.insert(p.u);
        touched_.insert(p.v);
    }

    const std::set<Vertex>& touched() const { return touched_; }

    // dense finite view; only for finite boards
    FinitePregraph to_pregraph() const {
        if (board_.is_infinite())
            throw std::logic_error("to_pregraph: infinite board");
        return FinitePregraph(board_.finite(), edges_, nonedges_);
    }

    std::vector<Pair> undetermined_pairs() const {
        if (board_.is_infinite())
            throw std::logic_error("undetermined_pairs: infinite board");
        std::vector<Pair> out;
        for (const Pair& e : board_.finite().edges())
            if (!determined(e)) out.push_back(e);
        return out;
    }

    // gmin restricted to touched vertices, densely relabeled
    FiniteGraph touched_gmin(std::vector<Vertex>* labels = nullptr) const {
        std::map<Vertex, int> index;
        for (Vertex v : touched_) index.emplace(v, int(index.size()));
        FiniteGraph g(int(index.size()));
        for (const Pair& e : edges_) g.add_edge(Vertex(index[e.u]), Vertex(index[e.v]));
        if (labels) {
            labels->clear();
            for (auto& [v, i] : index) labels->push_back(v);
        }
        return g;
    }

private:
    static int lookup(const std::unordered_map<Vertex, std::vector<Vertex>>& adj, Vertex v) {
        auto it = adj.find(v);
        return it == adj.end() ? 0 : int(it->second.size());
    }

    AllowedBoard board_;
    std::set<Pair> edges_, nonedges_;
    std::vector<Pair> edge_log_;
    std::unordered_map<Vertex, std::vector<Vertex>> e_adj_, n_adj_;
    std::set<Vertex> touched_;
};

struct HiderStrategy {
    std::string name;
    bool deterministic = true;
    std::function<bool(const GameState&, const Pair&)> answer;  // true = edge
};

struct SeekerStrategy {
    std::string name;
    std::function<std::optional<Pair>(const GameState&)> next;
};

// Terminal evaluation for single-pair play. Finite boards get the exact
// pregraph evaluator; infinite boards use the sparse rules (gmin facts are
// exact on the touched subgraph, gmax facts reduce to board-level constants
// because only finitely many pairs are ever determined).
inline TerminalStatus sparse_terminal_status(const Property& prop, const GameState& state,
                                             int extension_bound = kDefaultExtensionBound) {
    if (!state.board().is_infinite())
        return terminal_status(prop, state.to_pregraph(), extension_bound);
    if (!prop.monotone())
        throw SizeBoundError("terminal_status: undecidable at this bound "
                             "(non-monotone property on an infinite board)");
    FiniteGraph mini = state.touched_gmin();
    switch (prop.kind) {
        case PropertyKind::Cycle:
        case PropertyKind::ContainsStar:
        case PropertyKind::ContainsClique:
        case PropertyKind::ContainsP3:
        case PropertyKind::NotBipartite:
            // gmin exact on the touched subgraph; gmax on an infinite board
            // minus finitely many nonedges always satisfies these, except for
            // structural impossibilities of the board itself
            if (holds(prop, mini)) return TerminalStatus::ForcedTrue;
            if (prop.kind == PropertyKind::ContainsClique &&
                state.board().kind() == AllowedBoard::Kind::Turan &&
                prop.param > state.board().turan_k())
                return TerminalStatus::ForcedFalse;
            if (prop.kind == PropertyKind::NotBipartite &&
                state.board().kind() == AllowedBoard::Kind::Turan &&
                state.board().turan_k() == 2)
                return TerminalStatus::ForcedFalse;
            return TerminalStatus::Open;
        case PropertyKind::MinDegree:
        case PropertyKind::MinComponentSize:
        case PropertyKind::Connected:
            // gmin never holds (untouched vertices are isolated); gmax never
            // fails (cofinite freedom keeps degrees infinite and the board
            // connected)
            return TerminalStatus::Open;
        case PropertyKind::Scorpion:
            break;
    }
    throw SizeBoundError("terminal_status: unsupported property on infinite board");
}

namespace detail {

inline int largest_determined_clique(const GameState& state) {
    // clique in the graph of determined pairs over touched vertices
    std::vector<Vertex> verts(state.touched().begin(), state.touched().end());
    int best = std::min<std::size_t>(1, verts.size());
    std::vector<Vertex> clique;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
        best = std::max(best, int(clique.size()));
        for (std::size_t i = from; i < verts.size(); ++i) {
            Vertex v = verts[i];
            bool ok = true;
            for (Vertex c : clique)
                if (!state.determined(Pair(c, v))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            clique.push_back(v);
            grow(i + 1);
            clique.pop_back();
        }
    };
    grow(0);
    return best;
}

}  // namespace detail

// Membership of the determined-pair set in an upward-closed family, finite
// engine version: no vertex ever reaches infinite degree here.
inline FamilyReport family_membership(const GameState& state, const LargeFamily& family) {
    FamilyReport rep;
    rep.family = family.spec();
    switch (family.kind) {
        case LargeFamily::Kind::AllPairs: {
            if (state.board().is_infinite()) {
                rep.verdict = FamilyVerdict::False;  // finitely many probes only
            } else {
                rep.verdict = state.determined_count() == state.board().finite().edge_count()
                                  ? FamilyVerdict::True
                                  : FamilyVerdict::False;
            }
            return rep;
        }
        case LargeFamily::Kind::JN: {
            rep.verdict = FamilyVerdict::False;  // all degrees finite
            return rep;
        }
        case LargeFamily::Kind::SmallComplement: {
            if (state.board().is_infinite()) {
                rep.verdict = FamilyVerdict::False;  // complement is infinite
                return rep;
            }
            std::set<Vertex> cover;
            for (const Pair& p : state.board().finite().edges())
                if (!state.determined(p)) {
                    cover.insert(p.u);
                    cover.insert(p.v);
                }
            rep.complement_cover.assign(cover.begin(), cover.end());
            rep.verdict = int(cover.size()) <= family.n ? FamilyVerdict::True
                                                        : FamilyVerdict::False;
            return rep;
        }
        case LargeFamily::Kind::InfiniteClique: {
            rep.verdict = FamilyVerdict::Unknown;
            rep.determined_clique = detail::largest_determined_clique(state);
            return rep;
        }
    }
    return rep;
}

struct GameConfig {
    AllowedBoard board = AllowedBoard::komega();
    Property property;
    LargeFamily family = LargeFamily::all_pairs();
    std::uint64_t fuel = 1000;
    int extension_bound = kDefaultExtensionBound;
    // streaming sink, called after each answered probe
    std::function<void(const MoveRecord&)> on_move;
    // observer with full state access (invariant audits)
    std::function<void(const GameState&, const MoveRecord&)> observer;
};

// Referee loop: alternate seeker probe / hider answer, evaluating terminal
// status after every answer; the seeker is never consulted once terminal.
inline Transcript play(const SeekerStrategy& seeker, const HiderStrategy& hider,
                       const GameConfig& config) {
    if (config.fuel < 1) throw SpecParseError("fuel must be >= 1");
    GameState state(config.board);
    Transcript out;

    auto finish = [&](TerminalStatus status) {
        out.reason = status == TerminalStatus::ForcedTrue ? TerminalReason::ForcedTrue
                                                          : TerminalReason::ForcedFalse;
        out.family_report = family_membership(state, config.family);
        out.winner = out.family_report.verdict == FamilyVerdict::True ? Winner::Bob
                                                                      : Winner::Alice;
        out.determined_count = state.determined_count();
        if (!state.board().is_infinite()) {
            for (const Pair& p : state.undetermined_pairs()) {
                out.undetermined_witness = p;
                break;
            }
        }
        return out;
    };

    TerminalStatus status = sparse_terminal_status(config.property, state,
                                                   config.extension_bound);
    if (status != TerminalStatus::Open) return finish(status);

    for (std::uint64_t turn = 0; turn < config.fuel; ++turn) {
        auto probe = seeker.next(state);
        if (!probe)
            throw ProtocolViolation("turn " + std::to_string(turn) +
                                    ": seeker returned no probe in an open position");
        if (!state.allowed(*probe))
            throw ProtocolViolation("turn " + std::to_string(turn) + ": seeker picked " +
                                    to_string(*probe) + " which is not an allowed pair");
        if (state.determined(*probe))
            throw ProtocolViolation("turn " + std::to_string(turn) + ": seeker picked " +
                                    to_string(*probe) + " which is already determined");
        bool edge = hider.answer(state, *probe);
        state.apply(*probe, edge);
        MoveRecord rec{turn, *probe, edge};
        out.moves.push_back(rec);
        if (config.on_move) config.on_move(rec);
        if (config.observer) config.observer(state, rec);
        status = sparse_terminal_status(config.property, state, config.extension_bound);
        if (status != TerminalStatus::Open) return finish(status);
    }
    out.reason = TerminalReason::FuelExhausted;
    out.winner = Winner::Undecided;
    out.determined_count = state.determined_count();
    out.family_report = family_membership(state, config.family);
    return out;
}

}  // namespace evade
