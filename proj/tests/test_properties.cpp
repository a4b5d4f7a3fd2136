#include <catch2/catch_amalgamated.hpp>

#include "evade/property.hpp"

using namespace evade;

namespace {

// Extension-enumeration oracle for terminal status.
TerminalStatus oracle_terminal(const Property& p, const FinitePregraph& g) {
    auto undet = g.undetermined_pairs();
    REQUIRE(undet.size() <= 20);
    bool all = true, none = true;
    FiniteGraph base = gmin(g);
    for (std::uint64_t mask = 0; mask < (1ULL << undet.size()); ++mask) {
        FiniteGraph ext = base;
        for (std::size_t i = 0; i < undet.size(); ++i)
            if (mask >> i & 1) ext.add_edge(undet[i]);
        if (holds(p, ext)) none = false;
        else all = false;
    }
    if (all) return TerminalStatus::ForcedTrue;
    if (none) return TerminalStatus::ForcedFalse;
    return TerminalStatus::Open;
}

FiniteGraph perfect_matching(int n) {
    FiniteGraph g(n);
    for (int i = 0; i + 1 < n; i += 2) g.add_edge(Vertex(i), Vertex(i + 1));
    return g;
}

}  // namespace

TEST_CASE("property spec strings") {
    for (const char* s : {"cycle", "dmin:2", "cmin:3", "connected", "scorpion", "star:4",
                          "clique:3", "p3", "notbipartite"})
        CHECK(Property::parse(s).spec() == s);
    CHECK_THROWS_AS(Property::parse("dmin:0"), SpecParseError);
    CHECK_THROWS_AS(Property::parse("cmin:1"), SpecParseError);
    CHECK_THROWS_AS(Property::parse("clique:2"), SpecParseError);
    CHECK_THROWS_AS(Property::parse("nonsense"), SpecParseError);
    CHECK_THROWS_AS(Property::parse("dmin:two"), SpecParseError);
}

TEST_CASE("holds") {
    CHECK_FALSE(holds(Property::parse("dmin:1"), FiniteGraph(4)));
    CHECK(holds(Property::parse("cmin:2"), perfect_matching(6)));
    CHECK(holds(Property::parse("connected"), FiniteGraph(1)));  // convention
    CHECK_FALSE(holds(Property::parse("connected"), FiniteGraph(2)));
    CHECK(holds(Property::parse("p3"), FiniteGraph::path(3)));
    CHECK_FALSE(holds(Property::parse("p3"), perfect_matching(4)));
    CHECK(holds(Property::parse("notbipartite"), FiniteGraph::cycle(5)));
    CHECK_FALSE(holds(Property::parse("notbipartite"), FiniteGraph::cycle(6)));
    CHECK(holds(Property::parse("clique:3"), FiniteGraph::complete(4)));
    CHECK_FALSE(holds(Property::parse("clique:4"), FiniteGraph::cycle(4)));
    CHECK(holds(Property::parse("scorpion"), scorpion_example_graph()));

    SECTION("cycle matches an edge-count oracle across the 11 four-vertex classes") {
        auto classes = all_graphs_up_to_iso(4);
        REQUIRE(classes.size() == 11);
        int with_cycle = 0;
        for (const FiniteGraph& g : classes) {
            UnionFind uf(4);
            bool oracle = false;
            for (const Pair& e : g.edges())
                if (!uf.unite(int(e.u), int(e.v))) oracle = true;
            CHECK(holds(Property::parse("cycle"), g) == oracle);
            with_cycle += oracle;
        }
        CHECK(with_cycle == 5);  // of 11 classes on 4 vertices, 5 contain a cycle
    }

    SECTION("star containment is exactly a max-degree threshold") {
        Rng rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            int n = 2 + int(rng.below(6));
            FiniteGraph g(n);
            for (const Pair& q : all_pairs(n))
                if (rng.coin()) g.add_edge(q);
            int maxdeg = 0;
            for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(Vertex(v)));
            for (int k = 1; k <= n; ++k)
                CHECK(holds(Property{PropertyKind::ContainsStar, k}, g) == (maxdeg >= k));
        }
    }
}

TEST_CASE("terminal_status for monotone properties") {
    FiniteGraph k4 = FiniteGraph::complete(4);
    SECTION("triangle already in E forces a cycle") {
        FinitePregraph g(k4, {Pair(0, 1), Pair(1, 2), Pair(0, 2)}, {});
        CHECK(terminal_status(Property::parse("cycle"), g) == TerminalStatus::ForcedTrue);
    }
    SECTION("two nonedges on K_3 rule a cycle out") {
        FinitePregraph g(FiniteGraph::complete(3), {}, {Pair(0, 1), Pair(0, 2)});
        CHECK(terminal_status(Property::parse("cycle"), g) == TerminalStatus::ForcedFalse);
    }
    SECTION("agrees with extension enumeration everywhere (n = 4, sampled states)") {
        Rng rng(23);
        std::vector<Property> props = {Property::parse("cycle"), Property::parse("dmin:2"),
                                       Property::parse("cmin:2"), Property::parse("connected"),
                                       Property::parse("star:2"), Property::parse("clique:3"),
                                       Property::parse("p3"), Property::parse("notbipartite")};
        auto pairs = all_pairs(4);
        for (int trial = 0; trial < 300; ++trial) {
            FinitePregraph g(k4);
            for (const Pair& q : pairs) {
                switch (rng.below(3)) {
                    case 0: g.set_edge(q); break;
                    case 1: g.set_nonedge(q); break;
                    default: break;
                }
            }
            for (const Property& p : props)
                REQUIRE(terminal_status(p, g) == oracle_terminal(p, g));
        }
    }
    SECTION("fully determined pregraphs are never open") {
        Rng rng(31);
        std::vector<Property> props = {Property::parse("cycle"), Property::parse("scorpion"),
                                       Property::parse("dmin:1")};
        for (int trial = 0; trial < 50; ++trial) {
            int n = 2 + int(rng.below(4));
            FinitePregraph g(FiniteGraph::complete(n));
            for (const Pair& q : all_pairs(n)) {
                if (rng.coin()) g.set_edge(q);
                else g.set_nonedge(q);
            }
            for (const Property& p : props)
                CHECK(terminal_status(p, g) != TerminalStatus::Open);
        }
    }
}

TEST_CASE("terminal_status for the scorpion property") {
    SECTION("fully swept witness triple forces true") {
        // allowed = K_6; determine all pairs at {0,1,2} to form a scorpion,
        // leave the row pairs {3,4},{3,5},{4,5} undetermined
        FiniteGraph k6 = FiniteGraph::complete(6);
        FinitePregraph g(k6);
        g.set_edge(Pair(0, 1));  // sting-tail
        g.set_edge(Pair(1, 2));  // tail-body
        for (Vertex r = 3; r < 6; ++r) g.set_edge(Pair(2, r));
        g.set_nonedge(Pair(0, 2));
        for (Vertex r = 3; r < 6; ++r) {
            g.set_nonedge(Pair(0, r));
            g.set_nonedge(Pair(1, r));
        }
        REQUIRE(g.undetermined_count() == 3);
        CHECK(terminal_status(Property::parse("scorpion"), g) == TerminalStatus::ForcedTrue);
        CHECK(oracle_terminal(Property::parse("scorpion"), g) == TerminalStatus::ForcedTrue);
    }
    SECTION("agrees with enumeration on sampled K_4 states") {
        Rng rng(41);
        auto pairs = all_pairs(4);
        for (int trial = 0; trial < 200; ++trial) {
            FinitePregraph g(FiniteGraph::complete(4));
            for (const Pair& q : pairs) {
                switch (rng.below(3)) {
                    case 0: g.set_edge(q); break;
                    case 1: g.set_nonedge(q); break;
                    default: break;
                }
            }
            REQUIRE(terminal_status(Property::parse("scorpion"), g) ==
                    oracle_terminal(Property::parse("scorpion"), g));
        }
    }
    SECTION("bound exceeded reports undecidable") {
        FinitePregraph g(FiniteGraph::complete(7));  // 21 undetermined pairs
        CHECK_THROWS_AS(terminal_status(Property::parse("scorpion"), g), SizeBoundError);
    }
}

TEST_CASE("monotone closure on all graphs with n <= 5") {
    std::vector<Property> props = {Property::parse("cycle"),      Property::parse("dmin:1"),
                                   Property::parse("dmin:2"),     Property::parse("cmin:2"),
                                   Property::parse("connected"),  Property::parse("star:2"),
                                   Property::parse("clique:3"),   Property::parse("p3"),
                                   Property::parse("notbipartite")};
    for (int n = 2; n <= 5; ++n) {
        for (const FiniteGraph& g : all_graphs_up_to_iso(n)) {
            for (const Property& p : props) {
                if (!holds(p, g)) continue;
                for (const Pair& q : all_pairs(n)) {
                    if (g.has_edge(q)) continue;
                    FiniteGraph bigger = g;
                    bigger.add_edge(q);
                    REQUIRE(holds(p, bigger));
                }
            }
        }
    }
}

TEST_CASE("monotonicity_check") {
    CHECK(monotonicity_check(Property::parse("cycle"), 200));
    CHECK(monotonicity_check(Property::parse("dmin:2"), 200));
    MonotoneCounterexample cex;
    REQUIRE_FALSE(monotonicity_check(Property::parse("scorpion"), 2000, &cex));
    // the returned counterexample is concrete and genuine
    CHECK(holds(Property::parse("scorpion"), cex.graph));
    FiniteGraph after = cex.graph;
    after.add_edge(cex.added);
    CHECK_FALSE(holds(Property::parse("scorpion"), after));
    // the monotone flag matches the sampled test for every kind
    for (const char* s : {"cycle", "dmin:2", "cmin:2", "connected", "star:2", "clique:3",
                          "p3", "notbipartite"})
        CHECK(monotonicity_check(Property::parse(s), 100) == Property::parse(s).monotone());
}
