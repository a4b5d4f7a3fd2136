#include <catch2/catch_amalgamated.hpp>

#include "evade/strategies.hpp"

using namespace evade;

namespace {

GameConfig config_for(AllowedBoard board, const char* prop, std::uint64_t fuel = 1000) {
    GameConfig c;
    c.board = std::move(board);
    c.property = Property::parse(prop);
    c.fuel = fuel;
    return c;
}

}  // namespace

TEST_CASE("family parsing") {
    CHECK(LargeFamily::parse("allpairs").spec() == "allpairs");
    CHECK(LargeFamily::parse("jn:5").spec() == "jn:5");
    CHECK(LargeFamily::parse("smallcomp:2").spec() == "smallcomp:2");
    CHECK(LargeFamily::parse("infclique").spec() == "infclique");
    CHECK_THROWS_AS(LargeFamily::parse("jn:0"), SpecParseError);
    CHECK_THROWS_AS(LargeFamily::parse("bogus"), SpecParseError);
}

TEST_CASE("cycle on K_3: greedy hider forces all three probes") {
    auto transcript = play(seeker_lexicographic(), hider_cycle_forest(),
                           config_for(AllowedBoard::finite_graph(FiniteGraph::complete(3)),
                                      "cycle"));
    REQUIRE(transcript.moves.size() == 3);
    CHECK(transcript.moves[0].pair == Pair(0, 1));
    CHECK(transcript.moves[0].edge);
    CHECK(transcript.moves[1].pair == Pair(0, 2));
    CHECK(transcript.moves[1].edge);
    CHECK(transcript.moves[2].pair == Pair(1, 2));
    CHECK_FALSE(transcript.moves[2].edge);  // closing the triangle is refused
    CHECK(transcript.reason == TerminalReason::ForcedFalse);
    CHECK(transcript.winner == Winner::Bob);  // all pairs probed
    CHECK(transcript.determined_count == 3);
}

TEST_CASE("min-degree on K_2 ends at the first probe") {
    auto transcript = play(seeker_lexicographic(), hider_oblivious(FiniteGraph::complete(2)),
                           config_for(AllowedBoard::finite_graph(FiniteGraph::complete(2)),
                                      "dmin:1"));
    CHECK(transcript.moves.size() == 1);
    CHECK(transcript.reason == TerminalReason::ForcedTrue);
}

TEST_CASE("fuel exhaustion leaves the game undecided") {
    auto transcript = play(seeker_lexicographic(), hider_cycle_forest(),
                           config_for(AllowedBoard::finite_graph(FiniteGraph::complete(10)),
                                      "cycle", 5));
    CHECK(transcript.moves.size() == 5);
    CHECK(transcript.reason == TerminalReason::FuelExhausted);
    CHECK(transcript.winner == Winner::Undecided);
}

TEST_CASE("seeker protocol violations are reported with the turn") {
    SeekerStrategy stuck{"stuck", [](const GameState&) { return Pair(0, 1); }};
    try {
        play(stuck, hider_cycle_forest(),
             config_for(AllowedBoard::finite_graph(FiniteGraph::complete(4)), "cycle"));
        FAIL("expected a protocol violation");
    } catch (const ProtocolViolation& e) {
        CHECK(std::string(e.what()).find("turn 1") != std::string::npos);
        CHECK(std::string(e.what()).find("already determined") != std::string::npos);
    }
    SeekerStrategy outside{"outside", [](const GameState&) { return Pair(0, 9); }};
    CHECK_THROWS_AS(play(outside, hider_cycle_forest(),
                         config_for(AllowedBoard::finite_graph(FiniteGraph::complete(4)),
                                    "cycle")),
                    ProtocolViolation);
}

TEST_CASE("family membership on finite positions") {
    FiniteGraph k4 = FiniteGraph::complete(4);
    SECTION("all pairs") {
        GameState st(AllowedBoard::finite_graph(k4));
        for (const Pair& p : k4.edges()) st.apply(p, true);
        CHECK(family_membership(st, LargeFamily::all_pairs()).verdict == FamilyVerdict::True);
    }
    SECTION("small complement with witness") {
        GameState st(AllowedBoard::finite_graph(k4));
        for (const Pair& p : k4.edges())
            if (p != Pair(0, 1) && p != Pair(0, 2) && p != Pair(1, 2)) st.apply(p, false);
        auto rep = family_membership(st, LargeFamily::small_complement(3));
        CHECK(rep.verdict == FamilyVerdict::True);
        CHECK(rep.complement_cover == std::vector<Vertex>{0, 1, 2});
        CHECK(family_membership(st, LargeFamily::small_complement(2)).verdict ==
              FamilyVerdict::False);
    }
    SECTION("a perfect-matching complement defeats a 2-cover") {
        FiniteGraph k6 = FiniteGraph::complete(6);
        GameState st(AllowedBoard::finite_graph(k6));
        for (const Pair& p : k6.edges())
            if (p != Pair(0, 1) && p != Pair(2, 3) && p != Pair(4, 5)) st.apply(p, false);
        CHECK(family_membership(st, LargeFamily::small_complement(2)).verdict ==
              FamilyVerdict::False);
    }
    SECTION("JN is vacuous on finite data") {
        GameState st(AllowedBoard::finite_graph(k4));
        for (const Pair& p : k4.edges()) st.apply(p, true);
        CHECK(family_membership(st, LargeFamily::jn(1)).verdict == FamilyVerdict::False);
    }
    SECTION("infinite clique reports the determined clique instead") {
        GameState st(AllowedBoard::finite_graph(k4));
        st.apply(Pair(0, 1), true);
        st.apply(Pair(0, 2), false);
        st.apply(Pair(1, 2), true);
        auto rep = family_membership(st, LargeFamily::infinite_clique());
        CHECK(rep.verdict == FamilyVerdict::Unknown);
        CHECK(rep.determined_clique == 3);  // pairs within {0,1,2} all determined
    }
}

TEST_CASE("family upward closure under added determinations") {
    Rng rng(9);
    FiniteGraph k6 = FiniteGraph::complete(6);
    std::vector<LargeFamily> fams = {LargeFamily::all_pairs(), LargeFamily::small_complement(2),
                                     LargeFamily::small_complement(4)};
    for (int trial = 0; trial < 100; ++trial) {
        GameState small(AllowedBoard::finite_graph(k6));
        GameState big(AllowedBoard::finite_graph(k6));
        for (const Pair& p : k6.edges()) {
            bool in_small = rng.coin();
            bool in_big = in_small || rng.coin();
            bool as_edge = rng.coin();
            if (in_small) small.apply(p, as_edge);
            if (in_big) big.apply(p, as_edge);
        }
        for (const auto& f : fams) {
            if (family_membership(small, f).verdict == FamilyVerdict::True)
                CHECK(family_membership(big, f).verdict == FamilyVerdict::True);
        }
        CHECK(family_membership(big, LargeFamily::infinite_clique()).determined_clique >=
              family_membership(small, LargeFamily::infinite_clique()).determined_clique);
    }
}

TEST_CASE("transcript invariants and replay determinism") {
    auto run = [] {
        return play(seeker_random(42), hider_cycle_forest(),
                    config_for(AllowedBoard::finite_graph(FiniteGraph::complete(6)), "cycle"));
    };
    Transcript a = run();
    Transcript b = run();
    REQUIRE(a.moves.size() == b.moves.size());
    std::set<Pair> seen;
    for (std::size_t i = 0; i < a.moves.size(); ++i) {
        CHECK(a.moves[i].turn == i);
        CHECK(a.moves[i].pair == b.moves[i].pair);
        CHECK(a.moves[i].edge == b.moves[i].edge);
        CHECK(seen.insert(a.moves[i].pair).second);  // no pair probed twice
    }
    CHECK(a.reason == b.reason);
    CHECK(a.winner == b.winner);

    SECTION("prefixes always form valid pregraphs growing by one pair") {
        GameState replay(AllowedBoard::finite_graph(FiniteGraph::complete(6)));
        std::size_t determined = 0;
        for (const MoveRecord& m : a.moves) {
            CHECK(replay.undetermined(m.pair));
            replay.apply(m.pair, m.edge);
            CHECK(replay.determined_count() == ++determined);
        }
    }
}

TEST_CASE("single-pair play on the infinite board") {
    SECTION("degree adversary never terminates a min-degree game") {
        auto transcript = play(seeker_random(7), hider_degree(2),
                               config_for(AllowedBoard::komega(), "dmin:2", 120));
        CHECK(transcript.moves.size() == 120);
        CHECK(transcript.reason == TerminalReason::FuelExhausted);
        CHECK(transcript.winner == Winner::Undecided);
        CHECK(transcript.family_report.verdict == FamilyVerdict::False);  // allpairs
    }
    SECTION("a gmin cycle terminates the cycle game on omega") {
        auto transcript = play(seeker_lexicographic(),
                               hider_oblivious(HiddenTemplate::parse("complete")),
                               config_for(AllowedBoard::komega(), "cycle", 100));
        CHECK(transcript.reason == TerminalReason::ForcedTrue);
        CHECK(transcript.moves.size() == 3);  // the first triangle
        CHECK(transcript.winner == Winner::Alice);
    }
    SECTION("turan(2) board: odd cycles are impossible from the start") {
        auto transcript = play(seeker_lexicographic(),
                               hider_oblivious(HiddenTemplate::parse("complete")),
                               config_for(AllowedBoard::turan(2), "notbipartite", 50));
        CHECK(transcript.moves.empty());
        CHECK(transcript.reason == TerminalReason::ForcedFalse);
        CHECK(transcript.winner == Winner::Alice);
    }
    SECTION("scorpion is rejected on the infinite single-pair board") {
        CHECK_THROWS_AS(play(seeker_lexicographic(),
                             hider_oblivious(HiddenTemplate::parse("empty")),
                             config_for(AllowedBoard::komega(), "scorpion", 10)),
                        SizeBoundError);
    }
}

TEST_CASE("template parsing and membership") {
    HiddenTemplate t = HiddenTemplate::parse("scorpion:0,1,2;+5,6;-2,7");
    CHECK(t.contains(Pair(0, 1)));   // sting-tail
    CHECK(t.contains(Pair(1, 2)));   // tail-body
    CHECK(t.contains(Pair(2, 9)));   // body-row
    CHECK_FALSE(t.contains(Pair(0, 2)));  // sting-body
    CHECK_FALSE(t.contains(Pair(0, 7)));
    CHECK(t.contains(Pair(5, 6)));   // added edit
    CHECK_FALSE(t.contains(Pair(2, 7)));  // removed edit
    CHECK(t.spec() == "scorpion:0,1,2;+5,6;-2,7");

    CHECK(HiddenTemplate::parse("blocks:5").contains(Pair(5, 9)));
    CHECK_FALSE(HiddenTemplate::parse("blocks:5").contains(Pair(4, 5)));
    CHECK(HiddenTemplate::parse("stars:3").contains(Pair(3, 11)));
    CHECK_FALSE(HiddenTemplate::parse("stars:3").contains(Pair(4, 11)));
    CHECK(HiddenTemplate::parse("modclass:2").contains(Pair(0, 1)));
    CHECK_FALSE(HiddenTemplate::parse("modclass:2").contains(Pair(0, 2)));
    CHECK_THROWS_AS(HiddenTemplate::parse("scorpion:1,1,2"), SpecParseError);
    CHECK_THROWS_AS(HiddenTemplate::parse("wibble"), SpecParseError);

    SECTION("neighborhoods match membership on a window") {
        for (const char* spec : {"empty", "complete", "blocks:4", "scorpion:1,4,7;+0,3",
                                 "stars:2,5;-2,9", "modclass:3"}) {
            HiddenTemplate tmpl = HiddenTemplate::parse(spec);
            for (const AllowedBoard& board :
                 {AllowedBoard::komega(), AllowedBoard::turan(3), AllowedBoard::cantor()}) {
                for (Vertex v = 0; v < 24; ++v) {
                    VSet nb = tmpl.neighborhood(v, board);
                    for (Vertex u = 0; u < 80; ++u) {
                        if (u == v) continue;
                        bool expect = board.allows(Pair(u, v)) && tmpl.contains(Pair(u, v));
                        REQUIRE(nb.contains(u) == expect);
                    }
                }
            }
        }
    }
}
