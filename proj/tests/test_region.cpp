#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "evade/cantor.hpp"
#include "evade/fincof.hpp"
#include "evade/vset.hpp"

using namespace evade;

TEST_CASE("cantor codec") {
    // breadth-first ids: "" = 0, "0" = 1, "1" = 2, "00" = 3, ...
    CHECK(cantor::to_string(0) == "");
    CHECK(cantor::to_string(1) == "0");
    CHECK(cantor::to_string(2) == "1");
    CHECK(cantor::to_string(3) == "00");
    CHECK(cantor::to_string(4) == "01");
    CHECK(cantor::to_string(5) == "10");
    CHECK(cantor::to_string(6) == "11");
    for (Vertex v = 0; v < 2000; ++v) {
        CHECK(cantor::from_string(cantor::to_string(v)) == v);
        if (v > 0) {
            std::string s = cantor::to_string(v);
            CHECK(cantor::to_string(cantor::parent(v)) == s.substr(0, s.size() - 1));
        }
    }
    SECTION("adjacency is the strict-prefix relation") {
        for (Vertex a = 0; a < 200; ++a)
            for (Vertex b = 0; b < 200; ++b) {
                std::string sa = cantor::to_string(a), sb = cantor::to_string(b);
                bool prefix = sa.size() < sb.size() && sb.substr(0, sa.size()) == sa;
                CHECK(cantor::strict_ancestor(a, b) == prefix);
            }
    }
    SECTION("levels enumerate descendants in id order") {
        CHECK(cantor::level_first(0, 3) == 7);
        CHECK(cantor::level_last(0, 3) == 14);
        CHECK(cantor::level_first(2, 1) == 5);
        CHECK(cantor::level_last(2, 1) == 6);
    }
}

TEST_CASE("fincof set algebra") {
    FinCofSet a = FinCofSet::finite({1, 2, 3});
    FinCofSet b = FinCofSet::cofinite({2, 5});
    CHECK(a.contains(1));
    CHECK_FALSE(a.contains(4));
    CHECK(b.contains(4));
    CHECK_FALSE(b.contains(5));
    CHECK(a.unite(b).contains(2));
    CHECK_FALSE(a.intersect(b).contains(2));
    CHECK(a.intersect(b) == FinCofSet::finite({1, 3}));
    CHECK(b.subtract(a).is_cofinite());
    CHECK_FALSE(b.subtract(a).contains(3));
    CHECK(a.complement().contains(0));
    CHECK(FinCofSet::all().cardinality() == std::nullopt);
    CHECK(FinCofSet::finite({7, 8}).cardinality() == std::size_t(2));

    SECTION("ops match membership semantics on a window") {
        Rng rng(3);
        for (int trial = 0; trial < 200; ++trial) {
            auto rnd = [&] {
                std::set<Vertex> m;
                int k = int(rng.below(6));
                for (int i = 0; i < k; ++i) m.insert(Vertex(rng.below(30)));
                return rng.coin() ? FinCofSet::finite(m) : FinCofSet::cofinite(m);
            };
            FinCofSet x = rnd(), y = rnd();
            for (Vertex v = 0; v < 40; ++v) {
                CHECK(x.unite(y).contains(v) == (x.contains(v) || y.contains(v)));
                CHECK(x.intersect(y).contains(v) == (x.contains(v) && y.contains(v)));
                CHECK(x.subtract(y).contains(v) == (x.contains(v) && !y.contains(v)));
            }
        }
    }
}

namespace {

constexpr Vertex kWindow = 420;

struct Modeled {
    VSet set;
    std::set<Vertex> window;   // membership on [0, kWindow)
    bool known_infinite = false;  // true if certainly infinite (one-sided)
};

Modeled make_random(Rng& rng) {
    Modeled m;
    switch (rng.below(6)) {
        case 0: {  // explicit members
            int k = 1 + int(rng.below(8));
            std::vector<Vertex> mem;
            for (int i = 0; i < k; ++i) mem.push_back(Vertex(rng.below(60)));
            m.set = VSet::of(mem);
            m.known_infinite = false;
            break;
        }
        case 1: {  // plain tail
            Vertex lo = Vertex(rng.below(40));
            m.set = VSet::tail_from(lo);
            m.known_infinite = true;
            break;
        }
        case 2: {  // residue tail
            std::uint32_t mod = 1 + std::uint32_t(rng.below(6));
            std::uint64_t mask = rng.below(1ULL << mod);
            if (!mask) mask = 1;
            m.set = VSet::residue_tail(Vertex(rng.below(30)), mod, mask);
            m.known_infinite = true;
            break;
        }
        case 3: {  // bounded range
            Vertex lo = Vertex(rng.below(50));
            m.set = VSet::range(lo, lo + rng.below(80));
            m.known_infinite = false;
            break;
        }
        case 4: {  // subtree
            m.set = VSet::cantor_descendants(Vertex(rng.below(20)));
            m.known_infinite = true;
            break;
        }
        default: {  // cofinite with edits
            std::set<Vertex> ex;
            int k = int(rng.below(5));
            for (int i = 0; i < k; ++i) ex.insert(Vertex(rng.below(25)));
            m.set = VSet::from_fincof(FinCofSet::cofinite(ex));
            m.known_infinite = true;
            break;
        }
    }
    for (Vertex v = 0; v < kWindow; ++v)
        if (m.set.contains(v)) m.window.insert(v);
    return m;
}

void check_consistency(const Modeled& m) {
    for (Vertex v = 0; v < kWindow; ++v)
        REQUIRE(m.set.contains(v) == (m.window.count(v) > 0));
    // ordered enumeration agrees with the window model
    std::vector<Vertex> enumerated;
    m.set.for_each([&](Vertex v) { enumerated.push_back(v); }, m.window.size());
    std::size_t idx = 0;
    for (Vertex v : m.window) {
        if (idx >= enumerated.size()) break;
        REQUIRE(enumerated[idx] == v);
        ++idx;
        if (enumerated[idx - 1] >= kWindow) break;
    }
    // cardinality classifier consistent with far membership
    if (!m.set.infinite()) {
        CHECK(m.set.finite_size() < 100000);
    } else {
        auto far = m.set.next_member(1000);
        REQUIRE(far.has_value());
        auto farther = m.set.next_member(*far + 1000);
        REQUIRE(farther.has_value());
    }
    if (m.known_infinite) CHECK(m.set.infinite());
}

}  // namespace

TEST_CASE("vset membership, ops, enumeration and cardinality (differential)") {
    Rng rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        Modeled a = make_random(rng);
        Modeled b = make_random(rng);
        check_consistency(a);
        check_consistency(b);

        Modeled u{a.set.unite(b.set), {}, a.known_infinite || b.known_infinite};
        for (Vertex v = 0; v < kWindow; ++v)
            if (a.window.count(v) || b.window.count(v)) u.window.insert(v);
        check_consistency(u);

        Modeled i{a.set.intersect(b.set), {}, false};
        for (Vertex v = 0; v < kWindow; ++v)
            if (a.window.count(v) && b.window.count(v)) i.window.insert(v);
        check_consistency(i);

        Modeled d{a.set.subtract(b.set), {}, false};
        for (Vertex v = 0; v < kWindow; ++v)
            if (a.window.count(v) && !b.window.count(v)) d.window.insert(v);
        check_consistency(d);

        Vertex x = Vertex(rng.below(kWindow));
        Modeled ins{a.set.insert(x), a.window, a.known_infinite};
        ins.window.insert(x);
        check_consistency(ins);
        Modeled ers{a.set.erase(x), a.window, a.known_infinite};
        ers.window.erase(x);
        check_consistency(ers);
    }
}

TEST_CASE("vset chained operations stay exact") {
    Rng rng(123);
    for (int trial = 0; trial < 80; ++trial) {
        Modeled acc = make_random(rng);
        for (int step = 0; step < 4; ++step) {
            Modeled next = make_random(rng);
            int op = int(rng.below(3));
            Modeled result;
            if (op == 0) {
                result.set = acc.set.unite(next.set);
                result.known_infinite = acc.known_infinite || next.known_infinite;
                for (Vertex v = 0; v < kWindow; ++v)
                    if (acc.window.count(v) || next.window.count(v)) result.window.insert(v);
            } else if (op == 1) {
                result.set = acc.set.intersect(next.set);
                for (Vertex v = 0; v < kWindow; ++v)
                    if (acc.window.count(v) && next.window.count(v)) result.window.insert(v);
            } else {
                result.set = acc.set.subtract(next.set);
                for (Vertex v = 0; v < kWindow; ++v)
                    if (acc.window.count(v) && !next.window.count(v)) result.window.insert(v);
            }
            for (Vertex v = 0; v < kWindow; ++v)
                REQUIRE(result.set.contains(v) == (result.window.count(v) > 0));
            acc = std::move(result);
        }
        check_consistency(acc);
    }
}

TEST_CASE("vset fincof round trips") {
    FinCofSet f = FinCofSet::cofinite({3, 9});
    VSet v = VSet::from_fincof(f);
    CHECK(v.infinite());
    CHECK(v.to_fincof() == f);
    FinCofSet g = FinCofSet::finite({4, 7, 11});
    CHECK(VSet::from_fincof(g).to_fincof() == g);
    CHECK(VSet::cantor_descendants(0).infinite());
    CHECK_THROWS_AS(VSet::cantor_descendants(0).to_fincof(), SizeBoundError);
}
