#pragma once

#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "evade/cantor.hpp"
#include "evade/fincof.hpp"

namespace evade {

// Classified vertex set: explicit members plus structural parts (residue
// classes over a range, Cantor subtrees) and finite edits. Supports exact
// membership, union/intersection/difference, a finite/infinite cardinality
// classifier, and ordered lazy enumeration.
//
// Structural parts carry a half-open id range [lo, hi) (hi may be unbounded)
// and a residue mask; Cantor parts additionally restrict to the strict
// descendants of a root. Minus-subtrees punch branch-shaped holes.
class VSet {
    static constexpr std::uint32_t kMaxMod = 64;
    static constexpr int kMaxCoverDepth = 20;
    static constexpr std::uint64_t kInf = ~std::uint64_t(0);

    struct Part {
        bool is_desc = false;   // restrict to strict descendants of `root`
        Vertex root = 0;
        std::uint64_t lo = 0;
        std::uint64_t hi = kInf;  // exclusive
        std::uint32_t mod = 1;
        std::uint64_t mask = 1;   // bit r: residue r (mod `mod`) included
        std::vector<Vertex> minus_desc;  // subtrees (inclusive) removed
    };

public:
    VSet() = default;

    static VSet empty() { return VSet(); }
    static VSet all() { return tail_from(0); }
    static VSet of(const std::vector<Vertex>& members) {
        VSet s;
        s.incl_.insert(members.begin(), members.end());
        return s;
    }
    static VSet single(Vertex v) { return of({v}); }
    static VSet tail_from(std::uint64_t lo) {
        VSet s;
        s.parts_.push_back({false, 0, lo, kInf, 1, 1, {}});
        return s;
    }
    static VSet range(std::uint64_t lo, std::uint64_t hi) {
        VSet s;
        if (lo < hi) s.parts_.push_back({false, 0, lo, hi, 1, 1, {}});
        return s;
    }
    static VSet residue_tail(std::uint64_t lo, std::uint32_t mod, std::uint64_t mask) {
        check_mod(mod);
        VSet s;
        mask &= low_bits(mod);
        if (mask) s.parts_.push_back({false, 0, lo, kInf, mod, mask, {}});
        return s;
    }
    static VSet cantor_descendants(Vertex root) {
        VSet s;
        s.parts_.push_back({true, root, 0, kInf, 1, 1, {}});
        return s;
    }
    static VSet from_fincof(const FinCofSet& f) {
        if (f.is_finite()) {
            VSet s;
            s.incl_.insert(f.members().begin(), f.members().end());
            return s;
        }
        VSet s = all();
        for (Vertex v : f.excluded()) s = s.erase(v);
        return s;
    }

    bool contains(Vertex v) const {
        if (incl_.count(v)) return true;
        if (excl_.count(v)) return false;
        for (const Part& p : parts_)
            if (part_contains(p, v)) return true;
        return false;
    }

    bool infinite() const {
        for (const Part& p : parts_)
            if (part_alive(p)) return true;
        return false;
    }

    bool empty_set() const { return !infinite() && !next_member(0).has_value(); }

    std::size_t finite_size() const {
        if (infinite()) throw SizeBoundError("VSet: finite_size of infinite set");
        std::size_t n = 0;
        for_each([&](Vertex) { ++n; }, kNoLimit);
        return n;
    }

    std::vector<Vertex> materialize(std::size_t cap = 1u << 20) const {
        if (infinite()) throw SizeBoundError("VSet: materialize of infinite set");
        std::vector<Vertex> out;
        for_each([&](Vertex v) { out.push_back(v); }, cap);
        if (out.size() >= cap) throw SizeBoundError("VSet: materialize cap exceeded");
        return out;
    }

    // smallest member >= from, if any
    std::optional<Vertex> next_member(Vertex from) const {
        for (int guard = 0; guard < (1 << 20); ++guard) {
            std::optional<Vertex> best;
            auto it = incl_.lower_bound(from);
            if (it != incl_.end()) best = *it;
            for (const Part& p : parts_) {
                auto c = part_next(p, from, best);
                if (c && (!best || *c < *best)) best = c;
            }
            if (!best) return std::nullopt;
            if (excl_.count(*best) && !incl_.count(*best)) {
                from = *best + 1;
                continue;
            }
            return best;
        }
        throw SizeBoundError("VSet: next_member guard exceeded");
    }

    static constexpr std::size_t kNoLimit = ~std::size_t(0);

    // ascending visit; pass a finite limit for possibly-infinite sets
    template <class F>
    void for_each(F f, std::size_t limit) const {
        std::size_t n = 0;
        Vertex from = 0;
        while (n < limit) {
            auto v = next_member(from);
            if (!v) return;
            f(*v);
            ++n;
            if (*v == ~Vertex(0)) return;
            from = *v + 1;
        }
    }

    bool at_least(std::size_t k) const {
        if (k == 0) return true;
        if (infinite()) return true;
        std::size_t n = 0;
        for_each([&](Vertex) { ++n; }, k);
        return n >= k;
    }

    // exact count clamped at cap ("cap" meaning: result == cap may be larger)
    std::size_t count_clamped(std::size_t cap) const {
        if (infinite()) return cap;
        std::size_t n = 0;
        for_each([&](Vertex) { ++n; }, cap);
        return n;
    }

    VSet insert(Vertex v) const {
        VSet r = *this;
        r.excl_.erase(v);
        if (!r.contains(v)) r.incl_.insert(v);
        return r;
    }

    VSet erase(Vertex v) const {
        VSet r = *this;
        r.incl_.erase(v);
        if (r.contains(v)) r.excl_.insert(v);
        return r;
    }

    VSet unite(const VSet& o) const {
        VSet r;
        r.parts_ = parts_;
        r.parts_.insert(r.parts_.end(), o.parts_.begin(), o.parts_.end());
        r.incl_ = incl_;
        r.incl_.insert(o.incl_.begin(), o.incl_.end());
        for (Vertex v : excl_)
            if (!o.contains(v)) r.excl_.insert(v);
        for (Vertex v : o.excl_)
            if (!contains(v)) r.excl_.insert(v);
        for (Vertex v : r.incl_) r.excl_.erase(v);
        return r;
    }

    VSet intersect(const VSet& o) const {
        VSet r;
        for (const Part& p : parts_)
            for (const Part& q : o.parts_) {
                auto c = part_intersect(p, q);
                if (c) r.parts_.push_back(std::move(*c));
            }
        for (Vertex v : incl_)
            if (o.contains(v)) r.incl_.insert(v);
        for (Vertex v : o.incl_)
            if (contains(v)) r.incl_.insert(v);
        for (Vertex v : excl_)
            if (!r.incl_.count(v)) r.excl_.insert(v);
        for (Vertex v : o.excl_)
            if (!r.incl_.count(v)) r.excl_.insert(v);
        return r;
    }

    VSet subtract(const VSet& o) const {
        VSet r;
        std::vector<Vertex> addback;
        std::vector<Part> work = parts_;
        for (const Part& q : o.parts_) {
            std::vector<Part> next;
            for (const Part& p : work) part_subtract(p, q, next, addback);
            work = std::move(next);
        }
        r.parts_ = std::move(work);
        for (Vertex v : incl_)
            if (!o.contains(v)) r.incl_.insert(v);
        for (Vertex v : addback)
            if (contains(v) && !o.contains(v)) r.incl_.insert(v);
        for (Vertex v : o.excl_)
            if (contains(v)) r.incl_.insert(v);
        for (Vertex v : excl_)
            if (!r.incl_.count(v)) r.excl_.insert(v);
        for (Vertex v : o.incl_)
            if (!r.incl_.count(v)) r.excl_.insert(v);
        return r;
    }

    // Exact conversion; throws if the set is infinite but not cofinite-shaped.
    FinCofSet to_fincof(Vertex probe_window = 4096) const {
        if (!infinite()) {
            std::set<Vertex> m;
            for_each([&](Vertex v) { m.insert(v); }, kNoLimit);
            return FinCofSet::finite(std::move(m));
        }
        for (const Part& p : parts_) {
            if (!p.is_desc && p.hi == kInf && p.mod == 1 && p.mask == 1 &&
                p.minus_desc.empty()) {
                std::set<Vertex> ex;
                for (Vertex v = 0; v < p.lo; ++v)
                    if (!contains(v)) ex.insert(v);
                for (Vertex v : excl_)
                    if (!contains(v)) ex.insert(v);
                return FinCofSet::cofinite(std::move(ex));
            }
        }
        (void)probe_window;
        throw SizeBoundError("VSet: not finite-or-cofinite representable");
    }

private:
    static std::uint64_t low_bits(std::uint32_t n) {
        return n >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    }
    static void check_mod(std::uint32_t mod) {
        if (mod == 0 || mod > kMaxMod) throw SizeBoundError("VSet: modulus out of range");
    }
    static std::uint32_t lcm_mod(std::uint32_t a, std::uint32_t b) {
        std::uint32_t l = std::lcm(a, b);
        check_mod(l);
        return l;
    }
    static std::uint64_t expand_mask(std::uint64_t mask, std::uint32_t mod, std::uint32_t to) {
        std::uint64_t out = 0;
        for (std::uint32_t r = 0; r < to; ++r)
            if (mask >> (r % mod) & 1) out |= std::uint64_t(1) << r;
        return out;
    }
    static bool under(Vertex root, Vertex v) {  // inclusive subtree membership
        return v == root || cantor::strict_ancestor(root, v);
    }
    static bool under_any(const std::vector<Vertex>& roots, Vertex v) {
        for (Vertex r : roots)
            if (under(r, v)) return true;
        return false;
    }

    static bool part_contains(const Part& p, Vertex v) {
        if (v < p.lo || std::uint64_t(v) >= p.hi) return false;
        if (!(p.mask >> (v % p.mod) & 1)) return false;
        if (p.is_desc && !cantor::strict_ancestor(p.root, v)) return false;
        return !under_any(p.minus_desc, v);
    }

    // is the structural part infinite?
    static bool part_alive(const Part& p) {
        if (p.hi != kInf || !p.mask) return false;
        if (!p.is_desc) {
            if (p.minus_desc.empty()) return true;
            return !branches_covered(p.minus_desc, 0, false);
        }
        for (Vertex m : p.minus_desc)
            if (under(m, p.root)) return false;  // whole subtree removed
        if (p.minus_desc.empty()) return true;
        return !branches_covered(p.minus_desc, p.root, true);
    }

    // Do the minus roots block every branch below the base? If so only
    // bounded-depth vertices survive.
    static bool branches_covered(const std::vector<Vertex>& minus, Vertex base,
                                 bool within_subtree) {
        int based = within_subtree ? cantor::depth(base) : 0;
        int rel = 0;
        for (Vertex m : minus) {
            if (within_subtree && !under(base, m)) continue;
            rel = std::max(rel, cantor::depth(m) - based);
        }
        if (rel > kMaxCoverDepth) throw SizeBoundError("VSet: cover depth too large");
        std::uint64_t first = within_subtree ? cantor::level_first(base, rel)
                                             : cantor::depth_first(rel);
        std::uint64_t last = within_subtree ? cantor::level_last(base, rel)
                                            : cantor::depth_last(rel);
        for (std::uint64_t v = first; v <= last; ++v)
            if (!under_any(minus, Vertex(v))) return false;
        return true;
    }

    // smallest member of the part >= from (ignoring global excl_), bounded by
    // the current best candidate
    static std::optional<Vertex> part_next(const Part& p, Vertex from,
                                           std::optional<Vertex> best) {
        if (!p.mask) return std::nullopt;
        std::uint64_t start = std::max<std::uint64_t>(from, p.lo);
        bool alive_checked = false, alive = false;
        for (int guard = 0; guard < 1 << 16; ++guard) {
            if (start >= p.hi) return std::nullopt;
            if (best && start >= *best) return std::nullopt;
            std::uint64_t cand = kInf;
            if (!p.is_desc) {
                for (std::uint32_t r = 0; r < p.mod; ++r) {
                    if (!(p.mask >> r & 1)) continue;
                    std::uint64_t v = start + ((r + p.mod - start % p.mod) % p.mod);
                    cand = std::min(cand, v);
                }
            } else {
                // scan level runs of the subtree
                cand = kInf;
                for (int j = 1; j <= 40 && cand == kInf; ++j) {
                    std::uint64_t first = cantor::level_first(p.root, j);
                    std::uint64_t last = cantor::level_last(p.root, j);
                    if (last < start) continue;
                    if (first > std::uint64_t(~Vertex(0)))
                        throw SizeBoundError("VSet: subtree ids exceed vertex space");
                    std::uint64_t s = std::max(start, first);
                    for (std::uint32_t r = 0; r < p.mod; ++r) {
                        if (!(p.mask >> r & 1)) continue;
                        std::uint64_t v = s + ((r + p.mod - s % p.mod) % p.mod);
                        if (v <= last) cand = std::min(cand, v);
                    }
                    if (cand == kInf) start = last + 1;  // nothing in this level
                }
            }
            if (cand == kInf || cand >= p.hi) return std::nullopt;
            if (best && cand >= *best) return std::nullopt;
            bool blocked = false;
            for (Vertex m : p.minus_desc) {
                if (under(m, Vertex(cand))) {
                    int j = cantor::depth(Vertex(cand)) - cantor::depth(m);
                    start = std::uint64_t(cantor::level_last(m, j)) + 1;
                    blocked = true;
                    break;
                }
            }
            if (!blocked) return Vertex(cand);
            if (!alive_checked) {
                alive_checked = true;
                alive = part_alive(p);
            }
            if (!alive && guard > 1024) return std::nullopt;
        }
        throw SizeBoundError("VSet: enumeration guard exceeded");
    }

    static std::optional<Part> part_intersect(const Part& a, const Part& b) {
        Part c;
        c.lo = std::max(a.lo, b.lo);
        c.hi = std::min(a.hi, b.hi);
        if (c.lo >= c.hi) return std::nullopt;
        c.mod = lcm_mod(a.mod, b.mod);
        c.mask = expand_mask(a.mask, a.mod, c.mod) & expand_mask(b.mask, b.mod, c.mod);
        if (!c.mask) return std::nullopt;
        c.minus_desc = a.minus_desc;
        c.minus_desc.insert(c.minus_desc.end(), b.minus_desc.begin(), b.minus_desc.end());
        if (a.is_desc && b.is_desc) {
            if (a.root == b.root || cantor::strict_ancestor(b.root, a.root)) {
                c.is_desc = true;
                c.root = a.root;
            } else if (cantor::strict_ancestor(a.root, b.root)) {
                c.is_desc = true;
                c.root = b.root;
            } else {
                return std::nullopt;
            }
        } else if (a.is_desc || b.is_desc) {
            c.is_desc = true;
            c.root = a.is_desc ? a.root : b.root;
        }
        return c;
    }

    // p minus q, emitting surviving parts; vertices q structurally removes but
    // actually misses (q's own holes, q's strict root) are collected for
    // explicit add-back by the caller.
    static void part_subtract(const Part& p, const Part& q, std::vector<Part>& out,
                              std::vector<Vertex>& addback) {
        // regions of p outside q's range survive unchanged
        if (q.lo > p.lo) {
            Part left = p;
            left.hi = std::min(p.hi, q.lo);
            if (left.lo < left.hi) out.push_back(left);
        }
        if (q.hi < p.hi) {
            Part right = p;
            right.lo = std::max(p.lo, q.hi);
            if (right.lo < right.hi) out.push_back(right);
        }
        std::uint64_t lo = std::max(p.lo, q.lo), hi = std::min(p.hi, q.hi);
        if (lo >= hi) return;

        // inside the shared range
        std::uint32_t mod = lcm_mod(p.mod, q.mod);
        std::uint64_t pm = expand_mask(p.mask, p.mod, mod);
        std::uint64_t qm = expand_mask(q.mask, q.mod, mod);

        auto clipped = [&](Part base) {
            base.lo = lo;
            base.hi = hi;
            base.mod = mod;
            return base;
        };

        if (!q.is_desc) {
            // residues q leaves alone
            Part main = clipped(p);
            main.mask = pm & ~qm;
            if (main.mask) out.push_back(main);
            // q's minus-subtree holes stay in p
            for (Vertex m : q.minus_desc) {
                Part hole = clipped(p);
                hole.mask = pm & qm;
                if (!hole.mask) continue;
                if (hole.is_desc) {
                    if (m == hole.root || cantor::strict_ancestor(hole.root, m)) hole.root = m;
                    else if (!under(m, hole.root)) continue;  // disjoint subtrees
                    // else m above root: hole.root unchanged (whole part inside m)
                } else {
                    hole.is_desc = true;
                    hole.root = m;
                }
                out.push_back(hole);
                addback.push_back(m);  // subtree minus is inclusive; root itself too
            }
            // part of p with q's residues outside the holes is removed; done
            return;
        }

        // q is a subtree part
        for (Vertex m : q.minus_desc) {
            if (under(m, q.root)) {
                // q's own minus removes its entire subtree: q is empty here
                Part keep = clipped(p);
                keep.mask = pm;
                if (keep.mask) out.push_back(keep);
                return;
            }
        }
        if (p.is_desc && !(q.root == p.root || under(q.root, p.root) || under(p.root, q.root))) {
            Part main = clipped(p);
            main.mask = pm;
            if (main.mask) out.push_back(main);  // disjoint subtrees: untouched
            return;
        }
        // residues q does not remove survive inside q's subtree as well
        Part main_keep = clipped(p);
        main_keep.mask = pm & ~qm;
        if (main_keep.mask) out.push_back(main_keep);
        // for residues q removes: p survives outside subtree(q.root)
        Part outside = clipped(p);
        outside.mask = pm & qm;
        if (outside.mask) {
            bool whole_part_inside =
                p.is_desc && (q.root == p.root || under(q.root, p.root));
            if (!whole_part_inside) {
                outside.minus_desc.push_back(q.root);
                out.push_back(outside);
            }
            // q is strict: its root is not removed
            addback.push_back(q.root);
            // q's own holes survive inside the subtree
            for (Vertex m : q.minus_desc) {
                Part hole = clipped(p);
                hole.mask = pm & qm;
                Vertex hole_root;
                if (under(q.root, m)) hole_root = m;
                else if (under(m, q.root)) hole_root = q.root;
                else continue;
                if (hole.is_desc) {
                    if (hole_root == hole.root || cantor::strict_ancestor(hole.root, hole_root)) {
                        hole.root = hole_root;
                    } else if (!under(hole_root, hole.root)) {
                        continue;
                    }
                } else {
                    hole.is_desc = true;
                    hole.root = hole_root;
                }
                out.push_back(hole);
                addback.push_back(hole_root);
            }
        }
    }

    std::set<Vertex> incl_;
    std::set<Vertex> excl_;
    std::vector<Part> parts_;
};

}  // namespace evade
