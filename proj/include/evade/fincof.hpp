#pragma once

#include <optional>
#include <set>

#include "evade/core.hpp"

namespace evade {

// Finite or cofinite subset of the vertex set omega.
class FinCofSet {
public:
    static FinCofSet finite(std::set<Vertex> members) { return FinCofSet(false, std::move(members)); }
    static FinCofSet cofinite(std::set<Vertex> excluded) { return FinCofSet(true, std::move(excluded)); }
    static FinCofSet empty() { return finite({}); }
    static FinCofSet all() { return cofinite({}); }

    bool contains(Vertex v) const { return cofinite_ != (elems_.count(v) > 0); }
    bool is_cofinite() const { return cofinite_; }
    bool is_finite() const { return !cofinite_; }
    bool is_empty() const { return !cofinite_ && elems_.empty(); }

    // nullopt = infinite
    std::optional<std::size_t> cardinality() const {
        if (cofinite_) return std::nullopt;
        return elems_.size();
    }

    const std::set<Vertex>& members() const {
        if (cofinite_) throw std::logic_error("FinCofSet: cofinite set has no member list");
        return elems_;
    }
    const std::set<Vertex>& excluded() const {
        if (!cofinite_) throw std::logic_error("FinCofSet: finite set has no excluded list");
        return elems_;
    }

    FinCofSet complement() const { return FinCofSet(!cofinite_, elems_); }

    FinCofSet unite(const FinCofSet& o) const {
        if (!cofinite_ && !o.cofinite_) {
            std::set<Vertex> m = elems_;
            m.insert(o.elems_.begin(), o.elems_.end());
            return finite(std::move(m));
        }
        // union with a cofinite side is cofinite; excluded = excl1 minus other's members
        std::set<Vertex> ex;
        if (cofinite_ && o.cofinite_) {
            for (Vertex v : elems_)
                if (o.elems_.count(v)) ex.insert(v);
        } else {
            const FinCofSet& cof = cofinite_ ? *this : o;
            const FinCofSet& fin = cofinite_ ? o : *this;
            for (Vertex v : cof.elems_)
                if (!fin.elems_.count(v)) ex.insert(v);
        }
        return cofinite(std::move(ex));
    }

    FinCofSet intersect(const FinCofSet& o) const {
        return complement().unite(o.complement()).complement();
    }

    FinCofSet subtract(const FinCofSet& o) const { return intersect(o.complement()); }

    FinCofSet insert(Vertex v) const {
        FinCofSet r = *this;
        if (r.cofinite_) r.elems_.erase(v);
        else r.elems_.insert(v);
        return r;
    }
    FinCofSet erase(Vertex v) const {
        FinCofSet r = *this;
        if (r.cofinite_) r.elems_.insert(v);
        else r.elems_.erase(v);
        return r;
    }

    friend bool operator==(const FinCofSet& a, const FinCofSet& b) {
        return a.cofinite_ == b.cofinite_ && a.elems_ == b.elems_;
    }

private:
    FinCofSet(bool cof, std::set<Vertex> elems) : cofinite_(cof), elems_(std::move(elems)) {}

    bool cofinite_;
    std::set<Vertex> elems_;
};

}  // namespace evade
