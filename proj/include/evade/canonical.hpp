#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evade/finite_graph.hpp"

namespace evade {

namespace detail {

// Canonical form of a symmetric vertex-pair class matrix (values 0..3):
// the lexicographically smallest upper-triangle readout over all relabelings,
// found by iterated color refinement plus backtracking over target cells.
class ClassMatrixCanonicalizer {
public:
    ClassMatrixCanonicalizer(int n, const std::vector<std::uint8_t>& mat) : n_(n), mat_(mat) {}

    std::string run() {
        if (n_ == 0) return std::string(1, '\0');
        std::vector<int> colors(n_, 0);
        refine(colors);
        descend(colors);
        std::string key;
        key.push_back(static_cast<char>(n_));
        key += best_;
        return key;
    }

private:
    std::uint8_t at(int u, int v) const { return mat_[u * n_ + v]; }

    void refine(std::vector<int>& colors) const {
        int color_count = count_colors(colors);
        for (;;) {
            // signature: old color, then sorted (pair class, neighbor color)
            std::vector<std::vector<std::uint32_t>> sigs(n_);
            for (int v = 0; v < n_; ++v) {
                auto& s = sigs[v];
                s.reserve(n_);
                s.push_back(static_cast<std::uint32_t>(colors[v]));
                std::vector<std::uint32_t> nb;
                nb.reserve(n_ - 1);
                for (int u = 0; u < n_; ++u)
                    if (u != v)
                        nb.push_back((std::uint32_t(at(v, u)) << 24) |
                                     static_cast<std::uint32_t>(colors[u]));
                std::sort(nb.begin(), nb.end());
                s.insert(s.end(), nb.begin(), nb.end());
            }
            std::vector<int> order(n_);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return sigs[a] < sigs[b]; });
            int next = -1;
            const std::vector<std::uint32_t>* prev = nullptr;
            for (int v : order) {
                if (!prev || sigs[v] != *prev) {
                    ++next;
                    prev = &sigs[v];
                }
                colors[v] = next;
            }
            int new_count = next + 1;
            if (new_count == color_count) return;
            color_count = new_count;
        }
    }

    static int count_colors(const std::vector<int>& colors) {
        int m = -1;
        for (int c : colors) m = std::max(m, c);
        return m + 1;
    }

    void descend(std::vector<int> colors) {
        // find first non-singleton color class
        int target_color = -1;
        std::vector<int> cell;
        for (int c = 0;; ++c) {
            cell.clear();
            for (int v = 0; v < n_; ++v)
                if (colors[v] == c) cell.push_back(v);
            if (cell.empty()) break;
            if (cell.size() > 1) {
                target_color = c;
                break;
            }
        }
        if (target_color == -1) {
            emit_leaf(colors);
            return;
        }
        for (int chosen : cell) {
            std::vector<int> next(n_);
            for (int v = 0; v < n_; ++v)
                next[v] = colors[v] * 2 + (v == chosen ? 0 : 1);
            rerank(next);
            refine(next);
            descend(std::move(next));
        }
    }

    static void rerank(std::vector<int>& colors) {
        std::vector<int> sorted(colors);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int& c : colors)
            c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) -
                                 sorted.begin());
    }

    void emit_leaf(const std::vector<int>& colors) {
        std::vector<int> perm(n_);  // perm[new position] = vertex
        for (int v = 0; v < n_; ++v) perm[colors[v]] = v;
        std::string s;
        s.reserve(n_ * (n_ - 1) / 2);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                s.push_back(static_cast<char>(at(perm[i], perm[j])));
        if (best_.empty() || s < best_) best_ = std::move(s);
    }

    int n_;
    const std::vector<std::uint8_t>& mat_;
    std::string best_;
};

}  // namespace detail

inline constexpr int kDefaultCanonicalMaxN = 8;

// Pair classes: 0 = not allowed, 1 = undetermined, 2 = edge, 3 = nonedge.
// Keys are equal exactly when some relabeling maps one class matrix onto the
// other; relabelings that preserve the class matrix fix the allowed graph.
inline std::string canonical_key(const FinitePregraph& g,
                                 int max_n = kDefaultCanonicalMaxN) {
    int n = g.vertex_count();
    if (n > max_n)
        throw SizeBoundError("canonical_key: unsupported size n=" + std::to_string(n) +
                             " (bound " + std::to_string(max_n) + ")");
    std::vector<std::uint8_t> mat(n * n, 0);
    for (const Pair& e : g.allowed().edges()) {
        std::uint8_t cls = 1;
        if (g.edges().count(e)) cls = 2;
        else if (g.nonedges().count(e)) cls = 3;
        mat[e.u * n + e.v] = cls;
        mat[e.v * n + e.u] = cls;
    }
    return detail::ClassMatrixCanonicalizer(n, mat).run();
}

// Canonical form of a plain graph (classes: edge / non-edge).
inline std::string canonical_graph_key(const FiniteGraph& g,
                                       int max_n = kDefaultCanonicalMaxN) {
    int n = g.vertex_count();
    if (n > max_n)
        throw SizeBoundError("canonical_graph_key: unsupported size n=" + std::to_string(n) +
                             " (bound " + std::to_string(max_n) + ")");
    std::vector<std::uint8_t> mat(n * n, 0);
    for (const Pair& e : g.edges()) {
        mat[e.u * n + e.v] = 2;
        mat[e.v * n + e.u] = 2;
    }
    return detail::ClassMatrixCanonicalizer(n, mat).run();
}

}  // namespace evade
