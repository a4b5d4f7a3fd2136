#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace evade {

using Vertex = std::uint32_t;

// Unordered vertex pair, stored normalized with u < v.
struct Pair {
    Vertex u = 0;
    Vertex v = 0;

    Pair() = default;
    Pair(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("Pair: endpoints must differ");
    }

    bool contains(Vertex x) const { return x == u || x == v; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    friend bool operator==(const Pair& a, const Pair& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const Pair& a, const Pair& b) { return !(a == b); }
    friend bool operator<(const Pair& a, const Pair& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

inline std::string to_string(const Pair& p) {
    return "{" + std::to_string(p.u) + "," + std::to_string(p.v) + "}";
}

struct PairHash {
    std::size_t operator()(const Pair& p) const noexcept {
        std::uint64_t x = (std::uint64_t(p.u) << 32) | p.v;
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

// Errors surfaced to callers; the CLI maps them to actionable messages.
struct SpecParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeBoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ProtocolViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic xorshift-based generator. std::mt19937 is portable but the
// distributions are not; this keeps seeded runs byte-identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        std::uint64_t x = state_;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        state_ = x;
        return x;
    }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    bool coin() { return next() & 1; }

private:
    std::uint64_t state_;
};

}  // namespace evade
