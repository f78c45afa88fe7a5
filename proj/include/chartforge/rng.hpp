#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "chartforge/util.hpp"

namespace chartforge {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// PCG-XSH-RR 64/32. Self-contained so streams are bit-identical on every
// platform; the standard library distributions make no such promise.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0xda3e39cb94b95bdbull) {
        inc_ = (stream << 1u) | 1u;
        state_ = 0;
        next_u32();
        state_ += seed;
        next_u32();
    }

    std::uint32_t next_u32() {
        std::uint64_t old = state_;
        state_ = old * 6364136223846793005ull + inc_;
        std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    std::uint64_t next_u64() {
        std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // Unbiased bounded draw (rejection sampling).
    std::uint32_t below(std::uint32_t bound) {
        if (bound <= 1) return 0;
        std::uint32_t threshold = (0u - bound) % bound;
        for (;;) {
            std::uint32_t r = next_u32();
            if (r >= threshold) return r % bound;
        }
    }

    // [0,1) with 53 random bits.
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

    bool bernoulli(double p) { return unit() < p; }

    // Inclusive integer range.
    int range(int lo, int hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<int>(below(static_cast<std::uint32_t>(hi - lo + 1)));
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(static_cast<std::uint32_t>(v.size()))];
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(static_cast<std::uint32_t>(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Weighted pick over cumulative weights; weights need not be normalized.
    std::size_t pick_weighted(const std::vector<double>& weights) {
        double total = 0;
        for (double w : weights) total += w;
        double x = unit() * total;
        double acc = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (x < acc) return i;
        }
        return weights.empty() ? 0 : weights.size() - 1;
    }

private:
    std::uint64_t state_ = 0;
    std::uint64_t inc_ = 0;
};

// Derives child stream seeds from a master seed and a path of tags, e.g.
// stream_seed(master, {"compose"}, {stage, chart_index}). The same path
// always yields the same stream, which is what makes any pipeline item
// regenerable in isolation (and the whole corpus byte-identical on rerun).
class StreamPath {
public:
    explicit StreamPath(std::uint64_t master) : h_(0x9e3779b97f4a7c15ull ^ master) {
        h_ = splitmix64(h_);
    }

    StreamPath& tag(std::string_view s) {
        h_ = splitmix64(fnv1a64(s, h_));
        return *this;
    }

    StreamPath& tag(std::uint64_t v) {
        h_ = splitmix64(h_ ^ (v * 0xff51afd7ed558ccdull + 0x2545f4914f6cdd1dull));
        return *this;
    }

    std::uint64_t seed() const { return h_; }

    Rng rng() const { return Rng(h_, splitmix64(h_ ^ 0x5851f42d4c957f2dull)); }

private:
    std::uint64_t h_;
};

inline Rng stream_rng(std::uint64_t master, std::string_view tag_name,
                      std::uint64_t a = 0, std::uint64_t b = 0) {
    StreamPath p(master);
    p.tag(tag_name).tag(a).tag(b);
    return p.rng();
}

} // namespace chartforge
