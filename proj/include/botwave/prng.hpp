// prng.hpp - xorshift128 generator state and derived substreams.
//
// Every random decision in a run is drawn from an explicit PrngState value.
// Substreams are derived by hashing a (seed, tag, keys...) tuple so that
// independent parts of a simulation never share a stream.
#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace botwave {

struct PrngState {
    uint32_t x = 0x6b8b4567;
    uint32_t y = 0x327b23c6;
    uint32_t z = 0x643c9869;
    uint32_t w = 0x66334873;

    friend bool operator==(const PrngState&, const PrngState&) = default;

    bool all_zero() const { return x == 0 && y == 0 && z == 0 && w == 0; }
};

// One step of the classic xorshift128 (shift constants 11/8/19).
inline uint32_t prng_next(PrngState& s) {
    uint32_t t = s.x;
    t ^= t << 11;
    t ^= t >> 8;
    s.x = s.y;
    s.y = s.z;
    s.z = s.w;
    s.w ^= s.w >> 19;
    s.w ^= t;
    return s.w;
}

inline PrngState prng_seed(uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
    PrngState s{a, b, c, d};
    if (s.all_zero())
        s = PrngState{};  // the all-zero state is a fixpoint of the step
    return s;
}

namespace detail {

inline uint64_t splitmix64(uint64_t& h) {
    h += 0x9e3779b97f4a7c15ull;
    uint64_t z = h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline uint64_t mix_in(uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

inline uint64_t hash_tag(std::string_view tag) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace detail

// Deterministic substream keyed by a tag and up to four integer keys.
// Distinct keys give unrelated streams; the same key always gives the
// same stream, regardless of what other streams were consumed.
inline PrngState prng_substream(uint64_t seed, std::string_view tag,
                                uint64_t k0 = 0, uint64_t k1 = 0,
                                uint64_t k2 = 0, uint64_t k3 = 0) {
    uint64_t h = detail::mix_in(detail::hash_tag(tag), seed);
    h = detail::mix_in(h, k0);
    h = detail::mix_in(h, k1);
    h = detail::mix_in(h, k2);
    h = detail::mix_in(h, k3);
    uint64_t a = detail::splitmix64(h);
    uint64_t b = detail::splitmix64(h);
    return prng_seed(static_cast<uint32_t>(a), static_cast<uint32_t>(a >> 32),
                     static_cast<uint32_t>(b), static_cast<uint32_t>(b >> 32));
}

// Unbiased draw in [0, n) by rejection.
inline uint32_t prng_below(PrngState& s, uint32_t n) {
    if (n == 0)
        return 0;
    const uint32_t limit = 0xffffffffu - 0xffffffffu % n;
    uint32_t v;
    do {
        v = prng_next(s);
    } while (v >= limit);
    return v % n;
}

// Uniform double in [0, 1).
inline double prng_unit(PrngState& s) {
    return prng_next(s) * (1.0 / 4294967296.0);
}

}  // namespace botwave
