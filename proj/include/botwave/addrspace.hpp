// addrspace.hpp - target address and source port generation.
//
// Reproduces the Mirai scanner's address picker: draw a 32-bit value, split
// it into octets (low byte first), and redraw while the address falls in one
// of 13 hard-coded avoided ranges. Three of the ranges are implemented as the
// original code computes them, which differs from what its comments claim;
// those rules carry the discrepancy in their label.
//
// Scenarios can shrink the world to the low 2^k values of the draw so that a
// desk-scale population is actually discoverable; the avoided ranges still
// apply to whatever gets generated.
#pragma once

#include <cassert>
#include <cstdint>
#include <string_view>
#include <vector>

#include "botwave/ipv4.hpp"
#include "botwave/prng.hpp"

namespace botwave::addrspace {

struct ExclusionRule {
    std::string_view label;
    bool (*matches)(uint8_t o1, uint8_t o2);
};

// The 13 avoided ranges, in scanner order.
inline const std::vector<ExclusionRule>& exclusion_rules() {
    static const std::vector<ExclusionRule> rules = {
        {"127.0.0.0/8 - Loopback", [](uint8_t o1, uint8_t) { return o1 == 127; }},
        {"0.0.0.0/8 - Invalid address space", [](uint8_t o1, uint8_t) { return o1 == 0; }},
        {"3.0.0.0/8 - General Electric Company", [](uint8_t o1, uint8_t) { return o1 == 3; }},
        {"15.0.0.0/7 - Hewlett-Packard Company",
         [](uint8_t o1, uint8_t) { return o1 == 15 || o1 == 16; }},
        {"56.0.0.0/8 - US Postal Service", [](uint8_t o1, uint8_t) { return o1 == 56; }},
        {"10.0.0.0/8 - Internal network", [](uint8_t o1, uint8_t) { return o1 == 10; }},
        {"192.168.0.0/16 - Internal network",
         [](uint8_t o1, uint8_t o2) { return o1 == 192 && o2 == 168; }},
        {"172.16-31.x.x - Internal network (code range; comment claims 172.16.0.0/14)",
         [](uint8_t o1, uint8_t o2) { return o1 == 172 && o2 >= 16 && o2 < 32; }},
        {"100.64-126.x.x - IANA NAT reserved (code range; comment claims 100.64.0.0/10)",
         [](uint8_t o1, uint8_t o2) { return o1 == 100 && o2 >= 64 && o2 < 127; }},
        {"169.255.x.x - IANA NAT reserved (code tests o2 > 254; comment claims 169.254.0.0/16)",
         [](uint8_t o1, uint8_t o2) { return o1 == 169 && o2 > 254; }},
        {"198.18.0.0/15 - IANA Special use",
         [](uint8_t o1, uint8_t o2) { return o1 == 198 && o2 >= 18 && o2 < 20; }},
        {"224.0.0.0 and above - Multicast", [](uint8_t o1, uint8_t) { return o1 >= 224; }},
        {"Department of Defense",
         [](uint8_t o1, uint8_t) {
             return o1 == 6 || o1 == 7 || o1 == 11 || o1 == 21 || o1 == 22 || o1 == 26 ||
                    o1 == 28 || o1 == 29 || o1 == 30 || o1 == 33 || o1 == 55 || o1 == 214 ||
                    o1 == 215;
         }},
    };
    return rules;
}

inline bool is_excluded(uint8_t o1, uint8_t o2) {
    for (const auto& rule : exclusion_rules())
        if (rule.matches(o1, o2))
            return true;
    return false;
}

inline bool is_excluded(const Ipv4Addr& ip) { return is_excluded(ip.o1, ip.o2); }

// A scan world restricted to the low 2^bits values of the raw draw.
// bits = 32 is the full IPv4 space.
struct AddressSpace {
    int bits = 20;

    uint32_t mask() const {
        return bits >= 32 ? 0xffffffffu : ((uint32_t(1) << bits) - 1);
    }

    // Converts a raw draw into an address the way the scanner does:
    // low byte becomes the first octet.
    static Ipv4Addr octets_of(uint32_t draw) {
        return Ipv4Addr{uint8_t(draw & 0xff), uint8_t((draw >> 8) & 0xff),
                        uint8_t((draw >> 16) & 0xff), uint8_t((draw >> 24) & 0xff)};
    }

    bool contains(const Ipv4Addr& ip) const {
        uint32_t draw = uint32_t(ip.o1) | (uint32_t(ip.o2) << 8) | (uint32_t(ip.o3) << 16) |
                        (uint32_t(ip.o4) << 24);
        return (draw & ~mask()) == 0;
    }
};

// Number of non-excluded addresses the space can produce.
inline uint64_t usable_address_count(const AddressSpace& space) {
    // Exclusion only looks at (o1, o2), i.e. the low 16 bits of the draw.
    uint64_t total = uint64_t(1) << space.bits;
    uint64_t high_combos = space.bits > 16 ? (uint64_t(1) << (space.bits - 16)) : 1;
    uint64_t low_limit = space.bits >= 16 ? 65536 : (uint64_t(1) << space.bits);
    uint64_t allowed = 0;
    for (uint64_t low = 0; low < low_limit; ++low) {
        if (!is_excluded(uint8_t(low & 0xff), uint8_t((low >> 8) & 0xff)))
            ++allowed;
    }
    (void)total;
    return allowed * high_combos;
}

// Random source port >= 1024 (semantic value; no byte-order games).
inline uint16_t random_source_port(PrngState& s) {
    uint16_t port;
    do {
        port = uint16_t(prng_next(s) & 0xffff);
    } while (port < 1024);
    return port;
}

struct DrawStats {
    uint32_t redraws = 0;  // rejected draws before the accepted one
};

// Draw a non-excluded address from the space, redrawing on exclusion.
inline Ipv4Addr get_random_ip(PrngState& s, const AddressSpace& space = {32},
                              DrawStats* stats = nullptr) {
    uint32_t redraws = 0;
    for (;;) {
        uint32_t draw = prng_next(s) & space.mask();
        Ipv4Addr ip = AddressSpace::octets_of(draw);
        if (!is_excluded(ip)) {
            if (stats)
                stats->redraws = redraws;
            return ip;
        }
        ++redraws;
        assert(redraws < 4096 && "address space almost fully excluded");
    }
}

}  // namespace botwave::addrspace
