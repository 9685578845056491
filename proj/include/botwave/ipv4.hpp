// ipv4.hpp - dotted-quad address value type.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace botwave {

struct Ipv4Addr {
    uint8_t o1 = 0;
    uint8_t o2 = 0;
    uint8_t o3 = 0;
    uint8_t o4 = 0;

    constexpr uint32_t value() const {
        return (uint32_t(o1) << 24) | (uint32_t(o2) << 16) | (uint32_t(o3) << 8) | o4;
    }

    static constexpr Ipv4Addr from_value(uint32_t v) {
        return Ipv4Addr{uint8_t(v >> 24), uint8_t(v >> 16), uint8_t(v >> 8), uint8_t(v)};
    }

    friend constexpr auto operator<=>(const Ipv4Addr& a, const Ipv4Addr& b) {
        return a.value() <=> b.value();
    }
    friend constexpr bool operator==(const Ipv4Addr&, const Ipv4Addr&) = default;

    std::string str() const {
        return std::to_string(o1) + "." + std::to_string(o2) + "." +
               std::to_string(o3) + "." + std::to_string(o4);
    }
};

inline std::optional<Ipv4Addr> parse_ipv4(const std::string& text) {
    unsigned parts[4];
    int idx = 0;
    size_t pos = 0;
    while (idx < 4) {
        if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos])))
            return std::nullopt;
        unsigned v = 0;
        size_t digits = 0;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + unsigned(text[pos] - '0');
            ++pos;
            if (++digits > 3 || v > 255)
                return std::nullopt;
        }
        parts[idx++] = v;
        if (idx < 4) {
            if (pos >= text.size() || text[pos] != '.')
                return std::nullopt;
            ++pos;
        }
    }
    if (pos != text.size())
        return std::nullopt;
    return Ipv4Addr{uint8_t(parts[0]), uint8_t(parts[1]), uint8_t(parts[2]), uint8_t(parts[3])};
}

}  // namespace botwave
