// population.hpp - the emulated device population.
//
// Devices are records placed at distinct non-excluded addresses. Lifecycle
// state is one of Susceptible/Infected/Rebooting/Offline; patches and
// credential randomization are orthogonal attributes that survive reboots.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "botwave/addrspace.hpp"
#include "botwave/catalog.hpp"
#include "botwave/profiles.hpp"

namespace botwave::population {

enum class DeviceState { Susceptible, Infected, Rebooting, Offline };

inline std::string_view device_state_name(DeviceState s) {
    switch (s) {
        case DeviceState::Susceptible: return "susceptible";
        case DeviceState::Infected: return "infected";
        case DeviceState::Rebooting: return "rebooting";
        case DeviceState::Offline: return "offline";
    }
    return "?";
}

struct Device {
    Ipv4Addr address;
    uint16_t profile_index = 0;
    DeviceState state = DeviceState::Susceptible;
    CveMask patched = 0;
    bool credential_randomized = false;
    bool upnp_disabled = false;
    std::vector<uint16_t> filtered_ports;
    std::vector<uint16_t> bound_ports;     // single-instance locks
    std::vector<uint16_t> killed_ports;    // services stopped by "killer"
    std::vector<std::string> artifacts;    // files dropped by the infection

    bool port_filtered(uint16_t port) const {
        return std::find(filtered_ports.begin(), filtered_ports.end(), port) !=
               filtered_ports.end();
    }
    bool port_bound(uint16_t port) const {
        return std::find(bound_ports.begin(), bound_ports.end(), port) != bound_ports.end();
    }
    bool cve_patched(std::string_view id) const { return (patched & cve_bit(id)) != 0; }
};

struct PopulationGroup {
    std::string profile;
    uint32_t count = 0;
};

class Population {
public:
    Population() = default;
    Population(std::vector<DeviceProfile> profiles, std::vector<Device> devices)
        : profiles_(std::move(profiles)), devices_(std::move(devices)) {
        for (size_t i = 0; i < devices_.size(); ++i)
            index_.emplace(devices_[i].address.value(), i);
    }

    const std::vector<Device>& devices() const { return devices_; }
    std::vector<Device>& devices() { return devices_; }
    const std::vector<DeviceProfile>& profiles() const { return profiles_; }

    const DeviceProfile& profile_of(const Device& d) const {
        return profiles_[d.profile_index];
    }

    Device* device_at(const Ipv4Addr& ip) {
        auto it = index_.find(ip.value());
        return it == index_.end() ? nullptr : &devices_[it->second];
    }
    const Device* device_at(const Ipv4Addr& ip) const {
        auto it = index_.find(ip.value());
        return it == index_.end() ? nullptr : &devices_[it->second];
    }

    // Ports the device would answer on right now.
    bool port_reachable(const Device& d, uint16_t port) const {
        if (d.state == DeviceState::Offline || d.state == DeviceState::Rebooting)
            return false;
        const DeviceProfile& prof = profile_of(d);
        if (!prof.has_port(port))
            return false;
        if (d.upnp_disabled && port == 52869)
            return false;
        if (std::find(d.killed_ports.begin(), d.killed_ports.end(), port) !=
            d.killed_ports.end())
            return false;
        return !d.port_filtered(port);
    }

private:
    std::vector<DeviceProfile> profiles_;
    std::vector<Device> devices_;
    std::unordered_map<uint32_t, size_t> index_;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Places one device per group entry at a fresh random address. Addresses in
// `pinned` are assigned to the first devices in group order, which is how
// loader seed lists are guaranteed to land on real devices.
inline Population generate_population(const std::vector<DeviceProfile>& profiles,
                                      const std::vector<PopulationGroup>& groups,
                                      const addrspace::AddressSpace& space, uint64_t seed,
                                      const std::vector<Ipv4Addr>& pinned = {}) {
    uint64_t total = 0;
    std::vector<std::pair<uint16_t, uint32_t>> expanded;  // (profile index, count)
    for (const auto& g : groups) {
        auto it = std::find_if(profiles.begin(), profiles.end(),
                               [&](const DeviceProfile& p) { return p.name == g.profile; });
        if (it == profiles.end())
            throw ConfigError("unknown device profile: " + g.profile);
        expanded.emplace_back(uint16_t(it - profiles.begin()), g.count);
        total += g.count;
    }

    const uint64_t capacity = uint64_t(1) << space.bits;
    if (total > capacity)
        throw ConfigError("population of " + std::to_string(total) +
                          " devices exceeds the 2^" + std::to_string(space.bits) +
                          " address space");
    const uint64_t usable = addrspace::usable_address_count(space);
    if (total > usable)
        throw ConfigError("population of " + std::to_string(total) +
                          " devices exceeds the " + std::to_string(usable) +
                          " usable (non-excluded) addresses");
    if (pinned.size() > total)
        throw ConfigError("more pinned addresses than devices");

    std::vector<Device> devices;
    devices.reserve(total);
    std::unordered_map<uint32_t, size_t> used;
    for (const auto& ip : pinned) {
        if (addrspace::is_excluded(ip))
            throw ConfigError("pinned address " + ip.str() + " falls in an excluded range");
        if (!space.contains(ip))
            throw ConfigError("pinned address " + ip.str() + " is outside the 2^" +
                              std::to_string(space.bits) + " space");
        if (!used.emplace(ip.value(), used.size()).second)
            throw ConfigError("pinned address " + ip.str() + " listed twice");
    }

    PrngState rng = prng_substream(seed, "population");
    uint64_t draws = 0;
    const uint64_t draw_limit = 64 * total + 65536;
    size_t pin_cursor = 0;
    for (const auto& [profile_idx, count] : expanded) {
        for (uint32_t i = 0; i < count; ++i) {
            Device d;
            d.profile_index = profile_idx;
            if (pin_cursor < pinned.size()) {
                d.address = pinned[pin_cursor++];
            } else {
                for (;;) {
                    if (++draws > draw_limit)
                        throw ConfigError("population too dense for the address space");
                    Ipv4Addr ip = addrspace::get_random_ip(rng, space);
                    if (used.emplace(ip.value(), used.size()).second) {
                        d.address = ip;
                        break;
                    }
                }
            }
            devices.push_back(std::move(d));
        }
    }
    return Population(profiles, std::move(devices));
}

}  // namespace botwave::population
