// defense.hpp - timed mitigation interventions applied to the population.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "botwave/population.hpp"
#include "botwave/prng.hpp"

namespace botwave::defense {

enum class DefenseKind {
    RandomizeCredentials,
    PatchCve,
    FilterPorts,
    DisableUpnp,
    RebootSchedule,
    TakeOffline,
    AutoUpdate,
};

inline std::string_view defense_kind_name(DefenseKind k) {
    switch (k) {
        case DefenseKind::RandomizeCredentials: return "randomize_credentials";
        case DefenseKind::PatchCve: return "patch_cve";
        case DefenseKind::FilterPorts: return "filter_ports";
        case DefenseKind::DisableUpnp: return "disable_upnp";
        case DefenseKind::RebootSchedule: return "reboot_schedule";
        case DefenseKind::TakeOffline: return "take_offline";
        case DefenseKind::AutoUpdate: return "auto_update";
    }
    return "?";
}

inline std::optional<DefenseKind> parse_defense_kind(std::string_view name) {
    for (DefenseKind k :
         {DefenseKind::RandomizeCredentials, DefenseKind::PatchCve, DefenseKind::FilterPorts,
          DefenseKind::DisableUpnp, DefenseKind::RebootSchedule, DefenseKind::TakeOffline,
          DefenseKind::AutoUpdate})
        if (defense_kind_name(k) == name)
            return k;
    return std::nullopt;
}

// Which devices a policy touches: optionally one profile, optionally a
// deterministic pseudo-random fraction of that set.
struct DeviceSelector {
    std::optional<std::string> profile;
    std::optional<double> fraction;  // in [0,1]
};

struct DefensePolicy {
    DefenseKind kind = DefenseKind::RandomizeCredentials;
    DeviceSelector selector;
    double at_s = 0;
    std::string cve;                // PatchCve
    std::vector<uint16_t> ports;    // FilterPorts
    double period_s = 3600;         // RebootSchedule
    double delay_s = 86400;         // AutoUpdate
};

inline std::vector<size_t> select_devices(const population::Population& pop,
                                          const DeviceSelector& sel, uint64_t seed,
                                          uint64_t policy_ordinal) {
    std::vector<size_t> out;
    const auto& devices = pop.devices();
    for (size_t i = 0; i < devices.size(); ++i) {
        if (sel.profile && pop.profile_of(devices[i]).name != *sel.profile)
            continue;
        if (sel.fraction) {
            PrngState h = prng_substream(seed, "defense-select", policy_ordinal,
                                         devices[i].address.value());
            if (prng_unit(h) >= *sel.fraction)
                continue;
        }
        out.push_back(i);
    }
    return out;
}

// Reboot: memory-resident malware is gone, runtime config resets; patches
// and changed credentials persist. Offline devices stay offline.
inline void reboot_device(population::Device& d) {
    if (d.state == population::DeviceState::Infected ||
        d.state == population::DeviceState::Rebooting)
        d.state = population::DeviceState::Susceptible;
    d.bound_ports.clear();
    d.filtered_ports.clear();
    d.killed_ports.clear();
    d.artifacts.clear();
}

struct ScheduledPatch {
    double at_s = 0;
    Ipv4Addr device;
    std::string cve;
};

struct RebootPlan {
    std::vector<Ipv4Addr> devices;
    double first_at_s = 0;
    double period_s = 0;
};

struct PolicyApplication {
    size_t changed = 0;
    std::vector<ScheduledPatch> patches;   // delayed AutoUpdate patches
    std::optional<RebootPlan> reboots;     // periodic reboot schedule
};

// Applies a policy to the selected devices at time `now`. Deferred effects
// (scheduled reboots, delayed patches) are returned for the caller to queue.
inline PolicyApplication apply_policy(population::Population& pop,
                                      const DefensePolicy& policy, double now,
                                      uint64_t seed, uint64_t policy_ordinal) {
    PolicyApplication result;
    auto selected = select_devices(pop, policy.selector, seed, policy_ordinal);
    if (selected.empty())
        return result;

    switch (policy.kind) {
        case DefenseKind::RandomizeCredentials:
            for (size_t i : selected) {
                if (!pop.devices()[i].credential_randomized) {
                    pop.devices()[i].credential_randomized = true;
                    ++result.changed;
                }
            }
            break;
        case DefenseKind::PatchCve: {
            population::CveMask bit = population::cve_bit(policy.cve);
            for (size_t i : selected) {
                if ((pop.devices()[i].patched & bit) == 0) {
                    pop.devices()[i].patched |= bit;
                    ++result.changed;
                }
            }
            break;
        }
        case DefenseKind::FilterPorts:
            for (size_t i : selected) {
                auto& d = pop.devices()[i];
                bool touched = false;
                for (uint16_t port : policy.ports) {
                    if (!d.port_filtered(port)) {
                        d.filtered_ports.push_back(port);
                        touched = true;
                    }
                }
                if (touched)
                    ++result.changed;
            }
            break;
        case DefenseKind::DisableUpnp:
            for (size_t i : selected) {
                if (!pop.devices()[i].upnp_disabled) {
                    pop.devices()[i].upnp_disabled = true;
                    ++result.changed;
                }
            }
            break;
        case DefenseKind::RebootSchedule: {
            RebootPlan plan;
            for (size_t i : selected)
                plan.devices.push_back(pop.devices()[i].address);
            plan.first_at_s = now + policy.period_s;
            plan.period_s = policy.period_s;
            result.changed = selected.size();
            result.reboots = std::move(plan);
            break;
        }
        case DefenseKind::TakeOffline:
            for (size_t i : selected) {
                if (pop.devices()[i].state != population::DeviceState::Offline) {
                    pop.devices()[i].state = population::DeviceState::Offline;
                    ++result.changed;
                }
            }
            break;
        case DefenseKind::AutoUpdate:
            // Every already-published vulnerability gets patched after the
            // update delay; zero-days have no fix to ship.
            for (size_t i : selected) {
                for (const auto& rec : population::cve_catalog()) {
                    if (rec.zero_day || rec.date_published.empty())
                        continue;
                    result.patches.push_back(
                        {now + policy.delay_s, pop.devices()[i].address, rec.id});
                }
                ++result.changed;
            }
            break;
    }
    return result;
}

}  // namespace botwave::defense
