// scenario.hpp - the validated run configuration the engine executes.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "botwave/cnc.hpp"
#include "botwave/defense.hpp"
#include "botwave/population.hpp"
#include "botwave/variants.hpp"

namespace botwave::engine {

struct Scenario {
    std::string name;
    std::string description;
    uint64_t seed = 1;
    double duration_s = 3600;
    int address_bits = 20;
    botnet::VariantName variant = botnet::VariantName::Mirai;
    std::vector<population::PopulationGroup> population;
    // resolved profile set: built-ins plus any defined by the document
    std::vector<population::DeviceProfile> profiles = population::builtin_profiles();
    std::vector<std::string> user_profiles;  // names defined by the document
    std::vector<Ipv4Addr> seed_bots;                  // loader seed list
    double scan_rate_pps = 100.0;
    double latency_s = 0.05;
    double per_bot_rate_mbps = 7.5862;  // OVH calibration
    double brute_try_cost_s = 1.0;
    double sample_interval_s = 10.0;
    double reboot_duration_s = 0.0;
    double default_attack_duration_s = 60.0;
    bool stop_on_full_infection = false;
    std::vector<uint16_t> scan_dest_ports;  // empty = variant default
    botnet::Endpoint loader_endpoint{Ipv4Addr{203, 0, 113, 7}, 48101};
    botnet::Endpoint command_endpoint{Ipv4Addr{203, 0, 113, 7}, 23};
    std::vector<defense::DefensePolicy> defenses;
    std::vector<cnc::CncCommand> commands;
    std::map<std::string, double> exploit_success_prob;  // per-CVE override

    uint64_t device_count() const {
        uint64_t n = 0;
        for (const auto& g : population)
            n += g.count;
        return n;
    }

    const std::vector<uint16_t>& effective_scan_ports() const {
        return scan_dest_ports.empty() ? botnet::variant_spec(variant).scan_dest_ports
                                       : scan_dest_ports;
    }
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void validate_scenario(const Scenario& sc) {
    if (sc.duration_s <= 0)
        throw ValidationError("duration_s must be positive");
    if (sc.address_bits < 8 || sc.address_bits > 32)
        throw ValidationError("address_bits must be in [8, 32]");
    if (sc.seed_bots.empty())
        throw ValidationError("loader seed list (seed_bots) must not be empty");
    if (sc.population.empty())
        throw ValidationError("population must not be empty");
    if (sc.scan_rate_pps <= 0)
        throw ValidationError("scan_rate_pps must be positive");
    if (sc.latency_s < 0 || sc.brute_try_cost_s < 0)
        throw ValidationError("latency_s and brute_try_cost_s must be non-negative");
    if (sc.sample_interval_s <= 0)
        throw ValidationError("sample_interval_s must be positive");
    if (sc.per_bot_rate_mbps < 0)
        throw ValidationError("per_bot_rate_mbps must be non-negative");
    if (sc.seed_bots.size() > sc.device_count())
        throw ValidationError("more seed bots than devices");
    for (const auto& g : sc.population) {
        bool known = false;
        for (const auto& p : sc.profiles)
            if (p.name == g.profile)
                known = true;
        if (!known)
            throw ValidationError("population references unknown profile: " + g.profile);
    }
    for (const auto& p : sc.profiles)
        for (const auto& id : p.cves)
            if (!population::find_cve(id))
                throw ValidationError("profile " + p.name + " references unknown CVE: " + id);
    for (const auto& d : sc.defenses) {
        if (d.at_s < 0)
            throw ValidationError("defense time must be non-negative");
        if (d.selector.fraction && (*d.selector.fraction < 0 || *d.selector.fraction > 1))
            throw ValidationError("defense selector fraction must be in [0, 1]");
        if (d.kind == defense::DefenseKind::PatchCve && !population::find_cve(d.cve))
            throw ValidationError("patch_cve defense references unknown CVE: " + d.cve);
        if (d.kind == defense::DefenseKind::FilterPorts && d.ports.empty())
            throw ValidationError("filter_ports defense needs a port list");
        if (d.kind == defense::DefenseKind::RebootSchedule && d.period_s <= 0)
            throw ValidationError("reboot_schedule period must be positive");
        if (d.selector.profile) {
            bool known = false;
            for (const auto& p : sc.profiles)
                if (p.name == *d.selector.profile)
                    known = true;
            if (!known)
                throw ValidationError("defense selector references unknown profile: " +
                                      *d.selector.profile);
        }
    }
    for (const auto& cmd : sc.commands) {
        if (!cnc::find_verb(cmd.verb))
            throw ValidationError("unknown command verb: " + cmd.verb);
        if (cmd.at_s < 0)
            throw ValidationError("command time must be non-negative");
    }
    for (const auto& [cve, prob] : sc.exploit_success_prob) {
        if (!population::find_cve(cve))
            throw ValidationError("exploit_success_prob references unknown CVE: " + cve);
        if (prob < 0 || prob > 1)
            throw ValidationError("exploit_success_prob must be in [0, 1]");
    }
}

}  // namespace botwave::engine
