// botnet.hpp - per-bot state and the four infection stages: scan, break in,
// report, cover tracks.
#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "botwave/addrspace.hpp"
#include "botwave/exploits.hpp"
#include "botwave/variants.hpp"

namespace botwave::botnet {

enum class BotStage { Scanning, Probing, BruteForcing, Exploiting, Reporting, Idle, Attacking };

inline std::string_view bot_stage_name(BotStage s) {
    switch (s) {
        case BotStage::Scanning: return "scanning";
        case BotStage::Probing: return "probing";
        case BotStage::BruteForcing: return "bruteforcing";
        case BotStage::Exploiting: return "exploiting";
        case BotStage::Reporting: return "reporting";
        case BotStage::Idle: return "idle";
        case BotStage::Attacking: return "attacking";
    }
    return "?";
}

// Legal moves of the per-bot stage machine. Attacking is entered only on a
// C&C command, which the engine enforces at the dispatch site.
inline bool stage_transition_allowed(BotStage from, BotStage to) {
    if (to == BotStage::Attacking)
        return true;  // command-gated, any stage may be interrupted
    switch (from) {
        case BotStage::Scanning:
            return to == BotStage::Probing;
        case BotStage::Probing:
            return to == BotStage::BruteForcing || to == BotStage::Exploiting ||
                   to == BotStage::Scanning;
        case BotStage::BruteForcing:
        case BotStage::Exploiting:
            return to == BotStage::Reporting || to == BotStage::Scanning;
        case BotStage::Reporting:
            return to == BotStage::Idle || to == BotStage::Scanning;
        case BotStage::Idle:
            return to == BotStage::Scanning;
        case BotStage::Attacking:
            return to == BotStage::Scanning || to == BotStage::Idle;
    }
    return false;
}

struct BotState {
    Ipv4Addr host_address;
    VariantName variant = VariantName::Mirai;
    BotStage stage = BotStage::Scanning;
    std::string process_name;
    std::string displayed_process_name;
    bool covered_tracks = false;
    PrngState scan_prng;
    double scan_budget = 0.0;
    uint64_t probes_emitted = 0;
    std::vector<std::string> killed_services;
};

// Characters picked by PRNG index into the variant's 32-char seed alphabet.
inline std::string name_from_indices(std::string_view alphabet,
                                     const std::vector<uint32_t>& indices) {
    std::string out;
    out.reserve(indices.size());
    for (uint32_t i : indices)
        out.push_back(alphabet[i & 31]);
    return out;
}

inline std::string process_name(const VariantSpec& variant, PrngState& rng,
                                size_t length = 8) {
    if (length < 1)
        throw std::invalid_argument("process_name: length must be >= 1");
    std::string out;
    out.reserve(length);
    for (size_t i = 0; i < length; ++i)
        out.push_back(variant.seed_alphabet[prng_next(rng) & 31]);
    return out;
}

struct InfectionEvidence {
    enum class Kind { Loader, BruteForce, Exploit };
    Kind kind = Kind::Loader;
    exploits::Credential credential;  // BruteForce only
    std::string cve_id;               // Exploit only
};

struct ReportMessage {
    Ipv4Addr victim_ip;
    uint16_t port = 23;
    std::string username;
    std::string password;
    std::string rendered;
    Endpoint destination;
};

// Builds the check-in message a bot sends after breaking in. Mukashi's wire
// format is fixed; everything else reports "<ip>:<port> <user>:<pass>".
inline ReportMessage report_to_cnc(const VariantSpec& variant, Ipv4Addr victim,
                                   uint16_t port,
                                   const std::optional<InfectionEvidence>& evidence,
                                   Endpoint default_endpoint) {
    if (!evidence)
        throw std::invalid_argument("report_to_cnc: no infection evidence");
    ReportMessage msg;
    msg.victim_ip = victim;
    msg.port = port;
    if (evidence->kind == InfectionEvidence::Kind::BruteForce) {
        msg.username = evidence->credential.username;
        msg.password = evidence->credential.password;
    }
    if (variant.name == VariantName::Mukashi) {
        msg.rendered = victim.str() + ":23 " + msg.username + ":" + msg.password;
    } else {
        msg.rendered = victim.str() + ":" + std::to_string(port) + " " + msg.username + ":" +
                       msg.password;
    }
    msg.destination = variant.report_endpoint.value_or(default_endpoint);
    return msg;
}

struct InfectOutcome {
    enum class Result { Installed, AlreadyPresent, Unreachable, ArchitectureMismatch };
    Result result = Result::Installed;
    std::optional<BotState> bot;
    std::string console_log;  // printed by the malware, if any
};

// Runs the install + cover-tracks step against a device. The binary only
// installs through an exploit when the offered build matches the device
// architecture; the loader and successful logins push a matching build.
inline InfectOutcome infect(population::Device& device,
                            const population::DeviceProfile& profile,
                            const VariantSpec& variant, const InfectionEvidence& evidence,
                            PrngState& name_rng) {
    using Result = InfectOutcome::Result;
    InfectOutcome out;
    if (device.state == population::DeviceState::Offline ||
        device.state == population::DeviceState::Rebooting) {
        out.result = Result::Unreachable;
        return out;
    }
    if (variant.single_instance_port && device.port_bound(*variant.single_instance_port)) {
        out.result = Result::AlreadyPresent;
        if (variant.console_message)
            out.console_log = *variant.console_message;
        return out;
    }
    if (device.state == population::DeviceState::Infected) {
        out.result = Result::AlreadyPresent;
        return out;
    }
    if (evidence.kind == InfectionEvidence::Kind::Exploit &&
        !variant.supports_architecture(profile.architecture)) {
        out.result = Result::ArchitectureMismatch;
        return out;
    }

    device.state = population::DeviceState::Infected;
    if (variant.single_instance_port)
        device.bound_ports.push_back(*variant.single_instance_port);
    for (const auto& artifact : variant.dropped_artifacts) {
        bool present = false;
        for (const auto& a : device.artifacts)
            if (a == artifact)
                present = true;
        if (!present)
            device.artifacts.push_back(artifact);
    }

    BotState bot;
    bot.host_address = device.address;
    bot.variant = variant.name;
    bot.stage = BotStage::Scanning;
    bot.process_name = process_name(variant, name_rng);
    bot.displayed_process_name = variant.displayed_process_name.value_or(bot.process_name);
    bot.covered_tracks = true;  // binary deleted, process renamed
    out.result = Result::Installed;
    out.bot = std::move(bot);
    return out;
}

// Packet filters dropped on the device after a Sonic infection: SSH, HTTP
// and both telnet ports stop answering. Returns how many ports were newly
// filtered.
inline size_t sonic_port_block(population::Device& device) {
    size_t added = 0;
    for (uint16_t port : {uint16_t(22), uint16_t(80), uint16_t(23), uint16_t(2323)}) {
        if (!device.port_filtered(port)) {
            device.filtered_ports.push_back(port);
            ++added;
        }
    }
    return added;
}

struct ProbeRequest {
    Ipv4Addr target;
    uint16_t dest_port = 23;
    uint16_t source_port = 1024;
};

// Emits `count` SYN probes from the bot's scan stream. Destination ports
// rotate through the given list so every listed port gets probed; targets
// and source ports come from the bot's own PRNG.
inline std::vector<ProbeRequest> bot_scan_step(BotState& bot,
                                               const std::vector<uint16_t>& dest_ports,
                                               const addrspace::AddressSpace& space,
                                               uint32_t count) {
    std::vector<ProbeRequest> probes;
    probes.reserve(count);
    for (uint32_t i = 0; i < count; ++i) {
        ProbeRequest p;
        p.source_port = addrspace::random_source_port(bot.scan_prng);
        p.target = addrspace::get_random_ip(bot.scan_prng, space);
        p.dest_port = dest_ports[bot.probes_emitted % dest_ports.size()];
        ++bot.probes_emitted;
        probes.push_back(p);
    }
    return probes;
}

struct ScanResult {
    Ipv4Addr target;
    uint16_t port = 0;

    friend auto operator<=>(const ScanResult&, const ScanResult&) = default;
};

// C&C-side merge of coordinated scan results: bots scan together and the
// controller pieces the results into one deduplicated frontier.
inline std::set<ScanResult> shared_scan_frontier(
    const std::vector<std::vector<ScanResult>>& per_bot_results) {
    std::set<ScanResult> frontier;
    for (const auto& results : per_bot_results)
        frontier.insert(results.begin(), results.end());
    return frontier;
}

}  // namespace botwave::botnet
