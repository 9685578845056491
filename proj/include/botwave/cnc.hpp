// cnc.hpp - the command-and-control side: bot registry, the decoded command
// set and the aggregate flood-throughput model.
#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "botwave/botnet.hpp"

namespace botwave::cnc {

struct CommandError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommandVerbInfo {
    std::string_view verb;
    std::string_view description;
    bool is_flood;
    bool unspecified_semantics;
};

// The decoded C&C command set. ".udphex" is listed with no documented
// behavior; dispatching it still succeeds and produces a flood tagged as
// unspecified so runs stay total.
inline const std::vector<CommandVerbInfo>& command_verbs() {
    static const std::vector<CommandVerbInfo> verbs = {
        {".http", "HTTP flood", true, false},
        {".tcp", "Normal TCP scan", true, false},
        {".tcpbypass", "TCP scan that can bypass Firewall rules", true, false},
        {".udp", "UDP flood with more options", true, false},
        {".udpbypass", "UDP scan that can bypass firewall rules", true, false},
        {".udphex", "udphex-unspecified", true, true},
        {".udpplain", "UDP flood with fewer options, optimized for higher PPS", true, false},
        {".udprand", "UDP flood with randomized port and packet content", true, false},
        {"killallbots", "kill all the bots under the control of C&C", false, false},
        {"killer", "killing specific service", false, false},
        {"PING", "Ping flood", true, false},
        {"scanner", "process responsible for scanning", false, false},
    };
    return verbs;
}

inline const CommandVerbInfo* find_verb(std::string_view verb) {
    for (const auto& v : command_verbs())
        if (v.verb == verb)
            return &v;
    return nullptr;
}

struct CncCommand {
    double at_s = 0;
    std::string verb;
    std::string target;
    double duration_s = 60;
    std::map<std::string, std::string> options;
};

// Script line format: "t=<seconds> <verb> <target> [k=v ...]".
inline CncCommand parse_command_line(const std::string& line) {
    std::vector<std::string> tokens;
    std::string tok;
    for (char c : line) {
        if (c == ' ' || c == '\t') {
            if (!tok.empty())
                tokens.push_back(std::exchange(tok, {}));
        } else {
            tok.push_back(c);
        }
    }
    if (!tok.empty())
        tokens.push_back(tok);
    if (tokens.size() < 2 || tokens[0].rfind("t=", 0) != 0)
        throw CommandError("bad command line (want \"t=<seconds> <verb> [target] [k=v ...]\"): " +
                           line);
    CncCommand cmd;
    try {
        cmd.at_s = std::stod(tokens[0].substr(2));
    } catch (const std::exception&) {
        throw CommandError("bad command time in: " + line);
    }
    cmd.verb = tokens[1];
    if (!find_verb(cmd.verb))
        throw CommandError("unknown command verb: " + cmd.verb);
    size_t next = 2;
    if (tokens.size() > 2 && tokens[2].find('=') == std::string::npos) {
        cmd.target = tokens[2];
        next = 3;
    }
    for (size_t i = next; i < tokens.size(); ++i) {
        auto eq = tokens[i].find('=');
        if (eq == std::string::npos)
            throw CommandError("bad option (want k=v): " + tokens[i]);
        cmd.options[tokens[i].substr(0, eq)] = tokens[i].substr(eq + 1);
    }
    if (auto it = cmd.options.find("duration"); it != cmd.options.end())
        cmd.duration_s = std::stod(it->second);
    return cmd;
}

// Aggregate flood rate in bits per second. Integer arithmetic so that
// throughput is exactly linear in the bot count.
inline uint64_t attack_throughput(uint64_t bot_count, double per_bot_rate_mbps) {
    if (per_bot_rate_mbps < 0)
        throw std::invalid_argument("attack_throughput: negative rate");
    const uint64_t per_bot_bps = uint64_t(std::llround(per_bot_rate_mbps * 1e6));
    return bot_count * per_bot_bps;
}

struct AttackRecord {
    std::string verb;
    std::string target;
    std::string description;
    uint64_t participating_bots = 0;
    double per_bot_rate_mbps = 0;
    uint64_t aggregate_bps = 0;
    double start_s = 0;
    double end_s = 0;
    std::vector<Ipv4Addr> bots;
};

struct RegistryEntry {
    botnet::VariantName variant = botnet::VariantName::Mirai;
    std::string username;
    std::string password;
};

struct BotTask {
    Ipv4Addr bot;
    std::string action;  // "flood", "scan", "kill-service", "terminate"
    std::string detail;
};

struct DispatchOutcome {
    std::vector<BotTask> tasks;
    std::optional<AttackRecord> attack;
};

class CommandCenter {
public:
    size_t register_bot(const botnet::ReportMessage& report, botnet::VariantName variant) {
        registry_.emplace(report.victim_ip.value(),
                          RegistryEntry{variant, report.username, report.password});
        return registry_.size();
    }

    size_t size() const { return registry_.size(); }
    bool contains(Ipv4Addr addr) const { return registry_.count(addr.value()) != 0; }
    void remove(Ipv4Addr addr) { registry_.erase(addr.value()); }

    std::vector<Ipv4Addr> bots() const {
        std::vector<Ipv4Addr> out;
        out.reserve(registry_.size());
        for (const auto& [addr, entry] : registry_)
            out.push_back(Ipv4Addr::from_value(addr));
        return out;
    }

    // Coordinated-scan frontier. Returns true when the result is new.
    bool frontier_add(Ipv4Addr target, uint16_t port) {
        return frontier_.insert((uint64_t(target.value()) << 16) | port).second;
    }
    void frontier_forget(Ipv4Addr target) {
        for (auto it = frontier_.begin(); it != frontier_.end();) {
            if ((*it >> 16) == target.value())
                it = frontier_.erase(it);
            else
                ++it;
        }
    }
    size_t frontier_size() const { return frontier_.size(); }

    // Turns a command into per-bot tasks. Registry mutation is limited to
    // killallbots, which empties it; reverting the devices themselves is the
    // caller's job (the C&C only knows addresses).
    DispatchOutcome dispatch_command(const CncCommand& cmd, double now,
                                     double per_bot_rate_mbps) {
        const CommandVerbInfo* info = find_verb(cmd.verb);
        if (!info)
            throw CommandError("unknown command verb: " + cmd.verb);
        DispatchOutcome out;
        if (info->is_flood) {
            if (registry_.empty())
                throw CommandError("no registered bots for " + cmd.verb);
            AttackRecord rec;
            rec.verb = cmd.verb;
            rec.target = cmd.target;
            rec.description = std::string(info->description);
            rec.participating_bots = registry_.size();
            rec.per_bot_rate_mbps = per_bot_rate_mbps;
            rec.aggregate_bps = attack_throughput(registry_.size(), per_bot_rate_mbps);
            rec.start_s = now;
            rec.end_s = now + cmd.duration_s;
            for (const auto& [addr, entry] : registry_) {
                rec.bots.push_back(Ipv4Addr::from_value(addr));
                out.tasks.push_back({Ipv4Addr::from_value(addr), "flood",
                                     cmd.verb + " " + std::string(info->description)});
            }
            out.attack = std::move(rec);
        } else if (cmd.verb == "scanner") {
            for (const auto& [addr, entry] : registry_)
                out.tasks.push_back({Ipv4Addr::from_value(addr), "scan", "resume scanning"});
        } else if (cmd.verb == "killer") {
            for (const auto& [addr, entry] : registry_)
                out.tasks.push_back({Ipv4Addr::from_value(addr), "kill-service", cmd.target});
        } else if (cmd.verb == "killallbots") {
            for (const auto& [addr, entry] : registry_)
                out.tasks.push_back({Ipv4Addr::from_value(addr), "terminate", ""});
            registry_.clear();
            frontier_.clear();
        }
        return out;
    }

private:
    std::map<uint32_t, RegistryEntry> registry_;
    std::set<uint64_t> frontier_;
};

// Service labels a "killer" command understands.
inline std::vector<uint16_t> killer_service_ports(const std::string& service) {
    if (service == "telnet")
        return {23, 2323};
    if (service == "ssh")
        return {22};
    if (service == "http")
        return {80};
    try {
        int port = std::stoi(service);
        if (port > 0 && port < 65536)
            return {uint16_t(port)};
    } catch (const std::exception&) {
    }
    return {};
}

}  // namespace botwave::cnc
