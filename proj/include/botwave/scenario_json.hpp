// scenario_json.hpp - scenario document parsing, normalization and the
// embedded preset library. Parsing is strict: any key the schema does not
// define is rejected by name.
#pragma once

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "botwave/scenario.hpp"

namespace botwave::engine {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

using nlohmann::json;

inline void require_keys(const json& obj, const std::string& where,
                         std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (auto a : allowed)
            if (a == key)
                ok = true;
        if (!ok)
            throw ParseError("unknown key \"" + key + "\" in " + where);
    }
}

template <typename T>
T get_as(const json& obj, const std::string& where, const std::string& key) {
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError("bad value for \"" + key + "\" in " + where + ": " + e.what());
    }
}

template <typename T>
void maybe(const json& obj, const std::string& where, const std::string& key, T& out) {
    if (obj.contains(key))
        out = get_as<T>(obj, where, key);
}

inline Ipv4Addr parse_addr(const std::string& text, const std::string& where) {
    auto ip = parse_ipv4(text);
    if (!ip)
        throw ParseError("bad IPv4 address \"" + text + "\" in " + where);
    return *ip;
}

inline botnet::Endpoint parse_endpoint(const std::string& text, const std::string& where) {
    auto colon = text.rfind(':');
    if (colon == std::string::npos)
        throw ParseError("bad endpoint \"" + text + "\" in " + where + " (want ip:port)");
    botnet::Endpoint ep;
    ep.address = parse_addr(text.substr(0, colon), where);
    try {
        int port = std::stoi(text.substr(colon + 1));
        if (port < 0 || port > 65535)
            throw std::out_of_range("port");
        ep.port = uint16_t(port);
    } catch (const std::exception&) {
        throw ParseError("bad endpoint port in \"" + text + "\" in " + where);
    }
    return ep;
}

inline population::DeviceProfile parse_profile(const std::string& name, const json& obj) {
    const std::string where = "profile \"" + name + "\"";
    require_keys(obj, where, {"product", "architecture", "open_ports", "credential", "cves"});
    std::string product = obj.contains("product") ? get_as<std::string>(obj, where, "product")
                                                  : name;
    std::string arch_name =
        obj.contains("architecture") ? get_as<std::string>(obj, where, "architecture") : "ARM";
    auto arch = population::parse_architecture(arch_name);
    if (!arch)
        throw ParseError("unknown architecture \"" + arch_name + "\" in " + where);
    std::vector<uint16_t> ports;
    if (obj.contains("open_ports"))
        ports = get_as<std::vector<uint16_t>>(obj, where, "open_ports");
    std::optional<exploits::Credential> credential;
    if (obj.contains("credential") && !obj.at("credential").is_null()) {
        auto pair = get_as<std::vector<std::string>>(obj, where, "credential");
        if (pair.size() != 2)
            throw ParseError("credential in " + where + " must be [username, password]");
        credential = exploits::Credential{pair[0], pair[1]};
    }
    std::vector<std::string> cves;
    if (obj.contains("cves"))
        cves = get_as<std::vector<std::string>>(obj, where, "cves");
    for (const auto& id : cves)
        if (!population::find_cve(id))
            throw ValidationError("unknown CVE \"" + id + "\" in " + where);
    try {
        return population::make_profile(name, product, *arch, ports, credential, cves);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
}

inline defense::DefensePolicy parse_defense(const json& obj, size_t index) {
    const std::string where = "defenses[" + std::to_string(index) + "]";
    require_keys(obj, where,
                 {"kind", "at", "profile", "fraction", "cve", "ports", "period_s", "delay_s"});
    defense::DefensePolicy policy;
    auto kind_name = get_as<std::string>(obj, where, "kind");
    auto kind = defense::parse_defense_kind(kind_name);
    if (!kind)
        throw ParseError("unknown defense kind \"" + kind_name + "\" in " + where);
    policy.kind = *kind;
    policy.at_s = get_as<double>(obj, where, "at");
    if (obj.contains("profile"))
        policy.selector.profile = get_as<std::string>(obj, where, "profile");
    if (obj.contains("fraction"))
        policy.selector.fraction = get_as<double>(obj, where, "fraction");
    maybe(obj, where, "cve", policy.cve);
    maybe(obj, where, "ports", policy.ports);
    maybe(obj, where, "period_s", policy.period_s);
    maybe(obj, where, "delay_s", policy.delay_s);
    return policy;
}

}  // namespace detail

using FileLoader = std::function<std::string(const std::string&)>;

inline std::string default_file_loader(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open command script: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<cnc::CncCommand> parse_command_script(const std::string& text) {
    std::vector<cnc::CncCommand> commands;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        try {
            commands.push_back(cnc::parse_command_line(line));
        } catch (const cnc::CommandError& e) {
            throw ParseError(e.what());
        }
    }
    return commands;
}

// Parses and validates a scenario document. All defaults are filled in;
// the result always passes validate_scenario.
inline Scenario parse_scenario(const std::string& text,
                               const FileLoader& loader = default_file_loader) {
    using detail::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("scenario document must be a JSON object");
    const std::string where = "scenario";
    detail::require_keys(
        doc, where,
        {"name", "description", "seed", "duration_s", "address_bits", "variant",
         "population", "profiles", "seed_bots", "scan_rate_pps", "latency_s",
         "per_bot_rate_mbps", "brute_try_cost_s", "sample_interval_s", "reboot_duration_s",
         "default_attack_duration_s", "stop_on_full_infection", "scan_dest_ports",
         "loader_endpoint", "command_endpoint", "defenses", "commands", "command_script",
         "exploit_success_prob"});

    Scenario sc;
    detail::maybe(doc, where, "name", sc.name);
    detail::maybe(doc, where, "description", sc.description);
    detail::maybe(doc, where, "seed", sc.seed);
    detail::maybe(doc, where, "duration_s", sc.duration_s);
    detail::maybe(doc, where, "address_bits", sc.address_bits);
    if (doc.contains("variant")) {
        auto name = detail::get_as<std::string>(doc, where, "variant");
        auto v = botnet::parse_variant(name);
        if (!v)
            throw ParseError("unknown variant \"" + name + "\"");
        sc.variant = *v;
    }

    sc.profiles = population::builtin_profiles();
    if (doc.contains("profiles")) {
        const auto& profs = doc.at("profiles");
        if (!profs.is_object())
            throw ParseError("\"profiles\" must be an object of name -> profile");
        for (const auto& [name, body] : profs.items()) {
            if (population::find_builtin_profile(name))
                throw ValidationError("profile \"" + name + "\" shadows a built-in preset");
            sc.profiles.push_back(detail::parse_profile(name, body));
            sc.user_profiles.push_back(name);
        }
    }

    if (doc.contains("population")) {
        const auto& groups = doc.at("population");
        if (!groups.is_array())
            throw ParseError("\"population\" must be an array of {profile, count}");
        for (size_t i = 0; i < groups.size(); ++i) {
            const std::string gw = "population[" + std::to_string(i) + "]";
            detail::require_keys(groups[i], gw, {"profile", "count"});
            population::PopulationGroup g;
            g.profile = detail::get_as<std::string>(groups[i], gw, "profile");
            g.count = detail::get_as<uint32_t>(groups[i], gw, "count");
            sc.population.push_back(std::move(g));
        }
    }

    if (doc.contains("seed_bots"))
        for (const auto& entry : detail::get_as<std::vector<std::string>>(doc, where,
                                                                          "seed_bots"))
            sc.seed_bots.push_back(detail::parse_addr(entry, "seed_bots"));

    detail::maybe(doc, where, "scan_rate_pps", sc.scan_rate_pps);
    detail::maybe(doc, where, "latency_s", sc.latency_s);
    detail::maybe(doc, where, "per_bot_rate_mbps", sc.per_bot_rate_mbps);
    detail::maybe(doc, where, "brute_try_cost_s", sc.brute_try_cost_s);
    detail::maybe(doc, where, "sample_interval_s", sc.sample_interval_s);
    detail::maybe(doc, where, "reboot_duration_s", sc.reboot_duration_s);
    detail::maybe(doc, where, "default_attack_duration_s", sc.default_attack_duration_s);
    detail::maybe(doc, where, "stop_on_full_infection", sc.stop_on_full_infection);
    detail::maybe(doc, where, "scan_dest_ports", sc.scan_dest_ports);
    if (doc.contains("loader_endpoint"))
        sc.loader_endpoint = detail::parse_endpoint(
            detail::get_as<std::string>(doc, where, "loader_endpoint"), "loader_endpoint");
    if (doc.contains("command_endpoint"))
        sc.command_endpoint = detail::parse_endpoint(
            detail::get_as<std::string>(doc, where, "command_endpoint"), "command_endpoint");

    if (doc.contains("defenses")) {
        const auto& defs = doc.at("defenses");
        if (!defs.is_array())
            throw ParseError("\"defenses\" must be an array");
        for (size_t i = 0; i < defs.size(); ++i)
            sc.defenses.push_back(detail::parse_defense(defs[i], i));
    }

    if (doc.contains("commands") && doc.contains("command_script"))
        throw ParseError("give either \"commands\" or \"command_script\", not both");
    if (doc.contains("commands")) {
        for (const auto& line :
             detail::get_as<std::vector<std::string>>(doc, where, "commands")) {
            try {
                sc.commands.push_back(cnc::parse_command_line(line));
            } catch (const cnc::CommandError& e) {
                throw ParseError(e.what());
            }
        }
    } else if (doc.contains("command_script")) {
        auto path = detail::get_as<std::string>(doc, where, "command_script");
        sc.commands = parse_command_script(loader(path));
    }
    std::stable_sort(sc.commands.begin(), sc.commands.end(),
                     [](const auto& a, const auto& b) { return a.at_s < b.at_s; });

    if (doc.contains("exploit_success_prob")) {
        const auto& probs = doc.at("exploit_success_prob");
        if (!probs.is_object())
            throw ParseError("\"exploit_success_prob\" must map CVE ids to probabilities");
        for (const auto& [cve, value] : probs.items()) {
            if (!value.is_number())
                throw ParseError("exploit_success_prob for " + cve + " must be a number");
            sc.exploit_success_prob[cve] = value.get<double>();
        }
    }

    validate_scenario(sc);
    return sc;
}

inline std::string format_command(const cnc::CncCommand& cmd) {
    char t[32];
    std::snprintf(t, sizeof t, "%g", cmd.at_s);
    std::string out = std::string("t=") + t + " " + cmd.verb;
    if (!cmd.target.empty())
        out += " " + cmd.target;
    std::snprintf(t, sizeof t, "%g", cmd.duration_s);
    out += std::string(" duration=") + t;
    for (const auto& [k, v] : cmd.options)
        out += " " + k + "=" + v;
    return out;
}

// Fully explicit document: parsing its dump yields the same scenario, and
// normalizing again yields the same document.
inline nlohmann::json normalize_scenario(const Scenario& sc) {
    using nlohmann::json;
    json doc;
    doc["name"] = sc.name;
    doc["description"] = sc.description;
    doc["seed"] = sc.seed;
    doc["duration_s"] = sc.duration_s;
    doc["address_bits"] = sc.address_bits;
    doc["variant"] = std::string(botnet::variant_name(sc.variant));
    json pop = json::array();
    for (const auto& g : sc.population)
        pop.push_back({{"profile", g.profile}, {"count", g.count}});
    doc["population"] = pop;
    json profiles = json::object();
    for (const auto& name : sc.user_profiles) {
        for (const auto& p : sc.profiles) {
            if (p.name != name)
                continue;
            json body;
            body["product"] = p.product;
            body["architecture"] = std::string(population::architecture_name(p.architecture));
            body["open_ports"] = p.open_ports;
            if (p.credential)
                body["credential"] =
                    std::vector<std::string>{p.credential->username, p.credential->password};
            else
                body["credential"] = nullptr;
            body["cves"] = p.cves;
            profiles[name] = body;
        }
    }
    doc["profiles"] = profiles;
    json seeds = json::array();
    for (const auto& addr : sc.seed_bots)
        seeds.push_back(addr.str());
    doc["seed_bots"] = seeds;
    doc["scan_rate_pps"] = sc.scan_rate_pps;
    doc["latency_s"] = sc.latency_s;
    doc["per_bot_rate_mbps"] = sc.per_bot_rate_mbps;
    doc["brute_try_cost_s"] = sc.brute_try_cost_s;
    doc["sample_interval_s"] = sc.sample_interval_s;
    doc["reboot_duration_s"] = sc.reboot_duration_s;
    doc["default_attack_duration_s"] = sc.default_attack_duration_s;
    doc["stop_on_full_infection"] = sc.stop_on_full_infection;
    doc["scan_dest_ports"] = sc.scan_dest_ports;
    doc["loader_endpoint"] = sc.loader_endpoint.str();
    doc["command_endpoint"] = sc.command_endpoint.str();
    json defs = json::array();
    for (const auto& d : sc.defenses) {
        json body;
        body["kind"] = std::string(defense::defense_kind_name(d.kind));
        body["at"] = d.at_s;
        if (d.selector.profile)
            body["profile"] = *d.selector.profile;
        if (d.selector.fraction)
            body["fraction"] = *d.selector.fraction;
        if (d.kind == defense::DefenseKind::PatchCve)
            body["cve"] = d.cve;
        if (d.kind == defense::DefenseKind::FilterPorts)
            body["ports"] = d.ports;
        if (d.kind == defense::DefenseKind::RebootSchedule)
            body["period_s"] = d.period_s;
        if (d.kind == defense::DefenseKind::AutoUpdate)
            body["delay_s"] = d.delay_s;
        defs.push_back(body);
    }
    doc["defenses"] = defs;
    json cmds = json::array();
    for (const auto& cmd : sc.commands)
        cmds.push_back(format_command(cmd));
    doc["commands"] = cmds;
    json probs = json::object();
    for (const auto& [cve, p] : sc.exploit_success_prob)
        probs[cve] = p;
    doc["exploit_success_prob"] = probs;
    return doc;
}

}  // namespace botwave::engine
