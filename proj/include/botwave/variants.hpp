// variants.hpp - per-variant behavior registry: scan targets, exploit sets,
// hard-coded endpoints and the evasion quirks each strain is known for.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "botwave/exploits.hpp"
#include "botwave/ipv4.hpp"
#include "botwave/profiles.hpp"

namespace botwave::botnet {

enum class VariantName { Mirai, Satori, Mukashi, Moobot, Sonic };

inline std::string_view variant_name(VariantName v) {
    switch (v) {
        case VariantName::Mirai: return "mirai";
        case VariantName::Satori: return "satori";
        case VariantName::Mukashi: return "mukashi";
        case VariantName::Moobot: return "moobot";
        case VariantName::Sonic: return "sonic";
    }
    return "?";
}

inline std::optional<VariantName> parse_variant(std::string_view name) {
    for (VariantName v : {VariantName::Mirai, VariantName::Satori, VariantName::Mukashi,
                          VariantName::Moobot, VariantName::Sonic})
        if (variant_name(v) == name)
            return v;
    return std::nullopt;
}

struct Endpoint {
    Ipv4Addr address;
    uint16_t port = 0;

    std::string str() const { return address.str() + ":" + std::to_string(port); }
    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

inline constexpr std::string_view kMiraiSeedAlphabet = "abcdefghijklmnopqrstuvw012345678";
inline constexpr std::string_view kMoobotSeedAlphabet = "w5q6he3dbrsgmclkiu4to18npavj702f";

struct VariantSpec {
    VariantName name = VariantName::Mirai;
    std::string english_translation;
    int year_of_discovery = 2016;
    std::optional<uint32_t> estimated_bots;
    std::vector<uint16_t> scan_dest_ports;
    std::vector<uint16_t> brute_ports;  // where the dictionary is tried
    std::vector<std::string> exploit_cves;
    bool uses_credential_dictionary = true;
    std::string seed_alphabet{kMiraiSeedAlphabet};
    std::optional<uint16_t> single_instance_port;
    std::optional<Endpoint> report_endpoint;
    std::optional<Endpoint> command_endpoint;
    std::optional<Endpoint> download_endpoint;
    std::vector<std::string> dropped_artifacts;
    bool coordinated_scanning = false;
    std::optional<std::string> console_message;
    std::optional<std::string> displayed_process_name;
    bool blocks_ports_after_infection = false;
    std::vector<population::Architecture> supported_architectures{
        std::begin(population::kAllArchitectures), std::end(population::kAllArchitectures)};

    size_t known_exploit_count() const {
        size_t n = 0;
        for (const auto& id : exploit_cves) {
            const auto* rec = population::find_cve(id);
            if (rec && !rec->zero_day)
                ++n;
        }
        return n;
    }
    size_t zero_day_count() const { return exploit_cves.size() - known_exploit_count(); }

    bool supports_architecture(population::Architecture a) const {
        for (auto s : supported_architectures)
            if (s == a)
                return true;
        return false;
    }
};

inline const std::vector<VariantSpec>& variant_registry() {
    static const std::vector<VariantSpec> registry = [] {
        std::vector<VariantSpec> r(5);

        VariantSpec& mirai = r[0];
        mirai.name = VariantName::Mirai;
        mirai.english_translation = "Future";
        mirai.year_of_discovery = 2016;
        mirai.estimated_bots = 493000;
        mirai.scan_dest_ports = {23, 2323};
        mirai.brute_ports = {23, 2323};

        VariantSpec& satori = r[1];
        satori.name = VariantName::Satori;
        satori.english_translation = "Awakening";
        satori.year_of_discovery = 2017;
        satori.estimated_bots = 280000;
        satori.scan_dest_ports = {23, 2323, 37215, 52869};
        satori.brute_ports = {23, 2323};
        satori.exploit_cves = {"CVE-2014-8361", "CVE-2017-17215", "CVE-2020-9020"};
        satori.download_endpoint = Endpoint{Ipv4Addr{198, 23, 238, 203}, 80};
        satori.command_endpoint = Endpoint{Ipv4Addr{198, 23, 238, 203}, 5684};
        satori.dropped_artifacts = {"arm7"};

        VariantSpec& mukashi = r[2];
        mukashi.name = VariantName::Mukashi;
        mukashi.english_translation = "Olden Days";
        mukashi.year_of_discovery = 2020;
        mukashi.scan_dest_ports = {23, 2323};
        mukashi.brute_ports = {23, 2323};
        mukashi.exploit_cves = {"CVE-2020-9054"};
        mukashi.single_instance_port = 23448;
        mukashi.report_endpoint = Endpoint{Ipv4Addr{45, 84, 196, 75}, 34834};
        mukashi.command_endpoint = Endpoint{Ipv4Addr{45, 84, 196, 75}, 4864};
        mukashi.console_message = "Protecting your device from further infection";

        VariantSpec& moobot = r[3];
        moobot.name = VariantName::Moobot;
        moobot.year_of_discovery = 2019;
        moobot.estimated_bots = 18705;
        // DVRIP / ADB / HTTP / TELNET
        moobot.scan_dest_ports = {34567, 5555, 80, 23};
        moobot.brute_ports = {23};
        moobot.exploit_cves = {"CVE-2021-36260", "CVE-2020-10987", "CVE-2020-8515",
                               "CVE-2020-5722",  "CVE-2017-8225",  "CVE-2017-17215"};
        moobot.seed_alphabet = std::string(kMoobotSeedAlphabet);
        moobot.coordinated_scanning = true;
        moobot.displayed_process_name = "/var/Sofia";

        VariantSpec& sonic = r[4];
        sonic.name = VariantName::Sonic;
        sonic.year_of_discovery = 2021;
        sonic.scan_dest_ports = {22, 80, 443};
        sonic.brute_ports = {22};  // nbrute + combo.txt against SSH
        sonic.exploit_cves = {"VisualDoor",     "CVE-2020-25506", "CVE-2021-27561",
                              "CVE-2021-27562", "CVE-2021-22502", "CVE-2019-19356",
                              "CVE-2020-26919", "ZeroDay-1",      "ZeroDay-2",
                              "ZeroDay-3"};
        sonic.dropped_artifacts = {"lolol.sh", "install.sh", "nbrute", "combo.txt", "nginx"};
        sonic.blocks_ports_after_infection = true;
        return r;
    }();
    return registry;
}

inline const VariantSpec& variant_spec(VariantName name) {
    return variant_registry()[size_t(name)];
}

}  // namespace botwave::botnet
