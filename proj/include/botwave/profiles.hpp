// profiles.hpp - device profile presets, one per cataloged product family
// plus a couple of plain telnet endpoints for dictionary-only scenarios.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "botwave/catalog.hpp"
#include "botwave/credentials.hpp"

namespace botwave::population {

enum class Architecture { ARM, ARM7, MIPS, PowerPC, sh4, SPARC, m68k, x86_64, x86_32 };

inline constexpr Architecture kAllArchitectures[] = {
    Architecture::ARM,   Architecture::ARM7,   Architecture::MIPS,
    Architecture::PowerPC, Architecture::sh4,  Architecture::SPARC,
    Architecture::m68k,  Architecture::x86_64, Architecture::x86_32,
};

inline std::string_view architecture_name(Architecture a) {
    switch (a) {
        case Architecture::ARM: return "ARM";
        case Architecture::ARM7: return "ARM7";
        case Architecture::MIPS: return "MIPS";
        case Architecture::PowerPC: return "PowerPC";
        case Architecture::sh4: return "sh4";
        case Architecture::SPARC: return "SPARC";
        case Architecture::m68k: return "m68k";
        case Architecture::x86_64: return "x86_64";
        case Architecture::x86_32: return "x86_32";
    }
    return "?";
}

inline std::optional<Architecture> parse_architecture(std::string_view name) {
    for (Architecture a : kAllArchitectures)
        if (architecture_name(a) == name)
            return a;
    return std::nullopt;
}

struct DeviceProfile {
    std::string name;
    std::string product;
    Architecture architecture = Architecture::ARM;
    std::vector<uint16_t> open_ports;
    std::optional<exploits::Credential> credential;
    std::vector<std::string> cves;
    std::vector<std::string> endpoints;

    bool has_port(uint16_t port) const {
        return std::find(open_ports.begin(), open_ports.end(), port) != open_ports.end();
    }
    bool has_endpoint(const std::string& key) const {
        return std::find(endpoints.begin(), endpoints.end(), key) != endpoints.end();
    }
};

// Validates CVE references and mirrors their endpoints into the profile.
inline DeviceProfile make_profile(std::string name, std::string product, Architecture arch,
                                  std::vector<uint16_t> ports,
                                  std::optional<exploits::Credential> credential,
                                  std::vector<std::string> cves) {
    DeviceProfile p;
    p.name = std::move(name);
    p.product = std::move(product);
    p.architecture = arch;
    p.open_ports = std::move(ports);
    p.credential = std::move(credential);
    p.cves = std::move(cves);
    for (const auto& id : p.cves) {
        const CveRecord* rec = find_cve(id);
        if (!rec)
            throw std::invalid_argument("profile " + p.name + " references unknown CVE " + id);
        if (!p.has_endpoint(rec->endpoint))
            p.endpoints.push_back(rec->endpoint);
    }
    return p;
}

inline const std::vector<DeviceProfile>& builtin_profiles() {
    using A = Architecture;
    using C = exploits::Credential;
    static const std::vector<DeviceProfile> profiles = {
        make_profile("hikvision_camera", "Hikvision IP camera", A::ARM, {23, 80},
                     C{"root", "hi3518"}, {"CVE-2021-36260"}),
        make_profile("realtek_sdk", "Realtek SDK device", A::MIPS, {23, 52869},
                     C{"root", "realtek"}, {"CVE-2014-8361"}),
        make_profile("huawei_hg532", "Huawei HG532 router", A::MIPS, {23, 37215},
                     C{"root", "admin"}, {"CVE-2017-17215"}),
        make_profile("iteris_vantage", "Iteris Vantage Velocity Field Unit", A::ARM7, {80},
                     std::nullopt, {"CVE-2020-9020"}),
        make_profile("zyxel_nas", "ZyXEL NAS", A::ARM, {23, 80}, C{"admin", "1234"},
                     {"CVE-2020-9054"}),
        make_profile("tenda_ac15", "Tenda AC15 AC1900 router", A::ARM, {23, 80},
                     C{"admin", "admin"}, {"CVE-2020-10987"}),
        make_profile("draytek_vigor", "DrayTek Vigor switch/router", A::MIPS, {23, 80, 443},
                     C{"admin", "password"}, {"CVE-2020-8515"}),
        make_profile("grandstream_ucm6200", "Grandstream UCM6200", A::ARM, {23, 80},
                     C{"admin", "admin1234"}, {"CVE-2020-5722"}),
        make_profile("wificam_goahead", "Wireless IP Camera (P2P) WIFICAM", A::MIPS, {23, 80},
                     C{"admin", ""}, {"CVE-2017-8225"}),
        make_profile("sonicwall_sslvpn", "SonicWall SSL-VPN", A::x86_64, {443}, std::nullopt,
                     {"VisualDoor"}),
        make_profile("dlink_dns320", "D-Link DNS-320", A::ARM, {23, 80}, C{"root", ""},
                     {"CVE-2020-25506"}),
        make_profile("yealink_dm", "Yealink Device Management", A::x86_64, {22, 80},
                     C{"root", "root"}, {"CVE-2021-27561"}),
        make_profile("arm_tfm_device", "Arm Trusted Firmware device", A::ARM7, {80},
                     std::nullopt, {"CVE-2021-27562"}),
        make_profile("microfocus_obr", "Micro Focus Operation Bridge Reporter", A::x86_64,
                     {22, 80}, C{"admin", "password"}, {"CVE-2021-22502"}),
        make_profile("netis_wf2419", "Netis WF2419 router", A::MIPS, {23, 80},
                     C{"guest", "guest"}, {"CVE-2019-19356"}),
        make_profile("netgear_jgs516pe", "NETGEAR JGS516PE switch", A::ARM, {80},
                     std::nullopt, {"CVE-2020-26919"}),
        make_profile("generic_telnet_camera", "generic telnet camera", A::ARM, {23, 2323},
                     C{"root", "xc3511"}, {}),
        make_profile("generic_telnet_dvr", "generic telnet DVR", A::MIPS, {23, 2323},
                     C{"root", "vizxv"}, {}),
    };
    return profiles;
}

inline const DeviceProfile* find_builtin_profile(std::string_view name) {
    for (const auto& p : builtin_profiles())
        if (p.name == name)
            return &p;
    return nullptr;
}

}  // namespace botwave::population
