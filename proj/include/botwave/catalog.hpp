// catalog.hpp - vulnerability catalog used by device profiles and exploit
// signatures. Sixteen documented entries plus three command-injection
// placeholders standing in for vulnerabilities that were never publicly
// identified; placeholders have no score and no publication date, and are
// never touched by automatic updates.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace botwave::population {

enum class VulnType {
    CommandInjection,
    OsCommandInjection,
    SqlInjection,
    ImproperInputValidation,
    InsufficientlyProtectedCredentials,
    OutOfBoundsWrite,
    CodeInjection,
    VpnExploit,
    Other,
};

inline std::string_view vuln_type_name(VulnType t) {
    switch (t) {
        case VulnType::CommandInjection: return "Command Injection";
        case VulnType::OsCommandInjection: return "OS Command Injection";
        case VulnType::SqlInjection: return "SQL Injection";
        case VulnType::ImproperInputValidation: return "Improper Input Validation";
        case VulnType::InsufficientlyProtectedCredentials:
            return "Insufficiently Protected Credentials";
        case VulnType::OutOfBoundsWrite: return "Out-Of-Bounds Write";
        case VulnType::CodeInjection: return "Code Injection";
        case VulnType::VpnExploit: return "VPN Exploit";
        case VulnType::Other: return "Other";
    }
    return "?";
}

struct CveRecord {
    std::string id;                    // "CVE-2020-9054", "VisualDoor", "ZeroDay-1"
    std::optional<double> base_score;  // CVSSv3, absent where unrated
    std::string score_label;           // "9.8 Critical", "N/A"
    VulnType vuln_type;
    std::string date_published;  // "MM/DD/YYYY", empty for placeholders
    std::string affected_product;
    std::string endpoint;  // request-template key
    bool zero_day = false;
};

inline const std::vector<CveRecord>& cve_catalog() {
    static const std::vector<CveRecord> catalog = {
        {"CVE-2021-36260", 9.8, "9.8 Critical", VulnType::CommandInjection, "09/22/2021",
         "Hikvision IP cameras and video products", "/SDK/webLanguage"},
        {"CVE-2014-8361", std::nullopt, "N/A", VulnType::ImproperInputValidation, "05/01/2015",
         "Realtek SDK devices (miniigd UPnP SOAP)", "/wanipcn.xml"},
        {"CVE-2017-17215", 8.8, "8.8 High", VulnType::ImproperInputValidation, "03/20/2018",
         "Huawei HG532 routers", "/ctrlt/DeviceUpgrade_1"},
        {"CVE-2020-9020", 9.8, "9.8 Critical", VulnType::OsCommandInjection, "02/16/2020",
         "Iteris Vantage Velocity Field Unit 2.3.1/2.4.2/3.0", "cgi-bin/timeconfig.py"},
        {"CVE-2020-9054", 9.8, "9.8 Critical", VulnType::OsCommandInjection, "03/04/2020",
         "ZyXEL NAS devices (5.21)", "weblogin.cgi"},
        {"CVE-2020-10987", 9.8, "9.8 Critical", VulnType::OsCommandInjection, "07/13/2020",
         "Tenda AC15 AC1900 Dual Band Wi-Fi router", "goform/setUsbUnload"},
        {"CVE-2020-8515", 9.8, "9.8 Critical", VulnType::OsCommandInjection, "02/01/2020",
         "DrayTek Vigor2960, Vigor3900 and Vigor300B", "cgi-bin/mainfunction.cgi"},
        {"CVE-2020-5722", 9.8, "9.8 Critical", VulnType::SqlInjection, "03/23/2020",
         "Grandstream UCM6200 series", "/cgi"},
        {"CVE-2017-8225", 9.8, "9.8 Critical", VulnType::InsufficientlyProtectedCredentials,
         "04/25/2017", "Wireless IP Camera (P2P) WIFICAM", "system.ini"},
        {"VisualDoor", std::nullopt, "N/A", VulnType::VpnExploit, "01/23/2021",
         "SonicWall SSL-VPN", "/cgi-bin/jarrewrite.sh"},
        {"CVE-2020-25506", 9.8, "9.8 Critical", VulnType::OsCommandInjection, "02/02/2021",
         "D-Link DNS-320 Revision Ax", "system_mgr.cgi"},
        {"CVE-2021-27561", 9.8, "9.8 Critical", VulnType::CommandInjection, "10/15/2021",
         "Yealink Device Management 3.6.0.20", "/sm/api/v1/firewall/zone/services"},
        {"CVE-2021-27562", 5.5, "5.5 Medium", VulnType::OutOfBoundsWrite, "05/25/2021",
         "Arm Trusted Firmware M through 1.2", "nspe-handler"},
        {"CVE-2021-22502", 9.8, "9.8 Critical", VulnType::CodeInjection, "02/28/2021",
         "Micro Focus Operation Bridge Reporter 10.40", "LogonResource"},
        {"CVE-2019-19356", 7.5, "7.5 High", VulnType::OsCommandInjection, "02/07/2020",
         "Netis WF2419 routers", "tracert"},
        {"CVE-2020-26919", 9.8, "9.8 Critical", VulnType::Other, "10/09/2020",
         "NETGEAR JGS516PE switches before 2.6.0.43", "set.cgi"},
        {"ZeroDay-1", std::nullopt, "N/A", VulnType::CommandInjection, "",
         "unknown (configurable)", "zeroday-1", true},
        {"ZeroDay-2", std::nullopt, "N/A", VulnType::CommandInjection, "",
         "unknown (configurable)", "zeroday-2", true},
        {"ZeroDay-3", std::nullopt, "N/A", VulnType::CommandInjection, "",
         "unknown (configurable)", "zeroday-3", true},
    };
    return catalog;
}

inline const CveRecord* find_cve(std::string_view id) {
    for (const auto& rec : cve_catalog())
        if (rec.id == id)
            return &rec;
    return nullptr;
}

inline std::optional<size_t> cve_index(std::string_view id) {
    const auto& cat = cve_catalog();
    for (size_t i = 0; i < cat.size(); ++i)
        if (cat[i].id == id)
            return i;
    return std::nullopt;
}

// Bitmask over catalog indices; the catalog is small enough for 32 bits.
using CveMask = uint32_t;

inline CveMask cve_bit(std::string_view id) {
    auto idx = cve_index(id);
    return idx ? (CveMask(1) << *idx) : 0;
}

}  // namespace botwave::population
