// presets.hpp - scenario documents shipped inside the binary.
#pragma once

#include <string>
#include <vector>

namespace botwave::engine {

struct Preset {
    std::string_view name;
    std::string_view document;
};

inline const std::vector<Preset>& scenario_presets() {
    static const std::vector<Preset> presets = {
        {"ovh-calibration", R"json({
  "name": "ovh-calibration",
  "description": "Mirai dictionary propagation over a telnet estate, then a UDP flood against one target. The flood rows carry bots x 7.5862 Mbps each, the per-bot rate that makes 145,000 bots produce 1.1 Tbps.",
  "seed": 1,
  "duration_s": 7200,
  "address_bits": 16,
  "variant": "mirai",
  "population": [
    {"profile": "generic_telnet_camera", "count": 350},
    {"profile": "generic_telnet_dvr", "count": 150}
  ],
  "seed_bots": ["57.9.0.0", "98.12.0.0"],
  "scan_rate_pps": 0.2,
  "per_bot_rate_mbps": 7.5862,
  "commands": [
    "t=3600 .udp 203.0.113.99 duration=600",
    "t=5400 .udpplain 203.0.113.99 duration=600"
  ]
})json"},
        {"satori-12h", R"json({
  "name": "satori-12h",
  "description": "Twelve simulated hours of Satori propagation over a mixed Huawei/Realtek/telnet estate at k=18. Demonstrates the logistic growth shape; absolute bot counts from the field depend on population sizes this desk-scale run does not assert.",
  "seed": 42,
  "duration_s": 43200,
  "address_bits": 18,
  "variant": "satori",
  "population": [
    {"profile": "huawei_hg532", "count": 4000},
    {"profile": "realtek_sdk", "count": 3000},
    {"profile": "generic_telnet_camera", "count": 2500},
    {"profile": "iteris_vantage", "count": 500}
  ],
  "seed_bots": ["1.0.0.0", "2.0.1.0", "4.0.2.0", "5.0.3.0", "8.0.0.0"],
  "scan_rate_pps": 0.05,
  "sample_interval_s": 10
})json"},
        {"mukashi-zyxel", R"json({
  "name": "mukashi-zyxel",
  "description": "Mukashi against ZyXEL NAS boxes: telnet dictionary plus the weblogin.cgi pre-auth command injection (port 80 added to the scan set). Reports render as <ip>:23 <user>:<pass> toward 45.84.196.75:34834.",
  "seed": 7,
  "duration_s": 10800,
  "address_bits": 16,
  "variant": "mukashi",
  "population": [
    {"profile": "zyxel_nas", "count": 600},
    {"profile": "generic_telnet_camera", "count": 200}
  ],
  "seed_bots": ["57.9.0.0"],
  "scan_rate_pps": 0.2,
  "scan_dest_ports": [23, 2323, 80],
  "commands": [
    "t=7200 .udpplain 203.0.113.99 duration=300",
    "t=9000 killer telnet"
  ]
})json"},
        {"sonic-zero-day", R"json({
  "name": "sonic-zero-day",
  "description": "The unnamed 2021 strain: web exploits and SSH dictionary against network appliances, three command-injection placeholders bound to a custom fiber-router profile, post-infection port filtering with a broken hourly cron re-run.",
  "seed": 11,
  "duration_s": 14400,
  "address_bits": 16,
  "variant": "sonic",
  "profiles": {
    "fiber_router_zeroday": {
      "product": "fiber router (zero-day target)",
      "architecture": "MIPS",
      "open_ports": [22, 80],
      "credential": ["admin", "admin"],
      "cves": ["ZeroDay-1", "ZeroDay-2"]
    }
  },
  "population": [
    {"profile": "dlink_dns320", "count": 250},
    {"profile": "yealink_dm", "count": 150},
    {"profile": "sonicwall_sslvpn", "count": 100},
    {"profile": "netis_wf2419", "count": 150},
    {"profile": "fiber_router_zeroday", "count": 150}
  ],
  "seed_bots": ["57.9.0.0", "98.12.0.0"],
  "scan_rate_pps": 0.2
})json"},
        {"defense-sweep", R"json({
  "name": "defense-sweep",
  "description": "Dictionary-only Mirai run with layered mitigations: half the estate gets fresh credentials at t=1800, a quarter gets telnet filtered at t=2700, a fifth reboots every 30 minutes from t=1000.",
  "seed": 3,
  "duration_s": 7200,
  "address_bits": 16,
  "variant": "mirai",
  "population": [
    {"profile": "generic_telnet_camera", "count": 250},
    {"profile": "generic_telnet_dvr", "count": 150}
  ],
  "seed_bots": ["57.9.0.0"],
  "scan_rate_pps": 0.2,
  "defenses": [
    {"kind": "randomize_credentials", "at": 1800, "fraction": 0.5},
    {"kind": "filter_ports", "at": 2700, "fraction": 0.25, "ports": [23, 2323]},
    {"kind": "reboot_schedule", "at": 1000, "fraction": 0.2, "period_s": 1800}
  ]
})json"},
    };
    return presets;
}

inline const Preset* find_preset(std::string_view name) {
    for (const auto& p : scenario_presets())
        if (p.name == name)
            return &p;
    return nullptr;
}

}  // namespace botwave::engine
