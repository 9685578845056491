// exploits.hpp - exploit request templates and the dictionary login attack.
//
// A signature is matchable metadata: a port, an endpoint key and a request
// template with a `{cmd}` slot. Rendered requests are inert strings used for
// logging and matching; nothing is ever executed.
#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "botwave/credentials.hpp"
#include "botwave/population.hpp"
#include "botwave/prng.hpp"

namespace botwave::exploits {

enum class ExploitMethod { HttpGet, HttpPost, HttpPut, TelnetDialog, SshSession, Other };

inline std::string_view exploit_method_name(ExploitMethod m) {
    switch (m) {
        case ExploitMethod::HttpGet: return "HttpGet";
        case ExploitMethod::HttpPost: return "HttpPost";
        case ExploitMethod::HttpPut: return "HttpPut";
        case ExploitMethod::TelnetDialog: return "TelnetDialog";
        case ExploitMethod::SshSession: return "SshSession";
        case ExploitMethod::Other: return "Other";
    }
    return "?";
}

struct ExploitSignature {
    std::string cve_id;
    uint16_t target_port = 80;
    ExploitMethod method = ExploitMethod::HttpGet;
    std::string endpoint_key;
    std::string payload_template;  // contains one {cmd} slot
    std::string privilege_label;   // recorded metadata only
    double success_prob = 1.0;
};

inline const std::vector<ExploitSignature>& exploit_signatures() {
    using M = ExploitMethod;
    static const std::vector<ExploitSignature> sigs = {
        {"CVE-2021-36260", 80, M::HttpPut, "/SDK/webLanguage",
         "PUT /SDK/webLanguage <?xml version=\"1.0\"?><language>$({cmd})</language>", "root"},
        {"CVE-2014-8361", 52869, M::HttpPost, "/wanipcn.xml",
         "POST /wanipcn.xml SOAPAction:NewInternalClient <NewInternalClient>`{cmd}`"
         "</NewInternalClient>"},
        {"CVE-2017-17215", 37215, M::HttpPost, "/ctrlt/DeviceUpgrade_1",
         "POST /ctrlt/DeviceUpgrade_1 <NewStatusURL>$({cmd})</NewStatusURL>"},
        {"CVE-2020-9020", 80, M::HttpPost, "cgi-bin/timeconfig.py",
         "POST cgi-bin/timeconfig.py ntpserver=`{cmd}`"},
        {"CVE-2020-9054", 80, M::HttpPost, "weblogin.cgi",
         "POST weblogin.cgi username=admin';{cmd};'"},
        {"CVE-2020-10987", 80, M::HttpGet, "goform/setUsbUnload",
         "GET goform/setUsbUnload deviceName=; {cmd}"},
        {"CVE-2020-8515", 80, M::HttpPost, "cgi-bin/mainfunction.cgi",
         "POST cgi-bin/mainfunction.cgi action=login keyPath='%0A{cmd}%0A'", "root"},
        {"CVE-2020-5722", 80, M::HttpGet, "/cgi",
         "GET /cgi action=sendPasswordEmail username=admin' OR 1=1;{cmd}--"},
        {"CVE-2017-8225", 80, M::HttpGet, "system.ini",
         "GET system.ini?loginuse=&loginpas=&next={cmd}"},
        {"VisualDoor", 443, M::HttpGet, "/cgi-bin/jarrewrite.sh",
         "GET /cgi-bin/jarrewrite.sh User-Agent: () { :; }; echo; {cmd}", "nobody"},
        {"CVE-2020-25506", 80, M::HttpPost, "system_mgr.cgi",
         "POST system_mgr.cgi cmd=cgi_ntp_time&f_ntp_server=`{cmd}`"},
        {"CVE-2021-27561", 80, M::HttpPost, "/sm/api/v1/firewall/zone/services",
         "POST /sm/api/v1/firewall/zone/services zone=;{cmd};", "root"},
        {"CVE-2021-27562", 80, M::Other, "nspe-handler",
         "NSPE-CALL handler=secure depth=-1 arg={cmd}"},
        {"CVE-2021-22502", 80, M::HttpPost, "LogonResource",
         "POST LogonResource userName=';{cmd};'"},
        {"CVE-2019-19356", 80, M::HttpPost, "tracert",
         "POST tracert host=1.1.1.1;{cmd}", "root"},
        {"CVE-2020-26919", 80, M::HttpPost, "set.cgi",
         "POST set.cgi submitId=debug&cmd={cmd}"},
        {"ZeroDay-1", 80, M::HttpPost, "zeroday-1", "POST zeroday-1 payload=;{cmd};"},
        {"ZeroDay-2", 80, M::HttpPost, "zeroday-2", "POST zeroday-2 payload=;{cmd};"},
        {"ZeroDay-3", 80, M::HttpPost, "zeroday-3", "POST zeroday-3 payload=;{cmd};"},
    };
    return sigs;
}

inline const ExploitSignature* signature_for(std::string_view cve_id) {
    for (const auto& sig : exploit_signatures())
        if (sig.cve_id == cve_id)
            return &sig;
    return nullptr;
}

inline std::string render_exploit_request(const ExploitSignature& sig,
                                          const std::string& command) {
    if (command.empty())
        throw std::invalid_argument("render_exploit_request: empty command");
    std::string out = sig.payload_template;
    auto pos = out.find("{cmd}");
    while (pos != std::string::npos) {
        out.replace(pos, 5, command);
        pos = out.find("{cmd}", pos + command.size());
    }
    return out;
}

// True iff the device still carries the vulnerability, answers on the
// signature's port and hosts the endpoint.
inline bool match_exploit(const ExploitSignature& sig, const population::Device& device,
                          const population::DeviceProfile& profile) {
    if (device.cve_patched(sig.cve_id))
        return false;
    bool listed = false;
    for (const auto& id : profile.cves)
        if (id == sig.cve_id)
            listed = true;
    if (!listed)
        return false;
    if (!profile.has_endpoint(sig.endpoint_key))
        return false;
    if (device.state == population::DeviceState::Offline ||
        device.state == population::DeviceState::Rebooting)
        return false;
    if (!profile.has_port(sig.target_port) || device.port_filtered(sig.target_port))
        return false;
    if (device.upnp_disabled && sig.target_port == 52869)
        return false;
    for (uint16_t killed : device.killed_ports)
        if (killed == sig.target_port)
            return false;
    return true;
}

struct BruteForceOutcome {
    bool success = false;
    uint8_t attempts_used = 0;  // 1..10
    Credential credential;      // the matching pair, when success
};

// Tries up to ten distinct dictionary pairs, drawn uniformly without
// replacement. Returns nullopt when the service port does not answer
// (filtered, killed, closed or host down) - a non-answer is not a
// failed login.
inline std::optional<BruteForceOutcome> attempt_brute_force(
    const population::Device& device, const population::DeviceProfile& profile,
    PrngState& rng, uint16_t service_port = 23) {
    if (device.state == population::DeviceState::Offline ||
        device.state == population::DeviceState::Rebooting)
        return std::nullopt;
    if (!profile.has_port(service_port) || device.port_filtered(service_port))
        return std::nullopt;
    for (uint16_t killed : device.killed_ports)
        if (killed == service_port)
            return std::nullopt;

    const auto& dict = credential_dictionary();
    std::array<uint8_t, 60> order{};
    std::iota(order.begin(), order.end(), uint8_t(0));

    BruteForceOutcome out;
    for (int k = 0; k < 10; ++k) {
        uint32_t j = k + prng_below(rng, uint32_t(dict.size() - k));
        std::swap(order[k], order[j]);
        const Credential& attempt = dict[order[k]];
        out.attempts_used = uint8_t(k + 1);
        if (!device.credential_randomized && profile.credential &&
            *profile.credential == attempt) {
            out.success = true;
            out.credential = attempt;
            return out;
        }
    }
    out.success = false;
    out.attempts_used = 10;
    return out;
}

}  // namespace botwave::exploits
