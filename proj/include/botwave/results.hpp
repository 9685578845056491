// results.hpp - CSV and JSON emission of run metrics.
#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "botwave/metrics.hpp"

namespace botwave::engine {

inline constexpr std::string_view kCsvHeader =
    "time_s,susceptible,infected,patched,offline,probes_sent,reports,attack_bps";

inline std::string format_time(double t) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", t);
    return buf;
}

inline std::string emit_csv(const Metrics& m) {
    std::string out{kCsvHeader};
    out.push_back('\n');
    for (const auto& s : m.samples) {
        out += format_time(s.time_s);
        out.push_back(',');
        out += std::to_string(s.susceptible);
        out.push_back(',');
        out += std::to_string(s.infected);
        out.push_back(',');
        out += std::to_string(s.patched);
        out.push_back(',');
        out += std::to_string(s.offline);
        out.push_back(',');
        out += std::to_string(s.probes_sent);
        out.push_back(',');
        out += std::to_string(s.reports);
        out.push_back(',');
        out += std::to_string(s.attack_bps);
        out.push_back('\n');
    }
    return out;
}

inline nlohmann::json results_json(const Metrics& m) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : m.samples) {
        samples.push_back({{"time_s", s.time_s},
                           {"susceptible", s.susceptible},
                           {"infected", s.infected},
                           {"patched", s.patched},
                           {"offline", s.offline},
                           {"probes_sent", s.probes_sent},
                           {"reports", s.reports},
                           {"attack_bps", s.attack_bps}});
    }
    const auto& sum = m.summary;
    nlohmann::json summary = {
        {"device_count", sum.device_count},
        {"seed_bots", sum.seed_bots},
        {"final_infected", sum.final_infected},
        {"final_susceptible", sum.final_susceptible},
        {"final_offline", sum.final_offline},
        {"final_patched", sum.final_patched},
        {"peak_infected", sum.peak_infected},
        {"time_to_peak", sum.time_to_peak_s},
        {"total_probes", sum.total_probes},
        {"total_reports", sum.total_reports},
        {"total_infections", sum.total_infections},
        {"end_time_s", sum.end_time_s},
        {"stopped_early", sum.stopped_early},
    };
    if (sum.time_to_full_infection_s)
        summary["time_to_full_infection_s"] = *sum.time_to_full_infection_s;
    else
        summary["time_to_full_infection_s"] = nullptr;
    return nlohmann::json{{"columns", nlohmann::json::parse(R"([
        "time_s","susceptible","infected","patched","offline",
        "probes_sent","reports","attack_bps"])")},
                          {"samples", samples},
                          {"summary", summary}};
}

enum class ResultFormat { Csv, Json };

inline std::string emit_results(const Metrics& m, ResultFormat format) {
    if (format == ResultFormat::Csv)
        return emit_csv(m);
    return results_json(m).dump(2) + "\n";
}

}  // namespace botwave::engine
