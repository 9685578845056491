// metrics.hpp - sampled time series and run summary.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace botwave::engine {

struct Sample {
    double time_s = 0;
    uint32_t susceptible = 0;
    uint32_t infected = 0;
    uint32_t patched = 0;  // devices with at least one patch
    uint32_t offline = 0;
    uint32_t rebooting = 0;
    uint64_t probes_sent = 0;
    uint64_t reports = 0;
    uint64_t attack_bps = 0;
};

struct RunSummary {
    uint32_t device_count = 0;
    uint32_t seed_bots = 0;
    uint32_t final_infected = 0;
    uint32_t final_susceptible = 0;
    uint32_t final_offline = 0;
    uint32_t final_patched = 0;
    uint32_t peak_infected = 0;
    double time_to_peak_s = 0;
    std::optional<double> time_to_full_infection_s;
    uint64_t total_probes = 0;
    uint64_t total_reports = 0;
    uint64_t total_infections = 0;  // installs, including re-infections
    double end_time_s = 0;
    bool stopped_early = false;
};

struct Metrics {
    std::vector<Sample> samples;
    RunSummary summary;
};

inline std::vector<std::pair<double, uint32_t>> infection_curve(const Metrics& m) {
    std::vector<std::pair<double, uint32_t>> curve;
    curve.reserve(m.samples.size());
    for (const auto& s : m.samples)
        curve.emplace_back(s.time_s, s.infected);
    return curve;
}

}  // namespace botwave::engine
