// botwave - scenario-driven botnet propagation simulator CLI.
//
// Exit codes: 0 success, 1 usage error, 2 scenario parse error,
// 3 validation error, 4 runtime error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "botwave/catalog_json.hpp"
#include "botwave/engine.hpp"
#include "botwave/presets.hpp"
#include "botwave/results.hpp"
#include "botwave/scenario_json.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitRuntime = 4;

std::string load_scenario_text(const std::string& source) {
    if (const auto* preset = botwave::engine::find_preset(source))
        return std::string(preset->document);
    std::ifstream in(source);
    if (!in)
        throw botwave::engine::ParseError("no such preset or scenario file: " + source);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

botwave::engine::LogLevel log_level_from_env() {
    const char* value = std::getenv("BOTWAVE_LOG");
    if (!value)
        return botwave::engine::LogLevel::Off;
    auto level = botwave::engine::parse_log_level(value);
    if (!level) {
        std::cerr << "botwave: ignoring BOTWAVE_LOG=" << value
                  << " (want off, summary or full)\n";
        return botwave::engine::LogLevel::Off;
    }
    return *level;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write output file: " + path);
    out << content;
}

// "A..B" inclusive seed sweep.
bool parse_seed_range(const std::string& text, uint64_t& lo, uint64_t& hi) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        return false;
    try {
        lo = std::stoull(text.substr(0, dots));
        hi = std::stoull(text.substr(dots + 2));
    } catch (const std::exception&) {
        return false;
    }
    return lo <= hi;
}

std::string seeded_output_path(const std::string& base, uint64_t seed,
                               botwave::engine::ResultFormat format) {
    std::string ext = format == botwave::engine::ResultFormat::Csv ? ".csv" : ".json";
    if (base.empty() || base == "-")
        return "results-seed" + std::to_string(seed) + ext;
    std::filesystem::path p(base);
    std::filesystem::path stem = p.parent_path() / p.stem();
    std::string suffix = p.has_extension() ? p.extension().string() : ext;
    return stem.string() + "-seed" + std::to_string(seed) + suffix;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"botwave - deterministic IoT botnet propagation simulator"};
    app.require_subcommand(0, 1);

    bool list_presets = false;
    bool print_catalog = false;
    app.add_flag("--list-presets", list_presets, "list embedded scenario presets");
    app.add_flag("--catalog", print_catalog,
                 "print the CVE/signature/dictionary catalogs as JSON");

    auto* run_cmd = app.add_subcommand("run", "run a scenario file or preset");
    std::string source;
    std::string out_path;
    std::string format_name = "csv";
    std::string seeds_range;
    int64_t seed_override = -1;
    bool dump_normalized = false;
    run_cmd->add_option("scenario", source, "scenario file path or preset name");
    run_cmd->add_option("--seed", seed_override, "override the scenario seed");
    run_cmd->add_option("--seeds", seeds_range,
                        "run an inclusive seed sweep A..B, one output file per seed");
    run_cmd->add_option("--out", out_path, "output file (default stdout)");
    run_cmd->add_option("--format", format_name, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    run_cmd->add_flag("--dump-normalized", dump_normalized,
                      "print the normalized scenario document and exit");
    run_cmd->add_flag("--list-presets", list_presets, "list embedded scenario presets");
    run_cmd->add_flag("--catalog", print_catalog,
                      "print the CVE/signature/dictionary catalogs as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (list_presets) {
        for (const auto& preset : botwave::engine::scenario_presets())
            std::cout << preset.name << "\n";
        return 0;
    }
    if (print_catalog) {
        std::cout << botwave::catalog_json().dump(2) << "\n";
        return 0;
    }
    if (!run_cmd->parsed() || source.empty()) {
        std::cerr << app.help();
        return kExitUsage;
    }

    botwave::engine::ResultFormat format = format_name == "json"
                                               ? botwave::engine::ResultFormat::Json
                                               : botwave::engine::ResultFormat::Csv;

    try {
        botwave::engine::Scenario scenario =
            botwave::engine::parse_scenario(load_scenario_text(source));
        if (seed_override >= 0)
            scenario.seed = uint64_t(seed_override);

        if (dump_normalized) {
            std::cout << botwave::engine::normalize_scenario(scenario).dump(2) << "\n";
            return 0;
        }

        botwave::engine::LogLevel level = log_level_from_env();

        if (!seeds_range.empty()) {
            uint64_t lo = 0, hi = 0;
            if (!parse_seed_range(seeds_range, lo, hi)) {
                std::cerr << "botwave: bad --seeds range (want A..B)\n";
                return kExitUsage;
            }
            std::vector<uint64_t> seeds;
            for (uint64_t s = lo; s <= hi; ++s)
                seeds.push_back(s);
            unsigned workers =
                std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                unsigned(seeds.size())));
            std::vector<std::thread> pool;
            std::atomic<size_t> cursor{0};
            std::atomic<bool> failed{false};
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&] {
                    for (;;) {
                        size_t i = cursor.fetch_add(1);
                        if (i >= seeds.size() || failed.load())
                            return;
                        botwave::engine::Scenario sc = scenario;
                        sc.seed = seeds[i];
                        try {
                            auto metrics = botwave::engine::run(std::move(sc));
                            write_output(seeded_output_path(out_path, seeds[i], format),
                                         botwave::engine::emit_results(metrics, format));
                        } catch (const std::exception& e) {
                            std::cerr << "botwave: seed " << seeds[i] << ": " << e.what()
                                      << "\n";
                            failed.store(true);
                        }
                    }
                });
            }
            for (auto& t : pool)
                t.join();
            return failed.load() ? kExitRuntime : 0;
        }

        botwave::engine::EventLogger logger(level, &std::cerr);
        auto metrics = botwave::engine::run(std::move(scenario), logger);
        write_output(out_path, botwave::engine::emit_results(metrics, format));
        return 0;
    } catch (const botwave::engine::ParseError& e) {
        std::cerr << "botwave: parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const botwave::engine::ValidationError& e) {
        std::cerr << "botwave: validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const botwave::population::ConfigError& e) {
        std::cerr << "botwave: validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "botwave: " << e.what() << "\n";
        return kExitRuntime;
    }
}
