// log.hpp - structured per-bot event log.
#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>

namespace botwave::engine {

enum class LogLevel { Off, Summary, Full };

inline std::optional<LogLevel> parse_log_level(std::string_view name) {
    if (name == "off")
        return LogLevel::Off;
    if (name == "summary")
        return LogLevel::Summary;
    if (name == "full")
        return LogLevel::Full;
    return std::nullopt;
}

class EventLogger {
public:
    EventLogger() = default;
    EventLogger(LogLevel level, std::ostream* sink) : level_(level), sink_(sink) {}

    LogLevel level() const { return sink_ ? level_ : LogLevel::Off; }
    bool summary_enabled() const { return level() >= LogLevel::Summary; }
    bool full_enabled() const { return level() >= LogLevel::Full; }

    // One structured line: time, bot, stage, action, target, outcome.
    void line(LogLevel at, double time_s, const std::string& bot, const std::string& stage,
              const std::string& action, const std::string& target,
              const std::string& outcome) {
        if (level() < at)
            return;
        char head[64];
        std::snprintf(head, sizeof head, "t=%.3f", time_s);
        *sink_ << head << " bot=" << bot << " stage=" << stage << " action=" << action
               << " target=" << target << " outcome=" << outcome << "\n";
    }

private:
    LogLevel level_ = LogLevel::Off;
    std::ostream* sink_ = nullptr;
};

}  // namespace botwave::engine
