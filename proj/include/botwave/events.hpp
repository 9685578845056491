// events.hpp - the event queue. Events pop in (time, insertion sequence)
// order, which makes runs totally ordered and replayable.
#pragma once

#include <cassert>
#include <cstdint>
#include <queue>
#include <string>
#include <variant>
#include <vector>

#include "botwave/botnet.hpp"
#include "botwave/ipv4.hpp"

namespace botwave::engine {

enum class EventKind {
    Probe,
    ProbeReply,
    BruteForce,
    Exploit,
    Report,
    Command,
    Defense,
    Reboot,
    ScanTick,
    AttackTick,
};

inline std::string_view event_kind_name(EventKind k) {
    switch (k) {
        case EventKind::Probe: return "probe";
        case EventKind::ProbeReply: return "probe_reply";
        case EventKind::BruteForce: return "brute_force";
        case EventKind::Exploit: return "exploit";
        case EventKind::Report: return "report";
        case EventKind::Command: return "command";
        case EventKind::Defense: return "defense";
        case EventKind::Reboot: return "reboot";
        case EventKind::ScanTick: return "scan_tick";
        case EventKind::AttackTick: return "attack_tick";
    }
    return "?";
}

struct ProbePayload {
    Ipv4Addr bot;
    Ipv4Addr target;
    uint16_t dest_port;
    uint16_t source_port;
};

struct ProbeReplyPayload {
    Ipv4Addr bot;
    Ipv4Addr target;
    uint16_t port;
};

struct BruteForcePayload {
    Ipv4Addr bot;
    Ipv4Addr victim;
    uint16_t port;
};

struct ExploitPayload {
    Ipv4Addr bot;
    Ipv4Addr victim;
    uint16_t port;
    uint8_t cve_index;
};

struct ReportPayload {
    Ipv4Addr bot;
    Ipv4Addr victim;
    uint16_t port;
    botnet::InfectionEvidence evidence;
};

struct CommandPayload {
    uint32_t command_index;
};

struct DefensePayload {
    enum class Subkind : uint8_t { ApplyPolicy, DelayedPatch, SonicRerun };
    Subkind subkind = Subkind::ApplyPolicy;
    int32_t policy_index = -1;  // ApplyPolicy
    Ipv4Addr device;            // DelayedPatch / SonicRerun
    int32_t cve_index = -1;     // DelayedPatch
};

struct RebootPayload {
    Ipv4Addr device;
    double period_s = 0;  // 0 = one-shot
    bool finish = false;  // true = power back up after a timed reboot
};

struct ScanTickPayload {
    Ipv4Addr bot;
};

struct AttackTickPayload {
    uint32_t attack_index;
};

using EventPayload =
    std::variant<ProbePayload, ProbeReplyPayload, BruteForcePayload, ExploitPayload,
                 ReportPayload, CommandPayload, DefensePayload, RebootPayload,
                 ScanTickPayload, AttackTickPayload>;

struct Event {
    double time_s = 0;
    uint64_t sequence = 0;
    EventKind kind = EventKind::Probe;
    EventPayload payload;
};

class EventQueue {
public:
    // Causality: nothing may be scheduled in the past.
    void push(double now, double time_s, EventKind kind, EventPayload payload) {
        assert(time_s >= now && "event scheduled before its cause");
        (void)now;
        heap_.push(Event{time_s, next_sequence_++, kind, std::move(payload)});
    }

    bool empty() const { return heap_.empty(); }
    const Event& top() const { return heap_.top(); }
    Event pop() {
        Event e = heap_.top();
        heap_.pop();
        return e;
    }
    size_t size() const { return heap_.size(); }

private:
    struct Later {
        bool operator()(const Event& a, const Event& b) const {
            if (a.time_s != b.time_s)
                return a.time_s > b.time_s;
            return a.sequence > b.sequence;
        }
    };
    std::priority_queue<Event, std::vector<Event>, Later> heap_;
    uint64_t next_sequence_ = 0;
};

}  // namespace botwave::engine
