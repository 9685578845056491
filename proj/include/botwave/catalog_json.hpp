// catalog_json.hpp - machine-readable export of the CVE catalog, exploit
// signatures and credential dictionary.
#pragma once

#include <json.hpp>

#include "botwave/catalog.hpp"
#include "botwave/credentials.hpp"
#include "botwave/exploits.hpp"
#include "botwave/variants.hpp"

namespace botwave {

inline nlohmann::json catalog_json() {
    using nlohmann::json;
    json cves = json::array();
    for (const auto& rec : population::cve_catalog()) {
        json row;
        row["id"] = rec.id;
        if (rec.base_score)
            row["base_score"] = *rec.base_score;
        else
            row["base_score"] = nullptr;
        row["score_label"] = rec.score_label;
        row["vuln_type"] = std::string(population::vuln_type_name(rec.vuln_type));
        row["date_published"] = rec.date_published;
        row["affected_product"] = rec.affected_product;
        row["endpoint"] = rec.endpoint;
        row["zero_day"] = rec.zero_day;
        cves.push_back(row);
    }
    json signatures = json::array();
    for (const auto& sig : exploits::exploit_signatures()) {
        signatures.push_back({
            {"cve_id", sig.cve_id},
            {"target_port", sig.target_port},
            {"method", std::string(exploits::exploit_method_name(sig.method))},
            {"endpoint_key", sig.endpoint_key},
            {"payload_template", sig.payload_template},
            {"privilege_label", sig.privilege_label},
            {"success_prob", sig.success_prob},
        });
    }
    json credentials = json::array();
    for (const auto& cred : exploits::credential_dictionary())
        credentials.push_back({{"username", cred.username}, {"password", cred.password}});
    json variants = json::array();
    for (const auto& v : botnet::variant_registry()) {
        json row;
        row["name"] = std::string(botnet::variant_name(v.name));
        row["year_of_discovery"] = v.year_of_discovery;
        if (v.estimated_bots)
            row["estimated_bots"] = *v.estimated_bots;
        else
            row["estimated_bots"] = nullptr;
        row["scan_dest_ports"] = v.scan_dest_ports;
        row["exploit_cves"] = v.exploit_cves;
        row["uses_credential_dictionary"] = v.uses_credential_dictionary;
        row["seed_alphabet"] = v.seed_alphabet;
        if (v.single_instance_port)
            row["single_instance_port"] = *v.single_instance_port;
        if (v.report_endpoint)
            row["report_endpoint"] = v.report_endpoint->str();
        if (v.command_endpoint)
            row["command_endpoint"] = v.command_endpoint->str();
        row["dropped_artifacts"] = v.dropped_artifacts;
        row["coordinated_scanning"] = v.coordinated_scanning;
        if (v.console_message)
            row["console_message"] = *v.console_message;
        variants.push_back(row);
    }
    return nlohmann::json{{"cves", cves},
                          {"signatures", signatures},
                          {"credentials", credentials},
                          {"variants", variants}};
}

}  // namespace botwave
