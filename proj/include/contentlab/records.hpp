#pragma once

#include "contentlab/certificates.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace contentlab {

const char *library_version();

// One reproducible unit of tool output. `inputs` pins everything the run
// depended on (ring and element texts, seed, resolved bounds), `report` is
// the verdict or operation result, and `facts` keeps the structured
// evidence so an independent checker can replay it without JSON parsing.
// wall_ms is for display only; it never reaches the serialized form, so
// equal-seed runs serialize byte for byte.
struct RunRecord {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json report = nlohmann::json::object();
    std::vector<CertifiedFact> facts;
    double wall_ms = 0.0;
    std::string version;
};

nlohmann::json record_to_json(const RunRecord &r);
void append_jsonl(std::ostream &os, const RunRecord &r);

// Deterministic sweep over the whole library surface: content maps,
// property checks, demos, and searches, in a fixed order with seeds derived
// from `seed`. Truncates out_path and writes one JSONL line per record.
// Returns the record count; harvested facts are appended to *collect.
std::size_t run_full_suite(std::uint64_t seed, const std::string &out_path,
                           std::vector<CertifiedFact> *collect = nullptr);

} // namespace contentlab
