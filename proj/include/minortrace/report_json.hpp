#pragma once

#include <json.hpp>
#include <string>

#include "minortrace/determinantal.hpp"
#include "minortrace/oracle.hpp"
#include "minortrace/schubert.hpp"

namespace minortrace {

// Canonical JSON: nlohmann's default object keeps keys sorted, and every
// array below is emitted in the deterministic order fixed by the core
// modules, so identical inputs serialize byte-identically.
nlohmann::json to_json(const SchubertReport& rep, nlohmann::json input_echo);
nlohmann::json to_json(const DeterminantalReport& rep,
                       nlohmann::json input_echo);
nlohmann::json to_json(const OracleReport& rep);

std::string to_text(const SchubertReport& rep, const std::string& input_echo);
std::string to_text(const DeterminantalReport& rep,
                    const std::string& input_echo);
std::string to_text(const OracleReport& rep);

}  // namespace minortrace
