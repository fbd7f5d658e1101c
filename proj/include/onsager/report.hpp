#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace onsager {

// One verified instance. Serialized as
//   {check_id, paper_ref, parameters, status, witness}
// where paper_ref holds the identity being checked and witness is only
// present on failure.
struct CheckResult {
    std::string check_id;
    std::string statement;
    nlohmann::json parameters = nlohmann::json::object();
    bool passed = false;
    std::string witness;
};

nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const std::vector<CheckResult>& rs);

bool all_passed(const std::vector<CheckResult>& rs);
std::size_t count_failed(const std::vector<CheckResult>& rs);

// Canonical order: check id, then parameters (as serialized JSON).
void sort_canonical(std::vector<CheckResult>& rs);

}  // namespace onsager
