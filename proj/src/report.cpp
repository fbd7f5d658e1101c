#include "onsager/report.hpp"

#include <algorithm>

namespace onsager {

nlohmann::json to_json(const CheckResult& r) {
    nlohmann::json j{{"check_id", r.check_id},
                     {"paper_ref", r.statement},
                     {"parameters", r.parameters},
                     {"status", r.passed ? "pass" : "fail"}};
    if (!r.passed) j["witness"] = r.witness;
    return j;
}

nlohmann::json to_json(const std::vector<CheckResult>& rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr;
}

bool all_passed(const std::vector<CheckResult>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.passed; });
}

std::size_t count_failed(const std::vector<CheckResult>& rs) {
    return static_cast<std::size_t>(std::count_if(rs.begin(), rs.end(), [](const CheckResult& r) { return !r.passed; }));
}

void sort_canonical(std::vector<CheckResult>& rs) {
    std::stable_sort(rs.begin(), rs.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.check_id != b.check_id) return a.check_id < b.check_id;
        return a.parameters.dump() < b.parameters.dump();
    });
}

}  // namespace onsager
