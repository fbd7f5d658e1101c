#pragma once

#include "onsager/loop/element.hpp"
#include "onsager/report.hpp"

#include <vector>

namespace onsager::loop {

// Bracket tables, each instance an exact zero-residual check.
// `bound` is K: integer-indexed families run over -K..K, the W/G families over
// k, l in 0..K.
std::vector<CheckResult> onsager_ab_table(int bound);
std::vector<CheckResult> onsager_w_table(int bound);
std::vector<CheckResult> ace_ab_table(int bound);
std::vector<CheckResult> ace_w_table(int bound);
// Dolan/Grady relations for W_0, W_1.
std::vector<CheckResult> dolan_grady_checks();

// Action of sigma and dagger on every family, family membership in O or the
// extension, and the identities linking the two sets of families.
std::vector<CheckResult> symmetry_action_checks(int bound);
std::vector<CheckResult> cross_family_checks(int bound);
// theta, sigma, dagger are involutions on every family element.
std::vector<CheckResult> involution_checks(int bound);
// cB_k + cB_-k and (cG + cGt)/2 are scalar and commute with cA_0, cA_1.
std::vector<CheckResult> central_witness_checks(int bound);

// Residual check helper shared by the other modules.
CheckResult zero_check(std::string id, std::string statement, nlohmann::json params, const LoopElement& residual);

}  // namespace onsager::loop
