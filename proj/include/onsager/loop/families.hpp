#pragma once

#include "onsager/loop/element.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace onsager::loop {

// The named element families. Index conventions:
//   A, B, cA, cB   any integer k
//   W, cW          flattened: n <= 0 is W_{-k} with k = -n, n >= 1 is W_{k+1} with k = n-1
//   Gt, cG, cGt    n >= 1, i.e. G_{k+1} with k = n-1
enum class Family { A, B, cA, cB, W, Gt, cW, cG, cGt };

struct FamilyName {
    Family tag;
    int index;

    friend bool operator==(const FamilyName&, const FamilyName&) = default;
};

std::string_view family_tag(Family f);
std::optional<Family> family_from_tag(std::string_view tag);
// Smallest admissible index, if the family is bounded below.
std::optional<int> family_min_index(Family f);

// The matrix of the named element; IndexOutOfRange outside the family's domain.
LoopElement family(FamilyName name);
inline LoopElement family(Family tag, int index) { return family({tag, index}); }

// ((t + 1/t)/2)^k.
LaurentPoly chebyshev_weight(unsigned k);

// Central element I (x) (t^k + t^-k - 2)/2 = (cB_k + cB_-k)/2.
LoopElement center_basis(int k);

// Literal syntax "A[3]", "cB[-2]", "Gt[1]".
std::string to_string(FamilyName name);
FamilyName parse_family_literal(std::string_view text);

// Rational linear combination of literals, e.g. "cB[2] + cB[-2]",
// "1/2*cGt[1] - 1/2*cG[1]", "-A[0]".
LoopElement parse_element_expr(std::string_view text);

}  // namespace onsager::loop
