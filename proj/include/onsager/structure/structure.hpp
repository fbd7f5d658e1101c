#pragma once

#include "onsager/loop/element.hpp"
#include "onsager/report.hpp"
#include "onsager/structure/linalg.hpp"

#include <map>
#include <vector>

namespace onsager::structure {

using loop::LoopElement;
using loop::Space;

// Entries restricted to exponents in [-N, N].
class Window {
public:
    explicit Window(int bound);
    int bound() const { return bound_; }
    // 4(2N+1): four matrix entries times the exponent range.
    std::size_t size() const { return 4 * static_cast<std::size_t>(2 * bound_ + 1); }
    // Position of (entry 0..3 = a,b,c,d; exponent) in a CoordVector.
    std::size_t index(int entry, int exponent) const;
    friend bool operator==(const Window&, const Window&) = default;

private:
    int bound_;
};

struct CoordVector {
    Window window;
    std::vector<GR> entries;
};

// WindowOverflow if some exponent lies outside the window.
CoordVector coords(const LoopElement& x, Window w);
LoopElement from_coords(const CoordVector& v);
// MixedWindows unless every vector has the same window.
std::size_t span_rank(const std::vector<CoordVector>& vs);

struct Decomposition {
    LoopElement o_part;
    LoopElement z_part;
};

// Splits x in the extension into its O component and its central component.
// NotInACE when x is not in the extension.
Decomposition decompose(const LoopElement& x);

// Basis of the elements of the windowed extension commuting with cA_0 and
// cA_1. With `space == Space::O` the unknowns are further restricted to
// trace zero. Only ACE and O are accepted.
// cA_0, cA_1 and the center generate the extension, so two test elements
// suffice.
std::vector<CoordVector> center_solver(Window w, Space space = Space::ACE);

// Dimension of the part inside `w` of the span of all nested brackets of the
// generators up to `depth` levels (depth 0 is the span of the generators).
// Brackets are computed without truncation and the window is imposed only at
// the end.
std::size_t closure_span(const std::vector<LoopElement>& generators, int depth, Window w);

// Coordinates of an element of O on the A_k, B_k basis.
struct OCoords {
    std::map<int, GR> a;
    std::map<int, GR> b;
};

// sum a_k A_k + sum b_k B_k.
LoopElement o_element(const OCoords& x);
// sum a_k cA_k + sum b_k (cB_k - cB_-k)/2.
LoopElement iota(const OCoords& x);
// O component of decompose(x); NotInACE outside the extension.
LoopElement project_rho(const LoopElement& x);

// Structural checks over families with index bound K:
// direct sum, independence of the abelian G families, rho homomorphism,
// the center fixed by sigma and dagger.
std::vector<CheckResult> structure_checks(int bound);

}  // namespace onsager::structure
