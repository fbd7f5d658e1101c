#include "onsager/structure/structure.hpp"

#include "onsager/errors.hpp"
#include "onsager/loop/families.hpp"
#include "onsager/loop/tables.hpp"

#include <array>

namespace onsager::structure {

using arith::LaurentPoly;
using loop::Family;
using loop::family;

namespace {

constexpr std::array<char, 4> kEntryNames{'a', 'b', 'c', 'd'};

std::array<const LaurentPoly*, 4> entries_of(const LoopElement& x) { return {&x.a, &x.b, &x.c, &x.d}; }
std::array<LaurentPoly*, 4> entries_of(LoopElement& x) { return {&x.a, &x.b, &x.c, &x.d}; }

const GR kHalf(arith::make_rational(1, 2));

// Appends the window coordinates of x to `out`.
void append_coords(const LoopElement& x, Window w, Row& out) {
    CoordVector v = coords(x, w);
    out.insert(out.end(), v.entries.begin(), v.entries.end());
}

using Key = std::pair<int, int>;  // (entry, exponent)
using SparseVec = Echelon<Key>::Vec;

SparseVec sparse(const LoopElement& x) {
    SparseVec v;
    auto es = entries_of(x);
    for (int e = 0; e < 4; ++e) {
        for (const auto& [n, c] : es[e]->terms()) v.emplace(Key{e, n}, c);
    }
    return v;
}

LoopElement dense(const SparseVec& v) {
    LoopElement x;
    auto es = entries_of(x);
    for (const auto& [key, c] : v) *es[key.first] += LaurentPoly::monomial(c, key.second);
    return x;
}

}  // namespace

Window::Window(int bound) : bound_(bound) {
    if (bound < 1) throw IndexOutOfRange("window bound must be >= 1, got " + std::to_string(bound));
}

std::size_t Window::index(int entry, int exponent) const {
    return static_cast<std::size_t>(entry) * static_cast<std::size_t>(2 * bound_ + 1) +
           static_cast<std::size_t>(exponent + bound_);
}

CoordVector coords(const LoopElement& x, Window w) {
    CoordVector v{w, std::vector<GR>(w.size())};
    auto es = entries_of(x);
    for (int e = 0; e < 4; ++e) {
        for (const auto& [n, c] : es[e]->terms()) {
            if (n < -w.bound() || n > w.bound()) {
                throw WindowOverflow(std::string("entry ") + kEntryNames[e] + " has exponent " + std::to_string(n) +
                                     " outside [-" + std::to_string(w.bound()) + ", " + std::to_string(w.bound()) +
                                     "]");
            }
            v.entries[w.index(e, n)] = c;
        }
    }
    return v;
}

LoopElement from_coords(const CoordVector& v) {
    LoopElement x;
    auto es = entries_of(x);
    const int n = v.window.bound();
    for (int e = 0; e < 4; ++e) {
        for (int k = -n; k <= n; ++k) {
            const GR& c = v.entries[v.window.index(e, k)];
            if (!c.is_zero()) *es[e] += LaurentPoly::monomial(c, k);
        }
    }
    return x;
}

std::size_t span_rank(const std::vector<CoordVector>& vs) {
    if (vs.empty()) return 0;
    Matrix m;
    for (const auto& v : vs) {
        if (!(v.window == vs.front().window)) {
            throw MixedWindows("window " + std::to_string(v.window.bound()) + " differs from " +
                               std::to_string(vs.front().window.bound()));
        }
        m.push_back(v.entries);
    }
    return rank(std::move(m));
}

Decomposition decompose(const LoopElement& x) {
    if (!membership(x, Space::ACE)) throw NotInACE(to_string(x));
    // theta-fixed forces d = tau(a).
    const LaurentPoly odd = (x.a - arith::tau(x.a)) * kHalf;
    const LaurentPoly even = (x.a + arith::tau(x.a)) * kHalf;
    return {LoopElement{odd, x.b, x.c, -odd}, LoopElement::scalar(even)};
}

std::vector<CoordVector> center_solver(Window w, Space space) {
    if (space != Space::ACE && space != Space::O) {
        throw IndexOutOfRange("center_solver supports ACE and O, got " + loop::to_string(space));
    }
    const LoopElement a0 = family(Family::cA, 0), a1 = family(Family::cA, 1);
    const Window wide(w.bound() + 1);
    const std::size_t n = w.size();
    // Column j holds the constraint values on the j-th unit vector.
    std::vector<Row> columns;
    columns.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        CoordVector unit{w, std::vector<GR>(n)};
        unit.entries[j] = GR(1);
        const LoopElement x = from_coords(unit);
        Row col;
        append_coords(loop::theta(x) - x, w, col);
        col.push_back(loop::epsilon(x));
        append_coords(loop::bracket(x, a0), wide, col);
        append_coords(loop::bracket(x, a1), wide, col);
        if (space == Space::O) append_coords(LoopElement::diag(x.trace(), 0), w, col);
        columns.push_back(std::move(col));
    }
    Matrix m(columns.front().size(), Row(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i][j] = columns[j][i];
    }
    std::vector<CoordVector> out;
    for (auto& v : nullspace(std::move(m), n)) out.push_back({w, std::move(v)});
    return out;
}

std::size_t closure_span(const std::vector<LoopElement>& generators, int depth, Window w) {
    Echelon<Key> span;
    std::vector<LoopElement> frontier;
    for (const auto& g : generators) {
        auto r = span.insert(sparse(g));
        if (!r.empty()) frontier.push_back(dense(r));
    }
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<LoopElement> next;
        for (const auto& g : generators) {
            for (const auto& v : frontier) {
                auto r = span.insert(sparse(loop::bracket(g, v)));
                if (!r.empty()) next.push_back(dense(r));
            }
        }
        frontier = std::move(next);
    }
    // dim(S cap window) = dim S - rank of the projection of S outside the window.
    Echelon<Key> outside;
    for (const auto& [lead, row] : span.rows()) {
        SparseVec proj;
        for (const auto& [key, c] : row) {
            if (key.second < -w.bound() || key.second > w.bound()) proj.emplace(key, c);
        }
        if (!proj.empty()) outside.insert(proj);
    }
    return span.dimension() - outside.dimension();
}

LoopElement o_element(const OCoords& x) {
    LoopElement out;
    for (const auto& [k, c] : x.a) out += family(Family::A, k) * c;
    for (const auto& [k, c] : x.b) out += family(Family::B, k) * c;
    return out;
}

LoopElement iota(const OCoords& x) {
    LoopElement out;
    for (const auto& [k, c] : x.a) out += family(Family::cA, k) * c;
    for (const auto& [k, c] : x.b) out += (family(Family::cB, k) - family(Family::cB, -k)) * (c * kHalf);
    return out;
}

LoopElement project_rho(const LoopElement& x) { return decompose(x).o_part; }

std::vector<CheckResult> structure_checks(int bound) {
    using loop::zero_check;
    std::vector<CheckResult> out;
    const int K = bound;

    std::vector<std::pair<std::string, LoopElement>> ace_elements;
    for (int k = -K; k <= K; ++k) {
        for (Family f : {Family::cA, Family::cB}) {
            ace_elements.emplace_back(loop::to_string(loop::FamilyName{f, k}), family(f, k));
        }
    }
    for (int n = -K; n <= K + 1; ++n) ace_elements.emplace_back(loop::to_string(loop::FamilyName{Family::cW, n}), family(Family::cW, n));
    for (int n = 1; n <= K + 1; ++n) {
        for (Family f : {Family::cG, Family::cGt}) {
            ace_elements.emplace_back(loop::to_string(loop::FamilyName{f, n}), family(f, n));
        }
    }

    for (const auto& [name, x] : ace_elements) {
        const Decomposition d = decompose(x);
        const nlohmann::json p{{"element", name}};
        out.push_back(zero_check("struct.direct_sum", "x = o_part + z_part", p, d.o_part + d.z_part - x));
        CheckResult in_o{"struct.o_part", "o_part lies in O", p, membership(d.o_part, Space::O), {}};
        if (!in_o.passed) in_o.witness = to_string(d.o_part);
        out.push_back(std::move(in_o));
        const LaurentPoly& z = d.z_part.a;
        const bool central = d.z_part.is_diagonal() && d.z_part.a == d.z_part.d && arith::tau(z) == z &&
                             arith::gamma(z).is_zero();
        CheckResult in_z{"struct.z_part", "z_part = I (x) p with tau(p) = p and p(1) = 0", p, central, {}};
        if (!central) in_z.witness = to_string(d.z_part);
        out.push_back(std::move(in_z));
        const Decomposition again_o = decompose(d.o_part), again_z = decompose(d.z_part);
        out.push_back(zero_check("struct.idempotent_o", "decompose(o_part) = (o_part, 0)", p,
                                 (again_o.o_part - d.o_part) + again_o.z_part));
        out.push_back(zero_check("struct.idempotent_z", "decompose(z_part) = (0, z_part)", p,
                                 again_z.o_part + (again_z.z_part - d.z_part)));
    }

    for (int k = 1; k <= K; ++k) {
        out.push_back(zero_check("struct.rho_kernel", "rho((cB_k + cB_{-k})/2) = 0", {{"k", k}},
                                 project_rho(loop::center_basis(k))));
    }

    // rho is a Lie homomorphism on the cA/cB basis.
    for (int k = -K; k <= K; ++k) {
        for (int l = -K; l <= K; ++l) {
            for (Family f : {Family::cA, Family::cB}) {
                for (Family g : {Family::cA, Family::cB}) {
                    const LoopElement x = family(f, k), y = family(g, l);
                    const nlohmann::json p{{"x", loop::to_string(loop::FamilyName{f, k})},
                                           {"y", loop::to_string(loop::FamilyName{g, l})}};
                    out.push_back(zero_check("struct.rho_hom", "rho[x, y] = [rho x, rho y]", p,
                                             project_rho(loop::bracket(x, y)) - loop::bracket(project_rho(x), project_rho(y))));
                }
            }
        }
    }

    // sigma and dagger fix the center.
    for (int k = 1; k <= K; ++k) {
        const LoopElement z = family(Family::cB, k) + family(Family::cB, -k);
        const nlohmann::json p{{"k", k}};
        out.push_back(zero_check("struct.sigma_center", "sigma(cB_k + cB_{-k}) = cB_k + cB_{-k}", p, loop::sigma(z) - z));
        out.push_back(
            zero_check("struct.dagger_center", "dagger(cB_k + cB_{-k}) = cB_k + cB_{-k}", p, loop::dagger(z) - z));
    }

    // The G families are abelian, independent, and independent of O.
    const Window w(K);
    for (Family gf : {Family::cG, Family::cGt}) {
        const std::string tag(loop::family_tag(gf));
        std::vector<CoordVector> gs, with_o;
        for (int k = 0; k < K; ++k) gs.push_back(coords(family(gf, k + 1), w));
        for (int k = 0; k < K; ++k) {
            for (int l = 0; l < K; ++l) {
                out.push_back(zero_check("struct." + tag + ".abelian", "[" + tag + "_{k+1}, " + tag + "_{l+1}] = 0",
                                         {{"k", k}, {"l", l}}, loop::bracket(family(gf, k + 1), family(gf, l + 1))));
            }
        }
        with_o = gs;
        for (int k = -K; k <= K; ++k) with_o.push_back(coords(family(Family::A, k), w));
        for (int k = 1; k <= K; ++k) with_o.push_back(coords(family(Family::B, k), w));
        const std::size_t r1 = span_rank(gs), r2 = span_rank(with_o);
        CheckResult ind{"struct." + tag + ".independent", tag + "_{k+1}, k < K, are linearly independent",
                        {{"K", K}}, r1 == static_cast<std::size_t>(K), {}};
        if (!ind.passed) ind.witness = "rank " + std::to_string(r1);
        out.push_back(std::move(ind));
        CheckResult sum{"struct." + tag + ".direct_sum_O", "O-basis prefix together with " + tag + " is independent",
                        {{"K", K}}, r2 == with_o.size(), {}};
        if (!sum.passed) sum.witness = "rank " + std::to_string(r2) + " of " + std::to_string(with_o.size());
        out.push_back(std::move(sum));
    }
    return out;
}

}  // namespace onsager::structure
