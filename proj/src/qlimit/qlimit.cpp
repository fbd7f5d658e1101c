#include "onsager/qlimit/qlimit.hpp"

#include "onsager/errors.hpp"
#include "onsager/loop/families.hpp"

#include <functional>

namespace onsager::qlimit {

using arith::UniPoly;

namespace {

RatFunc q() { return RatFunc::q(); }
RatFunc qi() { return RatFunc::q_inv(); }

// q / ((q - 1/q)(q^2 - 1/q^2)), the coefficient of the PBW recursions.
RatFunc pbw_coeff() { return q() / ((q() - qi()) * (q().pow(2) - qi().pow(2))); }

NCPoly P(const Symbol& s) { return NCPoly(s); }

std::string indexed(const char* tag, int n) { return std::string(tag) + "[" + std::to_string(n) + "]"; }

void require(bool ok, const std::string& what) {
    if (!ok) throw BadIndex(what);
}

std::string describe(const Word& w) {
    std::string out;
    for (const auto& s : w) out += (out.empty() ? "" : "·") + s.name;
    return out.empty() ? "1" : out;
}

}  // namespace

RatFunc xi() { return RatFunc(UniPoly::monomial(GR::i(), 2) - UniPoly(GR::i()), UniPoly::q()); }

RatFunc rho_scalar() { return -(q().pow(2) - qi().pow(2)).pow(2); }

Symbol w0() { return {"W0", 1}; }
Symbol w1() { return {"W1", 1}; }
Symbol sym_A(int k) { return {indexed("A", k), 1}; }
Symbol sym_B(int m) { return {indexed("B", m), 2}; }
Symbol sym_cW(int n) { return {indexed("cW", n), 1}; }
Symbol sym_cG(int n) { return {indexed("cG", n), 2}; }
Symbol sym_cGt(int n) { return {indexed("cGt", n), 2}; }

NCPolyGR rescale_limit(const NCPoly& expr, int divide_xi_power) {
    const GR one(1);
    NCPolyGR out;
    for (const auto& [w, c] : expr.terms()) {
        const int excess = xi_weight(w) - divide_xi_power;
        const RatFunc scaled = c * xi().pow(excess);
        if (scaled.order_at(one) < 0) {
            const std::string msg = "term " + describe(w) + " has coefficient " + to_string(scaled) +
                                    " after dividing by xi^" + std::to_string(divide_xi_power);
            if (excess < 0) throw NonVanishingXi(msg);
            throw PoleAtOne(msg);
        }
        out.add(w, scaled.eval(one));
    }
    return out;
}

std::string to_string(Root r) {
    switch (r) {
        case Root::alpha0:
            return "alpha0";
        case Root::alpha1:
            return "alpha1";
        case Root::delta:
            return "delta";
    }
    return "?";
}

Root parse_root(const std::string& s) {
    if (s == "alpha0") return Root::alpha0;
    if (s == "alpha1") return Root::alpha1;
    if (s == "delta") return Root::delta;
    throw ParseError("unknown root '" + s + "' (expected alpha0, alpha1 or delta)");
}

NCPoly b_delta() { return P(w1()) * P(w0()) * qi().pow(2) - P(w0()) * P(w1()); }

NCPoly pbw(int n, Root root) {
    require(n >= 0, "pbw index must be >= 0, got " + std::to_string(n));
    if (root == Root::delta) require(n >= 1, "B_{n delta} needs n >= 1");
    const NCPoly bd = b_delta();
    const RatFunc c = pbw_coeff();
    auto alpha_chain = [&](const NCPoly& first, const NCPoly& other, const RatFunc& sign, int upto) {
        std::vector<NCPoly> b{first};
        if (upto >= 1) b.push_back(other + comm(bd, first) * (c * sign));
        for (int m = 2; m <= upto; ++m) {
            b.push_back(b[static_cast<std::size_t>(m - 2)] + comm(bd, b[static_cast<std::size_t>(m - 1)]) * (c * sign));
        }
        return b;
    };
    if (root == Root::alpha0) return alpha_chain(P(w0()), P(w1()), RatFunc(1), n).back();
    if (root == Root::alpha1) return alpha_chain(P(w1()), P(w0()), RatFunc(-1), n).back();
    if (n == 1) return bd;
    const auto a1 = alpha_chain(P(w1()), P(w0()), RatFunc(-1), n - 1);
    const NCPoly& top = a1[static_cast<std::size_t>(n - 1)];
    NCPoly sum;
    for (int l = 0; l <= n - 2; ++l) sum += a1[static_cast<std::size_t>(l)] * a1[static_cast<std::size_t>(n - l - 2)];
    return top * P(w0()) * qi().pow(2) - P(w0()) * top + sum * (qi().pow(2) - RatFunc(1));
}

NCPoly qons_residual(int which) {
    require(which == 1 || which == 2, "q-Dolan/Grady relation must be 1 or 2");
    const NCPoly x = P(which == 1 ? w0() : w1()), y = P(which == 1 ? w1() : w0());
    const RatFunc k = (q().pow(2) - qi().pow(2)).pow(2);
    return comm(x, qcomm(x, qcomm(x, y, q()), qi())) - comm(y, x) * k;
}

NCPolyGR dg_residual(int which) {
    require(which == 1 || which == 2, "Dolan/Grady relation must be 1 or 2");
    const NCPolyGR x(which == 1 ? w0() : w1()), y(which == 1 ? w1() : w0());
    return comm(x, comm(x, comm(x, y))) - comm(x, y) * GR(4);
}

namespace {

// Shared transcription of relations 1..11. `qc` is the q-commutator (or the
// commutator), `inv_qint` stands for 1/(q + 1/q) and `rho` for the scalar.
template <typename C>
std::vector<NCPolyT<C>> ace_build(int id, int k, int l,
                                  const std::function<NCPolyT<C>(const NCPolyT<C>&, const NCPolyT<C>&)>& qc,
                                  const C& inv_qint, const C& rho) {
    require(id >= 1 && id <= 11, "relation id must be in 1..11, got " + std::to_string(id));
    require(k >= 0 && l >= 0, "relation parameters must be >= 0");
    using T = NCPolyT<C>;
    auto W = [](int n) { return T(sym_cW(n)); };
    auto G = [](int n) { return T(sym_cG(n)); };
    auto Gt = [](int n) { return T(sym_cGt(n)); };
    switch (id) {
        case 1: {
            const T rhs = (Gt(k + 1) - G(k + 1)) * inv_qint;
            return {comm(W(0), W(k + 1)) - rhs, comm(W(-k), W(1)) - rhs};
        }
        case 2: {
            const T rhs = (W(-k - 1) - W(k + 1)) * rho;
            return {qc(W(0), G(k + 1)) - rhs, qc(Gt(k + 1), W(0)) - rhs};
        }
        case 3: {
            const T rhs = (W(k + 2) - W(-k)) * rho;
            return {qc(G(k + 1), W(1)) - rhs, qc(W(1), Gt(k + 1)) - rhs};
        }
        case 4:
            return {comm(W(-k), W(-l)), comm(W(k + 1), W(l + 1))};
        case 5:
            return {comm(W(-k), W(l + 1)) + comm(W(k + 1), W(-l))};
        case 6:
            return {comm(W(-k), G(l + 1)) + comm(G(k + 1), W(-l))};
        case 7:
            return {comm(W(-k), Gt(l + 1)) + comm(Gt(k + 1), W(-l))};
        case 8:
            return {comm(W(k + 1), G(l + 1)) + comm(G(k + 1), W(l + 1))};
        case 9:
            return {comm(W(k + 1), Gt(l + 1)) + comm(Gt(k + 1), W(l + 1))};
        case 10:
            return {comm(G(k + 1), G(l + 1)), comm(Gt(k + 1), Gt(l + 1))};
        default:
            return {comm(Gt(k + 1), G(l + 1)) + comm(G(k + 1), Gt(l + 1))};
    }
}

}  // namespace

std::vector<NCPoly> ace_relation_q(int id, int k, int l) {
    return ace_build<RatFunc>(
        id, k, l, [](const NCPoly& x, const NCPoly& y) { return qcomm(x, y); }, (q() + qi()).inverse(),
        rho_scalar());
}

std::vector<NCPolyGR> ace_relation_classical(int id, int k, int l) {
    return ace_build<GR>(
        id, k, l, [](const NCPolyGR& x, const NCPolyGR& y) { return comm(x, y); }, GR(arith::make_rational(1, 2)),
        GR(4));
}

int ace_weight(int id) {
    require(id >= 1 && id <= 11, "relation id must be in 1..11, got " + std::to_string(id));
    switch (id) {
        case 1:
        case 4:
        case 5:
            return 2;
        case 10:
        case 11:
            return 4;
        default:
            return 3;
    }
}

NCPoly sigma_swap(const NCPoly& p) {
    auto swap_symbol = [](const Symbol& s) -> Symbol {
        if (s.name == "W0") return w1();
        if (s.name == "W1") return w0();
        const loop::FamilyName f = loop::parse_family_literal(s.name);
        switch (f.tag) {
            case loop::Family::cW:
                return sym_cW(1 - f.index);
            case loop::Family::cG:
                return sym_cGt(f.index);
            case loop::Family::cGt:
                return sym_cG(f.index);
            default:
                throw ParseError("sigma_swap: symbol '" + s.name + "' is not in the extension alphabet");
        }
    };
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        Word sw;
        for (const auto& s : w) sw.push_back(swap_symbol(s));
        out.add(std::move(sw), c);
    }
    return out;
}

NCPolyGR pbw_limit_identity(int n, Root root) {
    require(n >= 0, "pbw index must be >= 0, got " + std::to_string(n));
    if (root == Root::delta) require(n >= 1, "B_{n delta} needs n >= 1");
    auto A = [](int k) { return P(sym_A(k)); };
    // B_delta = 2 xi^2 B_1: the factor 2 is a coefficient, xi^2 is the weight.
    const NCPoly bd = P(sym_B(1)) * RatFunc(2);
    const RatFunc c = pbw_coeff();
    NCPoly expr;
    switch (root) {
        case Root::alpha0:
            // B_{n delta + alpha0} = xi A_{-n}; B_{alpha1} = W1 = xi A_1.
            if (n == 0) break;
            expr = A(-n) - (n == 1 ? A(1) : A(2 - n)) - comm(bd, A(1 - n)) * c;
            break;
        case Root::alpha1:
            // B_{n delta + alpha1} = xi A_{n+1}; B_{alpha0} = W0 = xi A_0.
            if (n == 0) break;
            expr = A(n + 1) - (n == 1 ? A(0) : A(n - 1)) + comm(bd, A(n)) * c;
            break;
        case Root::delta: {
            const NCPoly lhs = P(sym_B(n)) * RatFunc(2);
            NCPoly sum;
            for (int l = 0; l <= n - 2; ++l) sum += A(l + 1) * A(n - l - 1);
            expr = lhs - (A(n) * A(0) * qi().pow(2) - A(0) * A(n) + sum * (qi().pow(2) - RatFunc(1)));
            break;
        }
    }
    return rescale_limit(expr, root == Root::delta ? 2 : 1);
}

bool validate_on_matrices(const NCPolyGR& identity) {
    using loop::LoopElement;
    auto matrix = [](const Symbol& s) {
        if (s.name == "W0") return loop::family(loop::Family::W, 0);
        if (s.name == "W1") return loop::family(loop::Family::W, 1);
        return loop::family(loop::parse_family_literal(s.name));
    };
    LoopElement total;
    for (const auto& [w, c] : identity.terms()) {
        LoopElement prod = LoopElement::scalar(1);
        for (const auto& s : w) prod = loop::matmul(prod, matrix(s));
        total += prod * c;
    }
    return total.is_zero();
}

namespace {

CheckResult guarded(std::string id, std::string statement, nlohmann::json params,
                    const std::function<std::pair<bool, std::string>()>& body) {
    CheckResult r{std::move(id), std::move(statement), std::move(params), false, {}};
    try {
        auto [ok, witness] = body();
        r.passed = ok;
        if (!ok) r.witness = witness;
    } catch (const Error& e) {
        r.witness = e.kind() + ": " + e.what();
    }
    return r;
}

}  // namespace

std::vector<CheckResult> limit_dg_checks() {
    std::vector<CheckResult> out;
    for (int which : {1, 2}) {
        const std::string name = "qOns" + std::to_string(which) + "→DG" + std::to_string(which);
        out.push_back(guarded("limit.dg." + std::to_string(which), name, {{"relation", which}, {"xi_power", 4}},
                              [which] {
                                  NCPolyGR lim = rescale_limit(qons_residual(which), 4);
                                  NCPolyGR expected = dg_residual(which);
                                  return std::pair{lim == expected, to_string(lim - expected)};
                              }));
    }
    return out;
}

std::vector<CheckResult> limit_ace_checks(int bound) {
    std::vector<CheckResult> out;
    for (int id = 1; id <= 11; ++id) {
        const bool uses_l = id >= 4;
        for (int k = 0; k <= bound; ++k) {
            for (int l = 0; l <= (uses_l ? bound : 0); ++l) {
                nlohmann::json params{{"id", id}, {"k", k}};
                if (uses_l) params["l"] = l;
                params["xi_power"] = ace_weight(id);
                out.push_back(guarded("limit.ace." + std::to_string(id),
                                      "q-relation " + std::to_string(id) + " tends to classical relation " +
                                          std::to_string(id),
                                      params, [id, k, l] {
                                          const auto qs = ace_relation_q(id, k, l);
                                          const auto cs = ace_relation_classical(id, k, l);
                                          std::string witness;
                                          for (std::size_t i = 0; i < qs.size(); ++i) {
                                              NCPolyGR lim = rescale_limit(qs[i], ace_weight(id));
                                              if (lim != cs[i]) {
                                                  witness = "part " + std::to_string(i + 1) + ": " +
                                                            to_string(lim - cs[i]);
                                                  break;
                                              }
                                          }
                                          return std::pair{witness.empty(), witness};
                                      }));
            }
        }
    }
    return out;
}

std::vector<CheckResult> limit_pbw_checks(int bound) {
    std::vector<CheckResult> out;
    for (Root root : {Root::alpha0, Root::alpha1, Root::delta}) {
        for (int n = root == Root::delta ? 1 : 0; n <= bound; ++n) {
            out.push_back(guarded("limit.pbw." + to_string(root), "limit of the PBW recursion holds for the matrices",
                                  {{"n", n}, {"root", to_string(root)}}, [n, root] {
                                      NCPolyGR id = pbw_limit_identity(n, root);
                                      // Only n = 0 on the alpha roots is a definition with nothing to check.
                                      bool ok = validate_on_matrices(id) && (n == 0 || !id.is_zero());
                                      return std::pair{ok, to_string(id)};
                                  }));
        }
    }
    return out;
}

std::vector<CheckResult> sigma_swap_checks(int bound) {
    std::vector<CheckResult> out;
    for (int id : {1, 4, 5, 10, 11}) {
        for (int k = 0; k <= bound; ++k) {
            for (int l = 0; l <= bound; ++l) {
                out.push_back(guarded("limit.sigma." + std::to_string(id),
                                      "sigma maps relation " + std::to_string(id) + " to a listed relation",
                                      {{"id", id}, {"k", k}, {"l", l}}, [id, k, l] {
                                          const auto own = ace_relation_q(id, k, l);
                                          auto parts = own;
                                          auto mirror = ace_relation_q(id, l, k);
                                          parts.insert(parts.end(), mirror.begin(), mirror.end());
                                          for (const auto& p : own) {
                                              const NCPoly s = sigma_swap(p);
                                              bool found = false;
                                              for (const auto& cand : parts) {
                                                  if (s == cand || s == -cand) found = true;
                                              }
                                              if (!found) return std::pair{false, to_string(s)};
                                          }
                                          return std::pair{true, std::string()};
                                      }));
            }
        }
    }
    return out;
}

}  // namespace onsager::qlimit
