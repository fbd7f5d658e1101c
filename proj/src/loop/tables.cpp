#include "onsager/loop/tables.hpp"

#include "onsager/loop/families.hpp"

namespace onsager::loop {

namespace {

using F = Family;

LoopElement fam(Family f, int k) { return family(f, k); }
LoopElement br(const LoopElement& x, const LoopElement& y) { return bracket(x, y); }
const GR kHalf(arith::make_rational(1, 2));

nlohmann::json kl(int k, int l) { return {{"k", k}, {"l", l}}; }
nlohmann::json only_k(int k) { return {{"k", k}}; }

}  // namespace

CheckResult zero_check(std::string id, std::string statement, nlohmann::json params, const LoopElement& residual) {
    CheckResult r{std::move(id), std::move(statement), std::move(params), residual.is_zero(), {}};
    if (!r.passed) r.witness = to_string(residual);
    return r;
}

std::vector<CheckResult> onsager_ab_table(int bound) {
    std::vector<CheckResult> out;
    for (int k = -bound; k <= bound; ++k) {
        for (int l = -bound; l <= bound; ++l) {
            out.push_back(zero_check("O.AB.ComAA", "[A_k, A_l] = 2 B_{k-l}", kl(k, l),
                                     br(fam(F::A, k), fam(F::A, l)) - fam(F::B, k - l) * GR(2)));
            out.push_back(zero_check("O.AB.ComAG", "[B_k, A_l] = A_{k+l} - A_{l-k}", kl(k, l),
                                     br(fam(F::B, k), fam(F::A, l)) - fam(F::A, k + l) + fam(F::A, l - k)));
            out.push_back(zero_check("O.AB.ComGG", "[B_k, B_l] = 0", kl(k, l), br(fam(F::B, k), fam(F::B, l))));
        }
    }
    return out;
}

std::vector<CheckResult> onsager_w_table(int bound) {
    std::vector<CheckResult> out;
    const GR four(4);
    for (int k = 0; k <= bound; ++k) {
        for (int l = 0; l <= bound; ++l) {
            out.push_back(zero_check("O.W.com1", "[W_{-k}, W_{l+1}] = Gt_{k+l+1}", kl(k, l),
                                     br(fam(F::W, -k), fam(F::W, l + 1)) - fam(F::Gt, k + l + 1)));
            out.push_back(zero_check(
                "O.W.com2", "[Gt_{k+1}, W_{-l}] = 4 W_{-k-l-1} - 4 W_{k+l+1}", kl(k, l),
                br(fam(F::Gt, k + 1), fam(F::W, -l)) - (fam(F::W, -k - l - 1) - fam(F::W, k + l + 1)) * four));
            out.push_back(zero_check(
                "O.W.com3", "[W_{k+1}, Gt_{l+1}] = 4 W_{k+l+2} - 4 W_{-k-l}", kl(k, l),
                br(fam(F::W, k + 1), fam(F::Gt, l + 1)) - (fam(F::W, k + l + 2) - fam(F::W, -k - l)) * four));
            out.push_back(zero_check("O.W.com4", "[W_{-k}, W_{-l}] = 0", kl(k, l), br(fam(F::W, -k), fam(F::W, -l))));
            out.push_back(
                zero_check("O.W.com5", "[W_{k+1}, W_{l+1}] = 0", kl(k, l), br(fam(F::W, k + 1), fam(F::W, l + 1))));
            out.push_back(zero_check("O.W.com6", "[Gt_{k+1}, Gt_{l+1}] = 0", kl(k, l),
                                     br(fam(F::Gt, k + 1), fam(F::Gt, l + 1))));
        }
    }
    return out;
}

std::vector<CheckResult> ace_ab_table(int bound) {
    std::vector<CheckResult> out;
    for (int k = -bound; k <= bound; ++k) {
        for (int l = -bound; l <= bound; ++l) {
            out.push_back(zero_check("ACE.AB.ComAA", "[cA_k, cA_l] = cB_{k-l} - cB_{l-k}", kl(k, l),
                                     br(fam(F::cA, k), fam(F::cA, l)) - fam(F::cB, k - l) + fam(F::cB, l - k)));
            out.push_back(zero_check("ACE.AB.ComAG", "[cB_k, cA_l] = A_{k+l} - A_{l-k}", kl(k, l),
                                     br(fam(F::cB, k), fam(F::cA, l)) - fam(F::A, k + l) + fam(F::A, l - k)));
            out.push_back(
                zero_check("ACE.AB.ComGG", "[cB_k, cB_l] = 0", kl(k, l), br(fam(F::cB, k), fam(F::cB, l))));
        }
    }
    return out;
}

std::vector<CheckResult> ace_w_table(int bound) {
    std::vector<CheckResult> out;
    const GR four(4);
    for (int k = 0; k <= bound; ++k) {
        for (int l = 0; l <= bound; ++l) {
            out.push_back(zero_check(
                "ACE.W.com1", "[cW_{-k}, cW_{l+1}] = (cGt_{k+l+1} - cG_{k+l+1})/2", kl(k, l),
                br(fam(F::cW, -k), fam(F::cW, l + 1)) - (fam(F::cGt, k + l + 1) - fam(F::cG, k + l + 1)) * kHalf));
            LoopElement rhs2 = (fam(F::cW, -k - l - 1) - fam(F::cW, k + l + 1)) * four;
            out.push_back(zero_check("ACE.W.com2a", "[cW_{-l}, cG_{k+1}] = 4 cW_{-k-l-1} - 4 cW_{k+l+1}", kl(k, l),
                                     br(fam(F::cW, -l), fam(F::cG, k + 1)) - rhs2));
            out.push_back(zero_check("ACE.W.com2b", "[cGt_{k+1}, cW_{-l}] = 4 cW_{-k-l-1} - 4 cW_{k+l+1}", kl(k, l),
                                     br(fam(F::cGt, k + 1), fam(F::cW, -l)) - rhs2));
            LoopElement rhs3 = (fam(F::cW, k + l + 2) - fam(F::cW, -k - l)) * four;
            out.push_back(zero_check("ACE.W.com3a", "[cG_{k+1}, cW_{l+1}] = 4 cW_{k+l+2} - 4 cW_{-k-l}", kl(k, l),
                                     br(fam(F::cG, k + 1), fam(F::cW, l + 1)) - rhs3));
            out.push_back(zero_check("ACE.W.com3b", "[cW_{l+1}, cGt_{k+1}] = 4 cW_{k+l+2} - 4 cW_{-k-l}", kl(k, l),
                                     br(fam(F::cW, l + 1), fam(F::cGt, k + 1)) - rhs3));
            out.push_back(
                zero_check("ACE.W.com4", "[cW_{-k}, cW_{-l}] = 0", kl(k, l), br(fam(F::cW, -k), fam(F::cW, -l))));
            out.push_back(zero_check("ACE.W.com5", "[cW_{k+1}, cW_{l+1}] = 0", kl(k, l),
                                     br(fam(F::cW, k + 1), fam(F::cW, l + 1))));
            out.push_back(zero_check("ACE.W.com6", "[cG_{k+1}, cG_{l+1}] = 0", kl(k, l),
                                     br(fam(F::cG, k + 1), fam(F::cG, l + 1))));
            out.push_back(zero_check("ACE.W.com7", "[cG_{k+1}, cGt_{l+1}] = 0", kl(k, l),
                                     br(fam(F::cG, k + 1), fam(F::cGt, l + 1))));
            out.push_back(zero_check("ACE.W.com8", "[cGt_{k+1}, cGt_{l+1}] = 0", kl(k, l),
                                     br(fam(F::cGt, k + 1), fam(F::cGt, l + 1))));
        }
    }
    return out;
}

std::vector<CheckResult> dolan_grady_checks() {
    const LoopElement w0 = fam(F::W, 0), w1 = fam(F::W, 1);
    return {
        zero_check("O.DG1", "[W_0, [W_0, [W_0, W_1]]] = 4 [W_0, W_1]", nlohmann::json::object(),
                   br(w0, br(w0, br(w0, w1))) - br(w0, w1) * GR(4)),
        zero_check("O.DG2", "[W_1, [W_1, [W_1, W_0]]] = 4 [W_1, W_0]", nlohmann::json::object(),
                   br(w1, br(w1, br(w1, w0))) - br(w1, w0) * GR(4)),
    };
}

std::vector<CheckResult> symmetry_action_checks(int bound) {
    std::vector<CheckResult> out;
    for (int k = -bound; k <= bound; ++k) {
        for (F a : {F::A, F::cA}) {
            std::string n(family_tag(a));
            out.push_back(zero_check("sym.sigma." + n, "sigma(" + n + "_k) = " + n + "_{1-k}", only_k(k),
                                     sigma(fam(a, k)) - fam(a, 1 - k)));
            out.push_back(zero_check("sym.dagger." + n, "dagger(" + n + "_k) = " + n + "_k", only_k(k),
                                     dagger(fam(a, k)) - fam(a, k)));
        }
        for (F b : {F::B, F::cB}) {
            std::string n(family_tag(b));
            out.push_back(zero_check("sym.sigma." + n, "sigma(" + n + "_k) = " + n + "_{-k}", only_k(k),
                                     sigma(fam(b, k)) - fam(b, -k)));
            out.push_back(zero_check("sym.dagger." + n, "dagger(" + n + "_k) = " + n + "_{-k}", only_k(k),
                                     dagger(fam(b, k)) - fam(b, -k)));
        }
    }
    for (int k = 0; k <= bound; ++k) {
        for (F w : {F::W, F::cW}) {
            std::string n(family_tag(w));
            out.push_back(zero_check("sym.sigma." + n + "-", "sigma(" + n + "_{-k}) = " + n + "_{k+1}", only_k(k),
                                     sigma(fam(w, -k)) - fam(w, k + 1)));
            out.push_back(zero_check("sym.sigma." + n + "+", "sigma(" + n + "_{k+1}) = " + n + "_{-k}", only_k(k),
                                     sigma(fam(w, k + 1)) - fam(w, -k)));
            out.push_back(zero_check("sym.dagger." + n + "-", "dagger(" + n + "_{-k}) = " + n + "_{-k}", only_k(k),
                                     dagger(fam(w, -k)) - fam(w, -k)));
            out.push_back(zero_check("sym.dagger." + n + "+", "dagger(" + n + "_{k+1}) = " + n + "_{k+1}",
                                     only_k(k), dagger(fam(w, k + 1)) - fam(w, k + 1)));
        }
        out.push_back(zero_check("sym.sigma.Gt", "sigma(Gt_{k+1}) = -Gt_{k+1}", only_k(k),
                                 sigma(fam(F::Gt, k + 1)) + fam(F::Gt, k + 1)));
        out.push_back(zero_check("sym.dagger.Gt", "dagger(Gt_{k+1}) = -Gt_{k+1}", only_k(k),
                                 dagger(fam(F::Gt, k + 1)) + fam(F::Gt, k + 1)));
        out.push_back(zero_check("sym.sigma.cG", "sigma(cG_{k+1}) = cGt_{k+1}", only_k(k),
                                 sigma(fam(F::cG, k + 1)) - fam(F::cGt, k + 1)));
        out.push_back(zero_check("sym.sigma.cGt", "sigma(cGt_{k+1}) = cG_{k+1}", only_k(k),
                                 sigma(fam(F::cGt, k + 1)) - fam(F::cG, k + 1)));
        out.push_back(zero_check("sym.dagger.cG", "dagger(cG_{k+1}) = cGt_{k+1}", only_k(k),
                                 dagger(fam(F::cG, k + 1)) - fam(F::cGt, k + 1)));
        out.push_back(zero_check("sym.dagger.cGt", "dagger(cGt_{k+1}) = cG_{k+1}", only_k(k),
                                 dagger(fam(F::cGt, k + 1)) - fam(F::cG, k + 1)));
    }
    // Membership of every family element in its algebra.
    auto member = [&out](F f, int k, Space s) {
        CheckResult r{"member." + std::string(family_tag(f)), to_string(FamilyName{f, k}) + " in " + to_string(s),
                      only_k(k), membership(fam(f, k), s), {}};
        if (!r.passed) r.witness = to_string(fam(f, k));
        out.push_back(std::move(r));
    };
    for (int k = -bound; k <= bound; ++k) {
        member(F::A, k, Space::O);
        member(F::B, k, Space::O);
        member(F::W, k, Space::O);
        member(F::cA, k, Space::ACE);
        member(F::cB, k, Space::ACE);
        member(F::cW, k, Space::ACE);
    }
    for (int k = 1; k <= bound + 1; ++k) {
        member(F::Gt, k, Space::O);
        member(F::cG, k, Space::ACE);
        member(F::cGt, k, Space::ACE);
    }
    return out;
}

std::vector<CheckResult> cross_family_checks(int bound) {
    std::vector<CheckResult> out;
    for (int k = -bound; k <= bound; ++k) {
        out.push_back(zero_check("cross.A", "A_k = cA_k", only_k(k), fam(F::A, k) - fam(F::cA, k)));
        out.push_back(zero_check("cross.B", "B_k = (cB_k - cB_{-k})/2", only_k(k),
                                 fam(F::B, k) - (fam(F::cB, k) - fam(F::cB, -k)) * kHalf));
    }
    for (int k = 0; k <= bound; ++k) {
        out.push_back(zero_check("cross.W-", "W_{-k} = cW_{-k}", only_k(k), fam(F::W, -k) - fam(F::cW, -k)));
        out.push_back(zero_check("cross.W+", "W_{k+1} = cW_{k+1}", only_k(k), fam(F::W, k + 1) - fam(F::cW, k + 1)));
        out.push_back(zero_check("cross.Gt", "Gt_{k+1} = (cGt_{k+1} - cG_{k+1})/2", only_k(k),
                                 fam(F::Gt, k + 1) - (fam(F::cGt, k + 1) - fam(F::cG, k + 1)) * kHalf));
    }
    return out;
}

std::vector<CheckResult> involution_checks(int bound) {
    std::vector<CheckResult> out;
    auto each = [&](F f, int k) {
        LoopElement x = fam(f, k);
        nlohmann::json p{{"element", to_string(FamilyName{f, k})}};
        out.push_back(zero_check("inv.theta", "theta^2 = id", p, theta(theta(x)) - x));
        out.push_back(zero_check("inv.sigma", "sigma^2 = id", p, sigma(sigma(x)) - x));
        out.push_back(zero_check("inv.dagger", "dagger^2 = id", p, dagger(dagger(x)) - x));
        out.push_back(zero_check("comm.theta.sigma", "theta sigma = sigma theta", p, theta(sigma(x)) - sigma(theta(x))));
        out.push_back(
            zero_check("comm.theta.dagger", "theta dagger = dagger theta", p, theta(dagger(x)) - dagger(theta(x))));
        out.push_back(
            zero_check("comm.sigma.dagger", "sigma dagger = dagger sigma", p, sigma(dagger(x)) - dagger(sigma(x))));
    };
    for (int k = -bound; k <= bound; ++k) {
        for (F f : {F::A, F::B, F::cA, F::cB, F::W, F::cW}) each(f, k);
    }
    for (int k = 1; k <= bound; ++k) {
        for (F f : {F::Gt, F::cG, F::cGt}) each(f, k);
    }
    return out;
}

std::vector<CheckResult> central_witness_checks(int bound) {
    std::vector<CheckResult> out;
    const LoopElement a0 = fam(F::cA, 0), a1 = fam(F::cA, 1);
    for (int k = -bound; k <= bound; ++k) {
        LoopElement z = fam(F::cB, k) + fam(F::cB, -k);
        out.push_back(zero_check("center.B.scalar", "cB_k + cB_{-k} = I (t^k + t^{-k} - 2)", only_k(k),
                                 z - LoopElement::scalar(LaurentPoly::t(k) + LaurentPoly::t(-k) - LaurentPoly(2))));
        out.push_back(zero_check("center.B.A0", "[cB_k + cB_{-k}, cA_0] = 0", only_k(k), bracket(z, a0)));
        out.push_back(zero_check("center.B.A1", "[cB_k + cB_{-k}, cA_1] = 0", only_k(k), bracket(z, a1)));
    }
    for (int k = 0; k <= bound; ++k) {
        LoopElement z = (fam(F::cG, k + 1) + fam(F::cGt, k + 1)) * kHalf;
        LaurentPoly expected =
            (LaurentPoly::t(1) + LaurentPoly::t(-1) - LaurentPoly(2)) * chebyshev_weight(static_cast<unsigned>(k));
        out.push_back(zero_check("center.G.scalar", "(cG_{k+1} + cGt_{k+1})/2 = I (t + 1/t - 2) ((t + 1/t)/2)^k",
                                 only_k(k), z - LoopElement::scalar(expected)));
        out.push_back(zero_check("center.G.A0", "[(cG_{k+1} + cGt_{k+1})/2, cA_0] = 0", only_k(k), bracket(z, a0)));
        out.push_back(zero_check("center.G.A1", "[(cG_{k+1} + cGt_{k+1})/2, cA_1] = 0", only_k(k), bracket(z, a1)));
    }
    return out;
}

}  // namespace onsager::loop
