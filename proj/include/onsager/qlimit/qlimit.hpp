#pragma once

#include "onsager/qlimit/ncpoly.hpp"
#include "onsager/report.hpp"

#include <string>
#include <vector>

namespace onsager::qlimit {

// xi = i(q - 1/q).
RatFunc xi();
// The scalar -(q^2 - q^-2)^2 of the extension relations.
RatFunc rho_scalar();

// Symbols of the two alphabets. W-type symbols have weight 1, G-type and B
// symbols weight 2.
Symbol w0();
Symbol w1();
Symbol sym_A(int k);
Symbol sym_B(int m);
Symbol sym_cW(int n);
Symbol sym_cG(int n);
Symbol sym_cGt(int n);

// Substitutes s -> xi^w(s) s, divides every coefficient by xi^d and sets
// q = 1. A coefficient c xi^(w-d) with a pole at q = 1 raises
// NonVanishingXi when w < d (the division overshoots the xi-order of the
// term) and PoleAtOne otherwise.
NCPolyGR rescale_limit(const NCPoly& expr, int divide_xi_power);

enum class Root { alpha0, alpha1, delta };
std::string to_string(Root r);
Root parse_root(const std::string& s);

// q^-2 W1 W0 - W0 W1.
NCPoly b_delta();
// Literal expansion of the PBW recursions in the free algebra on W0, W1.
// BadIndex for delta with n = 0.
NCPoly pbw(int n, Root root);

// LHS - RHS of the q-Dolan/Grady relation `which` (1 or 2) and of the
// classical Dolan/Grady relation.
NCPoly qons_residual(int which);
NCPolyGR dg_residual(int which);

// Relations 1..11 of the q-deformed extension and their classical
// counterparts, as LHS - RHS. Chained equalities give one residual per
// equals sign, in left-to-right order; paired relations give one residual
// per member. BadIndex outside id 1..11 or for negative k, l.
std::vector<NCPoly> ace_relation_q(int id, int k, int l);
std::vector<NCPolyGR> ace_relation_classical(int id, int k, int l);
// Total xi-weight of every term of relation `id`.
int ace_weight(int id);

// sigma on the extension alphabet: cW[n] <-> cW[1-n], cG <-> cGt.
NCPoly sigma_swap(const NCPoly& p);

// The PBW recursion for (n, root) written in the substituted symbols
// A[k] (= B_{k delta + alpha} / xi) and B[m], rescaled and taken to q = 1.
// Only one level of the recursion is unfolded: the lower PBW elements stay
// symbols.
NCPolyGR pbw_limit_identity(int n, Root root);
// Substitutes every symbol by its matrix (W0, W1 or a family literal such
// as A[-2], B[1], cG[3]), multiplies out the words and tests for zero.
// ParseError for symbols outside these alphabets.
bool validate_on_matrices(const NCPolyGR& identity);

// Report-producing drivers for the CLI and the acceptance suite.
std::vector<CheckResult> limit_dg_checks();
std::vector<CheckResult> limit_ace_checks(int bound);
std::vector<CheckResult> limit_pbw_checks(int bound);
std::vector<CheckResult> sigma_swap_checks(int bound);

}  // namespace onsager::qlimit
