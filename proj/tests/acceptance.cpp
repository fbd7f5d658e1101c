// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include "generators.hpp"

#include "onsager/cli/cli.hpp"
#include "onsager/dsl/dsl.hpp"
#include "onsager/errors.hpp"
#include "onsager/loop/families.hpp"
#include "onsager/loop/tables.hpp"
#include "onsager/qlimit/qlimit.hpp"
#include "onsager/structure/structure.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace onsager;
using loop::Family;
using loop::LoopElement;
using structure::Window;

namespace {

struct Tally {
    std::size_t checks = 0;
    std::size_t failed = 0;
    std::string first_failure;

    void add(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            if (failed == 0) first_failure = what;
            ++failed;
        }
    }
    void add(const std::vector<CheckResult>& rs) {
        for (const auto& r : rs) add(r.passed, r.check_id + " " + r.parameters.dump() + " " + r.witness);
    }
};

LoopElement F(Family f, int k) { return loop::family(f, k); }

std::size_t rank_in(const std::vector<LoopElement>& xs, int n) {
    std::vector<structure::CoordVector> vs;
    for (const auto& x : xs) vs.push_back(structure::coords(x, Window(n)));
    return structure::span_rank(vs);
}

std::vector<std::string> shipped_suites() {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(ONSAGER_SUITE_DIR)) {
        if (e.path().extension() == ".lrel") out.push_back(e.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string suite_path(const std::string& name) { return std::string(ONSAGER_SUITE_DIR) + "/" + name; }

void bracket_tables(Tally& t) {
    t.add(loop::onsager_ab_table(8));
    t.add(loop::onsager_w_table(8));
    t.add(loop::ace_ab_table(8));
    t.add(loop::ace_w_table(8));
}

void symmetries(Tally& t) {
    t.add(loop::symmetry_action_checks(8));
    t.add(loop::cross_family_checks(8));
    t.add(loop::involution_checks(8));
    testing::Gen g(2024);
    for (int i = 0; i < 100; ++i) {
        const LoopElement x{g.laurent(), g.laurent(), g.laurent(), g.laurent()};
        using loop::dagger, loop::sigma, loop::theta, loop::epsilon;
        const std::string tag = "random element " + std::to_string(i);
        t.add(theta(theta(x)) == x && sigma(sigma(x)) == x && dagger(dagger(x)) == x, tag + ": involution");
        t.add(theta(sigma(x)) == sigma(theta(x)) && theta(dagger(x)) == dagger(theta(x)) &&
                  sigma(dagger(x)) == dagger(sigma(x)),
              tag + ": commutation");
        t.add(epsilon(theta(x)) == epsilon(x) && epsilon(sigma(x)) == epsilon(x) && epsilon(dagger(x)) == epsilon(x),
              tag + ": epsilon invariance");
    }
}

void ranks(Tally& t) {
    for (int n : {2, 4, 8}) {
        std::vector<LoopElement> o, ace;
        for (int k = -n; k <= n; ++k) {
            o.push_back(F(Family::A, k));
            ace.push_back(F(Family::cA, k));
            if (k != 0) ace.push_back(F(Family::cB, k));
        }
        for (int k = 1; k <= n; ++k) o.push_back(F(Family::B, k));
        t.add(rank_in(o, n) == static_cast<std::size_t>(3 * n + 1), "O rank at N=" + std::to_string(n));
        t.add(rank_in(ace, n) == static_cast<std::size_t>(4 * n + 1), "ACE rank at N=" + std::to_string(n));
    }
    const int K = 3;
    std::vector<LoopElement> prefix;
    for (int k = 0; k <= K; ++k) {
        for (auto [f, i] : {std::pair{Family::cW, -k}, {Family::cW, k + 1}, {Family::cG, k + 1}, {Family::cGt, k + 1}}) {
            prefix.push_back(F(f, i));
        }
    }
    t.add(prefix.size() == 16 && rank_in(prefix, K + 1) == 16, "W/G prefix rank at K=3");
}

void center(Tally& t) {
    for (int n : {1, 4, 8}) {
        const Window w(n);
        const auto basis = structure::center_solver(w);
        std::vector<structure::CoordVector> expected, both = basis;
        for (int k = 1; k <= n; ++k) expected.push_back(structure::coords(loop::center_basis(k), w));
        both.insert(both.end(), expected.begin(), expected.end());
        const auto N = static_cast<std::size_t>(n);
        t.add(basis.size() == N && structure::span_rank(basis) == N, "center rank at N=" + std::to_string(n));
        t.add(structure::span_rank(expected) == N && structure::span_rank(both) == N,
              "center containment at N=" + std::to_string(n));
        t.add(structure::center_solver(w, loop::Space::O).empty(), "trace-zero center at N=" + std::to_string(n));
    }
}

void maps(Tally& t) {
    t.add(structure::structure_checks(8));
    for (int k = -8; k <= 8; ++k) {
        structure::OCoords a;
        a.a[k] = arith::GR(1);
        t.add(structure::project_rho(structure::iota(a)) == F(Family::A, k), "rho iota A_" + std::to_string(k));
        if (k >= 1) {
            structure::OCoords b;
            b.b[k] = arith::GR(1);
            t.add(structure::project_rho(structure::iota(b)) == F(Family::B, k), "rho iota B_" + std::to_string(k));
        }
    }
    for (Family f : {Family::cA, Family::cB, Family::cW}) {
        for (int k = -8; k <= 8; ++k) {
            const auto x = F(f, k);
            const auto d = structure::decompose(x);
            const auto dd = structure::decompose(d.o_part);
            t.add(d.o_part + d.z_part == x && dd.z_part.is_zero() && dd.o_part == d.o_part &&
                      structure::decompose(d.z_part).o_part.is_zero(),
                  "decompose " + loop::to_string(loop::FamilyName{f, k}));
        }
    }
    for (Family f : {Family::cG, Family::cGt}) {
        for (int k = 1; k <= 8; ++k) {
            const auto x = F(f, k);
            const auto d = structure::decompose(x);
            t.add(d.o_part + d.z_part == x && structure::decompose(d.o_part).z_part.is_zero(),
                  "decompose " + loop::to_string(loop::FamilyName{f, k}));
        }
    }
}

void presentations(Tally& t) {
    for (const char* name : {"o_presentation.lrel", "ace_g_presentation.lrel", "ace_gt_presentation.lrel",
                             "ace_presentation.lrel"}) {
        const auto rep = dsl::instantiate_and_check(dsl::parse_file(suite_path(name)), {}, 8);
        t.add(rep.ok() && rep.count(dsl::Instance::Status::Pass) > 0, std::string("suite ") + name);
    }
    const int depth = cli::Defaults{}.depth;
    for (int n : {3, 5}) {
        const auto N = static_cast<std::size_t>(n);
        t.add(structure::closure_span({F(Family::W, 0), F(Family::W, 1)}, depth, Window(n)) == 3 * N + 1,
              "closure O at N=" + std::to_string(n));
        std::vector<LoopElement> gens = {F(Family::cW, 0), F(Family::cW, 1)};
        for (int k = 1; k <= n; ++k) gens.push_back(loop::center_basis(k));
        t.add(structure::closure_span(gens, depth, Window(n)) == 4 * N + 1, "closure ACE at N=" + std::to_string(n));
    }
}

void limits(Tally& t) {
    t.add(qlimit::limit_dg_checks());
    t.add(qlimit::limit_ace_checks(6));
    t.add(qlimit::sigma_swap_checks(6));
    t.add(qlimit::limit_pbw_checks(8));
}

void dsl_checks(Tally& t) {
    for (const auto& f : shipped_suites()) {
        const auto s = dsl::parse_file(f);
        t.add(dsl::parse(dsl::render(s)) == s, "round-trip " + f);
    }
    std::ifstream in(suite_path("onsager_w_table.lrel"));
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    const auto at = text.find("= 4*W(-k-l-1)");
    t.add(at != std::string::npos, "com2 coefficient present");
    if (at == std::string::npos) return;
    text.replace(at + 2, 1, "5");
    const auto path = std::filesystem::temp_directory_path() / "onsager_acceptance_mutant.lrel";
    std::ofstream(path) << text;
    std::ostringstream out, err;
    const int code = cli::run({"verify", path.string()}, out, err, cli::Defaults{});
    t.add(code == cli::kCheckFailed, "mutated suite exit status " + std::to_string(code));
    std::ostringstream out2, err2;
    t.add(cli::run({"verify", suite_path("onsager_w_table.lrel")}, out2, err2, cli::Defaults{}) == cli::kOk,
          "unmutated suite exit status");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria = {
        {"bracket tables, indices up to 8", bracket_tables},
        {"symmetry actions, involutions, commutation, epsilon invariance", symmetries},
        {"windowed ranks 3N+1, 4N+1 (N = 2, 4, 8) and prefix rank 16", ranks},
        {"center equals the span of the central basis (N = 1, 4, 8); trace-zero center is 0", center},
        {"decomposition, rho and iota, rho homomorphism, center fixed by sigma and dagger", maps},
        {"shipped presentation suites at kmax 8; closure dimensions at N = 3, 5", presentations},
        {"q -> 1 limits: DG, relation ids 1-11, PBW identities", limits},
        {"DSL round-trip and mutation detection", dsl_checks},
    };
    bool all = true;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Tally t;
        try {
            criteria[i].second(t);
        } catch (const Error& e) {
            t.add(false, std::string(e.kind()) + ": " + e.what());
        }
        const bool ok = t.failed == 0 && t.checks > 0;
        all = all && ok;
        std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
                  << t.checks << " checks, " << t.failed << " failed)";
        if (!ok) std::cout << "  first failure: " << t.first_failure;
        std::cout << "\n";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "total " << secs << " s\n";
    return all ? 0 : 1;
}
