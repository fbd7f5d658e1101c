#include "doctest.h"

#include "onsager/cli/cli.hpp"
#include "onsager/errors.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace onsager;
using namespace onsager::cli;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args, const Defaults& d = {}) {
    std::ostringstream out, err;
    const int code = run(args, out, err, d);
    return {code, out.str(), err.str()};
}

std::string suite_path(const std::string& name) { return std::string(ONSAGER_SUITE_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("elem prints the matrix") {
    const auto r = call({"elem", "cB[2]"});
    CHECK(r.code == kOk);
    CHECK(r.out == "diag(t^2 - 1, t^-2 - 1)\n");
    const auto j = nlohmann::json::parse(call({"--format", "json", "elem", "cB[2]"}).out);
    CHECK(j["a"] == "t^2 - 1");
    CHECK(j["b"] == "0");
}

TEST_CASE("bracket and decompose") {
    CHECK(call({"bracket", "A[1]", "A[0]"}).out == "diag(t - t^-1, -t + t^-1)\n");
    const auto r = call({"decompose", "cB[2]"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("o_part: diag(1/2*t^2 - 1/2*t^-2, -1/2*t^2 + 1/2*t^-2)") != std::string::npos);
    CHECK(r.out.find("z_part: diag(1/2*t^2 + 1/2*t^-2 - 1, 1/2*t^2 + 1/2*t^-2 - 1)") != std::string::npos);
    CHECK(call({"decompose", "cB[2] +"}).code == kUsage);
}

TEST_CASE("limit dg report") {
    const auto r = call({"limit", "dg"});
    CHECK(r.code == kOk);
    CHECK(r.out == "qOns1→DG1 ok, qOns2→DG2 ok\n");
}

TEST_CASE("verify passes on the shipped suite and is deterministic") {
    const auto a = call({"--format", "json", "verify", suite_path("o_presentation.lrel"), "--kmax", "8"});
    const auto b = call({"--format", "json", "verify", suite_path("o_presentation.lrel"), "--kmax", "8"});
    CHECK(a.code == kOk);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j.size() == 4 * 9 + 6 * 81);
    CHECK(j[0].contains("relation"));
    CHECK(j[0].contains("params"));
    CHECK(j[0]["status"] == "pass");
}

TEST_CASE("verify flags a perturbed suite with exit 1") {
    std::string text = slurp(suite_path("onsager_w_table.lrel"));
    const auto at = text.find("= 4*W(-k-l-1)");
    REQUIRE(at != std::string::npos);
    text.replace(at + 2, 1, "5");
    const auto path = write_temp("onsager_cli_mutant.lrel", text);
    const auto r = call({"verify", path, "--kmax", "2"});
    CHECK(r.code == kCheckFailed);
    const auto failed = nlohmann::json::parse(r.err);
    CHECK(failed.size() == 9);
    CHECK(failed[0]["relation"] == "com2");
}

TEST_CASE("verify with bindings") {
    const auto path = write_temp("onsager_cli_bind.lrel", "family X : Z; family Y : Z; rel r(k, l): [X(k), X(l)] = 2*Y(k-l);");
    CHECK(call({"verify", path}).code == kUsage);
    CHECK(call({"verify", path, "--bind", "X=A", "--bind", "Y=B", "--kmax", "3"}).code == kOk);
    CHECK(call({"verify", path, "--bind", "X=A", "--bind", "Y=A", "--kmax", "3"}).code == kCheckFailed);
    CHECK(call({"verify", path, "--bind", "X=Q", "--bind", "Y=B"}).code == kUsage);
}

TEST_CASE("center and span") {
    CHECK(call({"center", "--window", "4"}).code == kOk);
    CHECK(call({"center", "--window", "4", "--space", "O"}).code == kOk);
    const auto s = call({"--format", "json", "span", "O", "--window", "3"});
    CHECK(s.code == kOk);
    CHECK(nlohmann::json::parse(s.out)[0]["parameters"]["dimension"] == 10);
    // Too shallow to fill the window.
    CHECK(call({"span", "ACE", "--window", "5", "--depth", "2"}).code == kCheckFailed);
}

TEST_CASE("limit ace and pbw at small bounds") {
    CHECK(call({"limit", "ace", "--bound", "2"}).code == kOk);
    CHECK(call({"limit", "pbw", "--bound", "3"}).code == kOk);
}

TEST_CASE("usage errors exit 2") {
    CHECK(call({}).code == kUsage);
    CHECK(call({"frobnicate"}).code == kUsage);
    CHECK(call({"center", "--window", "0"}).code == kUsage);
    CHECK(call({"verify", suite_path("o_presentation.lrel"), "--kmax", "-1"}).code == kUsage);
    CHECK(call({"limit", "xyz"}).code == kUsage);
    CHECK(call({"elem", "Q[1]"}).code == kUsage);
    CHECK(call({"elem", "Gt[0]"}).code == kUsage);
    CHECK(call({"verify", "/nonexistent.lrel"}).code == kUsage);
    CHECK(call({"--format", "yaml", "elem", "A[0]"}).code == kUsage);
    CHECK(call({"--help"}).code == kOk);
}

TEST_CASE("defaults file") {
    const Defaults d = parse_defaults("# desk\nwindow = 3\nkmax=2\n\n");
    CHECK(d.window == 3);
    CHECK(d.kmax == 2);
    CHECK(d.depth == 18);
    CHECK(d.pbw_bound == 8);
    CHECK(d.ace_bound == 6);
    CHECK_THROWS_AS(parse_defaults("colour = 3"), ParseError);
    CHECK_THROWS_AS(parse_defaults("window = three"), ParseError);
    CHECK_THROWS_AS(parse_defaults("window"), ParseError);

    const auto s = call({"--format", "json", "span", "O"}, d);
    CHECK(nlohmann::json::parse(s.out)[0]["parameters"]["window"] == 3);
    const auto v = call({"--format", "json", "verify", suite_path("dolan_grady.lrel")}, d);
    CHECK(v.code == kOk);

    const auto path = write_temp("onsager_cli_defaults.cfg", "window = 2\n");
    setenv("ONSAGER_ACE_DEFAULTS", path.c_str(), 1);
    CHECK(defaults_from_env().window == 2);
    std::ostringstream out, err;
    CHECK(run({"--format", "json", "span", "O"}, out, err) == kOk);
    CHECK(nlohmann::json::parse(out.str())[0]["parameters"]["window"] == 2);
    setenv("ONSAGER_ACE_DEFAULTS", "/nonexistent.cfg", 1);
    CHECK(run({"elem", "A[0]"}, out, err) == kUsage);
    unsetenv("ONSAGER_ACE_DEFAULTS");
}
