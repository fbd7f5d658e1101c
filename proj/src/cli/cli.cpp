#include "onsager/cli/cli.hpp"

#include "onsager/dsl/dsl.hpp"
#include "onsager/errors.hpp"
#include "onsager/loop/families.hpp"
#include "onsager/qlimit/qlimit.hpp"
#include "onsager/report.hpp"
#include "onsager/structure/structure.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace onsager::cli {

using loop::LoopElement;
using loop::Space;

namespace {

enum class Format { Text, Json };

int to_int(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size()) throw ParseError("'" + key + "' needs an integer, got '" + value + "'");
    return v;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Errors meaning the input itself was unusable.
bool is_usage_error(const Error& e) {
    static const std::vector<std::string> kinds = {"ParseError",       "SyntaxError",     "UnknownFamily",
                                                   "UnknownParameter", "NonAffineIndex",  "IndexOutOfRange",
                                                   "BadIndex",         "WindowOverflow"};
    return std::find(kinds.begin(), kinds.end(), e.kind()) != kinds.end();
}

std::string describe_params(const nlohmann::json& p) {
    std::string out;
    for (auto it = p.begin(); it != p.end(); ++it) {
        if (!out.empty()) out += " ";
        out += it.key() + "=" + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
    }
    return out.empty() ? "-" : out;
}

class Driver {
public:
    Driver(std::ostream& out, std::ostream& err, Defaults d) : d_(d), out_(out), err_(err) {}

    int checks(std::vector<CheckResult> rs) {
        sort_canonical(rs);
        if (format_ == Format::Json) {
            out_ << to_json(rs).dump(2) << "\n";
        } else {
            for (const auto& r : rs) {
                out_ << r.check_id << "  " << describe_params(r.parameters) << "  " << (r.passed ? "ok" : "FAIL");
                if (!r.passed && !r.witness.empty()) out_ << "  " << r.witness;
                out_ << "\n";
            }
            out_ << rs.size() << " checks, " << count_failed(rs) << " failed\n";
        }
        return finish(rs);
    }

    int finish(const std::vector<CheckResult>& rs) {
        if (all_passed(rs)) return kOk;
        if (format_ == Format::Text) {
            std::vector<CheckResult> failed;
            std::copy_if(rs.begin(), rs.end(), std::back_inserter(failed), [](const auto& r) { return !r.passed; });
            err_ << to_json(failed).dump(2) << "\n";
        }
        return kCheckFailed;
    }

    void element(const LoopElement& x) {
        if (format_ == Format::Json) {
            out_ << loop::to_json(x).dump() << "\n";
        } else {
            out_ << loop::to_string(x) << "\n";
        }
    }

    int elem(const std::string& literal) {
        element(loop::family(loop::parse_family_literal(literal)));
        return kOk;
    }

    int bracket(const std::string& x, const std::string& y) {
        element(loop::bracket(loop::parse_element_expr(x), loop::parse_element_expr(y)));
        return kOk;
    }

    int decompose(const std::string& x) {
        const auto dec = structure::decompose(loop::parse_element_expr(x));
        if (format_ == Format::Json) {
            out_ << nlohmann::json{{"o_part", loop::to_json(dec.o_part)}, {"z_part", loop::to_json(dec.z_part)}}.dump()
                 << "\n";
        } else {
            out_ << "o_part: " << loop::to_string(dec.o_part) << "\n";
            out_ << "z_part: " << loop::to_string(dec.z_part) << "\n";
        }
        return kOk;
    }

    int center(const std::string& space_name) {
        const Space space = loop::parse_space(space_name);
        const structure::Window w(d_.window);
        const auto basis = structure::center_solver(w, space);

        std::vector<structure::CoordVector> expected;
        if (space == Space::ACE) {
            for (int k = 1; k <= d_.window; ++k) expected.push_back(structure::coords(loop::center_basis(k), w));
        }
        std::vector<structure::CoordVector> both = basis;
        both.insert(both.end(), expected.begin(), expected.end());
        const std::size_t r = structure::span_rank(basis), r_exp = structure::span_rank(expected),
                          r_both = structure::span_rank(both);

        CheckResult c;
        c.check_id = "center." + loop::to_string(space);
        c.statement = space == Space::ACE ? "center = span{(cB_k + cB_-k)/2 : 1 <= k <= N}" : "center = 0";
        c.parameters = {{"window", d_.window}};
        c.passed = r == r_exp && r_both == r;
        if (!c.passed) {
            c.witness = "rank " + std::to_string(r) + ", expected " + std::to_string(r_exp) + ", joint " +
                        std::to_string(r_both);
        }

        if (format_ == Format::Json) {
            auto j = nlohmann::json::array();
            for (const auto& v : basis) j.push_back(loop::to_json(structure::from_coords(v)));
            out_ << nlohmann::json{{"basis", j}, {"check", to_json(c)}}.dump(2) << "\n";
        } else {
            for (const auto& v : basis) out_ << loop::to_string(structure::from_coords(v)) << "\n";
            out_ << "dimension " << r << (c.passed ? "  ok" : "  FAIL") << "\n";
        }
        return finish({c});
    }

    int verify(const std::string& path, const std::vector<std::string>& binds) {
        const dsl::Suite suite = dsl::parse_file(path);
        dsl::Bindings bindings;
        for (const auto& b : binds) {
            const auto eq = b.find('=');
            if (eq == std::string::npos) throw ParseError("--bind expects NAME=FAMILY, got '" + b + "'");
            const auto tag = loop::family_from_tag(b.substr(eq + 1));
            if (!tag) throw UnknownFamily("no element family '" + b.substr(eq + 1) + "'");
            bindings[b.substr(0, eq)] = *tag;
        }
        dsl::SuiteReport rep = dsl::instantiate_and_check(suite, bindings, d_.kmax);
        std::stable_sort(rep.instances.begin(), rep.instances.end(), [](const auto& x, const auto& y) {
            return std::tie(x.relation, x.params) < std::tie(y.relation, y.params);
        });
        if (format_ == Format::Json) {
            out_ << rep.to_json().dump(2) << "\n";
        } else {
            for (const auto& i : rep.instances) {
                std::string params;
                for (const auto& [k, v] : i.params) params += (params.empty() ? "" : " ") + k + "=" + std::to_string(v);
                out_ << i.relation << "  " << (params.empty() ? "-" : params) << "  " << dsl::to_string(i.status);
                if (!i.detail.empty()) out_ << "  " << i.detail;
                out_ << "\n";
            }
            out_ << rep.instances.size() << " instances, " << rep.count(dsl::Instance::Status::Fail) << " failed, "
                 << rep.count(dsl::Instance::Status::Skipped) << " skipped\n";
        }
        if (rep.ok()) return kOk;
        if (format_ == Format::Text) {
            auto failed = nlohmann::json::array();
            for (const auto& j : rep.to_json()) {
                if (j["status"] == "fail") failed.push_back(j);
            }
            err_ << failed.dump(2) << "\n";
        }
        return kCheckFailed;
    }

    int limit(const std::string& which, std::optional<int> bound) {
        if (which == "dg") {
            auto rs = qlimit::limit_dg_checks();
            sort_canonical(rs);
            if (format_ == Format::Json) return checks(rs);
            for (std::size_t i = 0; i < rs.size(); ++i) {
                out_ << (i ? ", " : "") << rs[i].statement << (rs[i].passed ? " ok" : " FAIL");
            }
            out_ << "\n";
            return finish(rs);
        }
        if (which == "ace") {
            const int b = bound.value_or(d_.ace_bound);
            auto rs = qlimit::limit_ace_checks(b);
            auto sig = qlimit::sigma_swap_checks(b);
            rs.insert(rs.end(), sig.begin(), sig.end());
            return checks(rs);
        }
        return checks(qlimit::limit_pbw_checks(bound.value_or(d_.pbw_bound)));
    }

    int span(const std::string& space_name) {
        const Space space = loop::parse_space(space_name);
        const int n = d_.window;
        std::vector<LoopElement> gens;
        std::size_t expected = 0;
        if (space == Space::O) {
            gens = {loop::family(loop::Family::W, 0), loop::family(loop::Family::W, 1)};
            expected = 3 * static_cast<std::size_t>(n) + 1;
        } else if (space == Space::ACE) {
            gens = {loop::family(loop::Family::cW, 0), loop::family(loop::Family::cW, 1)};
            for (int k = 1; k <= n; ++k) gens.push_back(loop::center_basis(k));
            expected = 4 * static_cast<std::size_t>(n) + 1;
        } else {
            throw ParseError("span takes O or ACE");
        }
        const std::size_t dim = structure::closure_span(gens, d_.depth, structure::Window(n));
        CheckResult c;
        c.check_id = "span." + loop::to_string(space);
        c.statement = space == Space::O ? "closure_span({W0, W1}) = 3N+1" : "closure_span({cW0, cW1} + center prefix) = 4N+1";
        c.parameters = {{"window", n}, {"depth", d_.depth}, {"dimension", dim}};
        c.passed = dim == expected;
        if (!c.passed) c.witness = "dimension " + std::to_string(dim) + ", expected " + std::to_string(expected);
        return checks({c});
    }

    Format format_ = Format::Text;
    Defaults d_;

private:
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

Defaults parse_defaults(const std::string& text, Defaults base) {
    const std::map<std::string, int Defaults::*> keys = {{"window", &Defaults::window},
                                                         {"kmax", &Defaults::kmax},
                                                         {"depth", &Defaults::depth},
                                                         {"pbw_bound", &Defaults::pbw_bound},
                                                         {"ace_bound", &Defaults::ace_bound}};
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("defaults line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        auto it = keys.find(key);
        if (it == keys.end()) throw ParseError("defaults line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        base.*(it->second) = to_int(key, trim(line.substr(eq + 1)));
    }
    return base;
}

Defaults defaults_from_env() {
    const char* path = std::getenv("ONSAGER_ACE_DEFAULTS");
    if (!path || !*path) return {};
    std::ifstream in(path);
    if (!in) throw ParseError(std::string("cannot read defaults file '") + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return parse_defaults(s.str());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Defaults d;
    try {
        d = defaults_from_env();
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << "\n";
        return kUsage;
    }
    return run(args, out, err, d);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Defaults& defaults) {
    Driver drv(out, err, defaults);
    CLI::App app{"Exact checks for the Onsager algebra and its alternating central extension", "onsager"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::optional<int> window, kmax, depth, bound;
    auto add_window = [&](CLI::App* s) { s->add_option("--window,-N", window, "Window bound N (>= 1)"); };

    std::string arg1, arg2, space = "ACE";
    std::vector<std::string> binds;
    std::function<int()> action;

    auto* elem = app.add_subcommand("elem", "Print the matrix of a family element, e.g. cB[2]");
    elem->add_option("name", arg1, "Family literal")->required();
    elem->callback([&] { action = [&] { return drv.elem(arg1); }; });

    auto* br = app.add_subcommand("bracket", "Print [X, Y] of two element expressions");
    br->add_option("x", arg1)->required();
    br->add_option("y", arg2)->required();
    br->callback([&] { action = [&] { return drv.bracket(arg1, arg2); }; });

    auto* dec = app.add_subcommand("decompose", "Split an element of the extension into o_part and z_part");
    dec->add_option("x", arg1)->required();
    dec->callback([&] { action = [&] { return drv.decompose(arg1); }; });

    auto* cen = app.add_subcommand("center", "Solve for the center inside a window");
    add_window(cen);
    cen->add_option("--space", space, "ACE or O")->check(CLI::IsMember({"ACE", "O"}));
    cen->callback([&] { action = [&] { return drv.center(space); }; });

    auto* ver = app.add_subcommand("verify", "Run a relation suite");
    ver->add_option("suite", arg1, "Suite file (.lrel)")->required();
    ver->add_option("--kmax", kmax, "Largest parameter value (>= 0)");
    ver->add_option("--bind", binds, "NAME=FAMILY, e.g. X=cA; repeatable");
    ver->callback([&] { action = [&] { return drv.verify(arg1, binds); }; });

    auto* lim = app.add_subcommand("limit", "Run q -> 1 limit checks");
    lim->add_option("which", arg1, "dg, ace or pbw")->required()->check(CLI::IsMember({"dg", "ace", "pbw"}));
    lim->add_option("--bound", bound, "Index bound (>= 0)");
    lim->callback([&] { action = [&] { return drv.limit(arg1, bound); }; });

    auto* sp = app.add_subcommand("span", "Closure oracle: dimension of the generated span in a window");
    sp->add_option("space", arg1, "O or ACE")->required()->check(CLI::IsMember({"O", "ACE"}));
    add_window(sp);
    sp->add_option("--depth", depth, "Bracket depth (>= 0)");
    sp->callback([&] { action = [&] { return drv.span(arg1); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    auto usage = [&](const std::string& msg) {
        err << "error: " << msg << "\n";
        return kUsage;
    };
    if (window) {
        if (*window < 1) return usage("--window must be at least 1");
        drv.d_.window = *window;
    }
    if (kmax) {
        if (*kmax < 0) return usage("--kmax must be nonnegative");
        drv.d_.kmax = *kmax;
    }
    if (depth) {
        if (*depth < 0) return usage("--depth must be nonnegative");
        drv.d_.depth = *depth;
    }
    if (bound && *bound < 0) return usage("--bound must be nonnegative");
    if (drv.d_.window < 1 || drv.d_.kmax < 0 || drv.d_.depth < 0 || drv.d_.pbw_bound < 0 || drv.d_.ace_bound < 0) {
        return usage("defaults out of range");
    }
    drv.format_ = format == "json" ? Format::Json : Format::Text;

    try {
        return action();
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << "\n";
        if (drv.format_ == Format::Json) out << nlohmann::json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
        return is_usage_error(e) ? kUsage : kCheckFailed;
    }
}

}  // namespace onsager::cli
