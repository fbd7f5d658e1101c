#include "onsager/dsl/dsl.hpp"

#include "onsager/errors.hpp"

#include <climits>
#include <functional>

namespace onsager::dsl {

using arith::GR;
using loop::LoopElement;

namespace {

loop::Family resolve(const std::string& name, const Bindings& bindings) {
    if (auto it = bindings.find(name); it != bindings.end()) return it->second;
    if (auto tag = loop::family_from_tag(name)) return *tag;
    throw UnknownFamily("family '" + name + "' has no binding");
}

}  // namespace

LoopElement evaluate(const Expr& e, const Suite& suite, const Bindings& bindings,
                     const std::map<std::string, long>& env) {
    switch (e.kind) {
        case Expr::Kind::Zero: return LoopElement::zero();
        case Expr::Kind::Gen: {
            const FamilyDecl* decl = suite.find_family(e.family);
            if (!decl) throw UnknownFamily("family '" + e.family + "' is not declared");
            const long n = e.index.eval(env);
            const long lo = decl->domain == Domain::Z ? LONG_MIN : decl->domain == Domain::N ? 0 : 1;
            if (n < lo) {
                throw IndexOutOfRange(e.family + "(" + std::to_string(n) + ") outside domain " + to_string(decl->domain));
            }
            if (n > INT_MAX || n < INT_MIN) throw IndexOutOfRange(e.family + " index " + std::to_string(n) + " too large");
            return loop::family(resolve(e.family, bindings), static_cast<int>(n));
        }
        case Expr::Kind::Bracket:
            return loop::bracket(evaluate(e.children[0], suite, bindings, env),
                                 evaluate(e.children[1], suite, bindings, env));
        case Expr::Kind::Scale: return GR(e.scalar) * evaluate(e.children[0], suite, bindings, env);
        case Expr::Kind::Sum: {
            LoopElement out;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                const LoopElement x = evaluate(e.children[i], suite, bindings, env);
                if (e.signs[i] < 0) {
                    out -= x;
                } else {
                    out += x;
                }
            }
            return out;
        }
    }
    return {};
}

std::string to_string(Instance::Status s) {
    switch (s) {
        case Instance::Status::Pass: return "pass";
        case Instance::Status::Fail: return "fail";
        case Instance::Status::Skipped: return "skipped";
    }
    return "?";
}

bool SuiteReport::ok() const { return count(Instance::Status::Fail) == 0; }

std::size_t SuiteReport::count(Instance::Status s) const {
    std::size_t n = 0;
    for (const auto& i : instances) n += i.status == s;
    return n;
}

nlohmann::json SuiteReport::to_json() const {
    auto out = nlohmann::json::array();
    for (const auto& i : instances) {
        nlohmann::json j = {{"relation", i.relation}, {"params", i.params}, {"status", to_string(i.status)}};
        if (!i.detail.empty()) j["detail"] = i.detail;
        out.push_back(std::move(j));
    }
    return out;
}

std::vector<CheckResult> SuiteReport::checks(const Suite& suite) const {
    std::map<std::string, std::string> text;
    for (const auto& r : suite.relations) text[r.name] = render(r);
    std::vector<CheckResult> out;
    for (const auto& i : instances) {
        if (i.status == Instance::Status::Skipped) continue;
        CheckResult c;
        c.check_id = "dsl." + i.relation;
        c.statement = text[i.relation];
        c.parameters = i.params;
        c.passed = i.status == Instance::Status::Pass;
        c.witness = i.detail;
        out.push_back(std::move(c));
    }
    return out;
}

SuiteReport instantiate_and_check(const Suite& suite, const Bindings& bindings, int kmax) {
    if (kmax < 0) throw IndexOutOfRange("kmax must be nonnegative");
    // Every referenced family must resolve before any instance runs.
    for (const auto& f : suite.families) resolve(f.name, bindings);

    SuiteReport report;
    for (const auto& rel : suite.relations) {
        std::map<std::string, long> env;
        std::function<void(std::size_t)> run = [&](std::size_t p) {
            if (p < rel.params.size()) {
                for (long v = rel.params[p].lower; v <= kmax; ++v) {
                    env[rel.params[p].name] = v;
                    run(p + 1);
                }
                env.erase(rel.params[p].name);
                return;
            }
            Instance inst;
            inst.relation = rel.name;
            inst.params = env;
            try {
                const LoopElement r = evaluate(rel.lhs, suite, bindings, env) - evaluate(rel.rhs, suite, bindings, env);
                if (!r.is_zero()) {
                    inst.status = Instance::Status::Fail;
                    inst.detail = "LHS - RHS = " + loop::to_string(r);
                }
            } catch (const IndexOutOfRange& e) {
                inst.status = Instance::Status::Skipped;
                inst.detail = e.what();
            }
            report.instances.push_back(std::move(inst));
        };
        run(0);
    }
    return report;
}

}  // namespace onsager::dsl
