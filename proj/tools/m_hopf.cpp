#include "mhopf.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace {

struct Command {
    CLI::App* app = nullptr;
    std::map<std::string, std::vector<std::string>> options;
};

void add_options(Command& c, const std::vector<std::pair<std::string, std::string>>& names) {
    for (const auto& [name, help] : names)
        c.app->add_option("--" + name, c.options[name], help)->allow_extra_args(false);
}

int exit_code(mh_status s) {
    if (s == MH_OK) return 0;
    if (s == MH_PARSE_ERROR) return 2;
    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"m-hopf: m-permutations, congruences, trees and their Hopf algebras"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    const std::pair<std::string, std::string> opt_m{"m", "Multiplicity m"};
    const std::pair<std::string, std::string> opt_n{"n", "Size n"};
    const std::pair<std::string, std::string> opt_cong{"cong", "Congruence"};

    std::vector<std::unique_ptr<Command>> commands;
    auto add = [&](const std::string& name, const std::string& help,
                   const std::vector<std::pair<std::string, std::string>>& opts, const std::string& args_help) {
        auto c = std::make_unique<Command>();
        c->app = app.add_subcommand(name, help);
        c->app->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        add_options(*c, opts);
        c->app->allow_extras();
        if (!args_help.empty()) c->app->footer("Positional: " + args_help);
        commands.push_back(std::move(c));
    };

    add("std", "m-standardization of a word", {opt_m}, "word");
    add("pack", "Packing of a word", {}, "word");
    add("park", "m-parkization of a word", {opt_m}, "word");
    add("canonical", "Canonical element of a congruence class", {opt_cong}, "word");
    add("class", "Congruence class of a word, or canonical elements of all classes of an evaluation",
        {opt_cong, {"eval", "Evaluation, e.g. 1,1,2"}}, "word");
    add("count", "Class counts, family sizes, Narayana rows, Lagrange series",
        {opt_cong, opt_m, opt_n, {"eval", "Evaluation"}, {"family", "Family or sequence name"},
         {"method", "formula, brute or both"}, {"narayana", "Narayana variant"}, {"series", "Series name"},
         {"maxdeg", "Truncation degree"}, {"degree", "Homogeneous component"}},
        "");
    add("product", "Product of two basis elements",
        {opt_m, {"algebra", "Algebra"}, {"basis", "Basis"}}, "labels");
    add("coproduct", "Coproduct of a basis element", {opt_m, {"algebra", "Algebra"}, {"basis", "Basis"}}, "label");
    add("expand", "Class-sum basis element in its ambient basis",
        {opt_m, {"algebra", "Algebra"}, {"basis", "Basis"}}, "label");
    add("bijection", "Tree and word bijections", {opt_m, {"kind", "Bijection kind"}}, "inputs");
    add("tree", "Tree utilities: comb, enumerate, count, leq, dot, shape, is_m_binary",
        {opt_m, opt_n, {"kind", "ary or decreasing"}, {"arity", "Node arity"}}, "action and trees");
    add("verify", "Run fixture and property suites",
        {opt_m, {"suite", "examples, tables, properties or all"}, {"maxdeg", "Degree bound"},
         {"fixtures", "Fixture directory"}},
        "");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    mh_context* ctx = mh_context_new();
    if (const char* env = std::getenv("M_HOPF_BUDGET")) {
        char* end = nullptr;
        unsigned long long b = std::strtoull(env, &end, 10);
        if (!end || *end != '\0' || mh_context_set_budget(ctx, b) != MH_OK) {
            std::cerr << "error: M_HOPF_BUDGET must be a positive integer\n";
            mh_context_free(ctx);
            return 2;
        }
    }

    int code = 0;
    for (const auto& c : commands) {
        if (!c->app->parsed()) continue;
        mh_request* req = mh_request_new(c->app->get_name().c_str());
        for (const auto& [key, values] : c->options)
            for (const auto& v : values) mh_request_set(req, key.c_str(), v.c_str());
        for (const auto& a : c->app->remaining()) mh_request_add_arg(req, a.c_str());
        mh_request_set_json(req, format == "json");
        mh_result* res = nullptr;
        mh_status s = mh_execute(ctx, req, &res);
        if (s != MH_OK) {
            std::cerr << "error: " << mh_status_name(s) << ": " << mh_context_last_error(ctx) << "\n";
            code = exit_code(s);
        } else {
            std::cout << mh_result_output(res) << "\n";
            code = mh_result_ok(res) ? 0 : 1;
            mh_result_free(res);
        }
        mh_request_free(req);
    }
    mh_context_free(ctx);
    return code;
}
