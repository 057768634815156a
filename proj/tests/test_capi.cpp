#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhopf.h"

#include <string>
#include <vector>

namespace {

struct Run {
    mh_status status;
    std::string output;
    std::string error;
    int ok;
};

Run run(const char* command, const std::vector<std::pair<const char*, const char*>>& options,
        const std::vector<const char*>& args, bool json = false) {
    mh_context* ctx = mh_context_new();
    mh_request* req = mh_request_new(command);
    for (const auto& [k, v] : options) mh_request_set(req, k, v);
    for (const char* a : args) mh_request_add_arg(req, a);
    mh_request_set_json(req, json);
    mh_result* res = nullptr;
    Run r{mh_execute(ctx, req, &res), "", mh_context_last_error(ctx), 0};
    if (res) {
        r.output = mh_result_output(res);
        r.ok = mh_result_ok(res);
        mh_result_free(res);
    }
    mh_request_free(req);
    mh_context_free(ctx);
    return r;
}

}  // namespace

TEST_CASE("normalizations through the C API") {
    CHECK(run("std", {}, {"bbacab"}).output == "341625");
    CHECK(run("std", {{"m", "2"}}, {"aabacbcbab"}).output == "1132535424");
    CHECK(run("park", {{"m", "1"}}, {"[3,5,1,1,11,8,8,2]"}).output == "[3,5,1,1,8,6,6,2]");
    CHECK(run("canonical", {{"cong", "metasylvester"}}, {"1413324343"}).output == "4114433233");
    CHECK(run("pack", {}, {"3511"}).output == "2311");
}

TEST_CASE("error codes") {
    Run r = run("std", {{"m", "2"}}, {"1121232212"});
    CHECK(r.status == MH_NOT_AN_M_WORD);
    CHECK(std::string(mh_status_name(r.status)) == "NotAnMWord");
    CHECK_FALSE(r.error.empty());
    CHECK(run("canonical", {{"cong", "nope"}}, {"12"}).status == MH_PARSE_ERROR);
    CHECK(run("nonsense", {}, {}).status == MH_PARSE_ERROR);
    CHECK(run("bijection", {{"kind", "mbinary_ary"}, {"m", "2"}}, {"(.,(.,.))"}).status == MH_NOT_M_BINARY);
    CHECK(mh_execute(nullptr, nullptr, nullptr) == MH_INVALID_ARGUMENT);
    CHECK(mh_request_new(nullptr) == nullptr);
}

TEST_CASE("budget") {
    mh_context* ctx = mh_context_new();
    CHECK(mh_context_budget(ctx) == 200000);
    CHECK(mh_context_set_budget(ctx, 0) == MH_INVALID_ARGUMENT);
    CHECK(mh_context_set_budget(ctx, 10) == MH_OK);
    mh_request* req = mh_request_new("count");
    mh_request_set(req, "cong", "sylvester");
    mh_request_set(req, "eval", "2,2,2,2");
    mh_request_set(req, "method", "brute");
    mh_result* res = nullptr;
    CHECK(mh_execute(ctx, req, &res) == MH_BUDGET_EXCEEDED);
    CHECK(res == nullptr);
    mh_request_free(req);
    mh_context_free(ctx);
}

TEST_CASE("Hopf requests") {
    CHECK(run("product", {{"algebra", "mfqsym"}, {"basis", "G"}, {"m", "2"}}, {"2121", "11"}).output ==
          "G_212133 + G_313122 + G_323211");
    CHECK(run("product", {{"algebra", "mncsf"}, {"basis", "R"}, {"m", "2"}}, {"", "1"}).output == "R_01 + R_11 + R_21");
    Run j = run("coproduct", {{"algebra", "mfqsym"}, {"basis", "F"}, {"m", "2"}}, {"1122"}, true);
    CHECK(j.output.find("\"terms\"") != std::string::npos);
    CHECK(j.output.find("\"left\":\"11\"") != std::string::npos);
}

TEST_CASE("count with both methods reports agreement") {
    Run r = run("count", {{"cong", "sylvester"}, {"eval", "1,1,2"}, {"method", "both"}}, {});
    CHECK(r.output == "formula 9\nbrute 9");
    CHECK(r.ok == 1);
}
