#include "mhopf.h"

#include "mhopf/verify.hpp"

#include <new>
#include <string>

struct mh_context {
    std::size_t budget = mhopf::default_budget;
    std::string last_error;
};

struct mh_request {
    mhopf::Request req;
};

struct mh_result {
    std::string output;
    bool ok = true;
};

namespace {

mh_status to_status(mhopf::ErrorCode code) {
    return static_cast<mh_status>(static_cast<int>(code));
}

}  // namespace

extern "C" {

mh_context* mh_context_new(void) { return new (std::nothrow) mh_context(); }

void mh_context_free(mh_context* ctx) { delete ctx; }

mh_status mh_context_set_budget(mh_context* ctx, unsigned long long budget) {
    if (!ctx || budget == 0) return MH_INVALID_ARGUMENT;
    ctx->budget = static_cast<std::size_t>(budget);
    return MH_OK;
}

unsigned long long mh_context_budget(const mh_context* ctx) { return ctx ? ctx->budget : 0; }

const char* mh_context_last_error(const mh_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

mh_request* mh_request_new(const char* command) {
    if (!command) return nullptr;
    auto* r = new (std::nothrow) mh_request();
    if (r) r->req.command = command;
    return r;
}

void mh_request_free(mh_request* req) { delete req; }

mh_status mh_request_set(mh_request* req, const char* key, const char* value) {
    if (!req || !key || !value) return MH_INVALID_ARGUMENT;
    req->req.options[key].push_back(value);
    return MH_OK;
}

mh_status mh_request_add_arg(mh_request* req, const char* value) {
    if (!req || !value) return MH_INVALID_ARGUMENT;
    req->req.args.emplace_back(value);
    return MH_OK;
}

mh_status mh_request_set_json(mh_request* req, int json) {
    if (!req) return MH_INVALID_ARGUMENT;
    req->req.json = json != 0;
    return MH_OK;
}

mh_status mh_execute(mh_context* ctx, const mh_request* req, mh_result** out) {
    if (!ctx || !req || !out) return MH_INVALID_ARGUMENT;
    *out = nullptr;
    ctx->last_error.clear();
    try {
        mhopf::Request r = req->req;
        r.budget = ctx->budget;
        mhopf::Response resp = mhopf::run_request(r);
        *out = new mh_result{std::move(resp.output), resp.ok};
        return MH_OK;
    } catch (const mhopf::Error& e) {
        ctx->last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return MH_INTERNAL_ERROR;
    }
}

const char* mh_result_output(const mh_result* res) { return res ? res->output.c_str() : ""; }

int mh_result_ok(const mh_result* res) { return res && res->ok ? 1 : 0; }

void mh_result_free(mh_result* res) { delete res; }

const char* mh_status_name(mh_status status) {
    if (status == MH_INTERNAL_ERROR) return "InternalError";
    if (status < MH_OK || status > MH_INTERNAL_ERROR) return "Unknown";
    return mhopf::error_name(static_cast<mhopf::ErrorCode>(status));
}

}  // extern "C"
