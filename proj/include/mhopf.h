#pragma once

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MH_API __declspec(dllexport)
#else
#define MH_API __attribute__((visibility("default")))
#endif

typedef enum mh_status {
    MH_OK = 0,
    MH_PARSE_ERROR,
    MH_INVALID_ARGUMENT,
    MH_NOT_AN_M_WORD,
    MH_NOT_AN_M_PERMUTATION,
    MH_NOT_PACKED,
    MH_NOT_NDPF,
    MH_NOT_M_NDPF,
    MH_NOT_M_BINARY,
    MH_SIZE_MISMATCH,
    MH_BUDGET_EXCEEDED,
    MH_CLOSURE_VIOLATION,
    MH_NON_UNIQUE_CANONICAL,
    MH_NO_FORMULA,
    MH_DEGREE_MISMATCH,
    MH_BASIS_MISMATCH,
    MH_INTERNAL_ERROR
} mh_status;

typedef struct mh_context mh_context;
typedef struct mh_request mh_request;
typedef struct mh_result mh_result;

MH_API mh_context* mh_context_new(void);
MH_API void mh_context_free(mh_context* ctx);
// Element budget for brute-force enumerations (default 200000).
MH_API mh_status mh_context_set_budget(mh_context* ctx, unsigned long long budget);
MH_API unsigned long long mh_context_budget(const mh_context* ctx);
// Message of the last failed call on this context, or "".
MH_API const char* mh_context_last_error(const mh_context* ctx);

MH_API mh_request* mh_request_new(const char* command);
MH_API void mh_request_free(mh_request* req);
MH_API mh_status mh_request_set(mh_request* req, const char* key, const char* value);
MH_API mh_status mh_request_add_arg(mh_request* req, const char* value);
MH_API mh_status mh_request_set_json(mh_request* req, int json);

// On MH_OK, *out receives a result owned by the caller.
MH_API mh_status mh_execute(mh_context* ctx, const mh_request* req, mh_result** out);

MH_API const char* mh_result_output(const mh_result* res);
// 0 when a check ran and did not pass (verify, count with both methods).
MH_API int mh_result_ok(const mh_result* res);
MH_API void mh_result_free(mh_result* res);

// Stable identifier such as "NotAnMWord".
MH_API const char* mh_status_name(mh_status status);

#ifdef __cplusplus
}
#endif
