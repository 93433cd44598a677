#include "pertinax/pertinax.h"

#include <new>
#include <string>

#include "pertinax/error.hpp"
#include "pertinax/runner.hpp"
#include "pertinax/version.hpp"

struct pertinax_session {
  pertinax::Session session;
  std::string error;
  std::string error_code;
  std::string buffer;
};

namespace {

template <class F>
pertinax_status guarded(pertinax_session* s, F&& f) {
  if (!s) return PERTINAX_USAGE;
  s->error.clear();
  s->error_code.clear();
  try {
    return f();
  } catch (const pertinax::Error& e) {
    s->error = e.what();
    s->error_code = std::string(pertinax::error_code_name(e.code()));
    return pertinax::is_usage_error(e.code()) ? PERTINAX_USAGE : PERTINAX_MATH;
  } catch (const std::exception& e) {
    s->error = e.what();
    s->error_code = "Internal";
    return PERTINAX_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* pertinax_version(void) { return pertinax::kPertinaxVersion; }

pertinax_session* pertinax_session_create(void) { return new (std::nothrow) pertinax_session(); }

void pertinax_session_destroy(pertinax_session* s) { delete s; }

pertinax_status pertinax_load(pertinax_session* s, const char* script, const char* source_name) {
  return guarded(s, [&] {
    if (!script) pertinax::raise(pertinax::ErrorCode::UsageError, "no script text");
    s->session.load(script, source_name ? source_name : "<script>");
    return PERTINAX_OK;
  });
}

pertinax_status pertinax_set_option(pertinax_session* s, const char* key, long value) {
  return guarded(s, [&] {
    if (!key) pertinax::raise(pertinax::ErrorCode::UsageError, "no option key");
    s->session.set_option(key, value);
    return PERTINAX_OK;
  });
}

pertinax_status pertinax_run(pertinax_session* s) {
  return guarded(s, [&] { return static_cast<pertinax_status>(s->session.run()); });
}

const char* pertinax_report_json(pertinax_session* s) {
  if (!s) return "";
  s->buffer = s->session.report_json();
  return s->buffer.c_str();
}

const char* pertinax_report_text(pertinax_session* s) {
  if (!s) return "";
  s->buffer = s->session.report_text();
  return s->buffer.c_str();
}

const char* pertinax_last_error(const pertinax_session* s) { return s ? s->error.c_str() : ""; }

const char* pertinax_last_error_code(const pertinax_session* s) { return s ? s->error_code.c_str() : ""; }

}  // extern "C"
