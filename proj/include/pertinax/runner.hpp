#pragma once

#include <memory>
#include <string>

#include "pertinax/dsl.hpp"

namespace pertinax {

enum class RunStatus { Ok = 0, UsageError = 1, MathError = 2 };

// A loaded script plus run options. run() executes the tasks in order and
// keeps going after a failing task; the report records every outcome.
class Session {
public:
  Session();
  ~Session();
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  /// Parses and validates; throws Error on failure.
  void load(const std::string& text, const std::string& source = "<script>");
  /// maxdeg (overrides every task), threads, seed, timing (0 drops elapsed_ms).
  void set_option(const std::string& key, long value);

  RunStatus run();
  const Script& script() const noexcept;
  int conductor() const noexcept;

  /// Schema-1 JSON report, pretty-printed.
  std::string report_json() const;
  std::string report_text() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pertinax
