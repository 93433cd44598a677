// Command-line front end. Talks to the engine only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pertinax/pertinax.h"

namespace {

using SessionPtr = std::unique_ptr<pertinax_session, decltype(&pertinax_session_destroy)>;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int fail(const pertinax_session* s, pertinax_status st) {
  std::cerr << "pertinax: " << pertinax_last_error(s) << "\n";
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pertinax: G-radicals and pertinency of graded algebras"};
  app.set_version_flag("--version", std::string(pertinax_version()));
  app.require_subcommand(1);

  std::string script_path, json_path;
  long maxdeg = 0, threads = 1, seed = 0;
  bool text = false, no_timing = false;

  CLI::App* run = app.add_subcommand("run", "run every task in a script");
  run->add_option("SCRIPT", script_path, "script file")->required();
  run->add_option("--maxdeg", maxdeg, "truncation degree for every task")->check(CLI::PositiveNumber);
  run->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
  run->add_flag("--text", text, "print a plain-text report");
  run->add_option("--threads", threads, "worker threads per task")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "seed for randomized tasks");
  run->add_flag("--no-timing", no_timing, "omit elapsed_ms from the report");

  CLI::App* check = app.add_subcommand("check", "parse and validate only");
  check->add_option("SCRIPT", script_path, "script file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  std::string source;
  if (!read_file(script_path, source)) {
    std::cerr << "pertinax: cannot read " << script_path << "\n";
    return 1;
  }
  SessionPtr s(pertinax_session_create(), &pertinax_session_destroy);
  if (!s) return 3;
  if (auto st = pertinax_load(s.get(), source.c_str(), script_path.c_str()); st != PERTINAX_OK) return fail(s.get(), st);
  if (*check) {
    std::cout << script_path << ": ok\n";
    return 0;
  }

  const std::pair<const char*, long> options[] = {
      {"maxdeg", maxdeg}, {"threads", threads}, {"seed", seed}, {"timing", no_timing ? 0 : 1}};
  for (const auto& [key, value] : options)
    if (auto st = pertinax_set_option(s.get(), key, value); st != PERTINAX_OK) return fail(s.get(), st);

  const pertinax_status st = pertinax_run(s.get());
  if (st == PERTINAX_INTERNAL) return fail(s.get(), st);

  if (!json_path.empty() && json_path != "-") {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "pertinax: cannot write " << json_path << "\n";
      return 1;
    }
    out << pertinax_report_json(s.get());
  }
  if (text) std::cout << pertinax_report_text(s.get());
  if (json_path == "-" || (json_path.empty() && !text)) std::cout << pertinax_report_json(s.get());
  return static_cast<int>(st);
}
