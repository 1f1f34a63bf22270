#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace lperiod::testsupport {

#ifndef LPERIOD_CLI_PATH
#define LPERIOD_CLI_PATH "lperiod"
#endif

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::filesystem::path temp_path(const std::string& stem) {
  static int counter = 0;
  return std::filesystem::temp_directory_path() /
         (stem + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
}

inline std::string write_temp(const std::string& content, const std::string& stem = "lperiod-in") {
  auto p = temp_path(stem);
  std::ofstream(p, std::ios::binary) << content;
  return p.string();
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Run the installed CLI with the given arguments, capturing both streams.
// Arguments are single-quoted; none of the test inputs contain quotes.
inline RunResult run_cli(const std::vector<std::string>& args) {
  auto out = temp_path("lperiod-out");
  auto err = temp_path("lperiod-err");
  std::string cmd = "'" LPERIOD_CLI_PATH "'";
  for (const std::string& a : args) cmd += " '" + a + "'";
  cmd += " > '" + out.string() + "' 2> '" + err.string() + "'";
  int rc = std::system(cmd.c_str());
  RunResult r;
  if (rc == -1)
    r.exit_code = -1;
  else if (WIFEXITED(rc))
    r.exit_code = WEXITSTATUS(rc);
  else
    r.exit_code = -2;
  r.out = slurp(out);
  r.err = slurp(err);
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return r;
}

}  // namespace lperiod::testsupport
