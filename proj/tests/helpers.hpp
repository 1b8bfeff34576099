#pragma once

#include <tix/verify.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace helpers {

inline const std::vector<tix::GraphCase>& corpus() {
  static const std::vector<tix::GraphCase> cases = tix::default_cases(1);
  return cases;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
}

inline std::string tmp_path(const std::string& name) {
  return std::string(TIX_TEST_TMP) + "/" + name;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline CliResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string tag = std::to_string(::getpid()) + "_" + std::to_string(counter);
  std::string out_path = tmp_path("cli_stdout_" + tag + ".txt");
  std::string err_path = tmp_path("cli_stderr_" + tag + ".txt");
  ++counter;
  std::string cmd =
      std::string(TIX_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  int status = std::system(cmd.c_str());
  CliResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  res.out = read_file(out_path);
  res.err = read_file(err_path);
  return res;
}

}  // namespace helpers
