#pragma once

// Runs the built CLI binary and captures exit code, stdout, and stderr.
// The binary path comes from the build system via GROUPOPT_CLI_PATH.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace cli {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Result run(const std::string& args) {
  static int counter = 0;
  const std::string err_path =
      "cli_stderr_" + std::to_string(counter++) + ".tmp";
  const std::string cmd =
      std::string(GROUPOPT_CLI_PATH) + " " + args + " 2>" + err_path;

  Result res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    res.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  res.err = read_file(err_path);
  std::remove(err_path.c_str());
  return res;
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace cli
