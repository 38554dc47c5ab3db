// Runs one golden case through the in-process CLI and diffs its stdout.
//
//   NAME.args  one argument per line
//   NAME.out   expected standard output, byte for byte
//   NAME.code  expected exit status (optional, default 0)

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mnring/cli/app.hpp"

namespace fs = std::filesystem;

static std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: golden_runner CASE.args\n";
    return 2;
  }
  const fs::path args_path = argv[1];
  std::vector<std::string> args;
  std::istringstream lines(slurp(args_path));
  for (std::string line; std::getline(lines, line);) args.push_back(line);

  int expected_code = 0;
  if (fs::path code_path = fs::path(args_path).replace_extension(".code"); fs::exists(code_path))
    expected_code = std::stoi(slurp(code_path));
  const std::string expected = slurp(fs::path(args_path).replace_extension(".out"));

  std::ostringstream out, err;
  const int code = mnr::cli::run_cli(args, out, err);
  bool ok = true;
  if (code != expected_code) {
    std::cerr << "exit status " << code << ", expected " << expected_code << "\n";
    ok = false;
  }
  if (out.str() != expected) {
    std::cerr << "--- expected\n" << expected << "--- got\n" << out.str() << "--- stderr\n" << err.str();
    ok = false;
  }
  return ok ? 0 : 1;
}
