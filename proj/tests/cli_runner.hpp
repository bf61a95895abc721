// Runs the built command-line tool as a subprocess for golden-file tests.
#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace hgt::testing {

struct CliCase {
  std::string name;
  int exit_code = 0;
  std::string args;  // shell words; @dir@ stands for the fixture directory
};

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string replace_all(std::string text, const std::string& from, const std::string& to) {
  for (auto pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos + to.size())) {
    text.replace(pos, from.size(), to);
  }
  return text;
}

inline std::vector<CliCase> load_cases(const std::filesystem::path& dir) {
  std::vector<CliCase> cases;
  std::istringstream lines(read_file(dir / "cases.txt"));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto a = line.find('|');
    const auto b = line.find('|', a + 1);
    cases.push_back({line.substr(0, a), std::stoi(line.substr(a + 1, b - a - 1)), line.substr(b + 1)});
  }
  return cases;
}

/// Runs `exe args` through the shell with the fixture directory as cwd.
inline CliResult run_cli(const std::string& exe, const std::filesystem::path& dir, const std::string& args) {
  static int counter = 0;
  const auto tmp = std::filesystem::temp_directory_path() /
                   ("hgt_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  const std::string out_path = tmp.string() + ".out";
  const std::string err_path = tmp.string() + ".err";
  const std::string command = "cd '" + dir.string() + "' && '" + exe + "' " + replace_all(args, "@dir@", dir.string()) +
                              " >'" + out_path + "' 2>'" + err_path + "'";
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file(out_path);
  result.err = replace_all(read_file(err_path), dir.string(), "@dir@");
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return result;
}

}  // namespace hgt::testing
