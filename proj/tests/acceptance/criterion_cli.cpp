#include "acceptance.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>
#include <vector>

#include <sys/wait.h>

namespace acceptance {

namespace {

namespace fs = std::filesystem;

struct Case {
  std::string name;
  std::string command;
};

std::vector<Case> read_cases(const fs::path& file) {
  std::ifstream in(file);
  std::vector<Case> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    out.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return out;
}

// stdout and stderr of the command followed by "[exit N]".
std::string run(const std::string& command) {
  std::string script = "{ " + command + "\n} 2>&1";
  FILE* pipe = popen(script.c_str(), "r");
  if (!pipe) return "[popen failed]\n";
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out + "[exit " + std::to_string(code) + "]\n";
}

std::string read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

Result cli_determinism(bool update_golden) {
  const fs::path golden = fs::path(GPW_SOURCE_DIR) / "tests" / "golden";
  const fs::path tmp = fs::temp_directory_path() / ("gpw_cli_" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  setenv("GPW", GPW_CLI, 1);
  setenv("DATA", (fs::path(GPW_SOURCE_DIR) / "data").c_str(), 1);
  setenv("TMP", tmp.c_str(), 1);
  setenv("GPW_THREADS", "2", 1);
  std::size_t cases = 0;
  std::vector<std::string> unstable;
  std::vector<std::string> mismatched;
  for (const auto& c : read_cases(golden / "cases.tsv")) {
    ++cases;
    const auto first = run(c.command);
    const auto second = run(c.command);
    if (first != second) unstable.push_back(c.name);
    const auto file = golden / (c.name + ".out");
    if (update_golden) {
      std::ofstream(file, std::ios::binary) << first;
    } else if (!fs::exists(file) || read_all(file) != first) {
      mismatched.push_back(c.name);
    }
  }
  fs::remove_all(tmp);
  auto names = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
  };
  Result r;
  r.pass = cases > 0 && unstable.empty() && mismatched.empty();
  r.detail = std::to_string(cases) + " invocations run twice; " + std::to_string(unstable.size()) + " unstable" +
             (unstable.empty() ? "" : " (" + names(unstable) + ")") + ", " + std::to_string(mismatched.size()) +
             " golden mismatches" + (mismatched.empty() ? "" : " (" + names(mismatched) + ")") +
             (update_golden ? "; golden files rewritten" : "");
  return r;
}

}  // namespace acceptance
