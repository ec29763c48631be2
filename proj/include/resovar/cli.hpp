#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resovar/json_io.hpp"

namespace resovar {

enum class Method { Formula, Oracle, Both };

struct Command {
  std::string verb;
  std::string target;  // arrangement path, or fixture name for `gallery`
  std::optional<int> infinity;
  std::optional<int> h0;
  std::optional<std::string> weights_path;
  std::optional<std::string> local_system_path;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  Method method = Method::Formula;
  std::size_t k = 1;
};

struct RunResult {
  int status = 0;
  Json doc;
};

// Executes one parsed command. Throws resovar::Error on input and domain
// errors; a cross-validation mismatch is reported through status 1 with
// the report still attached.
RunResult run(const Command& cmd);

struct Outcome {
  int status = 0;
  Json doc;
  std::string error;
};

// Parse + run + map errors to exit codes (1 domain, 2 input); never throws.
Outcome run_captured(const std::vector<std::string>& args);

// The default line at infinity for a chart when --infinity is not given:
// for C2 the cover line of highest index, for C1 the canonical cover,
// otherwise the last line.
int default_infinity(const Arrangement& arr);

int main_entry(int argc, char** argv);

}  // namespace resovar
