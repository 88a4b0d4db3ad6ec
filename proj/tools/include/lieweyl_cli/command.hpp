#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lieweyl::cli {

enum class OutputFormat { Text, Structured };

struct Bounds {
  int max_dim = 4;
  int max_cutoff = 6;
  int max_degree = 5;
};

struct CommandConfig {
  std::string command;
  std::string algebra = "su2";
  std::optional<int> cutoff;  // D
  std::optional<int> degree;  // P
  int mu = 0;                 // 1-based, 0 = all
  int nu = 0;
  std::optional<std::string> f, g, h;
  std::optional<std::string> k, q;  // comma-separated rationals
  OutputFormat format = OutputFormat::Text;
  bool list = false;
  bool count = false;
  bool planar = false;
  bool contributing = false;
  bool ascii = false;
  bool table = false;
  std::string route = "all";
  int w = 1;
  int b = 0;
  bool unbounded = false;
  Bounds bounds;
};

struct CommandResult {
  int exit_code = 0;  // 0 all checks passed, 1 a check failed, 2 bad input
  std::string output;
};

CommandResult run_command(const CommandConfig& cfg);

std::vector<std::string> command_names();

}  // namespace lieweyl::cli
