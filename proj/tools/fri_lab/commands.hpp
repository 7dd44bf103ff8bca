#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fri::cli {

/// 0 = success / all pass, 1 = PROBLEM or mismatch found, 2 = usage or input error.
enum ExitCode : int { kSuccess = 0, kFindings = 1, kUsageError = 2 };

struct DisplayOptions {
  int decimals = 4;
};

struct BenchOptions {
  std::optional<int> case_id;
  std::optional<std::filesystem::path> csv_path;
  std::optional<int> sweep_levels;
  DisplayOptions display;
};

struct InterpolateOptions {
  std::filesystem::path input;
  std::string method = "kh";
  std::optional<int> sweep_levels;
  DisplayOptions display;
};

struct ValidateOptions {
  std::filesystem::path input;
  DisplayOptions display;
};

struct PlotOptions {
  std::filesystem::path input;
  std::filesystem::path output;
};

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);
int cmd_interpolate(const InterpolateOptions& options, std::ostream& out, std::ostream& err);
int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err);
int cmd_plot(const PlotOptions& options, std::ostream& out, std::ostream& err);

/// SVG text for the flanking pair of a 1-D document with an observation.
std::string render_svg(const std::filesystem::path& input);

/// Full command line entry point; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fri::cli
