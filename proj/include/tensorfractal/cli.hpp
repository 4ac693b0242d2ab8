#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tensorfractal::cli {

enum class Subcommand { List, Generate, Analyze, Rgb, Verify, Entry };
enum class OutputFormat { Pbm, Ppm, Voxels, Text };

struct CliConfig {
  Subcommand subcommand = Subcommand::List;
  std::string fractal = "cantor";
  std::optional<std::size_t> order;  // multisponge order d
  std::size_t iterations = 1;
  std::optional<std::string> output;  // stdout when unset
  OutputFormat format = OutputFormat::Text;
  bool binary = false;                // P4/P6 instead of P1/P3
  std::size_t bar_height = 1;
  std::optional<std::size_t> budget;
  std::string preset = "a";
  std::size_t depth = 1;
  std::size_t dims_from = 2, dims_to = 8;
  std::vector<std::size_t> index;     // 1-based, for `entry`
};

/// Executes one subcommand. Data goes to out, diagnostics to err. Returns
/// the process exit code.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a CliConfig and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tensorfractal::cli
