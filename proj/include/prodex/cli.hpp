#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace prodex::cli {

enum class OutputFormat { json, plain };

struct CliConfig
{
    std::size_t default_order = 64;
    OutputFormat output_format = OutputFormat::json;
    unsigned thread_count = 0; // 0 = auto
};

enum ExitCode : int { kOk = 0, kUsage = 1, kMathFailure = 2 };

/// Runs `prodex` with argv-style arguments (args[0] is the program name).
/// Output is written to `out` in one piece; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace prodex::cli
