#ifndef PSTRATA_TOOLS_RUNNER_HPP
#define PSTRATA_TOOLS_RUNNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "pstrata/json_io.hpp"

namespace pstrata::cli {

inline constexpr const char* kSchema = "poisson-strata/1";
inline constexpr const char* kVersion = "0.1.0";

struct RunResult {
    int exit_code = 0;
    Json report;
    std::string format = "json"; // json | md | csv
    std::string output_path;     // empty = stdout
};

// Executes one subcommand; never throws (errors land in the report with
// exit code 1, usage problems give exit code 2). inline_input, when given,
// takes the place of --input file contents.
RunResult run_tool(const std::vector<std::string>& args,
                   const std::optional<Json>& inline_input = std::nullopt);

std::string render_report(const Json& report, const std::string& format);

} // namespace pstrata::cli

#endif
