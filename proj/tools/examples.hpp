#ifndef PSTRATA_TOOLS_EXAMPLES_HPP
#define PSTRATA_TOOLS_EXAMPLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "pstrata/json_io.hpp"

namespace pstrata::cli {

// A worked example: command, optional inline input, and the expected
// fragment of the result body. Running the example must reproduce the
// fragment exactly (structural subset, bit-exact leaf values).
struct ExampleRecord {
    std::string name;
    std::string about;
    std::vector<std::string> args;
    std::optional<Json> input;
    Json expected; // compared against report["result"]
};

const std::vector<ExampleRecord>& example_registry();

// runs the stored command and diffs the expectation; returns
// {name, pass, mismatches, result}
Json run_example(const std::string& name);

} // namespace pstrata::cli

#endif
