#include <fstream>
#include <iostream>

#include "runner.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto rr = pstrata::cli::run_tool(args);
    std::string text = pstrata::cli::render_report(rr.report, rr.format);
    if (rr.output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(rr.output_path);
        if (!out) {
            std::cerr << "cannot open output file '" << rr.output_path << "'\n";
            return 1;
        }
        out << text;
    }
    return rr.exit_code;
}
