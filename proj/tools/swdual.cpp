#include "swdual/errors.hpp"
#include "swdual/report.hpp"

#include <exception>
#include <iostream>

// Exit statuses: 0 all evaluated verdicts match their expectations,
// 1 some verdict contradicts an expectation, 2 usage error,
// 3 resource / I/O / internal error.
int main(int argc, char** argv) {
    try {
        const auto cfg = swdual::parse_args(argc, argv);
        if (!cfg) return 0; // --help / --version
        const swdual::RunResult res = swdual::run(*cfg);
        swdual::write_output(swdual::emit_report(res.cells, *cfg), cfg->out);
        for (const auto& m : res.mismatches) std::cerr << "mismatch: " << m << "\n";
        return res.exit_code;
    } catch (const swdual::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
