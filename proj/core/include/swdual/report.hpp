#pragma once

// Command-line driver layer: run configuration, grid orchestration over a
// bounded worker pool, the declarative verdict-expectation table, and
// bit-exact report emission.
//
// JSON is the canonical output; CSV and aligned text are derived views.
// Report bytes are a pure function of the configuration and tool version:
// cell order is fixed by the grid loop (n, then r, then field, then group),
// workers write into preassigned slots, and wall-clock timings are emitted
// only when explicitly requested.

#include "swdual/config.hpp"
#include "swdual/duality.hpp"
#include "swdual/field.hpp"
#include "swdual/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace swdual {

enum class Command { Check, Scan, Tl, Dims, Formulas };
enum class OutFormat { Json, Csv, Text };

std::string command_str(Command c);
std::string format_str(OutFormat f);

struct RunConfig {
    Command command = Command::Check;
    std::string claim;              // main1 | thrall (check/scan only)
    std::vector<int> ns;
    std::vector<int> rs;
    std::vector<Field> fields;
    std::vector<GroupKind> groups = {GroupKind::GL};
    PhiMethod method = PhiMethod::Closure;
    long long p = 2;                // tl only
    int rmax = 6;                   // tl only
    bool with_q = true;             // tl only
    OutFormat format = OutFormat::Json;
    std::string out = "-";          // "-" = stdout
    int jobs = 1;
    bool timings = false;
    Caps caps;
};

// Parses argv into a RunConfig.  Returns nothing when the invocation only
// asked for --help or --version (already printed); throws UsageError on
// malformed input.  Caps default from the environment overrides and are
// further overridden by flags.
std::optional<RunConfig> parse_args(int argc, const char* const* argv);

struct RunResult {
    std::vector<DualityReport> cells;
    // One line per evaluated verdict that contradicts its expectation.
    std::vector<std::string> mismatches;
    int exit_code = 0; // 0 pass, 1 expectation mismatch
};

// Executes the configured grid.  Per-cell resource exhaustion becomes
// skipped verdicts; only configuration-level problems throw.
RunResult run(const RunConfig& cfg);

// One expectation row: a verdict name, what the established results force it
// to be, and the reason, evaluated per cell.  Verdicts without a row (or
// skipped verdicts) never affect the exit status.
struct Expectation {
    std::string verdict;
    bool expected;
    std::string reason;
};

std::vector<Expectation> expectations_for(const DualityReport& cell);

// Serializes cells in the configured format; byte-identical for identical
// inputs.  Always ends with a newline.
std::string emit_report(const std::vector<DualityReport>& cells, const RunConfig& cfg);

// Writes bytes to cfg.out ("-" = stdout); throws IoError on failure.
void write_output(const std::string& bytes, const std::string& out_path);

} // namespace swdual
