#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ddbar {

enum class Command {
    analyze,
    builtin,
    blowup_point,
    blowup_curve,
    blowup_general,
    invariance,
    list,
};

enum class OutputFormat { table, json, csv };

/// One parsed invocation; exactly one command, one output format.
struct RunConfig {
    Command command = Command::list;
    OutputFormat format = OutputFormat::table;
    bool show_cells = false; // analyze / builtin only

    std::string spec_path; // analyze

    std::string builtin_name; // builtin
    std::optional<int> builtin_n;

    std::string table_path;  // blowup_*
    std::string center_path; // blowup_general
    int genus = 0;           // blowup_curve
    int codim = 2;           // blowup_general
    bool allow_conjectural = false;

    uint64_t seed = 0;     // invariance
    int iterations = 1000; // invariance
};

/// Executes one invocation, writing documents to `out` and error text to
/// `err`. Exit codes: 0 success, 2 malformed input, 3 invalid complex
/// (failed d^2 / anticommutation / sigma identities or disagreeing verdict
/// criteria), 4 conjectural formula without --allow-conjectural, 5 dimension
/// or argument error, 1 unexpected failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it. Command-line errors exit 5;
/// --help exits 0.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ddbar
