#pragma once

// Pieces of the command-line surface that are worth testing directly:
// report rendering, exit-status aggregation, the batch-file interpreter
// and the single-byte corruption rule of the fuzz harness.

#include "trustyuri/check_file.hpp"
#include "trustyuri/check_report.hpp"
#include "trustyuri/large.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace trustyuri::cli {

struct Options {
    bool json = false;
    std::optional<RdfFormat> format;
    SortConfig sort;
};

/// Worst-verdict aggregation backing the exit-status contract:
/// 0 = everything valid, 1 = something invalid, 2 = something errored
/// (error dominates invalid).
class StatusTracker {
public:
    void note(Verdict v);
    void note_ok() { ++valid_; }
    int exit_code() const;
    std::uint64_t valid() const { return valid_; }
    std::uint64_t invalid() const { return invalid_; }
    std::uint64_t errors() const { return errors_; }

private:
    std::uint64_t valid_ = 0;
    std::uint64_t invalid_ = 0;
    std::uint64_t errors_ = 0;
};

void print_report(std::ostream& out, const std::string& op, const std::string& subject,
                  const CheckReport& report, bool json);

/// One line of a batch file: whitespace-separated verb and arguments.
/// '#' comments and blank lines are skipped by the reader.
struct BatchCommand {
    enum class Verb {
        CheckFile,
        ProcessFile,
        TransformRdf,
        TransformLargeRdf,
        CheckLargeRdf,
        CheckSortedRdf,
    };
    Verb verb;
    std::vector<std::string> args;
};

/// Parses one non-empty, non-comment line. Returns nullopt (with a
/// message) for unknown verbs or wrong arity.
std::optional<BatchCommand> parse_batch_line(const std::string& line, std::string& error);

struct BatchSummary {
    std::uint64_t valid = 0;
    std::uint64_t invalid = 0;
    std::uint64_t errors = 0;
    int exit_code() const;
};

/// Executes commands one after the other; malformed lines are recorded
/// as errors and execution continues.
BatchSummary run_batch(std::istream& commands, std::ostream& out, const Options& options);
BatchSummary run_batch_file(const std::filesystem::path& path, std::ostream& out,
                            const Options& options);

/// The corruption rule: exactly one byte changes, only letters and digits
/// are touched, the replacement is a letter or digit, never the identity
/// and never the case-flipped same letter. Returns false when the content
/// has no letter or digit to mutate.
bool mutate_single_byte(std::string& content, std::mt19937_64& rng);

struct FuzzStats {
    std::uint64_t mutants = 0;
    std::uint64_t valid = 0;
    std::uint64_t invalid = 0;
    std::uint64_t errors = 0;
    std::uint64_t files = 0;
};

/// Generates `n` single-byte mutants over the trusty files in
/// `corpus_dir`, checks each one, and tabulates the verdicts.
FuzzStats run_fuzz(const std::filesystem::path& corpus_dir, std::uint64_t n, std::uint64_t seed,
                   std::ostream& out, const Options& options);

} // namespace trustyuri::cli
