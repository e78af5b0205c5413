#include "cli_support.hpp"

#include "trustyuri/errors.hpp"
#include "trustyuri/module_fa.hpp"
#include "trustyuri/module_r.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace trustyuri::cli {

void StatusTracker::note(Verdict v) {
    switch (v) {
        case Verdict::Valid: ++valid_; break;
        case Verdict::Invalid: ++invalid_; break;
        case Verdict::Error: ++errors_; break;
    }
}

int StatusTracker::exit_code() const {
    if (errors_ > 0) return 2;
    if (invalid_ > 0) return 1;
    return 0;
}

void print_report(std::ostream& out, const std::string& op, const std::string& subject,
                  const CheckReport& report, bool json) {
    if (json) {
        nlohmann::json j;
        j["op"] = op;
        j["file"] = subject;
        j["verdict"] = std::string(verdict_name(report.verdict));
        if (report.expected_code) j["expected"] = report.expected_code->str();
        if (report.computed_code) j["computed"] = report.computed_code->str();
        if (!report.message.empty()) j["message"] = report.message;
        out << j.dump() << '\n';
        return;
    }
    out << verdict_name(report.verdict) << "  " << subject;
    if (report.verdict == Verdict::Invalid && report.expected_code && report.computed_code) {
        out << "  (expected " << report.expected_code->str() << ", computed "
            << report.computed_code->str() << ")";
    }
    if (!report.message.empty()) out << "  - " << report.message;
    out << '\n';
}

namespace {

std::optional<BatchCommand::Verb> verb_from_name(std::string_view name) {
    using Verb = BatchCommand::Verb;
    if (name == "CheckFile" || name == "check-file") return Verb::CheckFile;
    if (name == "ProcessFile" || name == "process-file") return Verb::ProcessFile;
    if (name == "TransformRdf" || name == "transform-rdf") return Verb::TransformRdf;
    if (name == "TransformLargeRdf" || name == "transform-large-rdf")
        return Verb::TransformLargeRdf;
    if (name == "CheckLargeRdf" || name == "check-large-rdf") return Verb::CheckLargeRdf;
    if (name == "CheckSortedRdf" || name == "check-sorted-rdf") return Verb::CheckSortedRdf;
    return std::nullopt;
}

bool arity_ok(BatchCommand::Verb verb, std::size_t args) {
    using Verb = BatchCommand::Verb;
    switch (verb) {
        case Verb::CheckFile:
        case Verb::ProcessFile:
        case Verb::CheckLargeRdf:
        case Verb::CheckSortedRdf: return args == 1;
        case Verb::TransformRdf:
        case Verb::TransformLargeRdf: return args == 2 || args == 3;
    }
    return false;
}

Module module_from_arg(const std::vector<std::string>& args, std::size_t index) {
    if (args.size() <= index) return Module::RA;
    auto module = module_from_id(args[index]);
    if (!module || *module == Module::FA) {
        throw Error("not an RDF module: " + args[index]);
    }
    return *module;
}

} // namespace

std::optional<BatchCommand> parse_batch_line(const std::string& line, std::string& error) {
    std::istringstream in(line);
    std::string verb_name;
    in >> verb_name;
    auto verb = verb_from_name(verb_name);
    if (!verb) {
        error = "unknown command '" + verb_name + "'";
        return std::nullopt;
    }
    BatchCommand command{*verb, {}};
    std::string arg;
    while (in >> arg) command.args.push_back(arg);
    if (!arity_ok(*verb, command.args.size())) {
        error = "wrong number of arguments for '" + verb_name + "'";
        return std::nullopt;
    }
    return command;
}

namespace {

void run_transform(std::ostream& out, const Options& options, const std::string& path,
                   const std::string& base_uri, Module module, bool large,
                   StatusTracker& status) {
    try {
        std::filesystem::path written;
        std::string uri;
        std::string code;
        if (large) {
            LargeTransformResult result =
                transform_large_rdf(path, base_uri, module, options.sort, options.format);
            written = result.path;
            uri = result.trusty_uri;
            code = result.code.str();
        } else {
            FileTransformResult result =
                transform_rdf_to_file(path, base_uri, module, options.format);
            written = result.path;
            uri = result.trusty_uri;
            code = result.code.str();
        }
        if (options.json) {
            nlohmann::json j;
            j["op"] = large ? "transform-large-rdf" : "transform-rdf";
            j["file"] = path;
            j["output"] = written.string();
            j["trusty_uri"] = uri;
            j["code"] = code;
            out << j.dump() << '\n';
        } else {
            out << "transformed  " << path << "  ->  " << written.string() << '\n';
        }
        status.note_ok();
    } catch (const std::exception& e) {
        CheckReport report = CheckReport::error(e.what());
        print_report(out, large ? "transform-large-rdf" : "transform-rdf", path, report,
                     options.json);
        status.note(Verdict::Error);
    }
}

void execute(const BatchCommand& command, std::ostream& out, const Options& options,
             StatusTracker& status) {
    using Verb = BatchCommand::Verb;
    switch (command.verb) {
        case Verb::CheckFile: {
            CheckReport report = check_file(command.args[0], options.format);
            print_report(out, "check-file", command.args[0], report, options.json);
            status.note(report.verdict);
            return;
        }
        case Verb::CheckLargeRdf: {
            CheckReport report = check_file_large(command.args[0], options.sort, options.format);
            print_report(out, "check-large-rdf", command.args[0], report, options.json);
            status.note(report.verdict);
            return;
        }
        case Verb::CheckSortedRdf: {
            CheckReport report = check_file_sorted(command.args[0], options.format);
            print_report(out, "check-sorted-rdf", command.args[0], report, options.json);
            status.note(report.verdict);
            return;
        }
        case Verb::ProcessFile: {
            try {
                std::filesystem::path renamed = process_file(command.args[0]);
                if (options.json) {
                    nlohmann::json j;
                    j["op"] = "process-file";
                    j["file"] = command.args[0];
                    j["output"] = renamed.string();
                    out << j.dump() << '\n';
                } else {
                    out << "processed  " << command.args[0] << "  ->  " << renamed.string()
                        << '\n';
                }
                status.note_ok();
            } catch (const std::exception& e) {
                print_report(out, "process-file", command.args[0],
                             CheckReport::error(e.what()), options.json);
                status.note(Verdict::Error);
            }
            return;
        }
        case Verb::TransformRdf:
        case Verb::TransformLargeRdf: {
            Module module;
            try {
                module = module_from_arg(command.args, 2);
            } catch (const Error& e) {
                print_report(out, "transform-rdf", command.args[0],
                             CheckReport::error(e.what()), options.json);
                status.note(Verdict::Error);
                return;
            }
            run_transform(out, options, command.args[0], command.args[1], module,
                          command.verb == Verb::TransformLargeRdf, status);
            return;
        }
    }
}

} // namespace

int BatchSummary::exit_code() const {
    if (errors > 0) return 2;
    if (invalid > 0) return 1;
    return 0;
}

BatchSummary run_batch(std::istream& commands, std::ostream& out, const Options& options) {
    StatusTracker status;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(commands, line)) {
        ++line_number;
        std::string_view trimmed = line;
        while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t'))
            trimmed.remove_prefix(1);
        if (trimmed.empty() || trimmed.front() == '#') continue;

        std::string error;
        auto command = parse_batch_line(std::string(trimmed), error);
        if (!command) {
            print_report(out, "batch", "line " + std::to_string(line_number),
                         CheckReport::error(error), options.json);
            status.note(Verdict::Error);
            continue;
        }
        execute(*command, out, options, status);
    }
    BatchSummary summary{status.valid(), status.invalid(), status.errors()};
    if (options.json) {
        nlohmann::json j;
        j["op"] = "summary";
        j["valid"] = summary.valid;
        j["invalid"] = summary.invalid;
        j["error"] = summary.errors;
        out << j.dump() << '\n';
    } else {
        out << "summary: " << summary.valid << " valid, " << summary.invalid << " invalid, "
            << summary.errors << " error\n";
    }
    return summary;
}

BatchSummary run_batch_file(const std::filesystem::path& path, std::ostream& out,
                            const Options& options) {
    std::ifstream in(path);
    if (!in) {
        BatchSummary summary{0, 0, 1};
        print_report(out, "batch", path.string(),
                     CheckReport::error("cannot open batch file"), options.json);
        return summary;
    }
    return run_batch(in, out, options);
}

bool mutate_single_byte(std::string& content, std::mt19937_64& rng) {
    std::vector<std::size_t> positions;
    positions.reserve(content.size());
    for (std::size_t i = 0; i < content.size(); ++i) {
        if (std::isalnum(static_cast<unsigned char>(content[i]))) positions.push_back(i);
    }
    if (positions.empty()) return false;

    static constexpr std::string_view kPool =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
    std::size_t pos = positions[rng() % positions.size()];
    char original = content[pos];
    char flipped = std::isupper(static_cast<unsigned char>(original))
                       ? static_cast<char>(std::tolower(static_cast<unsigned char>(original)))
                       : static_cast<char>(std::toupper(static_cast<unsigned char>(original)));
    char replacement;
    do {
        replacement = kPool[rng() % kPool.size()];
    } while (replacement == original || replacement == flipped);
    content[pos] = replacement;
    return true;
}

FuzzStats run_fuzz(const std::filesystem::path& corpus_dir, std::uint64_t n, std::uint64_t seed,
                   std::ostream& out, const Options& options) {
    FuzzStats stats;
    std::vector<std::filesystem::path> corpus;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
        if (!entry.is_regular_file()) continue;
        try {
            candidate_from_filename(entry.path());
            corpus.push_back(entry.path());
        } catch (const Error&) {
            // Not a trusty file; skip.
        }
    }
    std::sort(corpus.begin(), corpus.end());
    stats.files = corpus.size();
    if (corpus.empty()) {
        out << "fuzz: no trusty files in " << corpus_dir.string() << '\n';
        return stats;
    }

    std::mt19937_64 rng(seed);
    std::filesystem::path mutant_dir =
        resolve_temp_root(options.sort) / ("tu-fuzz-" + std::to_string(rng()));
    std::filesystem::create_directories(mutant_dir);

    for (std::uint64_t i = 0; i < n; ++i) {
        const std::filesystem::path& source = corpus[i % corpus.size()];
        std::ifstream in(source, std::ios::binary);
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::string content = buffer.str();
        if (!mutate_single_byte(content, rng)) continue;

        std::filesystem::path mutant = mutant_dir / source.filename();
        {
            std::ofstream mutant_out(mutant, std::ios::binary | std::ios::trunc);
            mutant_out << content;
        }
        CheckReport report = check_file(mutant, options.format);
        ++stats.mutants;
        switch (report.verdict) {
            case Verdict::Valid:
                ++stats.valid;
                // A successfully validated mutant is the one outcome worth
                // showing individually.
                print_report(out, "fuzz-check", mutant.string(), report, options.json);
                break;
            case Verdict::Invalid: ++stats.invalid; break;
            case Verdict::Error: ++stats.errors; break;
        }
    }
    std::error_code ec;
    std::filesystem::remove_all(mutant_dir, ec);

    auto percent = [&](std::uint64_t count) {
        return stats.mutants == 0 ? 0.0 : 100.0 * static_cast<double>(count) /
                                              static_cast<double>(stats.mutants);
    };
    if (options.json) {
        nlohmann::json j;
        j["op"] = "fuzz-summary";
        j["files"] = stats.files;
        j["mutants"] = stats.mutants;
        j["seed"] = seed;
        j["valid"] = stats.valid;
        j["invalid"] = stats.invalid;
        j["error"] = stats.errors;
        j["valid_pct"] = percent(stats.valid);
        j["invalid_pct"] = percent(stats.invalid);
        j["error_pct"] = percent(stats.errors);
        out << j.dump() << '\n';
    } else {
        char line[160];
        std::snprintf(line, sizeof line,
                      "fuzz: %llu mutants over %llu files (seed %llu)\n"
                      "valid: %llu (%.2f%%)  invalid: %llu (%.2f%%)  error: %llu (%.2f%%)\n",
                      static_cast<unsigned long long>(stats.mutants),
                      static_cast<unsigned long long>(stats.files),
                      static_cast<unsigned long long>(seed),
                      static_cast<unsigned long long>(stats.valid), percent(stats.valid),
                      static_cast<unsigned long long>(stats.invalid), percent(stats.invalid),
                      static_cast<unsigned long long>(stats.errors), percent(stats.errors));
        out << line;
    }
    return stats;
}

} // namespace trustyuri::cli
