#include "cli_support.hpp"

#include "trustyuri/codec.hpp"
#include "trustyuri/errors.hpp"
#include "trustyuri/module_fa.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace trustyuri;

namespace {

std::optional<RdfFormat> parse_format(const std::string& name) {
    if (name.empty()) return std::nullopt;
    if (name == "nq" || name == "nquads") return RdfFormat::NQuads;
    if (name == "trig") return RdfFormat::TriG;
    throw CLI::ValidationError("--format", "expected 'nq' or 'trig'");
}

Module parse_module(const std::string& name) {
    if (name == "RA" || name == "ra") return Module::RA;
    if (name == "RB" || name == "rb") return Module::RB;
    throw CLI::ValidationError("--module", "expected 'RA' or 'RB'");
}

struct CommonFlags {
    bool json = false;
    std::string format;
    std::string temp_dir;
    std::size_t max_records = SortConfig{}.max_in_memory_records;
    unsigned fan_in = SortConfig{}.fan_in;

    void add_output(CLI::App* cmd) {
        cmd->add_flag("--json", json, "Emit one JSON record per line");
        cmd->add_option("--format", format, "Input format: nq or trig (default: by extension)");
    }
    void add_sort(CLI::App* cmd) {
        cmd->add_option("--max-records", max_records,
                        "Statements buffered in memory before spilling a sorted run");
        cmd->add_option("--fan-in", fan_in, "Runs merged per pass");
        cmd->add_option("--temp-dir", temp_dir,
                        "Temp directory (default: $TRUSTYURI_TMPDIR or the system one)");
    }

    cli::Options options() const {
        cli::Options opts;
        opts.json = json;
        opts.format = parse_format(format);
        opts.sort.max_in_memory_records = max_records;
        opts.sort.fan_in = fan_in;
        if (!temp_dir.empty()) opts.sort.temp_dir = temp_dir;
        return opts;
    }
};

int run_checks(const std::vector<std::string>& files, const cli::Options& options,
               const char* op, CheckReport (*check)(const std::filesystem::path&,
                                                    const cli::Options&)) {
    cli::StatusTracker status;
    for (const std::string& file : files) {
        CheckReport report = check(file, options);
        cli::print_report(std::cout, op, file, report, options.json);
        status.note(report.verdict);
    }
    return status.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Create and verify trusty URIs: content-addressable identifiers whose "
                 "tail embeds a cryptographic hash of the artifact, for raw files (module "
                 "FA) and RDF datasets independent of serialization (modules RA/RB)."};
    app.require_subcommand(1);
    int exit_code = 0;

    // check-file
    auto check_flags = std::make_shared<CommonFlags>();
    auto check_files = std::make_shared<std::vector<std::string>>();
    CLI::App* check_cmd = app.add_subcommand(
        "check-file", "Validate trusty files against the code in their name");
    check_cmd->alias("CheckFile");
    check_cmd->add_option("files", *check_files, "Trusty files")->required();
    check_flags->add_output(check_cmd);
    check_cmd->callback([&, check_flags, check_files] {
        exit_code = run_checks(*check_files, check_flags->options(), "check-file",
                               [](const std::filesystem::path& p, const cli::Options& o) {
                                   return check_file(p, o.format);
                               });
    });

    // process-file
    auto process_files = std::make_shared<std::vector<std::string>>();
    auto process_flags = std::make_shared<CommonFlags>();
    CLI::App* process_cmd = app.add_subcommand(
        "process-file", "Hash byte content (module FA) and rename into a trusty file");
    process_cmd->alias("ProcessFile");
    process_cmd->add_option("files", *process_files, "Files to process")->required();
    process_cmd->add_flag("--json", process_flags->json, "Emit one JSON record per line");
    process_cmd->callback([&, process_files, process_flags] {
        cli::StatusTracker status;
        for (const std::string& file : *process_files) {
            try {
                auto renamed = process_file(file);
                std::cout << "processed  " << file << "  ->  " << renamed.string() << '\n';
                status.note_ok();
            } catch (const std::exception& e) {
                cli::print_report(std::cout, "process-file", file, CheckReport::error(e.what()),
                                  process_flags->json);
                status.note(Verdict::Error);
            }
        }
        exit_code = status.exit_code();
    });

    // transform-rdf / transform-large-rdf
    for (bool large : {false, true}) {
        auto flags = std::make_shared<CommonFlags>();
        auto file = std::make_shared<std::string>();
        auto base_uri = std::make_shared<std::string>();
        auto module_name = std::make_shared<std::string>("RA");
        auto out_format = std::make_shared<std::string>("nq");
        CLI::App* cmd = app.add_subcommand(
            large ? "transform-large-rdf" : "transform-rdf",
            large ? "Transform an RDF file into a trusty file using temporary files "
                    "instead of loading it into memory"
                  : "Transform an RDF file into a self-referencing trusty file");
        cmd->alias(large ? "TransformLargeRdf" : "TransformRdf");
        cmd->add_option("file", *file, "RDF input file")->required();
        cmd->add_option("base-uri", *base_uri, "Base URI of the artifact")->required();
        cmd->add_option("--module", *module_name, "RDF module: RA (default) or RB");
        cmd->add_option("--out-format", *out_format,
                        "Trusty file format; only sorted canonical 'nq' is implemented")
            ->check(CLI::IsMember({"nq"}));
        flags->add_output(cmd);
        if (large) flags->add_sort(cmd);
        cmd->callback([&, flags, file, base_uri, module_name, out_format, large] {
            (void)out_format; // reserved; IsMember already restricts it to "nq"
            cli::Options options = flags->options();
            Module module = parse_module(*module_name);
            try {
                std::filesystem::path written;
                std::string uri;
                if (large) {
                    auto result =
                        transform_large_rdf(*file, *base_uri, module, options.sort,
                                            options.format);
                    written = result.path;
                    uri = result.trusty_uri;
                } else {
                    auto result = transform_rdf_to_file(*file, *base_uri, module,
                                                        options.format);
                    written = result.path;
                    uri = result.trusty_uri;
                }
                if (options.json) {
                    nlohmann::json j;
                    j["op"] = large ? "transform-large-rdf" : "transform-rdf";
                    j["file"] = *file;
                    j["output"] = written.string();
                    j["trusty_uri"] = uri;
                    std::cout << j.dump() << '\n';
                } else {
                    std::cout << uri << '\n' << written.string() << '\n';
                }
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                exit_code = 2;
            }
        });
    }

    // check-large-rdf
    auto large_flags = std::make_shared<CommonFlags>();
    auto large_files = std::make_shared<std::vector<std::string>>();
    CLI::App* large_cmd = app.add_subcommand(
        "check-large-rdf", "Check RDF trusty files without loading them into memory");
    large_cmd->alias("CheckLargeRdf");
    large_cmd->add_option("files", *large_files, "Trusty files")->required();
    large_flags->add_output(large_cmd);
    large_flags->add_sort(large_cmd);
    large_cmd->callback([&, large_flags, large_files] {
        cli::Options options = large_flags->options();
        cli::StatusTracker status;
        for (const std::string& file : *large_files) {
            CheckReport report = check_file_large(file, options.sort, options.format);
            cli::print_report(std::cout, "check-large-rdf", file, report, options.json);
            status.note(report.verdict);
        }
        exit_code = status.exit_code();
    });

    // check-sorted-rdf
    auto sorted_flags = std::make_shared<CommonFlags>();
    auto sorted_files = std::make_shared<std::vector<std::string>>();
    CLI::App* sorted_cmd = app.add_subcommand(
        "check-sorted-rdf",
        "Check canonically sorted RDF trusty files in one streaming pass");
    sorted_cmd->alias("CheckSortedRdf");
    sorted_cmd->add_option("files", *sorted_files, "Trusty files")->required();
    sorted_flags->add_output(sorted_cmd);
    sorted_cmd->callback([&, sorted_flags, sorted_files] {
        exit_code = run_checks(*sorted_files, sorted_flags->options(), "check-sorted-rdf",
                               [](const std::filesystem::path& p, const cli::Options& o) {
                                   return check_file_sorted(p, o.format);
                               });
    });

    // run-batch
    auto batch_flags = std::make_shared<CommonFlags>();
    auto batch_file = std::make_shared<std::string>();
    CLI::App* batch_cmd = app.add_subcommand(
        "run-batch", "Execute commands from a file, one per line, and summarize");
    batch_cmd->alias("RunBatch");
    batch_cmd->add_option("file", *batch_file, "Batch command file")->required();
    batch_flags->add_output(batch_cmd);
    batch_flags->add_sort(batch_cmd);
    batch_cmd->callback([&, batch_flags, batch_file] {
        cli::Options options = batch_flags->options();
        exit_code = cli::run_batch_file(*batch_file, std::cout, options).exit_code();
    });

    // fuzz-check
    auto fuzz_flags = std::make_shared<CommonFlags>();
    auto corpus = std::make_shared<std::string>();
    auto count = std::make_shared<std::uint64_t>(1000);
    auto seed = std::make_shared<std::uint64_t>(42);
    CLI::App* fuzz_cmd = app.add_subcommand(
        "fuzz-check",
        "Corrupt one byte per mutant of the corpus files and tabulate check verdicts");
    fuzz_cmd->alias("FuzzCheck");
    fuzz_cmd->add_option("corpus", *corpus, "Directory of valid trusty files")->required();
    fuzz_cmd->add_option("-n,--count", *count, "Number of mutants to generate");
    fuzz_cmd->add_option("--seed", *seed, "Random seed (runs are reproducible)");
    fuzz_flags->add_output(fuzz_cmd);
    fuzz_cmd->callback([&, fuzz_flags, corpus, count, seed] {
        cli::Options options = fuzz_flags->options();
        cli::FuzzStats stats = cli::run_fuzz(*corpus, *count, *seed, std::cout, options);
        exit_code = stats.valid > 0 ? 1 : 0;
    });

    // ni-convert
    auto ni_uri = std::make_shared<std::string>();
    auto authority = std::make_shared<std::string>();
    auto module_param = std::make_shared<bool>(false);
    CLI::App* ni_cmd =
        app.add_subcommand("ni-convert", "Render a trusty URI as an RFC 6920 ni-URI");
    ni_cmd->alias("NiConvert");
    ni_cmd->add_option("uri", *ni_uri, "Trusty URI")->required();
    ni_cmd->add_option("--authority", *authority, "Authority to embed (default: none)");
    ni_cmd->add_flag("--module-param", *module_param, "Append the ?module= parameter");
    ni_cmd->callback([&, ni_uri, authority, module_param] {
        try {
            std::optional<std::string_view> auth;
            if (!authority->empty()) auth = *authority;
            std::cout << to_ni_uri(*ni_uri, auth, *module_param) << '\n';
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            exit_code = 2;
        }
    });

    CLI11_PARSE(app, argc, argv);
    return exit_code;
}
