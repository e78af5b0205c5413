#include "trustyuri/large.hpp"

#include "trustyuri/errors.hpp"
#include "trustyuri/nquads.hpp"
#include "trustyuri/sha256.hpp"
#include "trustyuri/trig.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <queue>
#include <random>

namespace trustyuri {

namespace {

RdfFormat format_for(const std::filesystem::path& path, std::optional<RdfFormat> override) {
    if (override) return *override;
    return path.extension() == ".trig" ? RdfFormat::TriG : RdfFormat::NQuads;
}

std::unique_ptr<QuadSource> make_source(std::istream& in, RdfFormat format) {
    if (format == RdfFormat::TriG) return std::make_unique<TrigParser>(in);
    return std::make_unique<NQuadsParser>(in);
}

// Run files hold length-prefixed records: u32 little-endian size + bytes.
void write_framed(std::ostream& out, std::string_view record) {
    std::uint32_t size = static_cast<std::uint32_t>(record.size());
    char header[4] = {static_cast<char>(size & 0xff), static_cast<char>((size >> 8) & 0xff),
                      static_cast<char>((size >> 16) & 0xff),
                      static_cast<char>((size >> 24) & 0xff)};
    out.write(header, 4);
    out.write(record.data(), static_cast<std::streamsize>(record.size()));
    if (!out) throw Error("I/O error while writing temporary sort file");
}

class FramedReader {
public:
    explicit FramedReader(const std::filesystem::path& path)
        : in_(path, std::ios::binary), path_(path) {
        if (!in_) throw Error("cannot open temporary file: " + path.string());
    }

    bool next(std::string& record) {
        char header[4];
        if (!in_.read(header, 4)) {
            if (in_.eof()) return false;
            throw Error("I/O error while reading: " + path_.string());
        }
        std::uint32_t size = static_cast<std::uint32_t>(static_cast<unsigned char>(header[0])) |
                             (static_cast<std::uint32_t>(static_cast<unsigned char>(header[1])) << 8) |
                             (static_cast<std::uint32_t>(static_cast<unsigned char>(header[2])) << 16) |
                             (static_cast<std::uint32_t>(static_cast<unsigned char>(header[3])) << 24);
        record.resize(size);
        if (!in_.read(record.data(), size)) {
            throw Error("truncated temporary file: " + path_.string());
        }
        return true;
    }

private:
    std::ifstream in_;
    std::filesystem::path path_;
};

// Per-job temporary directory, removed on destruction.
class TempDir {
public:
    explicit TempDir(const SortConfig& cfg) {
        std::filesystem::path root = resolve_temp_root(cfg);
        std::random_device rd;
        std::uniform_int_distribution<std::uint64_t> dist;
        for (int attempt = 0; attempt < 16; ++attempt) {
            char name[32];
            std::snprintf(name, sizeof name, "tu-%016llx",
                          static_cast<unsigned long long>(dist(rd)));
            std::filesystem::path candidate = root / name;
            std::error_code ec;
            if (std::filesystem::create_directories(candidate, ec) && !ec) {
                dir_ = candidate;
                return;
            }
        }
        throw Error("cannot create temporary directory under " + root.string());
    }

    ~TempDir() {
        if (!dir_.empty()) {
            std::error_code ec;
            std::filesystem::remove_all(dir_, ec);
        }
    }

    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return dir_; }

private:
    std::filesystem::path dir_;
};

bool record_less(const std::string& a, const std::string& b) {
    return compare_serialized_statements(a, b) < 0;
}

} // namespace

std::filesystem::path resolve_temp_root(const SortConfig& cfg) {
    if (!cfg.temp_dir.empty()) return cfg.temp_dir;
    if (const char* env = std::getenv(kTempDirEnvVar); env && *env) return env;
    return std::filesystem::temp_directory_path();
}

struct ExternalStatementSorter::Impl {
    SortConfig cfg;
    TempDir temp;
    std::vector<std::string> buffer;
    std::vector<std::filesystem::path> runs;
    std::uint64_t total = 0;
    std::size_t next_run_id = 0;
    std::size_t peak_resident = 0;
    bool consumed = false;

    explicit Impl(const SortConfig& c) : cfg(c), temp(c) {
        if (cfg.max_in_memory_records == 0) throw Error("max_in_memory_records must be positive");
        if (cfg.fan_in < 2) throw Error("fan_in must be at least 2");
    }

    void note_resident(std::size_t n) { peak_resident = std::max(peak_resident, n); }

    std::filesystem::path new_run_path() {
        return temp.path() / ("run-" + std::to_string(next_run_id++));
    }

    void spill_buffer() {
        if (buffer.empty()) return;
        std::sort(buffer.begin(), buffer.end(), record_less);
        std::filesystem::path run = new_run_path();
        std::ofstream out(run, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot create temporary run file");
        for (const std::string& record : buffer) write_framed(out, record);
        out.flush();
        if (!out) throw Error("I/O error while writing run file");
        runs.push_back(run);
        buffer.clear();
        buffer.shrink_to_fit();
    }

    // Merges the given runs, feeding records to `sink` in sorted order.
    void merge(const std::vector<std::filesystem::path>& inputs,
               const std::function<void(std::string_view)>& sink) {
        struct HeapEntry {
            std::string record;
            std::size_t reader;
        };
        auto heap_greater = [](const HeapEntry& a, const HeapEntry& b) {
            auto c = compare_serialized_statements(a.record, b.record);
            if (c != 0) return c > 0;
            return a.reader > b.reader;
        };
        std::vector<std::unique_ptr<FramedReader>> readers;
        readers.reserve(inputs.size());
        std::priority_queue<HeapEntry, std::vector<HeapEntry>, decltype(heap_greater)> heap(
            heap_greater);
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            readers.push_back(std::make_unique<FramedReader>(inputs[i]));
            std::string record;
            if (readers.back()->next(record)) heap.push({std::move(record), i});
        }
        note_resident(heap.size() + 1);
        while (!heap.empty()) {
            HeapEntry top = heap.top();
            heap.pop();
            sink(top.record);
            std::string record;
            if (readers[top.reader]->next(record)) heap.push({std::move(record), top.reader});
        }
    }

    // Reduces the number of runs below fan_in with intermediate passes.
    void reduce_runs() {
        while (runs.size() > cfg.fan_in) {
            std::vector<std::filesystem::path> next_level;
            for (std::size_t i = 0; i < runs.size(); i += cfg.fan_in) {
                std::size_t end = std::min(runs.size(), i + cfg.fan_in);
                std::vector<std::filesystem::path> group(runs.begin() + i, runs.begin() + end);
                if (group.size() == 1) {
                    next_level.push_back(group.front());
                    continue;
                }
                std::filesystem::path merged = new_run_path();
                std::ofstream out(merged, std::ios::binary | std::ios::trunc);
                if (!out) throw Error("cannot create temporary run file");
                merge(group, [&](std::string_view record) { write_framed(out, record); });
                out.flush();
                if (!out) throw Error("I/O error while writing merged run");
                for (const auto& path : group) std::filesystem::remove(path);
                next_level.push_back(merged);
            }
            runs = std::move(next_level);
        }
    }
};

ExternalStatementSorter::ExternalStatementSorter(const SortConfig& cfg)
    : impl_(std::make_unique<Impl>(cfg)) {}

ExternalStatementSorter::~ExternalStatementSorter() = default;

void ExternalStatementSorter::add(std::string record) {
    if (impl_->consumed) throw Error("sorter already consumed");
    impl_->buffer.push_back(std::move(record));
    impl_->total += 1;
    impl_->note_resident(impl_->buffer.size());
    if (impl_->buffer.size() >= impl_->cfg.max_in_memory_records) impl_->spill_buffer();
}

void ExternalStatementSorter::visit_sorted(const std::function<void(std::string_view)>& visit) {
    if (impl_->consumed) throw Error("sorter already consumed");
    impl_->consumed = true;
    if (impl_->runs.empty()) {
        std::sort(impl_->buffer.begin(), impl_->buffer.end(), record_less);
        for (const std::string& record : impl_->buffer) visit(record);
        return;
    }
    impl_->spill_buffer();
    impl_->reduce_runs();
    impl_->merge(impl_->runs, visit);
}

std::uint64_t ExternalStatementSorter::record_count() const { return impl_->total; }

std::size_t ExternalStatementSorter::peak_resident_records() const {
    return impl_->peak_resident;
}

LargeTransformResult transform_large_rdf(const std::filesystem::path& input,
                                         std::string_view base_uri, Module module,
                                         const SortConfig& cfg,
                                         std::optional<RdfFormat> format) {
    RdfFormat fmt = format_for(input, format);
    TransformPlan plan{std::string(base_uri), module};

    // Pass one: rewrite, spill, sort, hash. The sorted record stream is
    // kept in a temp file for the substitution pass.
    TempDir job_dir(cfg);
    std::filesystem::path sorted_path = job_dir.path() / "sorted";
    ArtifactCode code{module, {}};
    {
        ExternalStatementSorter sorter(cfg);
        {
            std::ifstream in(input, std::ios::binary);
            if (!in) throw Error("cannot open file: " + input.string());
            auto source = make_source(in, fmt);
            while (auto quad = source->next()) {
                PreprocessedQuad p = plan.rewrite(*quad);
                if (module == Module::RB && p.graph != plan.placeholder_uri()) {
                    throw Error("module RB requires all statements to be in the single graph "
                                "named by the trusty URI");
                }
                sorter.add(serialize_statement(p));
            }
        }
        std::ofstream sorted_out(sorted_path, std::ios::binary | std::ios::trunc);
        if (!sorted_out) throw Error("cannot create temporary file");
        Sha256 hasher;
        sorter.visit_sorted([&](std::string_view record) {
            hasher.update(record);
            write_framed(sorted_out, record);
        });
        sorted_out.flush();
        if (!sorted_out) throw Error("I/O error while writing temporary file");
        code.data_part = encode_hash_tail(hasher.finish());
    }

    // Pass two: substitute the final code into the sorted records and
    // write the trusty file.
    std::string code_str = code.str();
    std::string name = input.filename().string();
    std::string stem = input.has_extension() ? input.stem().string() : name;
    std::filesystem::path target =
        input.parent_path() / (append_artifact_code(stem, code) + ".nq");
    {
        std::ofstream out(target, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write file: " + target.string());
        FramedReader reader(sorted_path);
        std::string record;
        while (reader.next(record)) {
            RdfQuad quad = materialize_quad(parse_serialized_statement(record), code_str);
            std::string line = to_nquads_line(quad);
            out.write(line.data(), static_cast<std::streamsize>(line.size()));
        }
        out.flush();
        if (!out) throw Error("I/O error while writing: " + target.string());
    }
    return {target, append_artifact_code(base_uri, code), code};
}

namespace {

struct RdfCheckSetup {
    ArtifactCode expected;
    std::string code_str;
    std::string expected_graph; // RB only, preprocessed form
    bool is_rb = false;
};

std::string leftover_note(bool code_left_over) {
    return code_left_over
               ? "artifact code still occurs outside IRI positions after preprocessing"
               : std::string();
}

std::optional<CheckReport> validate_candidate(const TrustyUriCandidate& candidate,
                                              RdfCheckSetup& setup) {
    if (candidate.classification != Classification::Potential || !candidate.code) {
        return CheckReport::error("not a potential trusty URI: " + candidate.diagnostic);
    }
    if (candidate.code->module != Module::RA && candidate.code->module != Module::RB) {
        return CheckReport::error("not an RDF module code", *candidate.code);
    }
    setup.expected = *candidate.code;
    setup.code_str = setup.expected.str();
    setup.is_rb = setup.expected.module == Module::RB;
    if (setup.is_rb) {
        setup.expected_graph =
            replace_all(candidate.uri, setup.code_str, std::string_view(&kPlaceholderChar, 1));
    }
    return std::nullopt;
}

} // namespace

CheckReport check_large_rdf(const std::filesystem::path& input,
                            const TrustyUriCandidate& candidate, const SortConfig& cfg,
                            std::optional<RdfFormat> format) {
    RdfCheckSetup setup;
    if (auto bad = validate_candidate(candidate, setup)) return *bad;

    try {
        ExternalStatementSorter sorter(cfg);
        bool code_left_over = false;
        {
            std::ifstream in(input, std::ios::binary);
            if (!in) return CheckReport::error("cannot open file: " + input.string(),
                                               setup.expected);
            auto source = make_source(in, format_for(input, format));
            while (auto quad = source->next()) {
                if (quad->subject.is_blank() || quad->object.is_blank()) {
                    return CheckReport::error(
                        "blank nodes are not supported and have to be skolemized",
                        setup.expected);
                }
                PreprocessedQuad p = preprocess_quad(*quad, setup.code_str);
                if (setup.is_rb && p.graph != setup.expected_graph) {
                    return CheckReport::invalid(
                        setup.expected, std::nullopt,
                        "module RB requires all statements to be in the single graph "
                        "named by the trusty URI");
                }
                std::string record = serialize_statement(p);
                if (record.find(setup.code_str) != std::string::npos) code_left_over = true;
                sorter.add(std::move(record));
            }
        }
        Sha256 hasher;
        sorter.visit_sorted([&](std::string_view record) { hasher.update(record); });
        ArtifactCode computed{setup.expected.module, encode_hash_tail(hasher.finish())};
        std::string note = leftover_note(code_left_over);
        if (computed == setup.expected) {
            CheckReport report = CheckReport::valid(setup.expected, computed);
            report.message = note;
            return report;
        }
        return CheckReport::invalid(setup.expected, computed,
                                    note.empty() ? "dataset hash does not match" : note);
    } catch (const Error& e) {
        return CheckReport::error(e.what(), setup.expected);
    }
}

CheckReport check_sorted_rdf(const std::filesystem::path& input,
                             const TrustyUriCandidate& candidate,
                             std::optional<RdfFormat> format) {
    RdfCheckSetup setup;
    if (auto bad = validate_candidate(candidate, setup)) return *bad;

    try {
        std::ifstream in(input, std::ios::binary);
        if (!in) return CheckReport::error("cannot open file: " + input.string(), setup.expected);
        auto source = make_source(in, format_for(input, format));
        Sha256 hasher;
        std::string previous;
        std::uint64_t index = 0;
        bool code_left_over = false;
        while (auto quad = source->next()) {
            ++index;
            if (quad->subject.is_blank() || quad->object.is_blank()) {
                return CheckReport::error(
                    "blank nodes are not supported and have to be skolemized", setup.expected);
            }
            PreprocessedQuad p = preprocess_quad(*quad, setup.code_str);
            if (setup.is_rb && p.graph != setup.expected_graph) {
                return CheckReport::invalid(
                    setup.expected, std::nullopt,
                    "module RB requires all statements to be in the single graph "
                    "named by the trusty URI");
            }
            std::string record = serialize_statement(p);
            if (!previous.empty() && compare_serialized_statements(previous, record) > 0) {
                return CheckReport::error(
                    "statements are not in canonical order (statement " +
                        std::to_string(index) + ")",
                    setup.expected);
            }
            if (record.find(setup.code_str) != std::string::npos) code_left_over = true;
            hasher.update(record);
            previous = std::move(record);
        }
        ArtifactCode computed{setup.expected.module, encode_hash_tail(hasher.finish())};
        std::string note = leftover_note(code_left_over);
        if (computed == setup.expected) {
            CheckReport report = CheckReport::valid(setup.expected, computed);
            report.message = note;
            return report;
        }
        return CheckReport::invalid(setup.expected, computed,
                                    note.empty() ? "dataset hash does not match" : note);
    } catch (const Error& e) {
        return CheckReport::error(e.what(), setup.expected);
    }
}

} // namespace trustyuri
