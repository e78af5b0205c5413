#pragma once

//! Out-of-memory processing: an external merge sort over serialized
//! statement records plus streaming transform/check variants whose
//! results are identical to the in-memory ones. Temporary files live in
//! a per-job directory that is removed even on error paths.

#include "trustyuri/check_report.hpp"
#include "trustyuri/codec.hpp"
#include "trustyuri/module_r.hpp"
#include "trustyuri/rdf.hpp"

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace trustyuri {

/// Environment variable overriding where temporary sort files go.
inline constexpr const char* kTempDirEnvVar = "TRUSTYURI_TMPDIR";

struct SortConfig {
    /// Records buffered in memory before a sorted run is spilled to disk.
    std::size_t max_in_memory_records = 1'000'000;
    /// Maximum number of runs merged in one pass.
    unsigned fan_in = 16;
    /// Root for temporary files; empty means $TRUSTYURI_TMPDIR or the
    /// system temp directory.
    std::filesystem::path temp_dir;
};

/// Resolved temp root per the SortConfig rules.
std::filesystem::path resolve_temp_root(const SortConfig& cfg);

/// Sorts serialized statement records (see serialize_statement) of
/// arbitrary volume using sorted runs on disk and fan-in merging. The
/// merge comparator is compare_serialized_statements, so the visit order
/// equals the compare_quads order of the originating quads.
class ExternalStatementSorter {
public:
    explicit ExternalStatementSorter(const SortConfig& cfg);
    ~ExternalStatementSorter();

    ExternalStatementSorter(const ExternalStatementSorter&) = delete;
    ExternalStatementSorter& operator=(const ExternalStatementSorter&) = delete;

    void add(std::string record);

    /// Sorts everything added so far and visits the records in order.
    /// May be called once.
    void visit_sorted(const std::function<void(std::string_view)>& visit);

    std::uint64_t record_count() const;
    /// Peak number of records held in memory at once; instrumentation
    /// for the memory-bound guarantee.
    std::size_t peak_resident_records() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct LargeTransformResult {
    std::filesystem::path path;
    std::string trusty_uri;
    ArtifactCode code;
};

/// Same contract and byte-identical output as transform_rdf_to_file, but
/// two streaming passes over the input with an external sort in between:
/// pass one rewrites, spills and hashes; pass two substitutes the final
/// code while writing the sorted trusty file.
LargeTransformResult transform_large_rdf(const std::filesystem::path& input,
                                         std::string_view base_uri, Module module,
                                         const SortConfig& cfg = {},
                                         std::optional<RdfFormat> format = std::nullopt);

/// Verdict identical to check_rdf on the same content; memory bounded by
/// the sort configuration.
CheckReport check_large_rdf(const std::filesystem::path& input,
                            const TrustyUriCandidate& candidate, const SortConfig& cfg = {},
                            std::optional<RdfFormat> format = std::nullopt);

/// Single streaming pass over an already canonically sorted file:
/// verifies each preprocessed statement is >= its predecessor while
/// hashing. An out-of-order statement is an Error (with its position),
/// not merely Invalid.
CheckReport check_sorted_rdf(const std::filesystem::path& input,
                             const TrustyUriCandidate& candidate,
                             std::optional<RdfFormat> format = std::nullopt);

} // namespace trustyuri
