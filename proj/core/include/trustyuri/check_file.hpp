#pragma once

//! Checking trusty files: the artifact code is taken from the file name
//! (extensions stripped) and dispatched to the module it names. Module
//! FA hashes the raw bytes; RA/RB parse the content (format chosen by
//! extension unless overridden) and verify the dataset hash. For RB the
//! candidate URI is recovered from the graph of the first statement,
//! since the file name carries only the tail of the original URI.

#include "trustyuri/check_report.hpp"
#include "trustyuri/codec.hpp"
#include "trustyuri/large.hpp"
#include "trustyuri/rdf.hpp"

#include <filesystem>
#include <optional>

namespace trustyuri {

/// Extracts the artifact code from a file name. Throws NotTrustyReference
/// if the name (after stripping extensions) carries no potential code.
TrustyUriCandidate candidate_from_filename(const std::filesystem::path& path);

/// In-memory check of one trusty file. Never throws; problems become
/// Error verdicts.
CheckReport check_file(const std::filesystem::path& path,
                       std::optional<RdfFormat> format = std::nullopt);

/// Like check_file but RDF content is checked via the external sort, so
/// memory stays bounded for files larger than RAM. FA files dispatch to
/// the (already streaming) byte check.
CheckReport check_file_large(const std::filesystem::path& path, const SortConfig& cfg = {},
                             std::optional<RdfFormat> format = std::nullopt);

/// Single-pass check for canonically sorted RDF trusty files.
CheckReport check_file_sorted(const std::filesystem::path& path,
                              std::optional<RdfFormat> format = std::nullopt);

} // namespace trustyuri
