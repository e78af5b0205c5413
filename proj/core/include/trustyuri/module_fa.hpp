#pragma once

//! Module FA: trusty URIs over the raw byte content of files. The file
//! name and any other metadata do not contribute to the hash.

#include "trustyuri/check_report.hpp"
#include "trustyuri/codec.hpp"

#include <cstdint>
#include <filesystem>
#include <istream>

namespace trustyuri {

struct FileDigestResult {
    ArtifactCode code; // module FA
    std::uint64_t byte_count = 0;
};

/// SHA-256 over the stream, in fixed-size chunks; never buffers the
/// whole input.
ArtifactCode hash_bytes(std::istream& in);

FileDigestResult hash_file_fa(const std::filesystem::path& path);

/// Recomputes the FA code of `path` and compares it to `expected`.
/// An unreadable file yields an Error verdict rather than throwing.
CheckReport check_file_fa(const std::filesystem::path& path, const ArtifactCode& expected);

/// Renames "name.ext" to "name.<FAcode>.ext" (the code goes before the
/// last extension; earlier extensions stay in the stem). The bytes are
/// untouched. Throws if the name already carries a potential artifact
/// code or the target name exists.
std::filesystem::path process_file(const std::filesystem::path& path);

} // namespace trustyuri
