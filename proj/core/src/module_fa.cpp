#include "trustyuri/module_fa.hpp"

#include "trustyuri/errors.hpp"
#include "trustyuri/sha256.hpp"

#include <fstream>

namespace trustyuri {

ArtifactCode hash_bytes(std::istream& in) {
    return ArtifactCode{Module::FA, encode_hash_tail(sha256_stream(in))};
}

FileDigestResult hash_file_fa(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path.string());
    std::uint64_t count = 0;
    Sha256Digest digest = sha256_stream(in, &count);
    return {ArtifactCode{Module::FA, encode_hash_tail(digest)}, count};
}

CheckReport check_file_fa(const std::filesystem::path& path, const ArtifactCode& expected) {
    if (expected.module != Module::FA) {
        return CheckReport::error("expected code is not a module FA code", expected);
    }
    FileDigestResult result;
    try {
        result = hash_file_fa(path);
    } catch (const Error& e) {
        return CheckReport::error(e.what(), expected);
    }
    if (result.code == expected) return CheckReport::valid(expected, result.code);
    return CheckReport::invalid(expected, result.code, "byte content hash does not match");
}

std::filesystem::path process_file(const std::filesystem::path& path) {
    std::string name = path.filename().string();
    std::string stem = name;
    std::string extension;
    if (auto dot = name.rfind('.'); dot != std::string::npos && dot > 0) {
        stem = name.substr(0, dot);
        extension = name.substr(dot); // includes '.'
    }
    if (extract_artifact_code(stem).classification == Classification::Potential) {
        throw Error("file name already carries an artifact code: " + name);
    }

    ArtifactCode code = hash_file_fa(path).code;
    std::filesystem::path target =
        path.parent_path() / (append_artifact_code(stem, code) + extension);
    if (std::filesystem::exists(target)) {
        throw Error("target already exists: " + target.string());
    }
    std::filesystem::rename(path, target);
    return target;
}

} // namespace trustyuri
