#pragma once

#include "trustyuri/codec.hpp"

#include <optional>
#include <string>

namespace trustyuri {

enum class Verdict {
    Valid,   ///< recomputed code equals the expected one
    Invalid, ///< content parsed but the hash does not match
    Error,   ///< content unreadable, unparseable or not checkable
};

std::string_view verdict_name(Verdict v);

/// Outcome of checking one artifact against an expected code.
struct CheckReport {
    Verdict verdict = Verdict::Error;
    std::optional<ArtifactCode> expected_code;
    std::optional<ArtifactCode> computed_code;
    std::string message;

    static CheckReport valid(ArtifactCode expected, ArtifactCode computed);
    static CheckReport invalid(ArtifactCode expected, std::optional<ArtifactCode> computed,
                               std::string message = {});
    static CheckReport error(std::string message,
                             std::optional<ArtifactCode> expected = std::nullopt);
};

} // namespace trustyuri
