#include "trustyuri/check_report.hpp"

namespace trustyuri {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Valid: return "valid";
        case Verdict::Invalid: return "invalid";
        case Verdict::Error: return "error";
    }
    return "error";
}

CheckReport CheckReport::valid(ArtifactCode expected, ArtifactCode computed) {
    return {Verdict::Valid, std::move(expected), std::move(computed), {}};
}

CheckReport CheckReport::invalid(ArtifactCode expected, std::optional<ArtifactCode> computed,
                                 std::string message) {
    return {Verdict::Invalid, std::move(expected), std::move(computed), std::move(message)};
}

CheckReport CheckReport::error(std::string message, std::optional<ArtifactCode> expected) {
    return {Verdict::Error, std::move(expected), std::nullopt, std::move(message)};
}

} // namespace trustyuri
