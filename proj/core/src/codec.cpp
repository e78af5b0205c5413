#include "trustyuri/codec.hpp"

#include "trustyuri/errors.hpp"

#include <cctype>

namespace trustyuri {

namespace {

constexpr char kAlphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";

bool is_ascii_alnum(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

} // namespace

bool is_base64_char(char c) {
    return is_ascii_alnum(c) || c == '-' || c == '_';
}

int base64_value(char c) {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '-') return 62;
    if (c == '_') return 63;
    throw Error(std::string("not a Base64 character: '") + c + "'");
}

char base64_char(int value) {
    if (value < 0 || value > 63) throw Error("Base64 value out of range");
    return kAlphabet[value];
}

std::string_view module_id(Module m) {
    switch (m) {
        case Module::FA: return "FA";
        case Module::RA: return "RA";
        case Module::RB: return "RB";
    }
    throw Error("unknown module");
}

std::optional<Module> module_from_id(std::string_view id) {
    if (id == "FA") return Module::FA;
    if (id == "RA") return Module::RA;
    if (id == "RB") return Module::RB;
    return std::nullopt;
}

std::string encode_hash_tail(const void* digest, std::size_t len) {
    if (len != 32) throw Error("hash tail encoding expects a 32-byte digest");
    const auto* bytes = static_cast<const std::uint8_t*>(digest);
    std::string out;
    out.reserve(kHashTailLength);
    // 6-bit groups, most significant bit first. 256 digest bits plus two
    // appended zero bits make 258 bits = 43 characters.
    unsigned acc = 0;
    int bits = 0;
    for (std::size_t i = 0; i < len; ++i) {
        acc = (acc << 8) | bytes[i];
        bits += 8;
        while (bits >= 6) {
            out += kAlphabet[(acc >> (bits - 6)) & 0x3f];
            bits -= 6;
        }
    }
    // 4 bits remain; two zero bits complete the final group.
    out += kAlphabet[(acc << (6 - bits)) & 0x3f];
    return out;
}

std::string encode_hash_tail(const Sha256Digest& digest) {
    return encode_hash_tail(digest.data(), digest.size());
}

TrustyUriCandidate extract_artifact_code(std::string_view uri) {
    TrustyUriCandidate result;
    result.uri = std::string(uri);

    std::size_t run = 0;
    while (run < uri.size() && is_base64_char(uri[uri.size() - 1 - run])) ++run;

    if (run < kMinTailLength) {
        result.diagnostic = "no artifact code tail (fewer than 25 trailing Base64 characters)";
        return result;
    }
    std::string_view tail = uri.substr(uri.size() - run);
    auto module = module_from_id(tail.substr(0, 2));
    if (!module) {
        result.diagnostic = "unknown module identifier '" + std::string(tail.substr(0, 2)) + "'";
        return result;
    }
    if (tail.size() != kArtifactCodeLength) {
        result.diagnostic = "data part length inconsistent with module " +
                            std::string(tail.substr(0, 2));
        return result;
    }
    result.classification = Classification::Potential;
    result.code = ArtifactCode{*module, std::string(tail.substr(2))};
    return result;
}

std::string strip_extension(std::string_view uri_or_filename) {
    std::string current(uri_or_filename);
    for (int stripped = 0; stripped <= 3; ++stripped) {
        if (extract_artifact_code(current).classification == Classification::Potential) {
            return current;
        }
        // Strip one trailing ".ext" of 1-10 letters or digits.
        auto dot = current.rfind('.');
        if (dot == std::string::npos || stripped == 3) break;
        std::string_view ext = std::string_view(current).substr(dot + 1);
        if (ext.empty() || ext.size() > 10) break;
        bool alnum = true;
        for (char c : ext) alnum = alnum && is_ascii_alnum(c);
        if (!alnum) break;
        current.resize(dot);
    }
    throw NotTrustyReference("no artifact code found in '" + std::string(uri_or_filename) + "'");
}

std::string append_with_delimiter(std::string_view base_uri, std::string_view suffix) {
    std::string out(base_uri);
    if (!out.empty() && is_base64_char(out.back())) out += '.';
    out += suffix;
    return out;
}

std::string append_artifact_code(std::string_view base_uri, const ArtifactCode& code) {
    return append_with_delimiter(base_uri, code.str());
}

std::string to_ni_uri(std::string_view trusty_uri,
                      std::optional<std::string_view> authority,
                      bool include_module_param) {
    TrustyUriCandidate candidate = extract_artifact_code(trusty_uri);
    if (candidate.classification != Classification::Potential) {
        throw Error("not a potential trusty URI: " + candidate.diagnostic);
    }
    std::string out = "ni://";
    if (authority) out += *authority;
    out += "/sha-256;";
    out += candidate.code->hash_part();
    if (include_module_param) {
        out += "?module=";
        out += module_id(candidate.code->module);
    }
    return out;
}

ArtifactCode transfer_module(const ArtifactCode& code, Module target) {
    if (code.module == Module::RB && target == Module::RA) {
        return ArtifactCode{target, code.data_part};
    }
    throw NotTransferable("module " + std::string(module_id(code.module)) +
                          " is not transferable to " + std::string(module_id(target)));
}

} // namespace trustyuri
