#pragma once

//! Trusty-URI grammar: the modified Base64 alphabet, artifact codes,
//! candidate classification, trusty-file naming and ni-URI conversion.
//!
//! An artifact code is the trailing Base64 run of a trusty URI: a 2-char
//! module identifier followed by a 43-char hash tail (SHA-256 plus two
//! zero bits, 258 bits = 43 x 6). Example:
//!
//!     http://example.org/r1.RA5AbXdpz5DcaYXCh9l3eI9ruBosiL5XDU3rxBbBaUO70
//!                           ^module^~~~~~~~~~~~~ hash part ~~~~~~~~~~~~~^

#include "trustyuri/sha256.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace trustyuri {

/// URL- and filename-safe Base64 alphabet: A-Z a-z 0-9 - _ mapping to 0..63.
/// No other characters belong to it.
bool is_base64_char(char c);

/// Value 0..63 of a Base64 character. Precondition: is_base64_char(c).
int base64_value(char c);

/// Character for a value 0..63.
char base64_char(int value);

/// Defined modules. FA covers raw byte content, RA covers RDF datasets
/// with any number of graphs, RB covers single-graph RDF datasets.
enum class Module { FA, RA, RB };

std::string_view module_id(Module m);
std::optional<Module> module_from_id(std::string_view id);

/// Hash-tail length shared by all defined modules.
inline constexpr std::size_t kHashTailLength = 43;
/// Artifact-code length shared by all defined modules (module id + tail).
inline constexpr std::size_t kArtifactCodeLength = 45;
/// Minimum trailing Base64 run for a URI to qualify as potentially trusty.
inline constexpr std::size_t kMinTailLength = 25;

/// Module identifier plus data part. For the defined modules the data part
/// is exactly the 43-character hash part.
struct ArtifactCode {
    Module module;
    std::string data_part;

    std::string_view hash_part() const { return data_part; }

    /// Full code string, e.g. "RA5AbX...UO70".
    std::string str() const { return std::string(module_id(module)) + data_part; }

    bool operator==(const ArtifactCode&) const = default;
};

/// Encodes a 32-byte digest as 43 Base64 characters: the digest bits
/// followed by two zero bits, grouped into 6-bit units, most significant
/// bit first. Throws on any other input length.
std::string encode_hash_tail(const Sha256Digest& digest);
std::string encode_hash_tail(const void* digest, std::size_t len);

enum class Classification {
    NotPotential, ///< no plausible artifact code in the URI
    Potential,    ///< syntactically a trusty URI; content not yet checked
    /// Hash matched against content. Classification from a URI string
    /// alone never reaches this state; a Valid CheckReport establishes it.
    Verified,
};

/// A URI together with its classification and, when potential, its code.
struct TrustyUriCandidate {
    std::string uri;
    Classification classification = Classification::NotPotential;
    std::optional<ArtifactCode> code;
    /// Why classification failed: distinguishes "no tail" from
    /// "unknown module" from "length inconsistent with module".
    std::string diagnostic;
};

/// Finds the longest trailing Base64 run of `uri` and classifies it.
/// Potential requires at least 25 trailing Base64 characters, a defined
/// module identifier and a data part length matching that module (43).
/// A URI consisting entirely of Base64 characters is classified by the
/// same length and module rules, with the run covering the whole string.
TrustyUriCandidate extract_artifact_code(std::string_view uri);

/// Removes trailing dot-separated file extensions (at most 3, each 1-10
/// letters or digits) until the result ends in a potential artifact code.
/// Idempotent. Throws NotTrustyReference if no artifact code is found.
std::string strip_extension(std::string_view uri_or_filename);

/// Appends a code to a base URI, inserting a '.' delimiter iff the base
/// ends in a Base64 character (after '/' or '#' none is needed).
std::string append_artifact_code(std::string_view base_uri, const ArtifactCode& code);

/// Same delimiter rule for a raw suffix; used when the code position is
/// still held by a placeholder.
std::string append_with_delimiter(std::string_view base_uri, std::string_view suffix);

/// Renders a potential trusty URI as an RFC 6920 ni-URI:
/// ni://<authority>/sha-256;<hash part>[?module=<XX>]. The hash part is
/// carried over unchanged. Throws if `trusty_uri` is not potential.
std::string to_ni_uri(std::string_view trusty_uri,
                      std::optional<std::string_view> authority = std::nullopt,
                      bool include_module_param = false);

/// Swaps the module identifier, keeping the hash part. Only RB -> RA is
/// defined to preserve verification; every other pair throws
/// NotTransferable.
ArtifactCode transfer_module(const ArtifactCode& code, Module target);

} // namespace trustyuri
