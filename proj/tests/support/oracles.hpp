#pragma once

// Independent oracles used across the test suites. Each one deliberately
// takes a different route than the implementation it checks:
//  - ref_hash_tail builds the 43-char tail via an explicit bit string,
//    with the digest coming from the FIPS-direct sha256_ref;
//  - decode_tail inverts the encoding bit by bit;
//  - key_order compares quads through a sort-key tuple instead of the
//    rule cascade.

#include "support/sha256_ref.hpp"
#include "trustyuri/module_r.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace testsupport {

// 43 Base64 characters from 32 digest bytes, via an intermediate
// bit-string: digest bits, two appended zero bits, 6-bit groups.
std::string ref_hash_tail(const std::array<std::uint8_t, 32>& digest);

// Tail of the SHA-256 of `data`, both computed by reference code.
std::string ref_tail_of(std::string_view data);

struct DecodedTail {
    std::array<std::uint8_t, 32> digest;
    bool final_two_bits_zero = false;
};

// Inverts a 43-character tail back into digest bytes.
DecodedTail decode_tail(std::string_view tail);

// Quad ordering via a lexicographic key tuple.
std::strong_ordering key_order(const trustyuri::PreprocessedQuad& a,
                               const trustyuri::PreprocessedQuad& b);

} // namespace testsupport
