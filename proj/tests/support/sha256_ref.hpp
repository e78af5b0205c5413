#pragma once

// Self-contained SHA-256 written straight from FIPS 180-4, kept
// independent of the library's OpenSSL-backed hashing so tests have a
// second route to every digest.

#include <array>
#include <cstdint>
#include <string_view>

namespace testsupport {

std::array<std::uint8_t, 32> sha256_ref(std::string_view data);

} // namespace testsupport
