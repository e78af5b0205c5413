#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <memory>
#include <string_view>

namespace trustyuri {

using Sha256Digest = std::array<std::uint8_t, 32>;

/// Incremental SHA-256. Feed any number of chunks, then call finish() once.
class Sha256 {
public:
    Sha256();
    ~Sha256();
    Sha256(Sha256&&) noexcept;
    Sha256& operator=(Sha256&&) noexcept;
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;

    void update(const void* data, std::size_t len);
    void update(std::string_view data) { update(data.data(), data.size()); }

    /// Finalizes the digest. The hasher must not be used afterwards.
    Sha256Digest finish();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Digest of a whole byte string.
Sha256Digest sha256(std::string_view data);

/// Digest of a stream, read in fixed-size chunks. Returns the number of
/// bytes consumed through `byte_count` if non-null.
Sha256Digest sha256_stream(std::istream& in, std::uint64_t* byte_count = nullptr);

} // namespace trustyuri
