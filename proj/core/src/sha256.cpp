#include "trustyuri/sha256.hpp"

#include "trustyuri/errors.hpp"

#include <openssl/evp.h>

namespace trustyuri {

struct Sha256::Impl {
    EVP_MD_CTX* ctx = nullptr;
};

Sha256::Sha256() : impl_(std::make_unique<Impl>()) {
    impl_->ctx = EVP_MD_CTX_new();
    if (!impl_->ctx || EVP_DigestInit_ex(impl_->ctx, EVP_sha256(), nullptr) != 1) {
        throw Error("failed to initialize SHA-256 context");
    }
}

Sha256::~Sha256() {
    if (impl_ && impl_->ctx) EVP_MD_CTX_free(impl_->ctx);
}

Sha256::Sha256(Sha256&&) noexcept = default;
Sha256& Sha256::operator=(Sha256&&) noexcept = default;

void Sha256::update(const void* data, std::size_t len) {
    if (EVP_DigestUpdate(impl_->ctx, data, len) != 1) {
        throw Error("SHA-256 update failed");
    }
}

Sha256Digest Sha256::finish() {
    Sha256Digest digest{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(impl_->ctx, digest.data(), &len) != 1 || len != digest.size()) {
        throw Error("SHA-256 finalization failed");
    }
    return digest;
}

Sha256Digest sha256(std::string_view data) {
    Sha256 h;
    h.update(data);
    return h.finish();
}

Sha256Digest sha256_stream(std::istream& in, std::uint64_t* byte_count) {
    Sha256 h;
    char buf[1 << 16];
    std::uint64_t total = 0;
    while (in.good()) {
        in.read(buf, sizeof buf);
        std::streamsize got = in.gcount();
        if (got > 0) {
            h.update(buf, static_cast<std::size_t>(got));
            total += static_cast<std::uint64_t>(got);
        }
    }
    if (in.bad()) throw Error("I/O error while hashing stream");
    if (byte_count) *byte_count = total;
    return h.finish();
}

} // namespace trustyuri
