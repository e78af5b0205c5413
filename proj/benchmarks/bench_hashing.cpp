#include <benchmark/benchmark.h>

#include "trustyuri/codec.hpp"
#include "trustyuri/sha256.hpp"

#include <random>
#include <string>

using namespace trustyuri;

static void BM_Sha256(benchmark::State& state) {
    std::string data(static_cast<std::size_t>(state.range(0)), 'x');
    for (auto _ : state) {
        Sha256Digest digest = sha256(data);
        benchmark::DoNotOptimize(digest);
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_Sha256)->Range(1 << 10, 1 << 24);

static void BM_EncodeHashTail(benchmark::State& state) {
    std::mt19937_64 rng(1);
    Sha256Digest digest;
    for (auto& byte : digest) byte = static_cast<std::uint8_t>(rng());
    for (auto _ : state) {
        std::string tail = encode_hash_tail(digest);
        benchmark::DoNotOptimize(tail);
    }
}
BENCHMARK(BM_EncodeHashTail);

static void BM_ExtractArtifactCode(benchmark::State& state) {
    std::string uri = "http://example.org/r1.RA5AbXdpz5DcaYXCh9l3eI9ruBosiL5XDU3rxBbBaUO70";
    for (auto _ : state) {
        TrustyUriCandidate candidate = extract_artifact_code(uri);
        benchmark::DoNotOptimize(candidate);
    }
}
BENCHMARK(BM_ExtractArtifactCode);
