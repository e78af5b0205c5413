#include <benchmark/benchmark.h>

#include "trustyuri/large.hpp"
#include "trustyuri/module_r.hpp"
#include "trustyuri/nquads.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

using namespace trustyuri;

namespace {

std::string synthetic_nquads(std::size_t n, std::uint64_t seed) {
    std::ostringstream out;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        out << "<http://x/s" << rng() % 1000 << "> <http://x/p" << rng() % 40 << "> ";
        if (rng() % 4 == 0) out << "\"value " << rng() % 10000 << "\"";
        else out << "<http://x/o" << rng() % 1000 << ">";
        if (rng() % 2) out << " <http://x/g" << rng() % 3 << ">";
        out << " .\n";
    }
    return out.str();
}

std::vector<PreprocessedQuad> preprocessed_fixture(std::size_t n) {
    QuadDocument doc = parse_nquads(synthetic_nquads(n, 99));
    std::vector<PreprocessedQuad> quads;
    quads.reserve(doc.quads.size());
    for (const RdfQuad& quad : doc.quads)
        quads.push_back(preprocess_quad(quad, "RA" + std::string(43, 'x')));
    return quads;
}

} // namespace

static void BM_ParseNQuads(benchmark::State& state) {
    std::string text = synthetic_nquads(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        QuadDocument doc = parse_nquads(text);
        benchmark::DoNotOptimize(doc);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ParseNQuads)->Arg(1000)->Arg(10000);

static void BM_CompareQuads(benchmark::State& state) {
    auto quads = preprocessed_fixture(1024);
    std::size_t i = 0;
    for (auto _ : state) {
        auto c = compare_quads(quads[i % quads.size()], quads[(i * 31 + 7) % quads.size()]);
        benchmark::DoNotOptimize(c);
        ++i;
    }
}
BENCHMARK(BM_CompareQuads);

static void BM_SortStatements(benchmark::State& state) {
    auto quads = preprocessed_fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        state.PauseTiming();
        auto copy = quads;
        state.ResumeTiming();
        std::sort(copy.begin(), copy.end(),
                  [](const auto& a, const auto& b) { return compare_quads(a, b) < 0; });
        benchmark::DoNotOptimize(copy);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SortStatements)->Arg(10000)->Arg(100000);

static void BM_TransformRdf(benchmark::State& state) {
    QuadDocument doc = parse_nquads(synthetic_nquads(static_cast<std::size_t>(state.range(0)), 5));
    for (auto _ : state) {
        TransformResult result = transform_rdf(doc, "http://x/base", Module::RA);
        benchmark::DoNotOptimize(result);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TransformRdf)->Arg(1000)->Arg(10000);

static void BM_ExternalSort(benchmark::State& state) {
    auto quads = preprocessed_fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        SortConfig cfg;
        cfg.max_in_memory_records = 1000; // force runs and merging
        ExternalStatementSorter sorter(cfg);
        for (const auto& quad : quads) sorter.add(serialize_statement(quad));
        std::uint64_t bytes = 0;
        sorter.visit_sorted([&](std::string_view record) { bytes += record.size(); });
        benchmark::DoNotOptimize(bytes);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ExternalSort)->Arg(20000);
