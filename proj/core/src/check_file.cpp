#include "trustyuri/check_file.hpp"

#include "trustyuri/errors.hpp"
#include "trustyuri/module_fa.hpp"
#include "trustyuri/module_r.hpp"
#include "trustyuri/nquads.hpp"
#include "trustyuri/trig.hpp"

#include <fstream>

namespace trustyuri {

namespace {

RdfFormat format_for(const std::filesystem::path& path, std::optional<RdfFormat> override) {
    if (override) return *override;
    return path.extension() == ".trig" ? RdfFormat::TriG : RdfFormat::NQuads;
}

// Recovers the full candidate URI for an RB check from the first
// statement's graph, when that graph ends in the expected code.
std::optional<std::string> first_graph(const std::filesystem::path& path, RdfFormat fmt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    try {
        if (fmt == RdfFormat::TriG) {
            TrigParser parser(in);
            if (auto quad = parser.next()) return quad->graph;
        } else {
            NQuadsParser parser(in);
            if (auto quad = parser.next()) return quad->graph;
        }
    } catch (const Error&) {
        // Parse problems surface as Error verdicts in the actual check.
    }
    return std::nullopt;
}

TrustyUriCandidate rdf_candidate(const std::filesystem::path& path, RdfFormat fmt,
                                 TrustyUriCandidate name_candidate) {
    if (name_candidate.code->module == Module::RB) {
        if (auto graph = first_graph(path, fmt);
            graph && graph->ends_with(name_candidate.code->str())) {
            name_candidate.uri = *graph;
        }
    }
    return name_candidate;
}

} // namespace

TrustyUriCandidate candidate_from_filename(const std::filesystem::path& path) {
    std::string stripped = strip_extension(path.filename().string());
    return extract_artifact_code(stripped);
}

CheckReport check_file(const std::filesystem::path& path, std::optional<RdfFormat> format) {
    TrustyUriCandidate candidate;
    try {
        candidate = candidate_from_filename(path);
    } catch (const Error& e) {
        return CheckReport::error(e.what());
    }
    if (candidate.code->module == Module::FA) {
        return check_file_fa(path, *candidate.code);
    }
    RdfFormat fmt = format_for(path, format);
    QuadDocument doc;
    try {
        std::ifstream in(path, std::ios::binary);
        if (!in) return CheckReport::error("cannot open file: " + path.string(),
                                           *candidate.code);
        doc = fmt == RdfFormat::TriG ? parse_trig(in) : parse_nquads(in);
    } catch (const Error& e) {
        return CheckReport::error(e.what(), *candidate.code);
    }
    return check_rdf(doc, rdf_candidate(path, fmt, std::move(candidate)));
}

CheckReport check_file_large(const std::filesystem::path& path, const SortConfig& cfg,
                             std::optional<RdfFormat> format) {
    TrustyUriCandidate candidate;
    try {
        candidate = candidate_from_filename(path);
    } catch (const Error& e) {
        return CheckReport::error(e.what());
    }
    if (candidate.code->module == Module::FA) {
        return check_file_fa(path, *candidate.code);
    }
    RdfFormat fmt = format_for(path, format);
    return check_large_rdf(path, rdf_candidate(path, fmt, std::move(candidate)), cfg, fmt);
}

CheckReport check_file_sorted(const std::filesystem::path& path,
                              std::optional<RdfFormat> format) {
    TrustyUriCandidate candidate;
    try {
        candidate = candidate_from_filename(path);
    } catch (const Error& e) {
        return CheckReport::error(e.what());
    }
    if (candidate.code->module == Module::FA) {
        return CheckReport::error("module FA names byte content, not sorted RDF",
                                  *candidate.code);
    }
    RdfFormat fmt = format_for(path, format);
    return check_sorted_rdf(path, rdf_candidate(path, fmt, std::move(candidate)), fmt);
}

} // namespace trustyuri
