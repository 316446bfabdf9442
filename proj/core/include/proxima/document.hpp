#pragma once

#include "proxima/fixed_sets.hpp"
#include "proxima/proximity.hpp"
#include "proxima/space.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace proxima {

inline constexpr std::string_view kDocumentHeader = "proxima-space";
inline constexpr std::string_view kDocumentVersion = "1";

struct ProbeConfig {
    std::string name;
    /// Extractor spec, e.g. "beta0" or "beta0,cell_count".
    std::string extractor;
};

/// One space with its probes, maps and an optional default complex.
struct SpaceDocument {
    std::string version = std::string(kDocumentVersion);
    CWSpace space;
    std::vector<ProbeConfig> probes;
    std::vector<DpcMap> maps;
    std::string default_complex;
};

/// Throws ParseError with SyntaxError, DanglingReference, DuplicateId or InvalidCell.
SpaceDocument parse_document(std::string_view text);

/// Canonical form: records grouped by kind and sorted by id or name.
std::string serialize(const SpaceDocument& doc);

SpaceDocument load_document(const std::filesystem::path& path);

/// Document for a built-in fixture, with the standard probes and maps.
SpaceDocument fixture_document(std::string_view name);

/// A probe declared in the document, else a built-in extractor spec.
ProbeFunction resolve_probe(const SpaceDocument& doc, std::string_view name);

/// A map declared in the document, else a built-in map kind.
DpcMap resolve_map(const SpaceDocument& doc, std::string_view name);

} // namespace proxima
