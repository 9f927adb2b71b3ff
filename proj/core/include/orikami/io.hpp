#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "orikami/analysis.hpp"
#include "orikami/construct.hpp"
#include "orikami/folding.hpp"
#include "orikami/knotid.hpp"

namespace orikami {

/// Value of the top-level "format" key in every document.
inline constexpr std::string_view kFormatTag = "orikami/1";

// Serialisers emit pretty-printed JSON with a trailing newline. Readers throw
// SchemaError naming the offending key; writing what was read reproduces the
// input byte for byte.

std::string to_json(const Folding& f);
std::string to_json(const PaperLoop& loop);
std::string to_json(const SpatialPolyline& poly);
std::string to_json(const StickDiagram& s);
std::string to_json(const CertificationReport& r);
std::string to_json(const ValidationReport& r);
std::string to_json(const PropernessVerdict& v);

Folding read_folding(std::string_view json);
PaperLoop read_loop(std::string_view json);
SpatialPolyline read_polyline(std::string_view json);
StickDiagram read_sticks(std::string_view json);
CertificationReport read_certification(std::string_view json);
ValidationReport read_validation(std::string_view json);
PropernessVerdict read_verdict(std::string_view json);

/// PD entry in the usual notation, e.g. "X[1,5,2,4]".
std::string pd_entry_to_string(const std::array<int, 4>& x);
std::array<int, 4> pd_entry_from_string(std::string_view s);

/// Throws DomainError when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace orikami
