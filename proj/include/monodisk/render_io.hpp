#pragma once

// Tiling documents (JSON, schema_version 1) and SVG drawings of tilings and
// of the admissible groove region.

#include <string>
#include <string_view>

#include "monodisk/families.hpp"

namespace monodisk {

constexpr int kSchemaVersion = 1;

/// JSON document for a tiling, newline-terminated. Numbers are written in
/// the shortest form that parses back to the same double.
std::string save_tiling(const Tiling& t);

/// Parses a document. Throws SchemaViolation (message starts with the JSON
/// pointer of the offending value) or VersionUnsupported.
Tiling load_tiling(std::string_view text);

/// File variants; throw Io when the file cannot be read or written.
void save_tiling_file(const Tiling& t, const std::string& path);
Tiling load_tiling_file(const std::string& path);

enum class SvgStyle { StrokeOnly, OrientationColored };

/// One <path> per tile, y axis pointing up, the disk plus a 5% margin in
/// the viewBox.
std::string to_svg(const Tiling& t, SvgStyle style, int size_px = 600);

/// p, q, both vertex chains, the two bounding rays at q, the radius-R arc
/// about p and the longest symmetric groove. Throws InvalidN.
std::string locus_svg(int n, int size_px = 600);

/// Writes text to a file; throws Io.
void write_text_file(const std::string& path, std::string_view text);
std::string read_text_file(const std::string& path);

}  // namespace monodisk
