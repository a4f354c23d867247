// Path file formats.
//
//   CSV:    header line `rank,slab,row,col`, then one record per cell in
//           path order, LF line endings, ASCII decimal. Carries no extents.
//   JSON:   {"dims":[P,N,M], "order":"<label>", "cells":[[s,r,c],...]}.
//   Binary: magic "SFC3", version byte 0x01, P,N,M as little-endian u32,
//           then one s,r,c record of little-endian u32 per cell.
//
// Loading detects the format from the leading bytes. Files cut at a record
// boundary load as incomplete paths for verification to describe.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "core.hpp"

namespace sfc3 {

enum class PathFormat { Csv, Json, Binary };

const char* to_string(PathFormat fmt);
std::optional<PathFormat> path_format_from_string(std::string_view name);

void save_path(const CurvePath& path, std::string_view order_label, PathFormat fmt,
               std::ostream& out);
void save_path_file(const CurvePath& path, std::string_view order_label, PathFormat fmt,
                    const std::string& filename);

struct LoadedPath {
  CurvePath path;
  std::string order_label;  // JSON "order" field when present, else empty
};

// CSV carries no extents, so `dims` is required for it; for JSON and binary
// an explicit `dims` overrides the file header. The filename "-" means
// standard output (save) or standard input (load).
LoadedPath load_path(std::istream& in, const std::optional<Dims3>& dims);
LoadedPath load_path_file(const std::string& filename, const std::optional<Dims3>& dims);

}  // namespace sfc3
