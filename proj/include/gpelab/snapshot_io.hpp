#pragma once

#include <filesystem>
#include <string>

#include "gpelab/spectral.hpp"

namespace gpelab {

// Flat binary snapshot: dim, n (int64 LE), L (float64 LE), representation
// (int64 LE), then interleaved re/im float64 values in row-major order.
std::string encode_snapshot(const Field& f);
Field decode_snapshot(const std::string& bytes);

void write_snapshot(const std::filesystem::path& path, const Field& f);
Field read_snapshot(const std::filesystem::path& path);

/// Write to a sibling temporary file and rename into place.
void atomic_write(const std::filesystem::path& path, const std::string& contents);

}  // namespace gpelab
