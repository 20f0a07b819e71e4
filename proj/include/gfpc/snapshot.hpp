#pragma once

#include <filesystem>

#include "gfpc/field.hpp"

namespace gfpc {

/// Binary field snapshot, little-endian:
///   "GFPC" | version u32 | dim u32 | per-axis modes u32 | per-axis lo,hi f64
///   | M^d f64 values, row-major with x fastest.
inline constexpr std::uint32_t kSnapshotVersion = 1;

void write_snapshot(const std::filesystem::path& path, const Field& f);

/// Reconstructs the grid from the header. Throws on bad magic, unsupported
/// version, or truncated payload.
Field read_snapshot(const std::filesystem::path& path);

} // namespace gfpc
