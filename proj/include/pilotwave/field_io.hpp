#pragma once

#include <filesystem>

#include "pilotwave/grid.hpp"

namespace pilotwave {

/// Flat binary layout: magic "PWF1", int32 dims, int32 boundary, per axis
/// (double x_min, double x_max, int64 n), double time, then interleaved
/// re/im doubles in row-major order.
void write_binary(const ComplexField& f, const std::filesystem::path& path);
ComplexField read_binary(const std::filesystem::path& path);

/// CSV: one row per grid point — coordinates, re, im.
void write_csv(const ComplexField& f, const std::filesystem::path& path);
void write_csv(const RealField& f, const std::filesystem::path& path);

}  // namespace pilotwave
