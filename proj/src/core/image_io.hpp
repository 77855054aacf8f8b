#pragma once

#include <string>

#include "frame.hpp"

namespace tinycam {

// Binary PGM (P5), single 8-bit plane.
Plane read_pgm(const std::string& path);
void write_pgm(const Plane& plane, const std::string& path);

// Binary PPM (P6), 8-bit RGB.
RgbFrame read_ppm(const std::string& path);
void write_ppm(const RgbFrame& frame, const std::string& path);

// Raw Bayer container: 16-byte header (magic "BYR12o", width u16-LE,
// height u16-LE, black_level u16-LE, 4 pad bytes) then little-endian u16
// samples, row-major.
RawFrame read_bayer12(const std::string& path);
void write_bayer12(const RawFrame& raw, const std::string& path);

}  // namespace tinycam
