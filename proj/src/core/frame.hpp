#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "error.hpp"

namespace tinycam {

enum class BayerPattern : uint8_t { RGGB = 0, BGGR = 1, GRBG = 2, GBRG = 3 };
enum class ChromaMode : uint8_t { Yuv420 = 0, Yuv444 = 1 };

// Single 8-bit sample plane, row-major.
struct Plane {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data;

    Plane() = default;
    Plane(int w, int h, uint8_t fill = 0)
        : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

    uint8_t at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
    uint8_t& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }

    bool same_shape(const Plane& o) const { return width == o.width && height == o.height; }
    bool operator==(const Plane& o) const = default;
};

// Sensor output: one Bayer-mosaic plane of up-to-16-bit samples.
struct RawFrame {
    int width = 0;
    int height = 0;
    int bit_depth = 12;
    BayerPattern pattern = BayerPattern::RGGB;
    uint16_t black_level = 0;
    std::vector<uint16_t> data;  // row-major samples

    RawFrame() = default;
    RawFrame(int w, int h, int depth = 12, BayerPattern p = BayerPattern::RGGB)
        : width(w), height(h), bit_depth(depth), pattern(p),
          data(static_cast<size_t>(w) * h, 0) {}

    uint16_t at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
    uint16_t& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }

    // Serialized payload size; 3,686,400 bits for a 12-bit VGA frame.
    uint64_t serialized_bits() const {
        return static_cast<uint64_t>(width) * height * bit_depth;
    }
};

struct RgbFrame {
    int width = 0;
    int height = 0;
    Plane r, g, b;

    RgbFrame() = default;
    RgbFrame(int w, int h) : width(w), height(h), r(w, h), g(w, h), b(w, h) {}

    bool operator==(const RgbFrame& o) const = default;
};

struct YuvFrame {
    int width = 0;
    int height = 0;
    ChromaMode chroma = ChromaMode::Yuv420;
    Plane y, u, v;

    YuvFrame() = default;
    YuvFrame(int w, int h, ChromaMode c) : width(w), height(h), chroma(c), y(w, h) {
        const int cw = (c == ChromaMode::Yuv420) ? w / 2 : w;
        const int ch = (c == ChromaMode::Yuv420) ? h / 2 : h;
        u = Plane(cw, ch, 128);
        v = Plane(cw, ch, 128);
    }

    bool operator==(const YuvFrame& o) const = default;
};

// 32x20 near-pixel monitoring frame produced by the sensor.
struct SubFrame {
    static constexpr int kWidth = 32;
    static constexpr int kHeight = 20;
    std::array<uint8_t, kWidth * kHeight> data{};

    uint8_t at(int x, int y) const { return data[static_cast<size_t>(y) * kWidth + x]; }
    uint8_t& at(int x, int y) { return data[static_cast<size_t>(y) * kWidth + x]; }
};

// 16x16-pixel tile plus co-sited chroma; the unit of compression and change
// detection. For 4:2:0 the chroma blocks are 8x8, for 4:4:4 they are 16x16.
struct MacroBlock {
    static constexpr int kSize = 16;

    int block_x = 0;
    int block_y = 0;
    ChromaMode chroma = ChromaMode::Yuv420;
    std::array<uint8_t, kSize * kSize> luma{};
    std::vector<uint8_t> cb, cr;

    int chroma_size() const { return chroma == ChromaMode::Yuv420 ? 8 : 16; }

    bool operator==(const MacroBlock& o) const = default;
};

struct McbGrid {
    int cols = 0;  // 40 for VGA
    int rows = 0;  // 30 for VGA
    int count() const { return cols * rows; }
};

McbGrid mcb_grid(int width, int height);

// Saturating black-level subtraction; dims and depth unchanged.
RawFrame black_level_correct(const RawFrame& raw);

// Bilinear demosaic to 8-bit RGB. Natively sampled channels pass through as
// sample >> (bit_depth - 8); neighbor taps clamp at the frame edge.
RgbFrame debayer(const RawFrame& raw);

// BT.601 full-range, integer rounded. 4:2:0 chroma is the rounded mean of
// each 2x2 block; yuv_to_rgb upsamples 4:2:0 by replication.
YuvFrame rgb_to_yuv(const RgbFrame& frame, ChromaMode chroma);
RgbFrame yuv_to_rgb(const YuvFrame& frame);

// 640x480 luma -> 32x20 by 20x24 block averaging, rounded to nearest.
SubFrame subsample(const Plane& luma);

// Lossless raster-order tiling; untile_mcbs is the exact inverse.
std::vector<MacroBlock> tile_mcbs(const YuvFrame& frame);
YuvFrame untile_mcbs(const std::vector<MacroBlock>& blocks, int width, int height,
                     ChromaMode chroma);

// Extracts a single macro-block without tiling the whole frame.
MacroBlock extract_mcb(const YuvFrame& frame, int block_x, int block_y);

}  // namespace tinycam
