#include "frame.hpp"

#include <algorithm>
#include <cmath>

namespace tinycam {

namespace {

enum Channel { R = 0, G = 1, B = 2 };

// Channel sampled at mosaic site (x, y) for the given pattern.
Channel site_channel(BayerPattern p, int x, int y) {
    const int row = y & 1, col = x & 1;
    switch (p) {
        case BayerPattern::RGGB: return row == 0 ? (col == 0 ? R : G) : (col == 0 ? G : B);
        case BayerPattern::BGGR: return row == 0 ? (col == 0 ? B : G) : (col == 0 ? G : R);
        case BayerPattern::GRBG: return row == 0 ? (col == 0 ? G : R) : (col == 0 ? B : G);
        case BayerPattern::GBRG: return row == 0 ? (col == 0 ? G : B) : (col == 0 ? R : G);
    }
    return G;
}

uint16_t clamped_sample(const RawFrame& f, int x, int y) {
    x = std::clamp(x, 0, f.width - 1);
    y = std::clamp(y, 0, f.height - 1);
    return f.at(x, y);
}

uint8_t round_u8(double v) {
    long r = std::lround(v);
    return static_cast<uint8_t>(std::clamp(r, 0L, 255L));
}

}  // namespace

McbGrid mcb_grid(int width, int height) {
    if (width % MacroBlock::kSize != 0 || height % MacroBlock::kSize != 0)
        fail(ErrorCode::Invalid, "frame dims must be divisible by 16 for MCB tiling");
    return {width / MacroBlock::kSize, height / MacroBlock::kSize};
}

RawFrame black_level_correct(const RawFrame& raw) {
    if (raw.black_level >= (1u << raw.bit_depth))
        fail(ErrorCode::Invalid, "black level exceeds sample range");
    RawFrame out = raw;
    for (auto& s : out.data) s = s > raw.black_level ? static_cast<uint16_t>(s - raw.black_level) : 0;
    return out;
}

RgbFrame debayer(const RawFrame& raw) {
    if (raw.width % 2 != 0 || raw.height % 2 != 0)
        fail(ErrorCode::Invalid, "debayer requires even dimensions");
    const int shift = raw.bit_depth - 8;

    // Rounded mean of the taps in `offs`, evaluated in the raw sample domain,
    // then reduced to 8 bits.
    auto interp = [&](int x, int y, std::initializer_list<std::pair<int, int>> offs) {
        unsigned sum = 0;
        for (auto [dx, dy] : offs) sum += clamped_sample(raw, x + dx, y + dy);
        unsigned n = static_cast<unsigned>(offs.size());
        unsigned v = (sum + n / 2) / n;
        return static_cast<uint8_t>(v >> shift);
    };

    static constexpr std::initializer_list<std::pair<int, int>> kCross = {
        {-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    static constexpr std::initializer_list<std::pair<int, int>> kDiag = {
        {-1, -1}, {1, -1}, {-1, 1}, {1, 1}};
    static constexpr std::initializer_list<std::pair<int, int>> kHoriz = {{-1, 0}, {1, 0}};
    static constexpr std::initializer_list<std::pair<int, int>> kVert = {{0, -1}, {0, 1}};

    RgbFrame out(raw.width, raw.height);
    for (int y = 0; y < raw.height; ++y) {
        for (int x = 0; x < raw.width; ++x) {
            const Channel native = site_channel(raw.pattern, x, y);
            const uint8_t self = static_cast<uint8_t>(raw.at(x, y) >> shift);
            uint8_t r, g, b;
            if (native == G) {
                g = self;
                // Horizontal neighbors carry the channel of the adjacent column.
                const Channel horiz = site_channel(raw.pattern, x + 1, y);
                const uint8_t h = interp(x, y, kHoriz);
                const uint8_t v = interp(x, y, kVert);
                r = horiz == R ? h : v;
                b = horiz == B ? h : v;
            } else {
                g = interp(x, y, kCross);
                const uint8_t d = interp(x, y, kDiag);
                if (native == R) {
                    r = self;
                    b = d;
                } else {
                    b = self;
                    r = d;
                }
            }
            out.r.at(x, y) = r;
            out.g.at(x, y) = g;
            out.b.at(x, y) = b;
        }
    }
    return out;
}

YuvFrame rgb_to_yuv(const RgbFrame& frame, ChromaMode chroma) {
    if (chroma == ChromaMode::Yuv420 && (frame.width % 2 != 0 || frame.height % 2 != 0))
        fail(ErrorCode::Invalid, "4:2:0 requires even dimensions");

    YuvFrame out(frame.width, frame.height, chroma);
    Plane fu(frame.width, frame.height), fv(frame.width, frame.height);
    for (int y = 0; y < frame.height; ++y) {
        for (int x = 0; x < frame.width; ++x) {
            const double r = frame.r.at(x, y), g = frame.g.at(x, y), b = frame.b.at(x, y);
            out.y.at(x, y) = round_u8(0.299 * r + 0.587 * g + 0.114 * b);
            fu.at(x, y) = round_u8(128.0 - 0.168736 * r - 0.331264 * g + 0.5 * b);
            fv.at(x, y) = round_u8(128.0 + 0.5 * r - 0.418688 * g - 0.081312 * b);
        }
    }
    if (chroma == ChromaMode::Yuv444) {
        out.u = std::move(fu);
        out.v = std::move(fv);
    } else {
        for (int y = 0; y < frame.height / 2; ++y) {
            for (int x = 0; x < frame.width / 2; ++x) {
                auto mean4 = [&](const Plane& p) {
                    unsigned s = p.at(2 * x, 2 * y) + p.at(2 * x + 1, 2 * y) +
                                 p.at(2 * x, 2 * y + 1) + p.at(2 * x + 1, 2 * y + 1);
                    return static_cast<uint8_t>((s + 2) / 4);
                };
                out.u.at(x, y) = mean4(fu);
                out.v.at(x, y) = mean4(fv);
            }
        }
    }
    return out;
}

RgbFrame yuv_to_rgb(const YuvFrame& frame) {
    RgbFrame out(frame.width, frame.height);
    const bool sub = frame.chroma == ChromaMode::Yuv420;
    for (int y = 0; y < frame.height; ++y) {
        for (int x = 0; x < frame.width; ++x) {
            const double Y = frame.y.at(x, y);
            const double U = frame.u.at(sub ? x / 2 : x, sub ? y / 2 : y) - 128.0;
            const double V = frame.v.at(sub ? x / 2 : x, sub ? y / 2 : y) - 128.0;
            out.r.at(x, y) = round_u8(Y + 1.402 * V);
            out.g.at(x, y) = round_u8(Y - 0.344136 * U - 0.714136 * V);
            out.b.at(x, y) = round_u8(Y + 1.772 * U);
        }
    }
    return out;
}

SubFrame subsample(const Plane& luma) {
    if (luma.width != 640 || luma.height != 480)
        fail(ErrorCode::Invalid, "subsample expects a 640x480 luma plane");
    constexpr int bw = 640 / SubFrame::kWidth;   // 20
    constexpr int bh = 480 / SubFrame::kHeight;  // 24
    constexpr unsigned n = bw * bh;              // 480 samples per cell

    SubFrame out;
    for (int cy = 0; cy < SubFrame::kHeight; ++cy) {
        for (int cx = 0; cx < SubFrame::kWidth; ++cx) {
            unsigned sum = 0;
            for (int y = cy * bh; y < (cy + 1) * bh; ++y)
                for (int x = cx * bw; x < (cx + 1) * bw; ++x) sum += luma.at(x, y);
            out.at(cx, cy) = static_cast<uint8_t>((sum + n / 2) / n);
        }
    }
    return out;
}

MacroBlock extract_mcb(const YuvFrame& frame, int block_x, int block_y) {
    const McbGrid grid = mcb_grid(frame.width, frame.height);
    if (block_x < 0 || block_x >= grid.cols || block_y < 0 || block_y >= grid.rows)
        fail(ErrorCode::Invalid, "macro-block coordinates outside grid");

    MacroBlock mcb;
    mcb.block_x = block_x;
    mcb.block_y = block_y;
    mcb.chroma = frame.chroma;
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x)
            mcb.luma[static_cast<size_t>(y) * 16 + x] = frame.y.at(block_x * 16 + x, block_y * 16 + y);

    const int cs = mcb.chroma_size();
    mcb.cb.resize(static_cast<size_t>(cs) * cs);
    mcb.cr.resize(static_cast<size_t>(cs) * cs);
    for (int y = 0; y < cs; ++y) {
        for (int x = 0; x < cs; ++x) {
            mcb.cb[static_cast<size_t>(y) * cs + x] = frame.u.at(block_x * cs + x, block_y * cs + y);
            mcb.cr[static_cast<size_t>(y) * cs + x] = frame.v.at(block_x * cs + x, block_y * cs + y);
        }
    }
    return mcb;
}

std::vector<MacroBlock> tile_mcbs(const YuvFrame& frame) {
    const McbGrid grid = mcb_grid(frame.width, frame.height);
    std::vector<MacroBlock> blocks;
    blocks.reserve(static_cast<size_t>(grid.count()));
    for (int by = 0; by < grid.rows; ++by)
        for (int bx = 0; bx < grid.cols; ++bx) blocks.push_back(extract_mcb(frame, bx, by));
    return blocks;
}

YuvFrame untile_mcbs(const std::vector<MacroBlock>& blocks, int width, int height,
                     ChromaMode chroma) {
    const McbGrid grid = mcb_grid(width, height);
    if (blocks.size() != static_cast<size_t>(grid.count()))
        fail(ErrorCode::Inconsistent, "macro-block count does not cover the frame");

    YuvFrame out(width, height, chroma);
    for (const MacroBlock& mcb : blocks) {
        if (mcb.chroma != chroma) fail(ErrorCode::Inconsistent, "mixed chroma modes in tile set");
        for (int y = 0; y < 16; ++y)
            for (int x = 0; x < 16; ++x)
                out.y.at(mcb.block_x * 16 + x, mcb.block_y * 16 + y) =
                    mcb.luma[static_cast<size_t>(y) * 16 + x];
        const int cs = mcb.chroma_size();
        for (int y = 0; y < cs; ++y) {
            for (int x = 0; x < cs; ++x) {
                out.u.at(mcb.block_x * cs + x, mcb.block_y * cs + y) =
                    mcb.cb[static_cast<size_t>(y) * cs + x];
                out.v.at(mcb.block_x * cs + x, mcb.block_y * cs + y) =
                    mcb.cr[static_cast<size_t>(y) * cs + x];
            }
        }
    }
    return out;
}

}  // namespace tinycam
