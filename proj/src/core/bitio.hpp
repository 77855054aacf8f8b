#pragma once

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace tinycam {

// MSB-first bit packing, shared by every codec in the project.
class BitWriter {
public:
    void put_bit(unsigned bit) {
        cur_ = static_cast<uint8_t>((cur_ << 1) | (bit & 1u));
        if (++ncur_ == 8) {
            bytes_.push_back(cur_);
            cur_ = 0;
            ncur_ = 0;
        }
        ++nbits_;
    }

    // Writes the low `count` bits of `value`, most significant first.
    void put_bits(uint64_t value, unsigned count) {
        for (unsigned i = count; i-- > 0;) put_bit(static_cast<unsigned>(value >> i) & 1u);
    }

    // Unsigned exp-Golomb.
    void put_ue(uint64_t value) {
        uint64_t v = value + 1;
        unsigned len = 0;
        for (uint64_t t = v; t > 1; t >>= 1) ++len;
        put_bits(0, len);
        put_bits(v, len + 1);
    }

    // Signed exp-Golomb: 0, 1, -1, 2, -2, ...
    void put_se(int64_t value) {
        uint64_t u = value > 0 ? static_cast<uint64_t>(value) * 2 - 1
                               : static_cast<uint64_t>(-value) * 2;
        put_ue(u);
    }

    uint64_t bit_count() const { return nbits_; }

    // Flushes with zero padding; the true length stays available via bit_count().
    std::vector<uint8_t> finish() {
        std::vector<uint8_t> out = bytes_;
        if (ncur_ > 0) out.push_back(static_cast<uint8_t>(cur_ << (8 - ncur_)));
        return out;
    }

private:
    std::vector<uint8_t> bytes_;
    uint8_t cur_ = 0;
    unsigned ncur_ = 0;
    uint64_t nbits_ = 0;
};

class BitReader {
public:
    BitReader(const uint8_t* data, uint64_t bit_length)
        : data_(data), bit_length_(bit_length) {}

    explicit BitReader(const std::vector<uint8_t>& data, uint64_t bit_length)
        : BitReader(data.data(), bit_length) {}

    unsigned get_bit() {
        if (pos_ >= bit_length_)
            fail(ErrorCode::Format, "bitstream truncated at bit " + std::to_string(pos_));
        unsigned bit = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
        ++pos_;
        return bit;
    }

    uint64_t get_bits(unsigned count) {
        uint64_t v = 0;
        for (unsigned i = 0; i < count; ++i) v = (v << 1) | get_bit();
        return v;
    }

    uint64_t get_ue() {
        unsigned zeros = 0;
        while (get_bit() == 0) {
            if (++zeros > 63) fail(ErrorCode::Format, "exp-Golomb prefix overflow");
        }
        uint64_t v = 1;
        for (unsigned i = 0; i < zeros; ++i) v = (v << 1) | get_bit();
        return v - 1;
    }

    int64_t get_se() {
        uint64_t u = get_ue();
        int64_t mag = static_cast<int64_t>((u + 1) >> 1);
        return (u & 1) ? mag : -mag;
    }

    uint64_t position() const { return pos_; }
    uint64_t remaining() const { return bit_length_ - pos_; }

    void seek(uint64_t bit_pos) {
        if (bit_pos > bit_length_) fail(ErrorCode::Format, "seek past end of bitstream");
        pos_ = bit_pos;
    }

private:
    const uint8_t* data_;
    uint64_t bit_length_;
    uint64_t pos_ = 0;
};

}  // namespace tinycam
