#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

#include "md192/bits.hpp"

namespace md192 {

template <std::size_t N>
struct Digest {
    std::array<std::uint8_t, N> bytes{};

    std::string hex() const { return to_hex(bytes); }

    friend bool operator==(const Digest&, const Digest&) = default;
};

using Digest192 = Digest<24>;  // H0..H5, big-endian
using Digest160 = Digest<20>;  // SHA-1

namespace detail {

// The appended length field is 64 bits, so a message must stay below 2^64
// bits. Returns the new bit count, throws std::length_error past the limit.
constexpr std::uint64_t checked_add_message_bits(std::uint64_t total_bits, std::uint64_t added_bytes) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    if (added_bytes > (kMax - total_bits) / 8) {
        throw std::length_error("message exceeds 2^64 - 1 bits");
    }
    return total_bits + 8 * added_bytes;
}

// Streaming Merkle-Damgard engine shared by the MD-192 and SHA-1 hashers:
// byte buffering, the 64-bit bit counter, and MD strengthening (0x80 marker,
// zero fill, big-endian length). Traits supply the chaining state, the
// compression function and the digest serialization.
//
// A context is single-owner mutable state; it may be moved across threads but
// not shared for concurrent update. finalize() can be called exactly once.
template <class Traits>
class MdEngine {
public:
    using State = typename Traits::State;
    static constexpr std::size_t kDigestBytes = Traits::kDigestBytes;

    MdEngine() noexcept : state_(Traits::iv()) {}

    MdEngine& update(std::span<const std::uint8_t> data) {
        if (finalized_) throw std::logic_error("update() after finalize()");
        total_bits_ = checked_add_message_bits(total_bits_, data.size());

        std::size_t pos = 0;
        if (fill_ > 0) {
            const std::size_t take = std::min(data.size(), kBlockBytes - fill_);
            std::memcpy(buffer_.data() + fill_, data.data(), take);
            fill_ += take;
            pos += take;
            if (fill_ < kBlockBytes) return *this;
            Traits::compress(state_, buffer_.data());
            fill_ = 0;
        }
        while (data.size() - pos >= kBlockBytes) {
            Traits::compress(state_, data.data() + pos);
            pos += kBlockBytes;
        }
        if (pos < data.size()) {
            fill_ = data.size() - pos;
            std::memcpy(buffer_.data(), data.data() + pos, fill_);
        }
        return *this;
    }

    MdEngine& update(std::string_view text) { return update(as_bytes(text)); }

    Digest<kDigestBytes> finalize() {
        if (finalized_) throw std::logic_error("finalize() called twice");
        finalized_ = true;

        buffer_[fill_++] = 0x80;
        if (fill_ > kBlockBytes - 8) {
            std::memset(buffer_.data() + fill_, 0, kBlockBytes - fill_);
            Traits::compress(state_, buffer_.data());
            fill_ = 0;
        }
        std::memset(buffer_.data() + fill_, 0, kBlockBytes - 8 - fill_);
        store_be64(total_bits_, buffer_.data() + kBlockBytes - 8);
        Traits::compress(state_, buffer_.data());

        Digest<kDigestBytes> out;
        Traits::serialize(state_, out.bytes.data());
        return out;
    }

    std::uint64_t absorbed_bits() const noexcept { return total_bits_; }

private:
    static constexpr std::size_t kBlockBytes = 64;

    State state_;
    std::array<std::uint8_t, kBlockBytes> buffer_{};
    std::size_t fill_ = 0;
    std::uint64_t total_bits_ = 0;
    bool finalized_ = false;
};

}  // namespace detail
}  // namespace md192
