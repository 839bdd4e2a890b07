#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace md192 {

// 32-bit register/schedule word. All addition wraps modulo 2^32.
using Word = std::uint32_t;

constexpr Word rotl(Word w, int n) noexcept {
    return std::rotl(w, n);
}

constexpr Word load_be32(const std::uint8_t* p) noexcept {
    return (Word{p[0]} << 24) | (Word{p[1]} << 16) | (Word{p[2]} << 8) | Word{p[3]};
}

constexpr void store_be32(Word w, std::uint8_t* p) noexcept {
    p[0] = static_cast<std::uint8_t>(w >> 24);
    p[1] = static_cast<std::uint8_t>(w >> 16);
    p[2] = static_cast<std::uint8_t>(w >> 8);
    p[3] = static_cast<std::uint8_t>(w);
}

constexpr void store_be64(std::uint64_t v, std::uint8_t* p) noexcept {
    store_be32(static_cast<Word>(v >> 32), p);
    store_be32(static_cast<Word>(v), p + 4);
}

// Lowercase hex, two characters per byte, no separators.
std::string to_hex(std::span<const std::uint8_t> bytes);

// Inverse of to_hex; accepts upper or lower case. Throws std::invalid_argument
// on odd length or non-hex characters.
std::vector<std::uint8_t> parse_hex(std::string_view hex);

inline std::span<const std::uint8_t> as_bytes(std::string_view s) noexcept {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace md192
