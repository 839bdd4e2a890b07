#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "md192/engine.hpp"
#include "md192/md192.hpp"

namespace md192 {

// Five-register SHA-1 chaining value.
struct Sha1State {
    Word a = 0, b = 0, c = 0, d = 0, e = 0;

    friend bool operator==(const Sha1State&, const Sha1State&) = default;
};

inline constexpr Sha1State kSha1Iv{0x67452301u, 0xEFCDAB89u, 0x98BADCFEu,
                                   0x10325476u, 0xC3D2E1F0u};

inline constexpr std::array<Word, 4> kSha1RoundK{0x5a827999u, 0x6ed9eba1u,
                                                 0x8f1bbcdcu, 0xca62c1d6u};

// W[t] = rotl(W[t-3]^W[t-8]^W[t-14]^W[t-16], 1) for t >= 16. With
// rotate = false the rotation is dropped, which is the SHA-0 style schedule
// (used by the expansion-weight study; the full SHA-0 hash is not provided).
Schedule sha1_expand(const Block& block, bool rotate = true);

// Standard 80-step SHA-1 update with Davies-Meyer feed-forward.
Sha1State sha1_compress(const Sha1State& state, const Block& block);

namespace detail {

struct Sha1Traits {
    using State = Sha1State;
    static constexpr std::size_t kDigestBytes = 20;
    static State iv() noexcept { return kSha1Iv; }
    static void compress(State& state, const std::uint8_t* block64);
    static void serialize(const State& state, std::uint8_t* out);
};

}  // namespace detail

// Streaming SHA-1 hasher, the externally verifiable baseline.
class Sha1 : public detail::MdEngine<detail::Sha1Traits> {};

Digest160 sha1_digest(std::span<const std::uint8_t> message);
Digest160 sha1_digest(std::string_view message);

}  // namespace md192
