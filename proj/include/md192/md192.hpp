#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "md192/bits.hpp"
#include "md192/engine.hpp"

namespace md192 {

// One 512-bit message block parsed as sixteen big-endian words.
struct Block {
    std::array<Word, 16> words{};

    friend bool operator==(const Block&, const Block&) = default;
};

// The eighty expanded schedule words W0..W79.
struct Schedule {
    std::array<Word, 80> w{};

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Six-register chaining value (A..F), 192 bits.
struct ChainState {
    Word a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

    friend bool operator==(const ChainState&, const ChainState&) = default;
};

inline constexpr ChainState kIv{0x01234567u, 0x89ABCDEFu, 0xFEDCBA98u,
                                0x76543210u, 0xC3D2E1F0u, 0x1F83D9ABu};

// Per-round step constants, rounds of twenty steps each. The second and
// third values deliberately differ from SHA-1's 0x6ed9eba1 / 0x8f1bbcdc.
inline constexpr std::array<Word, 4> kRoundK{0x5a827999u, 0x6ed6eba1u,
                                             0x8fabbcdeu, 0xca62c1d6u};

// Round Boolean function: IF for round 0, MAJ for round 2, XOR otherwise.
constexpr Word round_f1(int round_index, Word b, Word c, Word d) noexcept {
    switch (round_index) {
        case 0: return (b & c) | (~b & d);
        case 2: return (b & c) | (c & d) | (d & b);
        default: return b ^ c ^ d;
    }
}

// Byte-level MD strengthening: message || 0x80 || zero fill || 64-bit
// big-endian bit length, padded out to a multiple of 64 bytes.
std::vector<std::uint8_t> pad_bytes(std::span<const std::uint8_t> message);

// pad_bytes parsed into 512-bit blocks.
std::vector<Block> pad_message(std::span<const std::uint8_t> message);

// Exactly 64 bytes in, big-endian word assembly. Throws std::invalid_argument
// on any other size.
Block parse_block(std::span<const std::uint8_t> bytes);

// Message expansion:
//   W[t] = M[t]                                                    0  <= t <= 15
//   W[t] = W[t-3]^W[t-8]^W[t-14]^W[t-16] ^ rotl(X, r)              16 <= t <= 79
// where X = W[t-1]^W[t-2]^W[t-15], with the W[t-20] tap joining X once it
// exists (t >= 20), and r = 1 below t = 64, 13 from there on.
Schedule expand_schedule(const Block& block);

// 80-step compression plus feed-forward. Each step, from the old registers:
//   P = rotl(A,5) + F1(B,C,D) + E + K[t/20] + W[t]
//   Q = P + F
//   F<-P  E<-rotl(D,15)  D<-C  C<-rotl(B,30)  B<-A  A<-Q
// The constant table is a parameter so vector sets for variant constants can
// be checked without touching the core.
ChainState compress_block(const ChainState& state, const Block& block,
                          const std::array<Word, 4>& round_k = kRoundK);

// Per-step instrumentation for the algebraic checks.
struct StepRecord {
    ChainState before;  // registers entering the step
    Word w = 0;         // schedule word W[t]
    Word k = 0;         // round constant
    Word p = 0;
    Word q = 0;
};

struct CompressTrace {
    std::array<StepRecord, 80> steps{};
    ChainState raw;  // registers after step 79, before feed-forward
};

ChainState compress_block_traced(const ChainState& state, const Block& block,
                                 CompressTrace& trace,
                                 const std::array<Word, 4>& round_k = kRoundK);

namespace detail {

struct Md192Traits {
    using State = ChainState;
    static constexpr std::size_t kDigestBytes = 24;
    static State iv() noexcept { return kIv; }
    static void compress(State& state, const std::uint8_t* block64);
    static void serialize(const State& state, std::uint8_t* out);
};

}  // namespace detail

// Streaming MD-192 hasher.
//
//   Digest192 d = Md192().update("ab").update("c").finalize();
class Md192 : public detail::MdEngine<detail::Md192Traits> {};

Digest192 md192_digest(std::span<const std::uint8_t> message);
Digest192 md192_digest(std::string_view message);

}  // namespace md192
