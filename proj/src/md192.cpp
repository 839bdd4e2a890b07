#include "md192/md192.hpp"

#include <cassert>
#include <stdexcept>

namespace md192 {

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * bytes.size());
    for (std::uint8_t b : bytes) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0x0F]);
    }
    return out;
}

namespace {

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::vector<std::uint8_t> parse_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) {
        throw std::invalid_argument("hex string has odd length");
    }
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int hi = hex_nibble(hex[2 * i]);
        const int lo = hex_nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            throw std::invalid_argument("invalid hex character");
        }
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

std::vector<std::uint8_t> pad_bytes(std::span<const std::uint8_t> message) {
    const std::uint64_t total_bits =
        detail::checked_add_message_bits(0, message.size());

    std::vector<std::uint8_t> out(message.begin(), message.end());
    out.push_back(0x80);
    while (out.size() % 64 != 56) out.push_back(0x00);
    out.resize(out.size() + 8);
    store_be64(total_bits, out.data() + out.size() - 8);
    return out;
}

std::vector<Block> pad_message(std::span<const std::uint8_t> message) {
    const std::vector<std::uint8_t> padded = pad_bytes(message);
    std::vector<Block> blocks;
    blocks.reserve(padded.size() / 64);
    for (std::size_t off = 0; off < padded.size(); off += 64) {
        blocks.push_back(parse_block(std::span(padded).subspan(off, 64)));
    }
    return blocks;
}

Block parse_block(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != 64) {
        throw std::invalid_argument("block must be exactly 64 bytes");
    }
    Block block;
    for (std::size_t j = 0; j < 16; ++j) {
        block.words[j] = load_be32(bytes.data() + 4 * j);
    }
    return block;
}

Schedule expand_schedule(const Block& block) {
    Schedule s;
    for (std::size_t t = 0; t < 16; ++t) s.w[t] = block.words[t];
    for (std::size_t t = 16; t < 80; ++t) {
        Word x = s.w[t - 1] ^ s.w[t - 2] ^ s.w[t - 15];
        if (t >= 20) x ^= s.w[t - 20];
        const int r = t >= 64 ? 13 : 1;
        s.w[t] = s.w[t - 3] ^ s.w[t - 8] ^ s.w[t - 14] ^ s.w[t - 16] ^ rotl(x, r);
    }
    return s;
}

ChainState compress_block(const ChainState& state, const Block& block,
                          const std::array<Word, 4>& round_k) {
    const Schedule sched = expand_schedule(block);
    Word a = state.a, b = state.b, c = state.c, d = state.d, e = state.e, f = state.f;
    // Each right-hand side reads pre-step state: p and q are computed first,
    // and every register is consumed before it is overwritten.
    for (int t = 0; t < 80; ++t) {
        const Word fn = round_f1(t / 20, b, c, d);
        const Word p = rotl(a, 5) + fn + e + round_k[t / 20] + sched.w[t];
        const Word q = p + f;
        f = p;
        e = rotl(d, 15);
        d = c;
        c = rotl(b, 30);
        b = a;
        a = q;
    }
    return ChainState{state.a + a, state.b + b, state.c + c,
                      state.d + d, state.e + e, state.f + f};
}

ChainState compress_block_traced(const ChainState& state, const Block& block,
                                 CompressTrace& trace,
                                 const std::array<Word, 4>& round_k) {
    const Schedule sched = expand_schedule(block);
    Word a = state.a, b = state.b, c = state.c, d = state.d, e = state.e, f = state.f;
    for (int t = 0; t < 80; ++t) {
        StepRecord& rec = trace.steps[t];
        rec.before = ChainState{a, b, c, d, e, f};
        rec.w = sched.w[t];
        rec.k = round_k[t / 20];

        const Word fn = round_f1(t / 20, b, c, d);
        rec.p = rotl(a, 5) + fn + e + rec.k + rec.w;
        rec.q = rotl(a, 5) + fn + e + f + rec.k + rec.w;

        f = rec.p;
        e = rotl(d, 15);
        d = c;
        c = rotl(b, 30);
        b = a;
        a = rec.q;
    }
    trace.raw = ChainState{a, b, c, d, e, f};
    return ChainState{state.a + a, state.b + b, state.c + c,
                      state.d + d, state.e + e, state.f + f};
}

namespace detail {

void Md192Traits::compress(State& state, const std::uint8_t* block64) {
    state = compress_block(state, parse_block(std::span(block64, 64)));
}

void Md192Traits::serialize(const State& state, std::uint8_t* out) {
    store_be32(state.a, out);
    store_be32(state.b, out + 4);
    store_be32(state.c, out + 8);
    store_be32(state.d, out + 12);
    store_be32(state.e, out + 16);
    store_be32(state.f, out + 20);
}

}  // namespace detail

Digest192 md192_digest(std::span<const std::uint8_t> message) {
    return Md192().update(message).finalize();
}

Digest192 md192_digest(std::string_view message) {
    return md192_digest(as_bytes(message));
}

}  // namespace md192
