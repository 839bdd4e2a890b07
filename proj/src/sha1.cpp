#include "md192/sha1.hpp"

namespace md192 {

// GCC's -O3 vectorizer turns the distance-3 recurrence into gather/permute
// code several times slower than the scalar loop; keep this one scalar.
#if defined(__GNUC__) && !defined(__clang__)
__attribute__((optimize("no-tree-vectorize")))
#endif
Schedule sha1_expand(const Block& block, bool rotate) {
    Schedule s;
    for (std::size_t t = 0; t < 16; ++t) s.w[t] = block.words[t];
    if (rotate) {
        for (std::size_t t = 16; t < 80; ++t) {
            s.w[t] = rotl(s.w[t - 3] ^ s.w[t - 8] ^ s.w[t - 14] ^ s.w[t - 16], 1);
        }
    } else {
        for (std::size_t t = 16; t < 80; ++t) {
            s.w[t] = s.w[t - 3] ^ s.w[t - 8] ^ s.w[t - 14] ^ s.w[t - 16];
        }
    }
    return s;
}

Sha1State sha1_compress(const Sha1State& state, const Block& block) {
    const Schedule sched = sha1_expand(block);
    Word a = state.a, b = state.b, c = state.c, d = state.d, e = state.e;
    for (int t = 0; t < 80; ++t) {
        const Word tmp =
            rotl(a, 5) + round_f1(t / 20, b, c, d) + e + kSha1RoundK[t / 20] + sched.w[t];
        e = d;
        d = c;
        c = rotl(b, 30);
        b = a;
        a = tmp;
    }
    return Sha1State{state.a + a, state.b + b, state.c + c, state.d + d, state.e + e};
}

namespace detail {

void Sha1Traits::compress(State& state, const std::uint8_t* block64) {
    state = sha1_compress(state, parse_block(std::span(block64, 64)));
}

void Sha1Traits::serialize(const State& state, std::uint8_t* out) {
    store_be32(state.a, out);
    store_be32(state.b, out + 4);
    store_be32(state.c, out + 8);
    store_be32(state.d, out + 12);
    store_be32(state.e, out + 16);
}

}  // namespace detail

Digest160 sha1_digest(std::span<const std::uint8_t> message) {
    return Sha1().update(message).finalize();
}

Digest160 sha1_digest(std::string_view message) {
    return sha1_digest(as_bytes(message));
}

}  // namespace md192
