#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "md192/md192.hpp"
#include "vectors.hpp"

using namespace md192;

namespace {

Block random_block(std::mt19937_64& rng) {
    Block b;
    for (Word& w : b.words) w = static_cast<Word>(rng());
    return b;
}

ChainState random_state(std::mt19937_64& rng) {
    return ChainState{static_cast<Word>(rng()), static_cast<Word>(rng()),
                      static_cast<Word>(rng()), static_cast<Word>(rng()),
                      static_cast<Word>(rng()), static_cast<Word>(rng())};
}

// Straight-line re-statement of the expansion recurrence, with the three
// index regimes written out separately. Kept independent of
// expand_schedule() on purpose: it is the oracle the golden table below was
// produced with.
std::array<Word, 80> oracle_expand(const std::array<Word, 16>& m) {
    std::array<Word, 80> w{};
    for (int t = 0; t < 16; ++t) w[t] = m[t];
    for (int t = 16; t < 20; ++t) {
        w[t] = w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16] ^
               rotl(w[t - 1] ^ w[t - 2] ^ w[t - 15], 1);
    }
    for (int t = 20; t < 64; ++t) {
        w[t] = w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16] ^
               rotl(w[t - 1] ^ w[t - 2] ^ w[t - 15] ^ w[t - 20], 1);
    }
    for (int t = 64; t < 80; ++t) {
        w[t] = w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16] ^
               rotl(w[t - 1] ^ w[t - 2] ^ w[t - 15] ^ w[t - 20], 13);
    }
    return w;
}

// Expanded schedule for the padded "abc" block, produced once with
// oracle_expand and frozen.
constexpr std::array<Word, 80> kAbcSchedule{
    0x61626380, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000,
    0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000, 0x00000000,
    0x00000000, 0x00000000, 0x00000000, 0x00000018, 0x616263b0, 0xc2c4c750,
    0x474d49d9, 0x6a717ea3, 0x5a786ea4, 0x275f69d7, 0x903f7045, 0x34b85d99,
    0x0f3351de, 0x25edaf9b, 0x2648e8ca, 0x6208a1df, 0xf7155315, 0x2b2c6490,
    0x2b27dd11, 0xc3ba7da6, 0x5682d0e9, 0x02940254, 0x8408ea2d, 0xc06d6bc9,
    0x3b7758a6, 0xef00b206, 0x3b436a82, 0x8b9b38f1, 0x0e62fd62, 0x77eeef8f,
    0xc9b9efec, 0x7cdf4e3a, 0xb258101c, 0x4eb51d85, 0x080618aa, 0x1c9fbf2d,
    0x506c37ae, 0x7abf92c5, 0xe96bc52d, 0xd5ec458b, 0xc2d8746e, 0x9e83e039,
    0x4f5b47d7, 0x1d9c7eb7, 0x3589d98b, 0x238c810b, 0x2c24bc1a, 0xbed9e447,
    0xff5f8ca6, 0x9c50c103, 0xc5bab65d, 0x6e51c26d, 0x8e03c66a, 0xd2f008e9,
    0x5bb29f17, 0xd0222d7f, 0x4c935f59, 0xf01b55b0, 0x99646c71, 0x486a53ab,
    0x3ee21040, 0x35381951, 0xd5f3c34b, 0xc948783a, 0x17314a5f, 0x374ff29c,
    0x6343e83d, 0x24eb5fea,
};

}  // namespace

TEST_CASE("round boolean functions match the eight-row truth tables") {
    // Rows encoded bitwise: with b=1111000..., c=1100110..., d=1010101...
    // per byte, the selector outputs are the classic 0xCA / 0xE8 / 0x96.
    CHECK(round_f1(0, 0xF0F0F0F0, 0xCCCCCCCC, 0xAAAAAAAA) == 0xCACACACA);  // IF
    CHECK(round_f1(2, 0xF0F0F0F0, 0xCCCCCCCC, 0xAAAAAAAA) == 0xE8E8E8E8);  // MAJ
    CHECK(round_f1(1, 0xF0F0F0F0, 0xCCCCCCCC, 0xAAAAAAAA) == 0x96969696);  // XOR
    CHECK(round_f1(3, 0xF0F0F0F0, 0xCCCCCCCC, 0xAAAAAAAA) == 0x96969696);

    // The same eight rows one at a time, lifted to all-ones/all-zero words.
    for (unsigned row = 0; row < 8; ++row) {
        const Word b = (row & 4) ? ~Word{0} : 0;
        const Word c = (row & 2) ? ~Word{0} : 0;
        const Word d = (row & 1) ? ~Word{0} : 0;
        const Word expect_if = (row & 4) ? c : d;
        const Word expect_maj = (row == 3 || row >= 5) ? ~Word{0} : 0;
        const Word expect_xor = ((row ^ (row >> 1) ^ (row >> 2)) & 1) ? ~Word{0} : 0;
        CAPTURE(row);
        CHECK(round_f1(0, b, c, d) == expect_if);
        CHECK(round_f1(2, b, c, d) == expect_maj);
        CHECK(round_f1(1, b, c, d) == expect_xor);
        CHECK(round_f1(3, b, c, d) == expect_xor);
    }
}

TEST_CASE("round boolean function edge identities") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 32; ++i) {
        const Word c = static_cast<Word>(rng());
        const Word d = static_cast<Word>(rng());
        CHECK(round_f1(0, 0xFFFFFFFF, c, d) == c);  // IF with all-ones selector
        CHECK(round_f1(1, c, c, d) == d);           // x ^ x ^ d
        CHECK(round_f1(2, c, c, d) == c);           // majority of two equal inputs
    }
}

TEST_CASE("parse_block assembles big-endian words") {
    std::array<std::uint8_t, 64> bytes{};
    bytes[3] = 0x01;
    CHECK(parse_block(bytes).words[0] == 0x00000001);
    CHECK(parse_block(bytes).words[1] == 0);

    bytes = {};
    bytes[0] = 0x61;
    bytes[1] = 0x62;
    bytes[2] = 0x63;
    bytes[3] = 0x80;
    CHECK(parse_block(bytes).words[0] == 0x61626380);

    std::array<std::uint8_t, 64> ones;
    ones.fill(0xFF);
    for (Word w : parse_block(ones).words) CHECK(w == 0xFFFFFFFF);
}

TEST_CASE("parse_block rejects wrong sizes") {
    const std::vector<std::uint8_t> short_input(63, 0);
    const std::vector<std::uint8_t> long_input(65, 0);
    CHECK_THROWS_AS(parse_block(short_input), std::invalid_argument);
    CHECK_THROWS_AS(parse_block(long_input), std::invalid_argument);
}

TEST_CASE("padding: fixed examples") {
    SUBCASE("empty message is one block: 0x80 then zeros") {
        const auto padded = pad_bytes({});
        REQUIRE(padded.size() == 64);
        CHECK(padded[0] == 0x80);
        for (std::size_t i = 1; i < 64; ++i) CHECK(padded[i] == 0);
    }
    SUBCASE("abc fits one block with bit length 24") {
        const auto padded = pad_bytes(as_bytes("abc"));
        REQUIRE(padded.size() == 64);
        CHECK(padded[0] == 'a');
        CHECK(padded[1] == 'b');
        CHECK(padded[2] == 'c');
        CHECK(padded[3] == 0x80);
        for (std::size_t i = 4; i < 63; ++i) CHECK(padded[i] == 0);
        CHECK(padded[63] == 24);
    }
    SUBCASE("56-byte message forces a second block") {
        const std::string msg(56, 'x');
        const auto padded = pad_bytes(as_bytes(msg));
        REQUIRE(padded.size() == 128);
        CHECK(padded[56] == 0x80);
        for (std::size_t i = 57; i < 120; ++i) CHECK(padded[i] == 0);  // 63 zero bytes
        CHECK(padded[126] == 0x01);  // 448 bits, big-endian
        CHECK(padded[127] == 0xC0);

        const auto blocks = pad_message(as_bytes(msg));
        REQUIRE(blocks.size() == 2);
        CHECK(blocks[1].words[15] == 448);
    }
}

TEST_CASE("padding invariants over all lengths 0..1024") {
    // Independent byte-level brute check of the strengthening rule.
    std::mt19937_64 rng(11);
    for (std::size_t len = 0; len <= 1024; ++len) {
        std::vector<std::uint8_t> msg(len);
        for (auto& byte : msg) byte = static_cast<std::uint8_t>(rng());
        const std::vector<std::uint8_t> padded = pad_bytes(msg);

        CAPTURE(len);
        REQUIRE(padded.size() % 64 == 0);
        REQUIRE(padded.size() >= len + 9);  // marker + length: at least 65 bits added
        REQUIRE(padded.size() <= len + 72);
        CHECK(std::equal(msg.begin(), msg.end(), padded.begin()));
        CHECK(padded[len] == 0x80);
        bool zeros = true;
        for (std::size_t i = len + 1; i + 8 < padded.size(); ++i) {
            zeros = zeros && padded[i] == 0;
        }
        CHECK(zeros);
        std::uint64_t encoded = 0;
        for (std::size_t i = padded.size() - 8; i < padded.size(); ++i) {
            encoded = (encoded << 8) | padded[i];
        }
        CHECK(encoded == 8 * static_cast<std::uint64_t>(len));
        // length field position: everything before it is ≡ 448 mod 512 bits
        CHECK((padded.size() - 8) % 64 == 56);
    }
}

TEST_CASE("expand_schedule: fixed cases and frozen golden table") {
    SUBCASE("all-zero block expands to all zeros") {
        const Schedule s = expand_schedule(Block{});
        for (Word w : s.w) CHECK(w == 0);
    }
    SUBCASE("single high bit in word 0 reaches w16 unrotated") {
        Block b;
        b.words[0] = 0x80000000;
        const Schedule s = expand_schedule(b);
        CHECK(s.w[16] == 0x80000000);  // only the t-16 tap is nonzero at t=16
    }
    SUBCASE("abc block matches the straight-line oracle and the golden table") {
        const Block abc = pad_message(as_bytes("abc")).at(0);
        const Schedule s = expand_schedule(abc);
        const std::array<Word, 80> oracle = oracle_expand(abc.words);
        for (int t = 0; t < 80; ++t) {
            CAPTURE(t);
            CHECK(s.w[t] == kAbcSchedule[t]);
            CHECK(oracle[t] == kAbcSchedule[t]);
        }
    }
}

TEST_CASE("expand_schedule agrees with the oracle on random blocks") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const Block b = random_block(rng);
        const Schedule s = expand_schedule(b);
        const std::array<Word, 80> oracle = oracle_expand(b.words);
        for (int t = 0; t < 80; ++t) REQUIRE(s.w[t] == oracle[t]);
    }
}

TEST_CASE("expansion is GF(2)-linear") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const Block b1 = random_block(rng);
        const Block b2 = random_block(rng);
        Block x;
        for (int j = 0; j < 16; ++j) x.words[j] = b1.words[j] ^ b2.words[j];
        const Schedule s1 = expand_schedule(b1);
        const Schedule s2 = expand_schedule(b2);
        const Schedule sx = expand_schedule(x);
        for (int t = 0; t < 80; ++t) REQUIRE(sx.w[t] == (s1.w[t] ^ s2.w[t]));
    }
}

TEST_CASE("compression: first step matches hand arithmetic") {
    const Block abc = pad_message(as_bytes("abc")).at(0);
    CompressTrace trace;
    compress_block_traced(kIv, abc, trace);

    // Written out from the step formulas with the initial registers.
    const Word if_bcd = (kIv.b & kIv.c) | (~kIv.b & kIv.d);
    const Word p = rotl(kIv.a, 5) + if_bcd + kIv.e + 0x5a827999u + 0x61626380u;
    CHECK(trace.steps[0].p == p);
    CHECK(trace.steps[0].q == p + kIv.f);
    CHECK(trace.steps[0].w == 0x61626380);
    CHECK(trace.steps[1].before.a == p + kIv.f);   // A <- Q
    CHECK(trace.steps[1].before.f == p);           // F <- P
    CHECK(trace.steps[1].before.b == kIv.a);       // B <- A
    CHECK(trace.steps[1].before.c == rotl(kIv.b, 30));
    CHECK(trace.steps[1].before.d == kIv.c);
    CHECK(trace.steps[1].before.e == rotl(kIv.d, 15));
}

TEST_CASE("compression: step algebra and feed-forward on random inputs") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 25; ++i) {
        const ChainState state = random_state(rng);
        const Block block = random_block(rng);
        CompressTrace trace;
        const ChainState out = compress_block_traced(state, block, trace);

        for (int t = 0; t < 80; ++t) {
            const StepRecord& rec = trace.steps[t];
            REQUIRE(Word(rec.q - rec.p) == rec.before.f);  // Q - P = old F (mod 2^32)
            const ChainState& next =
                t < 79 ? trace.steps[t + 1].before : trace.raw;
            REQUIRE(next.b == rec.before.a);
            REQUIRE(next.c == rotl(rec.before.b, 30));
            REQUIRE(next.d == rec.before.c);
            REQUIRE(next.e == rotl(rec.before.d, 15));
            REQUIRE(next.f == rec.p);
            REQUIRE(next.a == rec.q);
        }

        // Feed-forward: output minus input state recovers the raw registers.
        CHECK(Word(out.a - state.a) == trace.raw.a);
        CHECK(Word(out.b - state.b) == trace.raw.b);
        CHECK(Word(out.c - state.c) == trace.raw.c);
        CHECK(Word(out.d - state.d) == trace.raw.d);
        CHECK(Word(out.e - state.e) == trace.raw.e);
        CHECK(Word(out.f - state.f) == trace.raw.f);

        // Traced and plain compression are the same function.
        CHECK(compress_block(state, block) == out);
    }
}

TEST_CASE("compression accepts a variant constant table") {
    const Block abc = pad_message(as_bytes("abc")).at(0);
    const std::array<Word, 4> sha1_constants{0x5a827999u, 0x6ed9eba1u, 0x8f1bbcdcu,
                                             0xca62c1d6u};
    const ChainState ours = compress_block(kIv, abc);
    const ChainState variant = compress_block(kIv, abc, sha1_constants);
    CHECK(ours == compress_block(kIv, abc, kRoundK));
    CHECK_FALSE(ours == variant);
}

TEST_CASE("frozen digests for the published inputs") {
    for (const auto& row : md192::testvec::kTable3) {
        CAPTURE(row.input);
        CHECK(md192_digest(row.input).hex() == row.md192_frozen);
    }
}

TEST_CASE("digest hex rendering is 48 lowercase chars") {
    const std::string hex = md192_digest(std::string_view("abc")).hex();
    CHECK(hex.size() == 48);
    for (char c : hex) CHECK(((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')));
}

TEST_CASE("streaming equals one-shot") {
    SUBCASE("a+b+c equals abc") {
        Md192 h;
        h.update(std::string_view("a"));
        h.update(std::string_view("b"));
        h.update(std::string_view("c"));
        CHECK(h.finalize() == md192_digest(std::string_view("abc")));
    }
    SUBCASE("random chunkings of random messages") {
        std::mt19937_64 rng(23);
        for (int i = 0; i < 50; ++i) {
            std::vector<std::uint8_t> msg(rng() % 700);
            for (auto& b : msg) b = static_cast<std::uint8_t>(rng());
            const Digest192 expected = md192_digest(msg);
            Md192 h;
            std::size_t pos = 0;
            while (pos < msg.size()) {
                const std::size_t take = rng() % (msg.size() - pos + 1);
                h.update(std::span(msg).subspan(pos, take));
                pos += take;
            }
            REQUIRE(h.finalize() == expected);
        }
    }
}

TEST_CASE("one million 'a' regression golden") {
    const std::string million(1000000, 'a');
    CHECK(md192_digest(million).hex() == md192::testvec::kMillionAMd192);
}

TEST_CASE("block-route digest equals streaming digest") {
    // Second route: pad explicitly, then fold the compression function.
    std::mt19937_64 rng(29);
    for (int i = 0; i < 30; ++i) {
        std::vector<std::uint8_t> msg(rng() % 300);
        for (auto& b : msg) b = static_cast<std::uint8_t>(rng());

        ChainState state = kIv;
        for (const Block& block : pad_message(msg)) {
            state = compress_block(state, block);
        }
        Digest192 via_blocks;
        detail::Md192Traits::serialize(state, via_blocks.bytes.data());
        REQUIRE(via_blocks == md192_digest(msg));
    }
}

TEST_CASE("hasher contract violations and the length limit") {
    Md192 h;
    h.update(std::string_view("abc"));
    CHECK(h.absorbed_bits() == 24);
    (void)h.finalize();
    CHECK_THROWS_AS(h.update(std::string_view("x")), std::logic_error);
    CHECK_THROWS_AS(h.finalize(), std::logic_error);

    // The 2^64-bit cap is enforced through the shared counter check.
    using md192::detail::checked_add_message_bits;
    CHECK(checked_add_message_bits(0, 1) == 8);
    const std::uint64_t max_bits = ~std::uint64_t{0};
    CHECK(checked_add_message_bits(max_bits - 8, 1) == max_bits);
    CHECK_THROWS_AS(checked_add_message_bits(max_bits - 7, 1), std::length_error);
    CHECK_THROWS_AS(checked_add_message_bits(0, max_bits / 8 + 1), std::length_error);
}
