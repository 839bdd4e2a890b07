#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "md192/md192.hpp"

namespace md192::analysis {

enum class Algorithm { md192, sha1 };

std::string_view name(Algorithm alg) noexcept;
Algorithm algorithm_from_name(std::string_view name);  // throws std::invalid_argument
std::size_t digest_bits(Algorithm alg) noexcept;

// ---------------------------------------------------------------------------
// Avalanche: flip one random bit of a random message, count flipped digest
// bits. Digest bit b is bit (7 - b%8) of byte b/8, i.e. hex reading order.

struct AvalancheReport {
    std::string algorithm;
    std::size_t message_bytes = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double mean_flipped_bits = 0.0;
    double stddev_flipped_bits = 0.0;  // population stddev over trials
    unsigned min_flipped_bits = 0;
    unsigned max_flipped_bits = 0;
    std::vector<double> bit_flip_rate;  // one bin per digest bit, in [0,1]

    friend bool operator==(const AvalancheReport&, const AvalancheReport&) = default;
};

// Raw per-trial data; the report is aggregated from these stable arrays so
// the result is identical no matter how trials were scheduled.
struct AvalancheSamples {
    std::vector<unsigned> distances;            // one entry per trial
    std::vector<std::uint32_t> bit_flip_count;  // one counter per digest bit
};

AvalancheSamples avalanche_samples(Algorithm alg, std::size_t message_bytes,
                                   std::size_t trials, std::uint64_t seed);

// Deterministic for a fixed seed. Throws std::invalid_argument when
// trials == 0 or message_bytes == 0.
AvalancheReport avalanche_test(Algorithm alg, std::size_t message_bytes,
                               std::size_t trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Expansion weight study. The three schedules are GF(2)-linear, so the
// schedule of an input difference is the difference of the schedules; total
// weight is the popcount summed over the expanded words.

enum class ScheduleVariant { md192, sha1, sha0 };

std::string_view name(ScheduleVariant v) noexcept;
ScheduleVariant variant_from_name(std::string_view name);

Schedule expand_variant(const Block& block, ScheduleVariant v);

// Difference sample: either every single-bit input difference (512 cases) or
// n random k-bit differences. Spec strings: "single-bit" | "random:<k>:<n>".
struct SampleSpec {
    enum class Kind { single_bit, random_kbit };
    Kind kind = Kind::single_bit;
    unsigned bits = 1;
    std::size_t samples = 0;

    static SampleSpec parse(std::string_view text);  // throws std::invalid_argument
    std::string str() const;

    friend bool operator==(const SampleSpec&, const SampleSpec&) = default;
};

struct ExpansionWeightReport {
    std::string variant;
    std::string sample;
    std::size_t cases = 0;
    std::uint64_t seed = 0;
    // Weight of the expanded difference summed over all eighty words...
    unsigned min_weight_all = 0;
    double mean_weight_all = 0.0;
    unsigned max_weight_all = 0;
    // ...and over the derived words t = 16..79 only.
    unsigned min_weight_tail = 0;
    double mean_weight_tail = 0.0;
    unsigned max_weight_tail = 0;
    // Case attaining min_weight_all (word/bit of the first difference bit).
    unsigned min_case_word = 0;
    unsigned min_case_bit = 0;

    friend bool operator==(const ExpansionWeightReport&, const ExpansionWeightReport&) = default;
};

// Measured minimum over the stated sample only; nothing is assumed about it.
// The seed is unused (and recorded as given) for the exhaustive sample.
ExpansionWeightReport expansion_weight_study(ScheduleVariant variant,
                                             const SampleSpec& sample,
                                             std::uint64_t seed);

// ---------------------------------------------------------------------------
// Throughput benchmark over a fixed pseudorandom buffer.

struct BenchReport {
    std::string algorithm;
    std::size_t input_bytes = 0;
    std::size_t repetitions = 0;
    double median_seconds = 0.0;
    double median_bytes_per_sec = 0.0;

    friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

// Times `repetitions` one-shot digests of the same input_bytes-sized buffer,
// after two warm-up runs. Requires input_bytes >= 1 and repetitions >= 10
// (std::invalid_argument otherwise). Every repetition must produce the same
// digest; a mismatch raises std::runtime_error.
BenchReport benchmark(Algorithm alg, std::size_t input_bytes, std::size_t repetitions);

// ---------------------------------------------------------------------------
// Report rendering. to_kv emits the machine-readable `key=value` lines and
// round-trips losslessly through the matching parser; to_text is for humans.

std::string to_kv(const AvalancheReport& r);
std::string to_kv(const ExpansionWeightReport& r);
std::string to_kv(const BenchReport& r);

AvalancheReport avalanche_from_kv(std::string_view kv);
ExpansionWeightReport expansion_from_kv(std::string_view kv);
BenchReport bench_from_kv(std::string_view kv);

std::string to_text(const AvalancheReport& r);
std::string to_text(const ExpansionWeightReport& r);
std::string to_text(const BenchReport& r);

}  // namespace md192::analysis
