#include "md192/analysis.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "md192/sha1.hpp"

namespace md192::analysis {

std::string_view name(Algorithm alg) noexcept {
    return alg == Algorithm::md192 ? "md192" : "sha1";
}

Algorithm algorithm_from_name(std::string_view name) {
    if (name == "md192") return Algorithm::md192;
    if (name == "sha1") return Algorithm::sha1;
    throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::size_t digest_bits(Algorithm alg) noexcept {
    return alg == Algorithm::md192 ? 192 : 160;
}

namespace {

constexpr std::size_t kMaxDigestBytes = 24;

struct RawDigest {
    std::array<std::uint8_t, kMaxDigestBytes> bytes{};
    std::size_t size = 0;
};

RawDigest hash_bytes(Algorithm alg, std::span<const std::uint8_t> message) {
    RawDigest out;
    if (alg == Algorithm::md192) {
        const Digest192 d = md192_digest(message);
        out.size = d.bytes.size();
        std::copy(d.bytes.begin(), d.bytes.end(), out.bytes.begin());
    } else {
        const Digest160 d = sha1_digest(message);
        out.size = d.bytes.size();
        std::copy(d.bytes.begin(), d.bytes.end(), out.bytes.begin());
    }
    return out;
}

// Byte extraction order from the engine output is fixed here so reports are
// reproducible across platforms, not just across runs.
void fill_bytes(std::mt19937_64& rng, std::span<std::uint8_t> out) {
    std::size_t i = 0;
    while (i < out.size()) {
        std::uint64_t v = rng();
        for (int k = 0; k < 8 && i < out.size(); ++k, v >>= 8) {
            out[i++] = static_cast<std::uint8_t>(v);
        }
    }
}

}  // namespace

AvalancheSamples avalanche_samples(Algorithm alg, std::size_t message_bytes,
                                   std::size_t trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("trials must be >= 1");
    if (message_bytes == 0) throw std::invalid_argument("message_bytes must be >= 1");

    const std::size_t out_bits = digest_bits(alg);
    std::mt19937_64 rng(seed);

    AvalancheSamples samples;
    samples.distances.reserve(trials);
    samples.bit_flip_count.assign(out_bits, 0);

    std::vector<std::uint8_t> message(message_bytes);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        fill_bytes(rng, message);
        const RawDigest base = hash_bytes(alg, message);

        // Flip one uniformly chosen bit (MSB-first indexing inside a byte).
        const std::uint64_t bit = rng() % (8 * message_bytes);
        message[bit >> 3] ^= static_cast<std::uint8_t>(0x80u >> (bit & 7));
        const RawDigest flipped = hash_bytes(alg, message);
        message[bit >> 3] ^= static_cast<std::uint8_t>(0x80u >> (bit & 7));

        unsigned distance = 0;
        for (std::size_t i = 0; i < base.size; ++i) {
            const std::uint8_t diff = base.bytes[i] ^ flipped.bytes[i];
            distance += std::popcount(diff);
            for (int k = 0; k < 8; ++k) {
                if (diff & (0x80u >> k)) ++samples.bit_flip_count[8 * i + k];
            }
        }
        samples.distances.push_back(distance);
    }
    return samples;
}

AvalancheReport avalanche_test(Algorithm alg, std::size_t message_bytes,
                               std::size_t trials, std::uint64_t seed) {
    const AvalancheSamples samples = avalanche_samples(alg, message_bytes, trials, seed);

    AvalancheReport report;
    report.algorithm = std::string(name(alg));
    report.message_bytes = message_bytes;
    report.trials = trials;
    report.seed = seed;

    double sum = 0.0;
    unsigned lo = samples.distances.front(), hi = samples.distances.front();
    for (unsigned d : samples.distances) {
        sum += d;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    const double mean = sum / static_cast<double>(trials);
    double var = 0.0;
    for (unsigned d : samples.distances) {
        const double delta = d - mean;
        var += delta * delta;
    }
    report.mean_flipped_bits = mean;
    report.stddev_flipped_bits = std::sqrt(var / static_cast<double>(trials));
    report.min_flipped_bits = lo;
    report.max_flipped_bits = hi;

    report.bit_flip_rate.reserve(samples.bit_flip_count.size());
    for (std::uint32_t count : samples.bit_flip_count) {
        report.bit_flip_rate.push_back(count / static_cast<double>(trials));
    }
    return report;
}

// ---------------------------------------------------------------------------

std::string_view name(ScheduleVariant v) noexcept {
    switch (v) {
        case ScheduleVariant::md192: return "md192";
        case ScheduleVariant::sha1: return "sha1";
        default: return "sha0";
    }
}

ScheduleVariant variant_from_name(std::string_view name) {
    if (name == "md192") return ScheduleVariant::md192;
    if (name == "sha1") return ScheduleVariant::sha1;
    if (name == "sha0") return ScheduleVariant::sha0;
    throw std::invalid_argument("unknown schedule variant: " + std::string(name));
}

Schedule expand_variant(const Block& block, ScheduleVariant v) {
    switch (v) {
        case ScheduleVariant::md192: return expand_schedule(block);
        case ScheduleVariant::sha1: return sha1_expand(block, true);
        default: return sha1_expand(block, false);
    }
}

SampleSpec SampleSpec::parse(std::string_view text) {
    if (text == "single-bit") {
        return SampleSpec{Kind::single_bit, 1, 0};
    }
    if (text.starts_with("random:")) {
        const std::string_view rest = text.substr(7);
        const std::size_t colon = rest.find(':');
        if (colon != std::string_view::npos) {
            unsigned k = 0;
            std::size_t n = 0;
            const auto* kend = rest.data() + colon;
            const auto kres = std::from_chars(rest.data(), kend, k);
            const auto nres =
                std::from_chars(rest.data() + colon + 1, rest.data() + rest.size(), n);
            if (kres.ec == std::errc{} && kres.ptr == kend && nres.ec == std::errc{} &&
                nres.ptr == rest.data() + rest.size() && k >= 1 && k <= 512 && n >= 1) {
                return SampleSpec{Kind::random_kbit, k, n};
            }
        }
    }
    throw std::invalid_argument(
        "invalid sample spec (expected \"single-bit\" or \"random:<k>:<n>\"): " +
        std::string(text));
}

std::string SampleSpec::str() const {
    if (kind == Kind::single_bit) return "single-bit";
    return "random:" + std::to_string(bits) + ":" + std::to_string(samples);
}

namespace {

struct WeightCase {
    unsigned all = 0;
    unsigned tail = 0;
    unsigned first_word = 0;
    unsigned first_bit = 0;
};

WeightCase weigh(const Block& delta, ScheduleVariant v) {
    const Schedule s = expand_variant(delta, v);
    WeightCase c;
    for (std::size_t t = 0; t < 80; ++t) {
        const unsigned w = std::popcount(s.w[t]);
        c.all += w;
        if (t >= 16) c.tail += w;
    }
    for (unsigned word = 0; word < 16; ++word) {
        if (delta.words[word] != 0) {
            c.first_word = word;
            c.first_bit = static_cast<unsigned>(std::countr_zero(delta.words[word]));
            break;
        }
    }
    return c;
}

}  // namespace

ExpansionWeightReport expansion_weight_study(ScheduleVariant variant,
                                             const SampleSpec& sample,
                                             std::uint64_t seed) {
    std::vector<WeightCase> cases;
    if (sample.kind == SampleSpec::Kind::single_bit) {
        cases.reserve(512);
        for (unsigned word = 0; word < 16; ++word) {
            for (unsigned bit = 0; bit < 32; ++bit) {
                Block delta;
                delta.words[word] = Word{1} << bit;
                cases.push_back(weigh(delta, variant));
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        cases.reserve(sample.samples);
        for (std::size_t i = 0; i < sample.samples; ++i) {
            Block delta;
            unsigned placed = 0;
            while (placed < sample.bits) {
                const std::uint64_t pos = rng() % 512;
                const Word mask = Word{1} << (pos & 31);
                if (delta.words[pos >> 5] & mask) continue;  // want k distinct bits
                delta.words[pos >> 5] |= mask;
                ++placed;
            }
            cases.push_back(weigh(delta, variant));
        }
    }

    ExpansionWeightReport report;
    report.variant = std::string(name(variant));
    report.sample = sample.str();
    report.cases = cases.size();
    report.seed = seed;

    const WeightCase* min_case = &cases.front();
    double sum_all = 0.0, sum_tail = 0.0;
    report.min_weight_all = cases.front().all;
    report.max_weight_all = cases.front().all;
    report.min_weight_tail = cases.front().tail;
    report.max_weight_tail = cases.front().tail;
    for (const WeightCase& c : cases) {
        sum_all += c.all;
        sum_tail += c.tail;
        if (c.all < report.min_weight_all) {
            report.min_weight_all = c.all;
            min_case = &c;
        }
        report.max_weight_all = std::max(report.max_weight_all, c.all);
        report.min_weight_tail = std::min(report.min_weight_tail, c.tail);
        report.max_weight_tail = std::max(report.max_weight_tail, c.tail);
    }
    report.mean_weight_all = sum_all / static_cast<double>(cases.size());
    report.mean_weight_tail = sum_tail / static_cast<double>(cases.size());
    report.min_case_word = min_case->first_word;
    report.min_case_bit = min_case->first_bit;
    return report;
}

// ---------------------------------------------------------------------------

BenchReport benchmark(Algorithm alg, std::size_t input_bytes, std::size_t repetitions) {
    if (input_bytes == 0) throw std::invalid_argument("input_bytes must be >= 1");
    if (repetitions < 10) throw std::invalid_argument("repetitions must be >= 10");

    std::mt19937_64 rng(0x6d6431393270ULL);  // fixed buffer, same on every run
    std::vector<std::uint8_t> buffer(input_bytes);
    fill_bytes(rng, buffer);

    const RawDigest expected = hash_bytes(alg, buffer);
    for (int warm = 0; warm < 2; ++warm) {
        if (!(hash_bytes(alg, buffer).bytes == expected.bytes)) {
            throw std::runtime_error("benchmark digest mismatch");
        }
    }

    std::vector<double> seconds;
    seconds.reserve(repetitions);
    for (std::size_t rep = 0; rep < repetitions; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        const RawDigest got = hash_bytes(alg, buffer);
        const auto stop = std::chrono::steady_clock::now();
        if (!(got.bytes == expected.bytes)) {
            throw std::runtime_error("benchmark digest mismatch");
        }
        seconds.push_back(std::chrono::duration<double>(stop - start).count());
    }

    std::sort(seconds.begin(), seconds.end());
    const std::size_t mid = repetitions / 2;
    const double median = repetitions % 2 == 1
                              ? seconds[mid]
                              : 0.5 * (seconds[mid - 1] + seconds[mid]);

    BenchReport report;
    report.algorithm = std::string(name(alg));
    report.input_bytes = input_bytes;
    report.repetitions = repetitions;
    report.median_seconds = median;
    report.median_bytes_per_sec = static_cast<double>(input_bytes) / median;
    return report;
}

// ---------------------------------------------------------------------------
// key=value rendering and parsing

namespace {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
    double x = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad numeric value: " + std::string(text));
    }
    return x;
}

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t x = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad integer value: " + std::string(text));
    }
    return x;
}

class KvMap {
public:
    explicit KvMap(std::string_view kv) {
        std::size_t pos = 0;
        while (pos < kv.size()) {
            std::size_t end = kv.find('\n', pos);
            if (end == std::string_view::npos) end = kv.size();
            const std::string_view line = kv.substr(pos, end - pos);
            pos = end + 1;
            if (line.empty()) continue;
            const std::size_t eq = line.find('=');
            if (eq == std::string_view::npos) {
                throw std::invalid_argument("bad key=value line: " + std::string(line));
            }
            map_.emplace(line.substr(0, eq), line.substr(eq + 1));
        }
    }

    std::string_view get(const std::string& key) const {
        const auto it = map_.find(key);
        if (it == map_.end()) throw std::invalid_argument("missing key: " + key);
        return it->second;
    }

private:
    std::map<std::string, std::string, std::less<>> map_;
};

}  // namespace

std::string to_kv(const AvalancheReport& r) {
    std::string out;
    out += "report=avalanche\n";
    out += "algorithm=" + r.algorithm + "\n";
    out += "message_bytes=" + std::to_string(r.message_bytes) + "\n";
    out += "trials=" + std::to_string(r.trials) + "\n";
    out += "seed=" + std::to_string(r.seed) + "\n";
    out += "mean_flipped_bits=" + format_double(r.mean_flipped_bits) + "\n";
    out += "stddev_flipped_bits=" + format_double(r.stddev_flipped_bits) + "\n";
    out += "min_flipped_bits=" + std::to_string(r.min_flipped_bits) + "\n";
    out += "max_flipped_bits=" + std::to_string(r.max_flipped_bits) + "\n";
    out += "bit_flip_rate=";
    for (std::size_t i = 0; i < r.bit_flip_rate.size(); ++i) {
        if (i > 0) out += ',';
        out += format_double(r.bit_flip_rate[i]);
    }
    out += "\n";
    return out;
}

AvalancheReport avalanche_from_kv(std::string_view kv) {
    const KvMap map(kv);
    if (map.get("report") != "avalanche") {
        throw std::invalid_argument("not an avalanche report");
    }
    AvalancheReport r;
    r.algorithm = std::string(map.get("algorithm"));
    r.message_bytes = parse_u64(map.get("message_bytes"));
    r.trials = parse_u64(map.get("trials"));
    r.seed = parse_u64(map.get("seed"));
    r.mean_flipped_bits = parse_double(map.get("mean_flipped_bits"));
    r.stddev_flipped_bits = parse_double(map.get("stddev_flipped_bits"));
    r.min_flipped_bits = static_cast<unsigned>(parse_u64(map.get("min_flipped_bits")));
    r.max_flipped_bits = static_cast<unsigned>(parse_u64(map.get("max_flipped_bits")));
    std::string_view rates = map.get("bit_flip_rate");
    while (!rates.empty()) {
        std::size_t comma = rates.find(',');
        if (comma == std::string_view::npos) comma = rates.size();
        r.bit_flip_rate.push_back(parse_double(rates.substr(0, comma)));
        rates.remove_prefix(comma == rates.size() ? comma : comma + 1);
    }
    return r;
}

std::string to_kv(const ExpansionWeightReport& r) {
    std::string out;
    out += "report=expansion-weight\n";
    out += "variant=" + r.variant + "\n";
    out += "sample=" + r.sample + "\n";
    out += "cases=" + std::to_string(r.cases) + "\n";
    out += "seed=" + std::to_string(r.seed) + "\n";
    out += "min_weight_all=" + std::to_string(r.min_weight_all) + "\n";
    out += "mean_weight_all=" + format_double(r.mean_weight_all) + "\n";
    out += "max_weight_all=" + std::to_string(r.max_weight_all) + "\n";
    out += "min_weight_tail=" + std::to_string(r.min_weight_tail) + "\n";
    out += "mean_weight_tail=" + format_double(r.mean_weight_tail) + "\n";
    out += "max_weight_tail=" + std::to_string(r.max_weight_tail) + "\n";
    out += "min_case_word=" + std::to_string(r.min_case_word) + "\n";
    out += "min_case_bit=" + std::to_string(r.min_case_bit) + "\n";
    return out;
}

ExpansionWeightReport expansion_from_kv(std::string_view kv) {
    const KvMap map(kv);
    if (map.get("report") != "expansion-weight") {
        throw std::invalid_argument("not an expansion-weight report");
    }
    ExpansionWeightReport r;
    r.variant = std::string(map.get("variant"));
    r.sample = std::string(map.get("sample"));
    r.cases = parse_u64(map.get("cases"));
    r.seed = parse_u64(map.get("seed"));
    r.min_weight_all = static_cast<unsigned>(parse_u64(map.get("min_weight_all")));
    r.mean_weight_all = parse_double(map.get("mean_weight_all"));
    r.max_weight_all = static_cast<unsigned>(parse_u64(map.get("max_weight_all")));
    r.min_weight_tail = static_cast<unsigned>(parse_u64(map.get("min_weight_tail")));
    r.mean_weight_tail = parse_double(map.get("mean_weight_tail"));
    r.max_weight_tail = static_cast<unsigned>(parse_u64(map.get("max_weight_tail")));
    r.min_case_word = static_cast<unsigned>(parse_u64(map.get("min_case_word")));
    r.min_case_bit = static_cast<unsigned>(parse_u64(map.get("min_case_bit")));
    return r;
}

std::string to_kv(const BenchReport& r) {
    std::string out;
    out += "report=bench\n";
    out += "algorithm=" + r.algorithm + "\n";
    out += "input_bytes=" + std::to_string(r.input_bytes) + "\n";
    out += "repetitions=" + std::to_string(r.repetitions) + "\n";
    out += "median_seconds=" + format_double(r.median_seconds) + "\n";
    out += "median_bytes_per_sec=" + format_double(r.median_bytes_per_sec) + "\n";
    return out;
}

BenchReport bench_from_kv(std::string_view kv) {
    const KvMap map(kv);
    if (map.get("report") != "bench") {
        throw std::invalid_argument("not a bench report");
    }
    BenchReport r;
    r.algorithm = std::string(map.get("algorithm"));
    r.input_bytes = parse_u64(map.get("input_bytes"));
    r.repetitions = parse_u64(map.get("repetitions"));
    r.median_seconds = parse_double(map.get("median_seconds"));
    r.median_bytes_per_sec = parse_double(map.get("median_bytes_per_sec"));
    return r;
}

std::string to_text(const AvalancheReport& r) {
    const std::size_t bits = r.bit_flip_rate.size();
    std::size_t lo_bit = 0, hi_bit = 0;
    for (std::size_t i = 0; i < bits; ++i) {
        if (r.bit_flip_rate[i] < r.bit_flip_rate[lo_bit]) lo_bit = i;
        if (r.bit_flip_rate[i] > r.bit_flip_rate[hi_bit]) hi_bit = i;
    }
    char buf[256];
    std::ostringstream out;
    out << "avalanche report (" << r.algorithm << ")\n";
    out << "  protocol      : flip one random message bit, count flipped digest bits\n";
    out << "  message bytes : " << r.message_bytes << "\n";
    out << "  trials        : " << r.trials << "\n";
    out << "  seed          : " << r.seed << "\n";
    out << "  digest bits   : " << bits << "\n";
    std::snprintf(buf, sizeof(buf), "  mean flipped  : %.4f  (ideal %.1f)\n",
                  r.mean_flipped_bits, bits / 2.0);
    out << buf;
    std::snprintf(buf, sizeof(buf), "  stddev        : %.4f\n", r.stddev_flipped_bits);
    out << buf;
    out << "  min / max     : " << r.min_flipped_bits << " / " << r.max_flipped_bits << "\n";
    std::snprintf(buf, sizeof(buf),
                  "  bit flip rate : min %.4f (bit %zu), max %.4f (bit %zu)\n",
                  bits ? r.bit_flip_rate[lo_bit] : 0.0, lo_bit,
                  bits ? r.bit_flip_rate[hi_bit] : 0.0, hi_bit);
    out << buf;
    return out.str();
}

std::string to_text(const ExpansionWeightReport& r) {
    char buf[256];
    std::ostringstream out;
    out << "expansion weight report (" << r.variant << ")\n";
    out << "  sample        : " << r.sample << "\n";
    out << "  cases         : " << r.cases << "\n";
    out << "  seed          : " << r.seed << "\n";
    std::snprintf(buf, sizeof(buf), "  weight t=0..79  : min %u, mean %.2f, max %u\n",
                  r.min_weight_all, r.mean_weight_all, r.max_weight_all);
    out << buf;
    std::snprintf(buf, sizeof(buf), "  weight t=16..79 : min %u, mean %.2f, max %u\n",
                  r.min_weight_tail, r.mean_weight_tail, r.max_weight_tail);
    out << buf;
    out << "  minimum case  : word " << r.min_case_word << ", bit " << r.min_case_bit
        << "\n";
    return out.str();
}

std::string to_text(const BenchReport& r) {
    char buf[256];
    std::ostringstream out;
    out << "bench report (" << r.algorithm << ")\n";
    out << "  input bytes   : " << r.input_bytes << "\n";
    out << "  repetitions   : " << r.repetitions << "\n";
    std::snprintf(buf, sizeof(buf), "  median time   : %.6f s\n", r.median_seconds);
    out << buf;
    std::snprintf(buf, sizeof(buf), "  throughput    : %.2f MiB/s (%.0f bytes/s)\n",
                  r.median_bytes_per_sec / (1024.0 * 1024.0), r.median_bytes_per_sec);
    out << buf;
    return out.str();
}

}  // namespace md192::analysis
