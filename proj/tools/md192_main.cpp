// md192 — digest computation, known-answer tests, and the diffusion /
// expansion / throughput reports, on top of the md192_core library.
//
// Exit codes: 0 success (all required checks pass), 1 verification or
// runtime failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "md192/analysis.hpp"
#include "md192/kat.hpp"
#include "md192/md192.hpp"
#include "md192/sha1.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

using md192::analysis::Algorithm;

std::string hash_hex(Algorithm alg, std::span<const std::uint8_t> data) {
    return alg == Algorithm::md192 ? md192::md192_digest(data).hex()
                                   : md192::sha1_digest(data).hex();
}

std::vector<std::uint8_t> read_stream(std::istream& in) {
    std::vector<std::uint8_t> data;
    char chunk[65536];
    while (in.read(chunk, sizeof(chunk)) || in.gcount() > 0) {
        data.insert(data.end(), chunk, chunk + in.gcount());
    }
    return data;
}

struct DigestOptions {
    std::string algorithm = "md192";
    std::vector<std::string> files;
    std::optional<std::string> literal;
    std::string format = "text";
};

int cmd_digest(const DigestOptions& opt) {
    const Algorithm alg = md192::analysis::algorithm_from_name(opt.algorithm);

    // Hash every input before printing anything, so a failure cannot leave
    // partial output behind.
    std::vector<std::pair<std::string, std::string>> results;  // name, hex
    if (opt.literal) {
        results.emplace_back('"' + *opt.literal + '"',
                             hash_hex(alg, md192::as_bytes(*opt.literal)));
    }
    for (const std::string& path : opt.files) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            std::cerr << "md192: cannot open " << path << "\n";
            return kExitFailure;
        }
        results.emplace_back(path, hash_hex(alg, read_stream(in)));
    }
    if (results.empty()) {
        results.emplace_back("-", hash_hex(alg, read_stream(std::cin)));
    }

    for (std::size_t i = 0; i < results.size(); ++i) {
        if (opt.format == "kv") {
            std::cout << "input" << i << ".name=" << results[i].first << "\n";
            std::cout << "input" << i << ".digest=" << results[i].second << "\n";
        } else {
            std::cout << results[i].second << "  " << results[i].first << "\n";
        }
    }
    return kExitOk;
}

struct KatOptions {
    std::string file;
    std::string format = "text";
};

int cmd_kat(const KatOptions& opt) {
    const std::vector<md192::kat::KatEntry> entries = md192::kat::load_kat_file(opt.file);
    const std::vector<md192::kat::KatResult> results = md192::kat::run_kats(entries);
    const md192::kat::KatSummary summary = md192::kat::summarize(results);

    if (opt.format == "kv") {
        for (std::size_t i = 0; i < results.size(); ++i) {
            std::cout << "entry" << i << ".pass=" << (results[i].pass ? "true" : "false")
                      << "\n";
        }
        std::cout << "total=" << summary.total << "\n";
        std::cout << "passed=" << summary.passed << "\n";
        std::cout << "failed=" << summary.failed << "\n";
        std::cout << "required_failed=" << summary.required_failed << "\n";
        for (const auto& [source, n] : summary.passed_by_source) {
            std::cout << "passed." << source << "=" << n << "\n";
        }
        for (const auto& [source, n] : summary.failed_by_source) {
            std::cout << "failed." << source << "=" << n << "\n";
        }
    } else {
        for (const md192::kat::KatResult& r : results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.entry.algorithm << " ["
                      << r.entry.source << "] \"" << r.entry.payload << "\"";
            if (!r.pass) {
                std::cout << " expected=" << r.entry.digest_hex << " got=" << r.actual_hex;
                if (!md192::kat::failure_is_fatal(r.entry)) std::cout << " (non-fatal)";
            }
            std::cout << "\n";
        }
        std::cout << summary.passed << "/" << summary.total << " passed, "
                  << summary.failed << " failed (" << summary.required_failed
                  << " fatal)\n";
    }
    if (summary.required_failed > 0) return kExitFailure;
    return kExitOk;
}

struct AvalancheOptions {
    std::string algorithm = "md192";
    std::size_t trials = 10000;
    std::size_t size = 64;
    std::uint64_t seed = 1;
    std::string format = "text";
};

int cmd_avalanche(const AvalancheOptions& opt) {
    const auto report = md192::analysis::avalanche_test(
        md192::analysis::algorithm_from_name(opt.algorithm), opt.size, opt.trials,
        opt.seed);
    std::cout << (opt.format == "kv" ? md192::analysis::to_kv(report)
                                     : md192::analysis::to_text(report));
    return kExitOk;
}

struct ExpandOptions {
    std::string variant = "md192";
    std::string sample = "single-bit";
    std::uint64_t seed = 1;
    std::string format = "text";
};

int cmd_expand(const ExpandOptions& opt) {
    const auto report = md192::analysis::expansion_weight_study(
        md192::analysis::variant_from_name(opt.variant),
        md192::analysis::SampleSpec::parse(opt.sample), opt.seed);
    std::cout << (opt.format == "kv" ? md192::analysis::to_kv(report)
                                     : md192::analysis::to_text(report));
    return kExitOk;
}

struct BenchOptions {
    std::optional<std::string> algorithm;  // absent: both, with ratio
    std::size_t size = 1 << 20;
    std::size_t reps = 30;
    std::string format = "text";
};

int cmd_bench(const BenchOptions& opt) {
    namespace analysis = md192::analysis;
    if (opt.algorithm) {
        const auto report = analysis::benchmark(
            analysis::algorithm_from_name(*opt.algorithm), opt.size, opt.reps);
        std::cout << (opt.format == "kv" ? analysis::to_kv(report)
                                         : analysis::to_text(report));
        return kExitOk;
    }

    const auto md = analysis::benchmark(Algorithm::md192, opt.size, opt.reps);
    const auto sha = analysis::benchmark(Algorithm::sha1, opt.size, opt.reps);
    const double ratio = md.median_bytes_per_sec / sha.median_bytes_per_sec;
    if (opt.format == "kv") {
        const auto kvnum = [](const char* key, double value) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%s=%.17g\n", key, value);
            std::cout << buf;
        };
        std::cout << "report=bench-comparison\n";
        std::cout << "input_bytes=" << opt.size << "\n";
        std::cout << "repetitions=" << opt.reps << "\n";
        kvnum("md192.median_seconds", md.median_seconds);
        kvnum("md192.median_bytes_per_sec", md.median_bytes_per_sec);
        kvnum("sha1.median_seconds", sha.median_seconds);
        kvnum("sha1.median_bytes_per_sec", sha.median_bytes_per_sec);
        kvnum("throughput_ratio_md192_over_sha1", ratio);
    } else {
        std::cout << analysis::to_text(md) << analysis::to_text(sha);
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "throughput ratio md192/sha1 : %.4f%s\n", ratio,
                      ratio < 1.0 ? "  (md192 slower, as expected)" : "");
        std::cout << buf;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MD-192 / SHA-1 digests, known-answer tests and analysis reports"};
    app.require_subcommand(1);

    DigestOptions digest_opt;
    CLI::App* digest = app.add_subcommand("digest", "Hash files, stdin or a literal");
    digest->add_option("--alg", digest_opt.algorithm, "md192 or sha1")
        ->check(CLI::IsMember({"md192", "sha1"}));
    digest->add_option("--file,files", digest_opt.files, "input files (stdin when absent)");
    digest->add_option("--string", digest_opt.literal, "hash this literal instead");
    digest->add_option("--format", digest_opt.format)->check(CLI::IsMember({"text", "kv"}));

    KatOptions kat_opt;
    CLI::App* kat = app.add_subcommand("kat", "Run a known-answer-test file");
    kat->add_option("--file", kat_opt.file, "KAT file")->required();
    kat->add_option("--format", kat_opt.format)->check(CLI::IsMember({"text", "kv"}));

    AvalancheOptions av_opt;
    CLI::App* avalanche = app.add_subcommand("avalanche", "Single-bit-flip diffusion statistics");
    avalanche->add_option("--alg", av_opt.algorithm)->check(CLI::IsMember({"md192", "sha1"}));
    avalanche->add_option("--trials", av_opt.trials)->check(CLI::PositiveNumber);
    avalanche->add_option("--size", av_opt.size, "message size in bytes")
        ->check(CLI::PositiveNumber);
    avalanche->add_option("--seed", av_opt.seed);
    avalanche->add_option("--format", av_opt.format)->check(CLI::IsMember({"text", "kv"}));

    ExpandOptions ex_opt;
    CLI::App* expand = app.add_subcommand("expand", "Message-expansion weight study");
    expand->add_option("--variant", ex_opt.variant)
        ->check(CLI::IsMember({"md192", "sha1", "sha0"}));
    expand->add_option("--sample", ex_opt.sample, "single-bit or random:<k>:<n>");
    expand->add_option("--seed", ex_opt.seed);
    expand->add_option("--format", ex_opt.format)->check(CLI::IsMember({"text", "kv"}));

    BenchOptions bench_opt;
    CLI::App* bench = app.add_subcommand("bench", "Throughput benchmark");
    bench->add_option("--alg", bench_opt.algorithm, "restrict to one algorithm")
        ->check(CLI::IsMember({"md192", "sha1"}));
    bench->add_option("--size", bench_opt.size, "input size in bytes")
        ->check(CLI::PositiveNumber);
    bench->add_option("--reps", bench_opt.reps)->check(CLI::PositiveNumber);
    bench->add_option("--format", bench_opt.format)->check(CLI::IsMember({"text", "kv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "md192: " << e.what() << "\n";
        std::cerr << "run 'md192 --help' for usage\n";
        return kExitUsage;
    }

    try {
        if (digest->parsed()) return cmd_digest(digest_opt);
        if (kat->parsed()) return cmd_kat(kat_opt);
        if (avalanche->parsed()) return cmd_avalanche(av_opt);
        if (expand->parsed()) return cmd_expand(ex_opt);
        if (bench->parsed()) return cmd_bench(bench_opt);
    } catch (const std::exception& e) {
        std::cerr << "md192: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
