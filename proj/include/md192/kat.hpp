#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace md192::kat {

// One known-answer vector. Line format, `#` starts a comment:
//
//   algorithm : encoding : payload : digest : source
//
// algorithm is md192 or sha1; encoding is ascii (payload taken verbatim,
// must not contain ':' or surrounding whitespace) or hex; source is one of
// paper-table3, frozen, external.
struct KatEntry {
    std::string algorithm;
    std::string encoding;
    std::string payload;
    std::string digest_hex;
    std::string source;

    std::vector<std::uint8_t> message_bytes() const;

    friend bool operator==(const KatEntry&, const KatEntry&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& reason);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

std::vector<KatEntry> parse_kat(std::istream& in);
std::vector<KatEntry> load_kat_file(const std::filesystem::path& path);

// Canonical rendering; emit(load(f)) is byte-identical for files emit wrote.
std::string emit_kat(std::span<const KatEntry> entries);

struct KatResult {
    KatEntry entry;
    std::string actual_hex;
    bool pass = false;
};

struct KatSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t required_failed = 0;  // failures that are fatal per policy
    std::map<std::string, std::size_t> passed_by_source;
    std::map<std::string, std::size_t> failed_by_source;
};

// The md192 paper-table3 vectors are not independently verifiable and their
// failure is reported but never fatal; every other failure is.
bool failure_is_fatal(const KatEntry& entry) noexcept;

// Hashes every entry in order. Failures are results, not errors.
std::vector<KatResult> run_kats(std::span<const KatEntry> entries);
KatSummary summarize(std::span<const KatResult> results);

}  // namespace md192::kat
