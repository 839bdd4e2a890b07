#include "md192/kat.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "md192/sha1.hpp"

namespace md192::kat {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

bool is_hex(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isxdigit(c) != 0;
    });
}

std::size_t digest_hex_chars(std::string_view algorithm) {
    return algorithm == "md192" ? 48 : 40;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}

std::vector<std::uint8_t> KatEntry::message_bytes() const {
    if (encoding == "ascii") {
        return std::vector<std::uint8_t>(payload.begin(), payload.end());
    }
    return parse_hex(payload);
}

std::vector<KatEntry> parse_kat(std::istream& in) {
    std::vector<KatEntry> entries;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        KatEntry entry;
        std::string_view rest = line;
        std::array<std::string_view, 5> fields;
        for (std::size_t i = 0; i < 5; ++i) {
            const std::size_t colon = rest.find(':');
            if (i < 4) {
                if (colon == std::string_view::npos) {
                    throw ParseError(lineno, "expected 5 ':'-separated fields");
                }
                fields[i] = trim(rest.substr(0, colon));
                rest.remove_prefix(colon + 1);
            } else {
                if (colon != std::string_view::npos) {
                    throw ParseError(lineno, "expected 5 ':'-separated fields");
                }
                fields[i] = trim(rest);
            }
        }
        entry.algorithm = std::string(fields[0]);
        entry.encoding = std::string(fields[1]);
        entry.payload = std::string(fields[2]);
        entry.digest_hex = std::string(fields[3]);
        entry.source = std::string(fields[4]);

        if (entry.algorithm != "md192" && entry.algorithm != "sha1") {
            throw ParseError(lineno, "unknown algorithm: " + entry.algorithm);
        }
        if (entry.encoding != "ascii" && entry.encoding != "hex") {
            throw ParseError(lineno, "unknown encoding: " + entry.encoding);
        }
        if (entry.encoding == "hex" &&
            (entry.payload.size() % 2 != 0 || !is_hex(entry.payload))) {
            throw ParseError(lineno, "hex payload must be even-length hex");
        }
        if (entry.digest_hex.size() != digest_hex_chars(entry.algorithm) ||
            !is_hex(entry.digest_hex)) {
            throw ParseError(lineno, "digest must be " +
                                         std::to_string(digest_hex_chars(entry.algorithm)) +
                                         " hex chars for " + entry.algorithm);
        }
        if (entry.source != "paper-table3" && entry.source != "frozen" &&
            entry.source != "external") {
            throw ParseError(lineno, "unknown source tag: " + entry.source);
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<KatEntry> load_kat_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open KAT file: " + path.string());
    }
    return parse_kat(in);
}

std::string emit_kat(std::span<const KatEntry> entries) {
    std::string out;
    for (const KatEntry& e : entries) {
        out += e.algorithm + " : " + e.encoding + " : " + e.payload + " : " +
               e.digest_hex + " : " + e.source + "\n";
    }
    return out;
}

bool failure_is_fatal(const KatEntry& entry) noexcept {
    return !(entry.algorithm == "md192" && entry.source == "paper-table3");
}

std::vector<KatResult> run_kats(std::span<const KatEntry> entries) {
    std::vector<KatResult> results;
    results.reserve(entries.size());
    for (const KatEntry& entry : entries) {
        KatResult result;
        result.entry = entry;
        const std::vector<std::uint8_t> message = entry.message_bytes();
        result.actual_hex = entry.algorithm == "md192" ? md192_digest(message).hex()
                                                       : sha1_digest(message).hex();
        result.pass = result.actual_hex == lowercase(entry.digest_hex);
        results.push_back(std::move(result));
    }
    return results;
}

KatSummary summarize(std::span<const KatResult> results) {
    KatSummary summary;
    summary.total = results.size();
    for (const KatResult& r : results) {
        if (r.pass) {
            ++summary.passed;
            ++summary.passed_by_source[r.entry.source];
        } else {
            ++summary.failed;
            ++summary.failed_by_source[r.entry.source];
            if (failure_is_fatal(r.entry)) ++summary.required_failed;
        }
    }
    return summary;
}

}  // namespace md192::kat
