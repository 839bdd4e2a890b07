#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "md192/analysis.hpp"
#include "md192/kat.hpp"
#include "md192/md192.hpp"
#include "md192/sha1.hpp"

namespace py = pybind11;

namespace {

std::span<const std::uint8_t> as_span(std::string_view data) {
    return md192::as_bytes(data);
}

py::dict dict_of(const md192::analysis::AvalancheReport& r) {
    py::dict d;
    d["algorithm"] = r.algorithm;
    d["message_bytes"] = r.message_bytes;
    d["trials"] = r.trials;
    d["seed"] = r.seed;
    d["mean_flipped_bits"] = r.mean_flipped_bits;
    d["stddev_flipped_bits"] = r.stddev_flipped_bits;
    d["min_flipped_bits"] = r.min_flipped_bits;
    d["max_flipped_bits"] = r.max_flipped_bits;
    d["bit_flip_rate"] = r.bit_flip_rate;
    return d;
}

py::dict dict_of(const md192::analysis::ExpansionWeightReport& r) {
    py::dict d;
    d["variant"] = r.variant;
    d["sample"] = r.sample;
    d["cases"] = r.cases;
    d["seed"] = r.seed;
    d["min_weight_all"] = r.min_weight_all;
    d["mean_weight_all"] = r.mean_weight_all;
    d["max_weight_all"] = r.max_weight_all;
    d["min_weight_tail"] = r.min_weight_tail;
    d["mean_weight_tail"] = r.mean_weight_tail;
    d["max_weight_tail"] = r.max_weight_tail;
    d["min_case_word"] = r.min_case_word;
    d["min_case_bit"] = r.min_case_bit;
    return d;
}

py::dict dict_of(const md192::analysis::BenchReport& r) {
    py::dict d;
    d["algorithm"] = r.algorithm;
    d["input_bytes"] = r.input_bytes;
    d["repetitions"] = r.repetitions;
    d["median_seconds"] = r.median_seconds;
    d["median_bytes_per_sec"] = r.median_bytes_per_sec;
    return d;
}

template <class Hasher>
void bind_hasher(py::module_& m, const char* name, const char* doc) {
    py::class_<Hasher>(m, name, doc)
        .def(py::init<>())
        .def(
            "update",
            [](Hasher& h, std::string_view data) -> Hasher& {
                h.update(as_span(data));
                return h;
            },
            py::arg("data"), py::return_value_policy::reference_internal,
            "Absorb more message bytes; returns self for chaining.")
        .def(
            "finalize",
            [](Hasher& h) {
                const auto digest = h.finalize();
                return py::bytes(reinterpret_cast<const char*>(digest.bytes.data()),
                                 digest.bytes.size());
            },
            "Pad, compress the remainder and return the digest bytes. "
            "May be called exactly once.")
        .def(
            "hexdigest",
            [](Hasher& h) { return h.finalize().hex(); },
            "finalize() rendered as lowercase hex.")
        .def_property_readonly("absorbed_bits",
                               [](const Hasher& h) { return h.absorbed_bits(); });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "MD-192 hash function with a SHA-1 baseline and analysis helpers";

    bind_hasher<md192::Md192>(m, "Md192", "Streaming MD-192 hasher (192-bit digest).");
    bind_hasher<md192::Sha1>(m, "Sha1", "Streaming SHA-1 hasher (160-bit digest).");

    m.def(
        "md192",
        [](std::string_view data) {
            const auto digest = md192::md192_digest(as_span(data));
            return py::bytes(reinterpret_cast<const char*>(digest.bytes.data()),
                             digest.bytes.size());
        },
        py::arg("data"), "One-shot MD-192 digest (24 bytes).");
    m.def(
        "md192_hex",
        [](std::string_view data) { return md192::md192_digest(as_span(data)).hex(); },
        py::arg("data"), "One-shot MD-192 digest as 48 lowercase hex chars.");
    m.def(
        "sha1",
        [](std::string_view data) {
            const auto digest = md192::sha1_digest(as_span(data));
            return py::bytes(reinterpret_cast<const char*>(digest.bytes.data()),
                             digest.bytes.size());
        },
        py::arg("data"), "One-shot SHA-1 digest (20 bytes).");
    m.def(
        "sha1_hex",
        [](std::string_view data) { return md192::sha1_digest(as_span(data)).hex(); },
        py::arg("data"), "One-shot SHA-1 digest as 40 lowercase hex chars.");

    m.def(
        "avalanche",
        [](std::string_view algorithm, std::size_t message_bytes, std::size_t trials,
           std::uint64_t seed) {
            return dict_of(md192::analysis::avalanche_test(
                md192::analysis::algorithm_from_name(algorithm), message_bytes, trials,
                seed));
        },
        py::arg("algorithm") = "md192", py::arg("message_bytes") = 64,
        py::arg("trials") = 10000, py::arg("seed") = 1,
        "Single-bit-flip avalanche statistics as a dict.");

    m.def(
        "expansion_weights",
        [](std::string_view variant, std::string_view sample, std::uint64_t seed) {
            return dict_of(md192::analysis::expansion_weight_study(
                md192::analysis::variant_from_name(variant),
                md192::analysis::SampleSpec::parse(sample), seed));
        },
        py::arg("variant") = "md192", py::arg("sample") = "single-bit",
        py::arg("seed") = 1,
        "Expanded-difference weight study over the chosen schedule.");

    m.def(
        "benchmark",
        [](std::string_view algorithm, std::size_t input_bytes, std::size_t repetitions) {
            return dict_of(md192::analysis::benchmark(
                md192::analysis::algorithm_from_name(algorithm), input_bytes,
                repetitions));
        },
        py::arg("algorithm") = "md192", py::arg("input_bytes") = std::size_t{1} << 20,
        py::arg("repetitions") = 30, "Median throughput of the one-shot digest.");

    m.def(
        "run_kat_file",
        [](const std::filesystem::path& path) {
            const auto entries = md192::kat::load_kat_file(path);
            const auto results = md192::kat::run_kats(entries);
            const auto summary = md192::kat::summarize(results);
            py::list items;
            for (const auto& r : results) {
                py::dict d;
                d["algorithm"] = r.entry.algorithm;
                d["payload"] = r.entry.payload;
                d["source"] = r.entry.source;
                d["expected"] = r.entry.digest_hex;
                d["actual"] = r.actual_hex;
                d["pass"] = r.pass;
                items.append(d);
            }
            py::dict out;
            out["total"] = summary.total;
            out["passed"] = summary.passed;
            out["failed"] = summary.failed;
            out["required_failed"] = summary.required_failed;
            out["results"] = items;
            return out;
        },
        py::arg("path"), "Run every vector in a KAT file; failures are results.");
}
