// report.hpp -- flat run report: one struct, one JSON document, one text
// rendering with identical fields and values.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <akp/decider.hpp>

namespace akp {

inline std::string to_string(Status s) {
    switch (s) {
        case Status::Free: return "Free";
        case Status::Contains: return "Contains";
        case Status::PreconditionFailed: return "PreconditionFailed";
    }
    return "PreconditionFailed";
}

inline std::string to_string(BoundMode b) {
    return b == BoundMode::Derived ? "derived" : "paper";
}

/// Everything a run reports, flattened.  Optional fields are null in JSON
/// when the run never reached the stage that computes them.
struct RunReport {
    std::string status;
    std::vector<std::string> reasons;
    int k = 0;
    int m = 0;
    int max_image_len = 0;  // N
    std::string det;        // exact decimal; empty when not computed
    std::optional<double> norm_estimate;
    std::optional<std::uint64_t> ancestor_count;
    std::vector<std::uint64_t> generation_sizes;
    std::optional<std::int64_t> delta;
    std::optional<std::int64_t> scan_bound;
    std::optional<std::int64_t> paper_bound;
    std::string bound_mode;
    std::optional<std::uint64_t> factors_scanned;
    std::optional<std::uint64_t> witness_position;
    std::optional<std::uint64_t> witness_block_length;
    double elapsed_seconds = 0.0;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

inline RunReport make_report(const Verdict& v, double elapsed_seconds) {
    RunReport r;
    r.status = to_string(v.status);
    r.reasons = v.reasons;
    r.k = v.stats.k;
    r.m = v.stats.m;
    r.max_image_len = v.stats.max_image_len;
    r.det = v.stats.det;
    r.norm_estimate = v.stats.norm_estimate;
    r.ancestor_count = v.stats.ancestor_count;
    r.generation_sizes = v.stats.generation_sizes;
    r.delta = v.stats.delta;
    r.scan_bound = v.stats.scan_bound;
    r.paper_bound = v.stats.paper_bound;
    r.bound_mode = to_string(v.stats.bound_mode);
    r.factors_scanned = v.stats.factors_scanned;
    if (v.witness) {
        r.witness_position = v.witness->position;
        r.witness_block_length = v.witness->block_length;
    }
    r.elapsed_seconds = elapsed_seconds;
    return r;
}

namespace detail {

template <typename T>
nlohmann::ordered_json opt_json(const std::optional<T>& v) {
    if (v) return *v;
    return nullptr;
}

template <typename T>
void opt_from(const nlohmann::ordered_json& j, std::optional<T>& out) {
    if (j.is_null())
        out.reset();
    else
        out = j.get<T>();
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["status"] = r.status;
    j["reasons"] = r.reasons;
    j["k"] = r.k;
    j["m"] = r.m;
    j["N"] = r.max_image_len;
    j["det"] = r.det;
    j["norm_estimate"] = detail::opt_json(r.norm_estimate);
    j["ancestor_count"] = detail::opt_json(r.ancestor_count);
    j["generation_sizes"] = r.generation_sizes;
    j["delta"] = detail::opt_json(r.delta);
    j["scan_bound"] = detail::opt_json(r.scan_bound);
    j["paper_bound"] = detail::opt_json(r.paper_bound);
    j["bound_mode"] = r.bound_mode;
    j["factors_scanned"] = detail::opt_json(r.factors_scanned);
    j["witness_position"] = detail::opt_json(r.witness_position);
    j["witness_block_length"] = detail::opt_json(r.witness_block_length);
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

inline RunReport report_from_json(const nlohmann::ordered_json& j) {
    RunReport r;
    r.status = j.at("status").get<std::string>();
    r.reasons = j.at("reasons").get<std::vector<std::string>>();
    r.k = j.at("k").get<int>();
    r.m = j.at("m").get<int>();
    r.max_image_len = j.at("N").get<int>();
    r.det = j.at("det").get<std::string>();
    detail::opt_from(j.at("norm_estimate"), r.norm_estimate);
    detail::opt_from(j.at("ancestor_count"), r.ancestor_count);
    r.generation_sizes = j.at("generation_sizes").get<std::vector<std::uint64_t>>();
    detail::opt_from(j.at("delta"), r.delta);
    detail::opt_from(j.at("scan_bound"), r.scan_bound);
    detail::opt_from(j.at("paper_bound"), r.paper_bound);
    r.bound_mode = j.at("bound_mode").get<std::string>();
    detail::opt_from(j.at("factors_scanned"), r.factors_scanned);
    detail::opt_from(j.at("witness_position"), r.witness_position);
    detail::opt_from(j.at("witness_block_length"), r.witness_block_length);
    r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    return r;
}

/// Text rendering: "field: value" per line.  Values are rendered from the
/// JSON document itself so the two output formats cannot drift apart.
inline std::string to_text(const RunReport& r) {
    const nlohmann::ordered_json j = to_json(r);
    std::string out;
    for (const auto& [key, value] : j.items()) {
        out += key;
        out += ": ";
        out += value.is_string() ? value.get<std::string>() : value.dump();
        out += '\n';
    }
    return out;
}

}  // namespace akp
