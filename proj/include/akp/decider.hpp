// decider.hpp -- the end-to-end decision procedure: precondition checks,
// ancestor closure, Delta, the scan-length bound, the factor scan, verdict
// assembly and witness extraction.
#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <akp/exactlinalg.hpp>
#include <akp/oracle.hpp>
#include <akp/templates.hpp>
#include <akp/words.hpp>

namespace akp {

// Stable precondition failure reasons; reports and exit-code tests match on
// these strings.
inline constexpr std::string_view kReasonNotProlongable =
    "mu(1) must start with 1 and have length >= 2";
inline constexpr std::string_view kReasonShortImage = "every image must have length >= 2";
inline constexpr std::string_view kReasonLetterRange = "image letter out of alphabet range";
inline constexpr std::string_view kReasonSingular = "singular frequency matrix";
inline constexpr std::string_view kReasonNorm = "inverse norm of frequency matrix is not < 1";

enum class Status { Free, Contains, PreconditionFailed };

enum class BoundMode { Derived, Paper };

struct DeciderConfig {
    std::size_t closure_cap = 1'000'000;
    BoundMode bound = BoundMode::Derived;
    // extract_witness doubles the inspected prefix until this cap; reaching
    // it without a hit raises an error instead of looping forever.
    std::size_t witness_prefix_cap = std::size_t{1} << 24;
};

/// Conservative scan length: an instance longer than this has every block of
/// length >= N-1 and therefore a strictly shorter ancestor instance, so a
/// minimal instance over an ancestor-closed template set fits within it.
/// Accounts for k+1 borders, one block of length <= N-2 and k-1 blocks of
/// length <= N-2 + m*k*delta.
inline std::int64_t length_bound(std::int64_t n_max, std::int64_t k, std::int64_t m,
                                 std::int64_t delta) {
    return (k + 1) + (n_max - 2) + (k - 1) * ((n_max - 2) + m * k * delta);
}

/// The tighter published variant of the same bound, reported for comparison.
inline std::int64_t paper_length_bound(std::int64_t n_max, std::int64_t k, std::int64_t m,
                                       std::int64_t delta) {
    return n_max + k - 2 + (k - 2) * ((n_max - 2) + m * k * delta);
}

struct DecisionStats {
    int k = 0;
    int m = 0;
    int max_image_len = 0;  // N
    std::string det;        // exact determinant, decimal; empty until computed
    std::optional<double> norm_estimate;
    std::optional<std::uint64_t> ancestor_count;
    std::vector<std::uint64_t> generation_sizes;
    std::optional<std::int64_t> delta;
    std::optional<std::int64_t> scan_bound;
    std::optional<std::int64_t> paper_bound;
    BoundMode bound_mode = BoundMode::Derived;
    std::optional<std::uint64_t> factors_scanned;
};

/// Where in the factor scan the first ancestor instance turned up.
struct ScanHit {
    Word factor;
    std::size_t template_index = 0;  // index into the canonical closure order
    InstanceOccurrence occurrence;
};

struct Verdict {
    Status status = Status::PreconditionFailed;
    std::vector<std::string> reasons;       // populated for PreconditionFailed
    std::optional<PowerOccurrence> witness; // populated for Contains
    std::optional<ScanHit> scan_hit;        // populated for Contains
    DecisionStats stats;
};

/// Locates a concrete Abelian k-power in the fixed point by brute force,
/// doubling the inspected prefix until one is found.  Caller guarantees one
/// exists; the cap turns a broken guarantee into an error.
inline PowerOccurrence extract_witness(const Morphism& mu, int k,
                                       std::size_t prefix_cap = std::size_t{1} << 24) {
    for (std::size_t len = 1024;; len *= 2) {
        const Word prefix = fixed_point_prefix(mu, len);
        if (auto occ = find_abelian_power(prefix, k, mu.m)) return *occ;
        if (len >= prefix_cap)
            throw std::runtime_error("extract_witness: no Abelian power within prefix cap");
    }
}

/// Runs the full decision procedure for "is mu^omega(1) Abelian k-power
/// free".  Precondition failures come back as a verdict listing every
/// violated condition; a closure overflow propagates as an exception.
inline Verdict decide(const Morphism& mu, int k, const DeciderConfig& config = {}) {
    if (k < 2) throw std::invalid_argument("decide: k must be >= 2");
    Verdict verdict;
    verdict.stats.k = k;
    verdict.stats.m = mu.m;
    verdict.stats.bound_mode = config.bound;

    const ValidationReport vr = validate(mu);
    if (!vr.letters_in_range) verdict.reasons.emplace_back(kReasonLetterRange);
    if (!vr.prolongable_on_one) verdict.reasons.emplace_back(kReasonNotProlongable);
    if (!vr.images_long_enough) verdict.reasons.emplace_back(kReasonShortImage);

    if (vr.letters_in_range && mu.m >= 1) {
        verdict.stats.max_image_len = max_image_length(mu);
        const FrequencyMatrix M = frequency_matrix(mu);
        const BigInt d = det(M);
        verdict.stats.det = d.str();
        if (d == 0) {
            verdict.reasons.emplace_back(kReasonSingular);
        } else {
            verdict.stats.norm_estimate = inverse_norm_estimate(M);
            if (!inverse_norm_lt_one(M)) verdict.reasons.emplace_back(kReasonNorm);
        }
    }

    if (!verdict.reasons.empty()) {
        verdict.status = Status::PreconditionFailed;
        return verdict;
    }

    const AncestorClosure closure = ancestors(mu, k, config.closure_cap);
    verdict.stats.ancestor_count = closure.all.size();
    verdict.stats.generation_sizes.assign(closure.generation_sizes.begin(),
                                          closure.generation_sizes.end());
    const std::int64_t dlt = delta(closure.all);
    verdict.stats.delta = dlt;
    const std::int64_t derived = length_bound(verdict.stats.max_image_len, k, mu.m, dlt);
    const std::int64_t paper = paper_length_bound(verdict.stats.max_image_len, k, mu.m, dlt);
    verdict.stats.scan_bound = config.bound == BoundMode::Derived ? derived : paper;
    verdict.stats.paper_bound = paper;

    const std::set<Word> factors =
        factor_set(mu, static_cast<std::size_t>(*verdict.stats.scan_bound));
    verdict.stats.factors_scanned = factors.size();

    for (const Word& w : factors) {
        const ParikhPrefixes wp(w, mu.m);
        for (std::size_t ti = 0; ti < closure.all.size(); ++ti) {
            if (auto occ = find_instance(wp, closure.all[ti])) {
                occ->template_index = ti;
                verdict.status = Status::Contains;
                verdict.scan_hit = ScanHit{w, ti, *occ};
                verdict.witness = extract_witness(mu, k, config.witness_prefix_cap);
                // The witness must re-check against the prefix it was found in.
                const Word prefix = fixed_point_prefix(
                    mu, verdict.witness->position +
                            static_cast<std::size_t>(k) * verdict.witness->block_length);
                if (!verify_power_occurrence(prefix, *verdict.witness, mu.m))
                    throw std::logic_error("decide: extracted witness failed re-check");
                return verdict;
            }
        }
    }

    verdict.status = Status::Free;
    return verdict;
}

}  // namespace akp
