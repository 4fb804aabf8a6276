// oracle.hpp -- independent brute-force Abelian k-power detector, used for
// witnesses, cross-validation and property tests.  Deliberately transparent:
// prefix Parikh sums and a quadratic scan over all (position, block length)
// pairs, nothing shared with the template machinery's search path.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include <akp/words.hpp>

namespace akp {

struct PowerOccurrence {
    std::size_t position = 0;
    std::size_t block_length = 0;
    int k = 0;

    friend bool operator==(const PowerOccurrence&, const PowerOccurrence&) = default;
};

/// Least occurrence (by position, then block length) of an Abelian k-power
/// in w: k consecutive blocks of one length with pairwise equal Parikh
/// vectors.
inline std::optional<PowerOccurrence> find_abelian_power(const ParikhPrefixes& wp, int k) {
    if (k < 2) throw std::invalid_argument("find_abelian_power: k must be >= 2");
    const std::size_t n = wp.size();
    const std::size_t uk = static_cast<std::size_t>(k);
    for (std::size_t pos = 0; pos < n; ++pos) {
        for (std::size_t len = 1; pos + uk * len <= n; ++len) {
            bool ok = true;
            for (std::size_t i = 0; i + 1 < uk && ok; ++i)
                ok = wp.range_anagram(pos + i * len, pos + (i + 1) * len,
                                      pos + (i + 1) * len, pos + (i + 2) * len);
            if (ok) return PowerOccurrence{pos, len, k};
        }
    }
    return std::nullopt;
}

inline std::optional<PowerOccurrence> find_abelian_power(const Word& w, int k, int m) {
    return find_abelian_power(ParikhPrefixes(w, m), k);
}

/// Re-checks a reported occurrence against its source word.
inline bool verify_power_occurrence(const Word& w, const PowerOccurrence& occ, int m) {
    if (occ.k < 2 || occ.block_length < 1) return false;
    const std::size_t need = occ.position + static_cast<std::size_t>(occ.k) * occ.block_length;
    if (need > w.size()) return false;
    ParikhPrefixes wp(w, m);
    for (int i = 0; i + 1 < occ.k; ++i) {
        const std::size_t b = occ.position + static_cast<std::size_t>(i) * occ.block_length;
        if (!wp.range_anagram(b, b + occ.block_length, b + occ.block_length, b + 2 * occ.block_length))
            return false;
    }
    return true;
}

}  // namespace akp
