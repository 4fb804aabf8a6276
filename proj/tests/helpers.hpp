// Shared fixtures and deterministic generators for the test suites.
#pragma once

#include <numeric>
#include <random>

#include <akp/akp.hpp>

namespace akp::testing {

inline Morphism dekking() { return {3, {{1, 1, 2, 3}, {1, 3, 3}, {2, 2, 3}}}; }
inline Morphism binary_square() { return {2, {{1, 1, 2, 1}, {2, 2, 1}}}; }
inline Morphism thue_morse() { return {2, {{1, 2}, {2, 1}}}; }
inline Morphism norm_fail() { return {2, {{1, 1, 2}, {1, 2, 2}}}; }
inline Morphism short_image() { return {2, {{1, 2}, {1}}}; }

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Word random_word(Rng& rng, int m, int len) {
    Word w(static_cast<std::size_t>(len));
    for (auto& a : w) a = rand_int(rng, 1, m);
    return w;
}

/// Random morphism passing validate(): image(1) starts with 1, all images
/// have length >= 2, letters in range.  Matrix conditions are not enforced.
inline Morphism random_valid_morphism(Rng& rng, int max_m = 4, int max_len = 4) {
    Morphism mu;
    mu.m = rand_int(rng, 1, max_m);
    mu.images.resize(static_cast<std::size_t>(mu.m));
    for (int a = 1; a <= mu.m; ++a) {
        Word img = random_word(rng, mu.m, rand_int(rng, 2, max_len));
        if (a == 1) img.front() = 1;
        mu.images[static_cast<std::size_t>(a - 1)] = std::move(img);
    }
    return mu;
}

/// Word with the given letter counts, in random order.
inline Word shuffled_word(Rng& rng, const ParikhVector& counts) {
    Word w;
    for (std::size_t j = 0; j < counts.size(); ++j)
        w.insert(w.end(), static_cast<std::size_t>(counts[j]), static_cast<Letter>(j + 1));
    std::shuffle(w.begin(), w.end(), rng);
    return w;
}

}  // namespace akp::testing
