// words.hpp -- alphabet, words, Parikh vectors, morphisms, fixed-point
// prefixes and the factor language of a morphic fixed point.
#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace akp {

// Letters are 1..m.  0 never occurs inside a word; templates use it to mark
// an empty border slot.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

// Row vector of letter multiplicities.  Entries may be negative when the
// vector is a difference of two counts.
using ParikhVector = std::vector<std::int64_t>;

inline ParikhVector pv_zero(int m) { return ParikhVector(static_cast<std::size_t>(m), 0); }

inline ParikhVector pv_add(const ParikhVector& a, const ParikhVector& b) {
    assert(a.size() == b.size());
    ParikhVector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline ParikhVector pv_sub(const ParikhVector& a, const ParikhVector& b) {
    assert(a.size() == b.size());
    ParikhVector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline std::int64_t pv_entry_sum(const ParikhVector& a) {
    std::int64_t s = 0;
    for (std::int64_t x : a) s += x;
    return s;
}

inline std::int64_t pv_norm_sq(const ParikhVector& a) {
    std::int64_t s = 0;
    for (std::int64_t x : a) s += x * x;
    return s;
}

/// Parikh map: entry j counts the occurrences of letter j+1 in w.
inline ParikhVector parikh(const Word& w, int m) {
    ParikhVector counts = pv_zero(m);
    for (Letter a : w) {
        assert(a >= 1 && a <= m);
        ++counts[static_cast<std::size_t>(a - 1)];
    }
    return counts;
}

/// A morphism on {1..m}, given by one image word per letter.
struct Morphism {
    int m = 0;
    std::vector<Word> images;  // images[a-1] = mu(a)

    const Word& image(Letter a) const { return images[static_cast<std::size_t>(a - 1)]; }

    friend bool operator==(const Morphism&, const Morphism&) = default;
};

struct ValidationReport {
    bool prolongable_on_one = false;  // mu(1) = 1x with x nonempty
    bool images_long_enough = false;  // |mu(a)| >= 2 for every a
    bool letters_in_range = false;    // every image letter lies in 1..m

    bool ok() const { return prolongable_on_one && images_long_enough && letters_in_range; }
};

/// Checks the structural preconditions on a morphism.  Matrix conditions
/// (nonsingularity, contraction) are reported by the decision procedure,
/// not here.
inline ValidationReport validate(const Morphism& mu) {
    ValidationReport rep;
    if (mu.m < 1 || mu.images.size() != static_cast<std::size_t>(mu.m)) return rep;
    rep.letters_in_range = true;
    rep.images_long_enough = true;
    for (const Word& img : mu.images) {
        if (img.size() < 2) rep.images_long_enough = false;
        for (Letter a : img)
            if (a < 1 || a > mu.m) rep.letters_in_range = false;
    }
    const Word& first = mu.images.front();
    rep.prolongable_on_one = first.size() >= 2 && first.front() == 1;
    return rep;
}

/// Applies mu letterwise: the concatenation of the images of the letters of w.
inline Word apply(const Morphism& mu, const Word& w) {
    std::size_t total = 0;
    for (Letter a : w) total += mu.image(a).size();
    Word out;
    out.reserve(total);
    for (Letter a : w) {
        const Word& img = mu.image(a);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

/// N = max_a |mu(a)|.
inline int max_image_length(const Morphism& mu) {
    std::size_t n = 0;
    for (const Word& img : mu.images) n = std::max(n, img.size());
    return static_cast<int>(n);
}

/// First n letters of the fixed point mu^omega(1).  Each iterate mu^i(1) is a
/// prefix of the next, so iterating on a truncated prefix is sound.
inline Word fixed_point_prefix(const Morphism& mu, std::size_t n) {
    if (!validate(mu).ok())
        throw std::invalid_argument("fixed_point_prefix: morphism fails validation");
    if (n == 0) return {};
    Word z{1};
    while (z.size() < n) {
        Word next;
        next.reserve(std::min<std::size_t>(n + max_image_length(mu), 2 * z.size() * 2));
        for (Letter a : z) {
            const Word& img = mu.image(a);
            next.insert(next.end(), img.begin(), img.end());
            if (next.size() >= n) break;
        }
        z = std::move(next);
    }
    z.resize(n);
    return z;
}

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (Letter a : w) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(a));
            h *= 0x100000001b3ull;
            h ^= h >> 31;
        }
        return static_cast<std::size_t>(h);
    }
};

/// All factors of mu^omega(1) of length <= max_len, as a canonically ordered
/// set.  Worklist closure: seed with the word 1 and close under
/// w |-> factors of mu(w) of length <= max_len.
///
/// Expansion shortcut: since every image has length >= 2, a factor v of
/// mu(w) with |v| <= max_len already occurs in mu(u) for a factor u of w
/// with |u| <= floor(|v|/2) + 1.  Words longer than floor(max_len/2) + 1
/// therefore contribute nothing new when expanded and are stored but not
/// put on the worklist.  The resulting fixpoint is unchanged.
inline std::set<Word> factor_set(const Morphism& mu, std::size_t max_len) {
    if (max_len < 1) throw std::invalid_argument("factor_set: max_len must be >= 1");
    if (!validate(mu).ok())
        throw std::invalid_argument("factor_set: morphism fails validation");

    const std::size_t cover_len = max_len / 2 + 1;
    std::unordered_set<Word, WordHash> seen;
    std::deque<Word> todo;
    auto record = [&](Word w) {
        auto [it, fresh] = seen.insert(std::move(w));
        if (fresh && it->size() <= cover_len) todo.push_back(*it);
    };

    record(Word{1});
    while (!todo.empty()) {
        Word w = std::move(todo.front());
        todo.pop_front();
        const Word v = akp::apply(mu, w);
        for (std::size_t start = 0; start < v.size(); ++start) {
            Word sub;
            sub.reserve(std::min(max_len, v.size() - start));
            for (std::size_t j = start; j < v.size() && j - start < max_len; ++j) {
                sub.push_back(v[j]);
                record(sub);
            }
        }
    }
    return std::set<Word>(seen.begin(), seen.end());
}

/// Prefix sums of letter counts, for O(1) Parikh queries on subranges.
class ParikhPrefixes {
public:
    ParikhPrefixes(Word w, int m)
        : m_(m), w_(std::move(w)), sums_((w_.size() + 1) * static_cast<std::size_t>(m), 0) {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            const std::size_t row = (i + 1) * static_cast<std::size_t>(m_);
            const std::size_t prev = i * static_cast<std::size_t>(m_);
            for (int j = 0; j < m_; ++j) sums_[row + static_cast<std::size_t>(j)] = sums_[prev + static_cast<std::size_t>(j)];
            ++sums_[row + static_cast<std::size_t>(w_[i] - 1)];
        }
    }

    int alphabet_size() const { return m_; }
    std::size_t size() const { return w_.size(); }
    const Word& word() const { return w_; }

    /// Occurrences of letter a in w[begin, end).
    std::int64_t count(std::size_t begin, std::size_t end, Letter a) const {
        const std::size_t j = static_cast<std::size_t>(a - 1);
        return sums_[end * static_cast<std::size_t>(m_) + j] - sums_[begin * static_cast<std::size_t>(m_) + j];
    }

    ParikhVector range_parikh(std::size_t begin, std::size_t end) const {
        ParikhVector out = pv_zero(m_);
        for (int j = 0; j < m_; ++j)
            out[static_cast<std::size_t>(j)] =
                sums_[end * static_cast<std::size_t>(m_) + static_cast<std::size_t>(j)] -
                sums_[begin * static_cast<std::size_t>(m_) + static_cast<std::size_t>(j)];
        return out;
    }

    /// psi(w[b2,e2)) - psi(w[b1,e1)) == d, with early exit.
    bool range_diff_equals(std::size_t b1, std::size_t e1, std::size_t b2, std::size_t e2,
                           const ParikhVector& d) const {
        for (int j = 0; j < m_; ++j) {
            const std::size_t col = static_cast<std::size_t>(j);
            const std::int64_t c2 = sums_[e2 * m_ + col] - sums_[b2 * m_ + col];
            const std::int64_t c1 = sums_[e1 * m_ + col] - sums_[b1 * m_ + col];
            if (c2 - c1 != d[col]) return false;
        }
        return true;
    }

    /// psi(w[b1,e1)) == psi(w[b2,e2)), with early exit.
    bool range_anagram(std::size_t b1, std::size_t e1, std::size_t b2, std::size_t e2) const {
        for (int j = 0; j < m_; ++j) {
            const std::size_t col = static_cast<std::size_t>(j);
            if (sums_[e2 * m_ + col] - sums_[b2 * m_ + col] !=
                sums_[e1 * m_ + col] - sums_[b1 * m_ + col])
                return false;
        }
        return true;
    }

private:
    int m_;
    Word w_;
    std::vector<std::int32_t> sums_;  // sums_[i*m + j] = |w[0,i)|_{j+1}
};

/// Renders a word compactly ("1123") when all letters are single digits,
/// space-separated otherwise.
inline std::string format_word(const Word& w) {
    bool compact = true;
    for (Letter a : w)
        if (a > 9) compact = false;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

/// Parses a compact digit string ("1123") into a word.  Test and demo helper;
/// only letters 1..9 can be written this way.
inline Word word_from_digits(std::string_view digits) {
    Word w;
    w.reserve(digits.size());
    for (char c : digits) {
        if (c < '1' || c > '9') throw std::invalid_argument("word_from_digits: digit 1..9 expected");
        w.push_back(c - '0');
    }
    return w;
}

}  // namespace akp
