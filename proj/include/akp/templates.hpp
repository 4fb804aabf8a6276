// templates.hpp -- the k-template calculus: the all-zero target template,
// the parent relation, the ancestor closure, the diff-norm statistic Delta,
// the radius bound on ancestor diffs, and detection of template instances
// inside finite words.
//
// A k-template is a tuple [a_1..a_{k+1}, d_1..d_{k-1}] of border letters
// (possibly empty) and Parikh-difference vectors.  A word realizes it when
// it contains a non-empty factor a_1 X_1 a_2 X_2 ... a_k X_k a_{k+1} with
// psi(X_{i+1}) - psi(X_i) = d_i.
#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include <akp/exactlinalg.hpp>
#include <akp/words.hpp>

namespace akp {

class ClosureOverflowError : public std::runtime_error {
public:
    explicit ClosureOverflowError(std::size_t cap)
        : std::runtime_error("ancestor closure exceeded cap of " + std::to_string(cap)) {}
};

/// Border slots hold a letter 1..m or 0 for the empty border.
inline constexpr Letter kNoBorder = 0;

struct Template {
    int k = 0;
    std::vector<Letter> borders;      // k+1 entries, 0 = empty
    std::vector<ParikhVector> diffs;  // k-1 entries, each of length m

    int alphabet_size() const { return static_cast<int>(diffs.front().size()); }

    friend auto operator<=>(const Template&, const Template&) = default;
};

/// T_k: all borders empty, all diffs zero.  Its instances are exactly the
/// Abelian k-powers.
inline Template power_template(int k, int m) {
    if (k < 2) throw std::invalid_argument("power_template: k must be >= 2");
    Template t;
    t.k = k;
    t.borders.assign(static_cast<std::size_t>(k) + 1, kNoBorder);
    t.diffs.assign(static_cast<std::size_t>(k) - 1, pv_zero(m));
    return t;
}

inline bool is_power_template(const Template& t) {
    for (Letter a : t.borders)
        if (a != kNoBorder) return false;
    for (const ParikhVector& d : t.diffs)
        for (std::int64_t x : d)
            if (x != 0) return false;
    return true;
}

namespace detail {

/// One way of factoring an image around a child border letter:
/// mu(image_letter) = prefix . a . suffix (a empty when the child border is).
struct BorderChoice {
    Letter image_letter = kNoBorder;  // the parent border A_i; 0 = empty
    ParikhVector prefix_psi;
    ParikhVector suffix_psi;

    friend auto operator<=>(const BorderChoice&, const BorderChoice&) = default;
};

/// All factorizations mu(A) = prefix . a . suffix for a given child border a,
/// with A a letter.  For a = empty these are every split point of every
/// image, edges included; for a letter, its occurrences inside each image.
/// A formal A = empty candidate is deliberately not generated: whenever a
/// block boundary of a long instance falls at an image boundary, the edge
/// split of the adjacent image letter produces the same parent instance, and
/// long instances place adjacent borders in distinct images, so letter
/// candidates alone suffice for the inverse direction.  This is also the
/// convention under which the target closure counts are reproduced.
inline std::vector<BorderChoice> border_choices(const Morphism& mu, Letter a) {
    const int m = mu.m;
    std::vector<BorderChoice> out;
    for (Letter b = 1; b <= m; ++b) {
        const Word& img = mu.image(b);
        const ParikhVector total = parikh(img, m);
        ParikhVector prefix = pv_zero(m);
        if (a == kNoBorder) {
            for (std::size_t split = 0; split <= img.size(); ++split) {
                if (split > 0) ++prefix[static_cast<std::size_t>(img[split - 1] - 1)];
                out.push_back({b, prefix, pv_sub(total, prefix)});
            }
        } else {
            for (std::size_t pos = 0; pos < img.size(); ++pos) {
                if (img[pos] == a) {
                    ParikhVector suffix = pv_sub(total, prefix);
                    --suffix[static_cast<std::size_t>(a - 1)];
                    out.push_back({b, prefix, suffix});
                }
                ++prefix[static_cast<std::size_t>(img[pos] - 1)];
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

/// All parents of t: templates [A_1..A_{k+1}, D_1..D_{k-1}] such that each
/// mu(A_i) factors as prefix_i . a_i . suffix_i and each
/// D_i = (d_i + psi(suffix_i) + psi(prefix_{i+1})
///            - psi(suffix_{i+1}) - psi(prefix_{i+2})) * M^{-1}
/// is integral.  Parent borders are always letters (see border_choices), so
/// the all-zero power template never appears in its own parent set; the
/// closure adds it as an ancestor explicitly.
inline std::set<Template> parents(const Template& t, const Morphism& mu, const RowSolver& solver) {
    const int k = t.k;
    const std::size_t slots = static_cast<std::size_t>(k) + 1;
    std::vector<std::vector<detail::BorderChoice>> choices(slots);
    for (std::size_t i = 0; i < slots; ++i) choices[i] = detail::border_choices(mu, t.borders[i]);

    std::set<Template> out;
    std::vector<const detail::BorderChoice*> pick(slots, nullptr);
    std::vector<ParikhVector> parent_diffs(static_cast<std::size_t>(k) - 1);

    auto descend = [&](auto&& self, std::size_t slot) -> void {
        if (slot == slots) {
            Template p;
            p.k = k;
            p.borders.reserve(slots);
            for (const auto* c : pick) p.borders.push_back(c->image_letter);
            p.diffs = parent_diffs;
            out.insert(std::move(p));
            return;
        }
        for (const detail::BorderChoice& c : choices[slot]) {
            pick[slot] = &c;
            if (slot >= 2) {
                // Diff q couples slots q, q+1, q+2; solvable once slot q+2 is fixed.
                const std::size_t q = slot - 2;
                ParikhVector v = pv_add(t.diffs[q], pick[q]->suffix_psi);
                v = pv_add(v, pick[q + 1]->prefix_psi);
                v = pv_sub(v, pick[q + 1]->suffix_psi);
                v = pv_sub(v, pick[slot]->prefix_psi);
                std::optional<ParikhVector> d = solver.solve(v);
                if (!d) continue;
                parent_diffs[q] = std::move(*d);
            }
            self(self, slot + 1);
        }
    };
    descend(descend, 0);
    return out;
}

inline std::set<Template> parents(const Template& t, const Morphism& mu, const FrequencyMatrix& M) {
    return parents(t, mu, RowSolver(M));
}

/// Ancestor closure of T_k, computed breadth-first with per-generation
/// bookkeeping.  `all` is canonically ordered; `generation_sizes` starts at
/// {1} for T_k itself and ends with the 0 of the empty final frontier.
struct AncestorClosure {
    std::vector<Template> all;
    std::vector<std::size_t> generation_sizes;
};

inline AncestorClosure ancestors(const Morphism& mu, int k, std::size_t cap = 1'000'000) {
    if (cap < 1) throw std::invalid_argument("ancestors: cap must be >= 1");
    if (!validate(mu).ok()) throw std::invalid_argument("ancestors: morphism fails validation");
    const FrequencyMatrix M = frequency_matrix(mu);
    const RowSolver solver(M);  // throws SingularMatrixError if det = 0
    if (!inverse_norm_lt_one(M))
        throw std::invalid_argument("ancestors: |M^{-1}| < 1 is required for a finite closure");

    const Template root = power_template(k, mu.m);
    std::set<Template> seen{root};
    std::vector<Template> frontier{root};
    AncestorClosure closure;
    closure.generation_sizes.push_back(1);

    while (!frontier.empty()) {
        std::set<Template> next;
        for (const Template& t : frontier)
            for (const Template& p : parents(t, mu, solver))
                if (!seen.contains(p)) next.insert(p);
        for (const Template& p : next) {
            seen.insert(p);
            if (seen.size() > cap) throw ClosureOverflowError(cap);
        }
        closure.generation_sizes.push_back(next.size());
        frontier.assign(next.begin(), next.end());
    }

    closure.all.assign(seen.begin(), seen.end());
    return closure;
}

inline std::int64_t isqrt_floor(std::int64_t x) {
    if (x < 0) throw std::invalid_argument("isqrt_floor: negative input");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

/// Delta = floor of the largest Euclidean norm over all diff vectors of all
/// given templates.
inline std::int64_t delta(const std::vector<Template>& ts) {
    if (ts.empty()) throw std::invalid_argument("delta: template set must be nonempty");
    std::int64_t max_sq = 0;
    for (const Template& t : ts)
        for (const ParikhVector& d : t.diffs) max_sq = std::max(max_sq, pv_norm_sq(d));
    return isqrt_floor(max_sq);
}

/// Largest Euclidean distance between any two achievable border-contribution
/// vectors psi(suffix) + psi(prefix), with suffixes and prefixes drawn from
/// the images of mu.  Bounds the Parikh shift a parent step can introduce.
inline double max_boundary_shift(const Morphism& mu) {
    std::set<ParikhVector> sums;
    std::vector<ParikhVector> prefixes, suffixes;
    for (Letter a = 1; a <= mu.m; ++a) {
        const Word& img = mu.image(a);
        ParikhVector p = pv_zero(mu.m);
        prefixes.push_back(p);
        for (std::size_t i = 0; i < img.size(); ++i) {
            ++p[static_cast<std::size_t>(img[i] - 1)];
            prefixes.push_back(p);
        }
        const ParikhVector total = p;
        ParikhVector s = total;
        suffixes.push_back(s);
        for (std::size_t i = 0; i < img.size(); ++i) {
            --s[static_cast<std::size_t>(img[i] - 1)];
            suffixes.push_back(s);
        }
    }
    for (const ParikhVector& s : suffixes)
        for (const ParikhVector& p : prefixes) sums.insert(pv_add(s, p));

    double worst = 0.0;
    for (auto it = sums.begin(); it != sums.end(); ++it)
        for (auto jt = std::next(it); jt != sums.end(); ++jt) {
            const double n = std::sqrt(static_cast<double>(pv_norm_sq(pv_sub(*it, *jt))));
            worst = std::max(worst, n);
        }
    return worst;
}

/// r = c* / (1 - |M^{-1}|), evaluated with an upper estimate of the norm.
inline double radius_from(double c_star, double inverse_norm_upper) {
    if (inverse_norm_upper >= 1.0) return std::numeric_limits<double>::infinity();
    return c_star / (1.0 - inverse_norm_upper);
}

/// Radius of the ball that contains every diff vector of every ancestor.
/// Defensive consistency check on the closure, not part of any decision.
inline double radius_bound(const Morphism& mu, const FrequencyMatrix& M) {
    if (!inverse_norm_lt_one(M))
        throw std::invalid_argument("radius_bound: |M^{-1}| < 1 is required");
    const double upper = inverse_norm_estimate(M) + 1e-6;
    return radius_from(max_boundary_shift(mu), upper);
}

/// A located instance a_1 X_1 a_2 X_2 ... a_k X_k a_{k+1} inside a word.
struct InstanceOccurrence {
    std::size_t start = 0;
    std::size_t length = 0;
    std::vector<std::size_t> border_positions;  // k+1; empty borders sit at the next block start
    std::vector<std::size_t> block_starts;      // k
    std::vector<std::size_t> block_lengths;     // k
    std::size_t template_index = 0;             // caller-assigned identifier
};

/// Least occurrence (by start, then first block length) of an instance of t
/// in the indexed word, or nullopt.  Block lengths beyond the first are
/// forced by the diff vectors: |X_{i+1}| = |X_i| + sum(d_i).
inline std::optional<InstanceOccurrence> find_instance(const ParikhPrefixes& wp, const Template& t) {
    const int k = t.k;
    const std::size_t uk = static_cast<std::size_t>(k);
    const std::size_t n = wp.size();

    // Cumulative length offsets of block i relative to block 0.
    std::vector<std::int64_t> offset(uk, 0);
    std::int64_t min_offset = 0, sum_offset = 0;
    for (std::size_t i = 1; i < uk; ++i) {
        offset[i] = offset[i - 1] + pv_entry_sum(t.diffs[i - 1]);
        min_offset = std::min(min_offset, offset[i]);
        sum_offset += offset[i];
    }
    std::int64_t border_count = 0;
    for (Letter a : t.borders)
        if (a != kNoBorder) ++border_count;

    const std::int64_t first_lo = std::max<std::int64_t>(0, -min_offset);
    for (std::size_t start = 0; start < n; ++start) {
        const std::int64_t avail = static_cast<std::int64_t>(n - start);
        const std::int64_t budget = avail - sum_offset - border_count;
        if (budget < 0) continue;
        const std::int64_t first_hi = budget / k;
        for (std::int64_t first_len = first_lo; first_len <= first_hi; ++first_len) {
            const std::int64_t total = border_count + static_cast<std::int64_t>(k) * first_len + sum_offset;
            if (total < 1) continue;  // instances are non-empty

            InstanceOccurrence occ;
            occ.start = start;
            occ.length = static_cast<std::size_t>(total);
            occ.border_positions.resize(uk + 1);
            occ.block_starts.resize(uk);
            occ.block_lengths.resize(uk);

            std::size_t pos = start;
            bool ok = true;
            for (std::size_t i = 0; i < uk && ok; ++i) {
                occ.border_positions[i] = pos;
                if (t.borders[i] != kNoBorder) {
                    if (wp.word()[pos] != t.borders[i]) { ok = false; break; }
                    ++pos;
                }
                occ.block_starts[i] = pos;
                occ.block_lengths[i] = static_cast<std::size_t>(first_len + offset[i]);
                pos += occ.block_lengths[i];
            }
            if (ok) {
                occ.border_positions[uk] = pos;
                if (t.borders[uk] != kNoBorder) {
                    if (wp.word()[pos] != t.borders[uk]) ok = false;
                    else ++pos;
                }
            }
            for (std::size_t i = 0; i + 1 < uk && ok; ++i)
                ok = wp.range_diff_equals(occ.block_starts[i],
                                          occ.block_starts[i] + occ.block_lengths[i],
                                          occ.block_starts[i + 1],
                                          occ.block_starts[i + 1] + occ.block_lengths[i + 1],
                                          t.diffs[i]);
            if (ok) return occ;
        }
    }
    return std::nullopt;
}

inline std::optional<InstanceOccurrence> find_instance(const Word& w, const Template& t) {
    return find_instance(ParikhPrefixes(w, t.alphabet_size()), t);
}

/// Re-checks a reported instance against the word it was found in.
inline bool verify_instance(const Word& w, const Template& t, const InstanceOccurrence& occ) {
    const std::size_t uk = static_cast<std::size_t>(t.k);
    if (occ.block_starts.size() != uk || occ.block_lengths.size() != uk) return false;
    if (occ.length < 1) return false;
    std::size_t pos = occ.start;
    for (std::size_t i = 0; i < uk; ++i) {
        if (t.borders[i] != kNoBorder) {
            if (pos >= w.size() || w[pos] != t.borders[i]) return false;
            ++pos;
        }
        if (occ.block_starts[i] != pos) return false;
        pos += occ.block_lengths[i];
        if (pos > w.size()) return false;
    }
    if (t.borders[uk] != kNoBorder) {
        if (pos >= w.size() || w[pos] != t.borders[uk]) return false;
        ++pos;
    }
    if (pos - occ.start != occ.length) return false;
    const ParikhPrefixes wp(w, t.alphabet_size());
    for (std::size_t i = 0; i + 1 < uk; ++i)
        if (!wp.range_diff_equals(occ.block_starts[i], occ.block_starts[i] + occ.block_lengths[i],
                                  occ.block_starts[i + 1],
                                  occ.block_starts[i + 1] + occ.block_lengths[i + 1], t.diffs[i]))
            return false;
    return true;
}

}  // namespace akp
