// exactlinalg.hpp -- exact integer/rational matrix computations backing the
// template calculus: frequency matrix, determinant, rational inverse, the
// contraction test |M^{-1}| < 1 decided in integer arithmetic, a
// deterministic floating-point norm estimate, and exact row solves.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <akp/words.hpp>

namespace akp {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using BigMatrix = std::vector<std::vector<BigInt>>;

class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError() : std::runtime_error("singular frequency matrix") {}
};

/// m x m integer matrix with row i = psi(mu(i+1)).
struct FrequencyMatrix {
    int m = 0;
    std::vector<std::vector<std::int64_t>> rows;

    std::int64_t at(int i, int j) const {
        return rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

/// m x m matrix of exact rationals.
struct RationalMatrix {
    int m = 0;
    std::vector<std::vector<BigRational>> rows;

    const BigRational& at(int i, int j) const {
        return rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

inline FrequencyMatrix frequency_matrix(const Morphism& mu) {
    FrequencyMatrix M;
    M.m = mu.m;
    M.rows.reserve(static_cast<std::size_t>(mu.m));
    for (Letter a = 1; a <= mu.m; ++a) {
        ParikhVector row = parikh(mu.image(a), mu.m);
        M.rows.emplace_back(row.begin(), row.end());
    }
    return M;
}

inline BigMatrix to_big(const FrequencyMatrix& M) {
    BigMatrix A(static_cast<std::size_t>(M.m), std::vector<BigInt>(static_cast<std::size_t>(M.m)));
    for (int i = 0; i < M.m; ++i)
        for (int j = 0; j < M.m; ++j) A[i][j] = M.at(i, j);
    return A;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt det(BigMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline BigInt det(const FrequencyMatrix& M) { return det(to_big(M)); }

/// Gauss-Jordan inverse over exact rationals.
inline RationalMatrix inverse(const FrequencyMatrix& M) {
    const int m = M.m;
    const std::size_t n = static_cast<std::size_t>(m);
    std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = M.rows[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw SingularMatrixError();
        std::swap(a[col], a[piv]);
        const BigRational p = a[col][col];
        for (std::size_t j = col; j < 2 * n; ++j) a[col][j] /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const BigRational f = a[i][col];
            for (std::size_t j = col; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    RationalMatrix inv;
    inv.m = m;
    inv.rows.assign(n, std::vector<BigRational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.rows[i][j] = a[i][n + j];
    return inv;
}

/// Gram matrix M^T M.
inline BigMatrix gram(const FrequencyMatrix& M) {
    const std::size_t n = static_cast<std::size_t>(M.m);
    BigMatrix g(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BigInt s = 0;
            for (std::size_t r = 0; r < n; ++r)
                s += BigInt(M.rows[r][i]) * BigInt(M.rows[r][j]);
            g[i][j] = s;
        }
    return g;
}

/// Determinants of the leading principal submatrices, orders 1..n.
inline std::vector<BigInt> leading_principal_minors(const BigMatrix& a) {
    const std::size_t n = a.size();
    std::vector<BigInt> minors;
    minors.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        BigMatrix sub(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[i][j];
        minors.push_back(det(std::move(sub)));
    }
    return minors;
}

/// Leading principal minors of M^T M - I.  By Sylvester's criterion these
/// are all positive exactly when the smallest singular value of M exceeds 1,
/// i.e. when |M^{-1}| < 1 in the induced Euclidean norm.
inline std::vector<BigInt> contraction_minors(const FrequencyMatrix& M) {
    BigMatrix g = gram(M);
    for (std::size_t i = 0; i < g.size(); ++i) g[i][i] -= 1;
    return leading_principal_minors(g);
}

/// Exact decision of |M^{-1}| < 1 (strict).
inline bool inverse_norm_lt_one(const FrequencyMatrix& M) {
    if (det(M) == 0) throw SingularMatrixError();
    for (const BigInt& minor : contraction_minors(M))
        if (minor <= 0) return false;
    return true;
}

namespace detail {

/// True when the symmetric integer matrix a - (p/q) I is positive definite
/// (q > 0).  Scaling by q preserves minor signs: the order-k minor of
/// q a - p I equals q^k times the order-k minor of a - (p/q) I.
inline bool shifted_positive_definite(const BigMatrix& a, const BigInt& p, const BigInt& q) {
    const std::size_t n = a.size();
    BigMatrix s(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            s[i][j] = q * a[i][j];
            if (i == j) s[i][j] -= p;
        }
    for (const BigInt& minor : leading_principal_minors(s))
        if (minor <= 0) return false;
    return true;
}

}  // namespace detail

/// Deterministic floating approximation of |M^{-1}| = 1/sqrt(lambda_min(M^T M)),
/// accurate to 1e-6.  Bisection on lambda with an exact positive-definiteness
/// test at each rational midpoint; reporting only, never used for decisions.
inline double inverse_norm_estimate(const FrequencyMatrix& M) {
    if (det(M) == 0) throw SingularMatrixError();
    const BigMatrix g = gram(M);
    const std::size_t n = g.size();

    // Gershgorin upper bound on lambda_max(M^T M).
    BigInt hi_num = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row = 0;
        for (std::size_t j = 0; j < n; ++j) row += abs(g[i][j]);
        if (row + 1 > hi_num) hi_num = row + 1;
    }

    // Invariant: lambda_min lies in (lo, hi], endpoints lo_num/2^shift etc.
    BigInt lo_num = 0;
    BigInt hi_scaled = hi_num;  // value = hi_scaled / 2^shift
    int shift = 0;
    const auto to_double = [&](const BigInt& num, int sh) {
        return num.convert_to<double>() / std::ldexp(1.0, sh);
    };
    for (int iter = 0; iter < 200; ++iter) {
        const double lo_d = to_double(lo_num, shift);
        const double hi_d = to_double(hi_scaled, shift);
        if (lo_d > 0) {
            const double spread = 1.0 / std::sqrt(lo_d) - 1.0 / std::sqrt(hi_d);
            if (spread < 1e-8) break;
        }
        // midpoint (lo + hi)/2 = (lo_num + hi_scaled) / 2^(shift+1)
        const BigInt mid_num = lo_num + hi_scaled;
        ++shift;
        lo_num <<= 1;
        hi_scaled <<= 1;
        const BigInt q = BigInt(1) << shift;
        if (detail::shifted_positive_definite(g, mid_num, q))
            lo_num = mid_num;  // lambda_min > mid
        else
            hi_scaled = mid_num;  // lambda_min <= mid
    }
    const double lo_d = to_double(lo_num, shift);
    const double hi_d = to_double(hi_scaled, shift);
    const double inv_hi = 1.0 / std::sqrt(hi_d);
    const double inv_lo = lo_d > 0 ? 1.0 / std::sqrt(lo_d) : std::numeric_limits<double>::infinity();
    return 0.5 * (inv_hi + inv_lo);
}

/// Precomputed adjugate/determinant pair for repeated exact row solves
/// D * M = v.  D = v * adj(M) / det(M); the solve succeeds only when every
/// entry divides out to an integer.
class RowSolver {
public:
    explicit RowSolver(const FrequencyMatrix& M)
        : m_(M.m), determinant_(det(M)) {
        if (determinant_ == 0) throw SingularMatrixError();
        // adj(M) = det(M) * M^{-1}, entrywise exact integers.
        const RationalMatrix inv = inverse(M);
        adjugate_.assign(static_cast<std::size_t>(m_), std::vector<BigInt>(static_cast<std::size_t>(m_)));
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) {
                const BigRational e = inv.at(i, j) * determinant_;
                assert(denominator(e) == 1);
                adjugate_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = numerator(e);
            }
    }

    int alphabet_size() const { return m_; }
    const BigInt& determinant() const { return determinant_; }
    const BigMatrix& adjugate() const { return adjugate_; }

    std::optional<ParikhVector> solve(const ParikhVector& v) const {
        const std::size_t n = static_cast<std::size_t>(m_);
        ParikhVector out(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            BigInt s = 0;
            for (std::size_t i = 0; i < n; ++i) s += v[i] * adjugate_[i][j];
            const BigInt q = s / determinant_;
            if (q * determinant_ != s) return std::nullopt;
            if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min())
                throw std::overflow_error("RowSolver::solve: entry exceeds 64-bit range");
            out[j] = q.convert_to<std::int64_t>();
        }
        return out;
    }

private:
    int m_;
    BigInt determinant_;
    BigMatrix adjugate_;
};

/// The unique rational row D with D * M = v, returned only when integral.
inline std::optional<ParikhVector> solve_row_integer(const ParikhVector& v, const FrequencyMatrix& M) {
    return RowSolver(M).solve(v);
}

}  // namespace akp
