// Closed-form operations on L-banded matrices.
//
// Everything in this header is O(n) or O(n^2) where dense linear algebra
// would be O(n^3); the per-formula comments state the closed form and its
// boundary conventions. Derived quantities:
//   differences   D_k = a_k - a_{k+1} (k < n),          D_n = a_n
//   coefficients  d_0 = 0, d_k = 1/(a_k - a_{k+1}) (k < n), d_n = 1/a_n
// A is invertible iff a_n != 0 and a_k != a_{k+1} for every k < n.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "lband/core.hpp"
#include "lband/errors.hpp"
#include "lband/scalar.hpp"

namespace lband {

/// Differences [D_1 .. D_n] with D_n = a_n. Telescoping: sum_{k=i}^n D_k = a_i.
template <field_scalar S>
struct DeltaDifferences {
    std::vector<S> values; // values[k-1] = D_k

    static DeltaDifferences compute(const LBandedMatrix<S>& a) {
        const index_t n = a.n();
        DeltaDifferences out;
        out.values.reserve(n);
        for (index_t k = 1; k < n; ++k) out.values.push_back(a.a(k) - a.a(k + 1));
        out.values.push_back(a.a(n));
        return out;
    }
};

/// Coefficients [d_0 .. d_n] (d_0 = 0). Requires invertibility; near-ties in
/// float mode are rejected rather than inverted into huge coefficients.
template <field_scalar S>
struct DeltaCoefficients {
    std::vector<S> values; // values[k] = d_k, k = 0..n

    static DeltaCoefficients compute(const LBandedMatrix<S>& a, const ToleranceConfig& tol = {}) {
        const index_t n = a.n();
        DeltaCoefficients out;
        out.values.assign(n + 1, S(0));
        for (index_t k = 1; k < n; ++k) {
            if (scalar_eq(a.a(k), a.a(k + 1), tol))
                throw SingularMatrixError(SingularMatrixError::Reason::EqualNeighbors, k,
                                          "band entries " + std::to_string(k) + " and " +
                                              std::to_string(k + 1) + " are equal");
            out.values[k] = S(1) / (a.a(k) - a.a(k + 1));
        }
        if (scalar_is_zero(a.a(n), tol))
            throw SingularMatrixError(SingularMatrixError::Reason::ZeroLastEntry, n,
                                      "trailing band entry is zero");
        out.values[n] = S(1) / a.a(n);
        return out;
    }

    const S& at(index_t k) const { return values[k]; } // k = 0..n
};

/// |A| = a_n * prod_{k<n} (a_k - a_{k+1}). Defined for every band.
template <field_scalar S>
S determinant(const LBandedMatrix<S>& a) {
    S det = a.a(a.n());
    for (index_t k = 1; k < a.n(); ++k)
        det = det * (a.a(k) - a.a(k + 1));
    return det;
}

template <field_scalar S>
bool is_invertible(const LBandedMatrix<S>& a, const ToleranceConfig& tol = {}) {
    if (scalar_is_zero(a.a(a.n()), tol)) return false;
    for (index_t k = 1; k < a.n(); ++k)
        if (scalar_eq(a.a(k), a.a(k + 1), tol)) return false;
    return true;
}

/// Symmetric tridiagonal matrix: diag (n entries) and one off-diagonal
/// (n-1 entries). The inverse of an invertible L-banded matrix lands here.
template <field_scalar S>
class SymTridiagonal {
public:
    SymTridiagonal(std::vector<S> diag, std::vector<S> off)
        : diag_(std::move(diag)), off_(std::move(off)) {
        if (diag_.empty() || off_.size() + 1 != diag_.size())
            throw DimensionMismatchError("tridiagonal needs |off| = |diag| - 1, |diag| >= 1");
    }

    index_t n() const { return diag_.size(); }
    const std::vector<S>& diag() const { return diag_; }
    const std::vector<S>& off() const { return off_; }

    S entry(index_t i, index_t j) const {
        if (i < 1 || i > n() || j < 1 || j > n())
            throw IndexOutOfRangeError("tridiagonal entry (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") outside " + std::to_string(n()) +
                                       "x" + std::to_string(n()));
        if (i == j) return diag_[i - 1];
        const index_t lo = i < j ? i : j, hi = i < j ? j : i;
        if (hi - lo == 1) return off_[lo - 1];
        return S(0);
    }

    DenseSymMatrix<S> to_dense() const {
        DenseSymMatrix<S> out(n());
        for (index_t i = 1; i <= n(); ++i) {
            out.set_sym(i, i, diag_[i - 1]);
            if (i < n()) out.set_sym(i, i + 1, off_[i - 1]);
        }
        return out;
    }

private:
    std::vector<S> diag_;
    std::vector<S> off_;
};

/// A^{-1} is symmetric tridiagonal: diagonal d_{i-1} + d_i, off-diagonal
/// entry (i, i+1) = -d_i. O(n); throws SingularMatrix when not invertible.
template <field_scalar S>
SymTridiagonal<S> inverse(const LBandedMatrix<S>& a, const ToleranceConfig& tol = {}) {
    const auto delta = DeltaCoefficients<S>::compute(a, tol);
    const index_t n = a.n();
    std::vector<S> diag, off;
    diag.reserve(n);
    off.reserve(n - 1);
    for (index_t i = 1; i <= n; ++i) diag.push_back(delta.at(i - 1) + delta.at(i));
    for (index_t i = 1; i < n; ++i) off.push_back(-delta.at(i));
    return SymTridiagonal<S>(std::move(diag), std::move(off));
}

/// x^T A x = sum_k D_k * (x_1 + ... + x_k)^2, O(n) with a running prefix sum.
template <field_scalar S>
S quadratic_form(const LBandedMatrix<S>& a, const std::vector<S>& x) {
    const index_t n = a.n();
    if (x.size() != n)
        throw DimensionMismatchError("quadratic form needs |x| = n");
    const auto diffs = DeltaDifferences<S>::compute(a);
    S prefix = S(0);
    S total = S(0);
    for (index_t k = 1; k <= n; ++k) {
        prefix = prefix + x[k - 1];
        total = total + diffs.values[k - 1] * prefix * prefix;
    }
    return total;
}

/// Single-valued classifier. Chains, checked in this order:
///   PD:  a_1 > a_2 > ... > a_n > 0      ND:  a_1 < a_2 < ... < a_n < 0
///   PSD: same with >=                   NSD: same with <=
/// Semidefinite labels apply only when the strict chain fails; the all-zero
/// band classifies as PSD (it satisfies both semidefinite chains).
template <field_scalar S>
DefinitenessClass classify_definiteness(const LBandedMatrix<S>& a, const ToleranceConfig& tol = {}) {
    const auto diffs = DeltaDifferences<S>::compute(a);
    bool all_pos = true, all_nonneg = true, all_neg = true, all_nonpos = true;
    for (const S& d : diffs.values) {
        const int s = scalar_sign(d, tol);
        all_pos = all_pos && s > 0;
        all_nonneg = all_nonneg && s >= 0;
        all_neg = all_neg && s < 0;
        all_nonpos = all_nonpos && s <= 0;
    }
    if (all_pos) return DefinitenessClass::PositiveDefinite;
    if (all_nonneg) return DefinitenessClass::PositiveSemiDefinite;
    if (all_neg) return DefinitenessClass::NegativeDefinite;
    if (all_nonpos) return DefinitenessClass::NegativeSemiDefinite;
    return DefinitenessClass::Indefinite;
}

/// Literal predicate: A is PSD iff a_1 >= a_2 >= ... >= a_n >= 0.
/// True for positive definite bands as well (unlike the classifier label).
template <field_scalar S>
bool is_positive_semidefinite(const LBandedMatrix<S>& a, const ToleranceConfig& tol = {}) {
    const auto diffs = DeltaDifferences<S>::compute(a);
    for (const S& d : diffs.values)
        if (scalar_sign(d, tol) < 0) return false;
    return true;
}

namespace detail {

/// Index of the last band entry that is nonzero under tol; 0 for the
/// all-zero band.
template <field_scalar S>
index_t last_nonzero_index(const LBandedMatrix<S>& a, const ToleranceConfig& tol) {
    for (index_t k = a.n(); k >= 1; --k)
        if (!scalar_is_zero(a.a(k), tol)) return k;
    return 0;
}

} // namespace detail

/// Unit-lower-triangular L and diagonal d with A = L * diag(d) * L^T.
/// With p the last nonzero band index, the factors take the block form
/// [Ltilde 0; 0 I] / [dtilde 0; 0 0]:
///   l_{i,j} = a_i / a_j  for i > j <= p, identity columns for j > p
///   d_1 = a_1,  d_k = (a_k / a_{k-1}) (a_{k-1} - a_k)  for 2 <= k <= p,
///   d_k = 0 beyond p. The all-zero band yields L = I, d = 0.
template <field_scalar S>
class LdlFactors {
public:
    LdlFactors(std::vector<S> band, std::vector<S> d, index_t p)
        : band_(std::move(band)), d_(std::move(d)), p_(p) {}

    index_t n() const { return band_.size(); }
    index_t p() const { return p_; }
    const std::vector<S>& d() const { return d_; }
    const std::vector<S>& band() const { return band_; }

    S l_entry(index_t i, index_t j) const {
        if (i < 1 || i > n() || j < 1 || j > n())
            throw IndexOutOfRangeError("factor entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") outside " + std::to_string(n()) + "x" + std::to_string(n()));
        if (i == j) return S(1);
        if (j > i) return S(0);
        if (j <= p_) return band_[i - 1] / band_[j - 1];
        return S(0);
    }

    DenseMatrix<S> dense_l() const {
        DenseMatrix<S> l(n(), n());
        for (index_t i = 1; i <= n(); ++i)
            for (index_t j = 1; j <= i; ++j)
                l.at(i, j) = l_entry(i, j);
        return l;
    }

    /// L * diag(d) * L^T; exact over rationals.
    DenseMatrix<S> reconstruct() const {
        const index_t m = n();
        DenseMatrix<S> out(m, m);
        for (index_t i = 1; i <= m; ++i)
            for (index_t j = 1; j <= i; ++j) {
                S acc = S(0);
                const index_t kmax = std::min({i, j, p_});
                for (index_t k = 1; k <= kmax; ++k)
                    acc = acc + d_[k - 1] * l_entry(i, k) * l_entry(j, k);
                // Identity columns beyond p contribute d_i on the diagonal
                // (always zero for factors produced by ldl_decompose).
                if (j > p_ && i == j) acc = acc + d_[i - 1];
                out.at(i, j) = acc;
                out.at(j, i) = acc;
            }
        return out;
    }

private:
    std::vector<S> band_;
    std::vector<S> d_;
    index_t p_;
};

/// LDL^T exists iff a_k != 0 for every k < p (p = last nonzero index);
/// vacuously true for the all-zero band.
template <field_scalar S>
bool ldl_exists(const LBandedMatrix<S>& a, const ToleranceConfig& tol = {}) {
    const index_t p = detail::last_nonzero_index(a, tol);
    for (index_t k = 1; k < p; ++k)
        if (scalar_is_zero(a.a(k), tol)) return false;
    return true;
}

template <field_scalar S>
LdlFactors<S> ldl_decompose(const LBandedMatrix<S>& a, const ToleranceConfig& tol = {}) {
    const index_t n = a.n();
    const index_t p = detail::last_nonzero_index(a, tol);
    for (index_t k = 1; k < p; ++k)
        if (scalar_is_zero(a.a(k), tol))
            throw NoLdlDecompositionError("band entry " + std::to_string(k) +
                                          " is zero before the last nonzero entry");
    std::vector<S> d(n, S(0));
    if (p >= 1) {
        d[0] = a.a(1);
        for (index_t k = 2; k <= p; ++k)
            d[k - 1] = (a.a(k) / a.a(k - 1)) * (a.a(k - 1) - a.a(k));
    }
    return LdlFactors<S>(a.band(), std::move(d), p);
}

/// Sufficient uniqueness condition: a_i != 0 for i <= n-1 and no ties
/// a_{j-1} = a_j for j in 2..n-1. (A tie or zero at the very end leaves no
/// free entries below it, so it does not break uniqueness.)
template <field_scalar S>
bool ldl_is_unique(const LBandedMatrix<S>& a, const ToleranceConfig& tol = {}) {
    const index_t n = a.n();
    for (index_t i = 1; i + 1 <= n; ++i)
        if (scalar_is_zero(a.a(i), tol)) return false;
    for (index_t j = 2; j + 1 <= n; ++j)
        if (scalar_eq(a.a(j - 1), a.a(j), tol)) return false;
    return true;
}

/// Cholesky factor of a positive definite band: entries
/// lhat_{i,j} = (a_i / a_j) * sqrt(d_j) for i >= j, with d as in LDL^T.
/// Requires a scalar with a square root, i.e. the float instantiation.
template <field_scalar S>
    requires(!scalar_traits<S>::is_exact)
class CholeskyFactor {
public:
    CholeskyFactor(std::vector<S> band, std::vector<S> sqrt_d)
        : band_(std::move(band)), sqrt_d_(std::move(sqrt_d)) {}

    index_t n() const { return band_.size(); }
    const std::vector<S>& sqrt_d() const { return sqrt_d_; }

    S entry(index_t i, index_t j) const {
        if (i < 1 || i > n() || j < 1 || j > n())
            throw IndexOutOfRangeError("factor entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") outside " + std::to_string(n()) + "x" + std::to_string(n()));
        if (j > i) return S(0);
        return (band_[i - 1] / band_[j - 1]) * sqrt_d_[j - 1];
    }

    DenseMatrix<S> dense_l() const {
        DenseMatrix<S> l(n(), n());
        for (index_t i = 1; i <= n(); ++i)
            for (index_t j = 1; j <= i; ++j)
                l.at(i, j) = entry(i, j);
        return l;
    }

    /// L * L^T; equals A within tolerance.
    DenseMatrix<S> reconstruct() const {
        DenseMatrix<S> l = dense_l();
        return multiply(l, transpose(l));
    }

private:
    std::vector<S> band_;
    std::vector<S> sqrt_d_;
};

template <field_scalar S>
    requires(!scalar_traits<S>::is_exact)
CholeskyFactor<S> cholesky_decompose(const LBandedMatrix<S>& a, const ToleranceConfig& tol = {}) {
    if (classify_definiteness(a, tol) != DefinitenessClass::PositiveDefinite)
        throw NotPositiveDefiniteError("band is not strictly decreasing positive");
    const index_t n = a.n();
    std::vector<S> sqrt_d(n, S(0));
    sqrt_d[0] = std::sqrt(static_cast<double>(a.a(1)));
    for (index_t k = 2; k <= n; ++k)
        sqrt_d[k - 1] = std::sqrt(static_cast<double>((a.a(k) / a.a(k - 1)) * (a.a(k - 1) - a.a(k))));
    return CholeskyFactor<S>(a.band(), std::move(sqrt_d));
}

/// Signed cofactor C_{ij} of an invertible band (n >= 2):
///   C_{ii}      = (d_{i-1} + d_i) |A|
///   C_{i,i+-1}  = -d_{min(i,j)} |A|
///   C_{ij}      = 0 for |i - j| >= 2
template <field_scalar S>
S cofactor(const LBandedMatrix<S>& a, index_t i, index_t j, const ToleranceConfig& tol = {}) {
    const index_t n = a.n();
    if (n < 2)
        throw DimensionMismatchError("cofactor needs n >= 2");
    if (i < 1 || i > n || j < 1 || j > n)
        throw IndexOutOfRangeError("cofactor index (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") outside " + std::to_string(n) + "x" + std::to_string(n));
    const auto delta = DeltaCoefficients<S>::compute(a, tol);
    const index_t lo = i < j ? i : j, hi = i < j ? j : i;
    if (hi - lo >= 2) return S(0);
    const S det = determinant(a);
    if (i == j) return (delta.at(i - 1) + delta.at(i)) * det;
    return -delta.at(lo) * det;
}

/// Unsigned minor M_{ij} = (-1)^{i+j} C_{ij}.
template <field_scalar S>
S minor_of(const LBandedMatrix<S>& a, index_t i, index_t j, const ToleranceConfig& tol = {}) {
    const S c = cofactor(a, i, j, tol);
    return ((i + j) % 2 == 0) ? c : -c;
}

/// Determinant after substituting b into column k (Cramer numerator):
/// |A <- b at k| = g_k |A| with
///   g_k = d_{k-1} (b_k - b_{k-1}) + d_k (b_k - b_{k+1}),
/// using the sentinels b_0 = b_{n+1} = 0 (so the k = n term is d_n b_n).
template <field_scalar S>
S det_column_substituted(const LBandedMatrix<S>& a, index_t k, const std::vector<S>& b,
                         const ToleranceConfig& tol = {}) {
    const index_t n = a.n();
    if (b.size() != n)
        throw DimensionMismatchError("column substitution needs |b| = n");
    if (k < 1 || k > n)
        throw IndexOutOfRangeError("column index " + std::to_string(k) + " outside 1.." + std::to_string(n));
    const auto delta = DeltaCoefficients<S>::compute(a, tol);
    const S bk = b[k - 1];
    const S bprev = k >= 2 ? b[k - 2] : S(0);
    const S bnext = k < n ? b[k] : S(0);
    const S g = delta.at(k - 1) * (bk - bprev) + delta.at(k) * (bk - bnext);
    return g * determinant(a);
}

/// Polynomial with ascending coefficients; exact zero leading coefficients
/// are trimmed. The zero polynomial has an empty coefficient vector.
template <field_scalar S>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
    }

    index_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    const std::vector<S>& coeffs() const { return c_; }

    S coeff(index_t k) const { return k < c_.size() ? c_[k] : S(0); }

    S evaluate(const S& x) const {
        S acc = S(0);
        for (index_t k = c_.size(); k >= 1; --k)
            acc = acc * x + c_[k - 1];
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    std::vector<S> c_;
};

/// Characteristic polynomial det(lambda I - A) of an invertible band via
/// the second-order recurrence
///   f_0 = 1,  f_1 = d_1 lambda - 1,
///   f_k = ((d_{k-1} + d_k) lambda - 1) f_{k-1} - d_{k-1}^2 lambda^2 f_{k-2},
/// and p = |A| f_n. Dense coefficient vectors give O(n^2) total work.
/// The result is monic; the leading coefficient is pinned to exactly 1.
template <field_scalar S>
Polynomial<S> characteristic_polynomial(const LBandedMatrix<S>& a, const ToleranceConfig& tol = {}) {
    const index_t n = a.n();
    const auto delta = DeltaCoefficients<S>::compute(a, tol);

    // (c * lambda - 1) * f
    auto mul_linear = [](const std::vector<S>& f, const S& c) {
        std::vector<S> g(f.size() + 1, S(0));
        for (index_t i = 0; i < f.size(); ++i) {
            g[i + 1] = g[i + 1] + c * f[i];
            g[i] = g[i] - f[i];
        }
        return g;
    };

    std::vector<S> fprev{S(1)};                      // f_0
    std::vector<S> f = mul_linear(fprev, delta.at(1)); // f_1
    for (index_t k = 2; k <= n; ++k) {
        std::vector<S> next = mul_linear(f, delta.at(k - 1) + delta.at(k));
        const S s = delta.at(k - 1) * delta.at(k - 1);
        for (index_t i = 0; i < fprev.size(); ++i)
            next[i + 2] = next[i + 2] - s * fprev[i];
        fprev = std::move(f);
        f = std::move(next);
    }

    const S det = determinant(a);
    std::vector<S> coeffs(n + 1, S(0));
    for (index_t i = 0; i <= n; ++i)
        coeffs[i] = det * f[i];
    coeffs[n] = S(1); // |A| * leading(f_n) telescopes to 1 exactly
    return Polynomial<S>(std::move(coeffs));
}

/// Structured upper-triangular H from weights [h_1 .. h_n]:
/// H_{jj} = h_1 + ... + h_j, H_{ij} = h_j for i < j, 0 below the diagonal.
template <field_scalar S>
DenseMatrix<S> make_structured_upper(const std::vector<S>& h) {
    const index_t n = h.size();
    DenseMatrix<S> m(n, n);
    S prefix = S(0);
    for (index_t j = 1; j <= n; ++j) {
        prefix = prefix + h[j - 1];
        m.at(j, j) = prefix;
        for (index_t i = 1; i < j; ++i)
            m.at(i, j) = h[j - 1];
    }
    return m;
}

/// Q = H A is L-banded with band
///   q_t = a_t * (h_1 + ... + h_t) + sum_{k=t+1}^n h_k a_k,
/// computed in O(n) with one prefix and one suffix accumulation.
template <field_scalar S>
LBandedMatrix<S> left_multiply_structured_upper(const std::vector<S>& h, const LBandedMatrix<S>& a) {
    const index_t n = a.n();
    if (h.size() != n)
        throw DimensionMismatchError("structured upper product needs |h| = n");
    std::vector<S> suffix(n + 1, S(0)); // suffix[t] = sum_{k=t+1}^n h_k a_k
    for (index_t t = n; t >= 1; --t)
        suffix[t - 1] = suffix[t] + h[t - 1] * a.a(t);
    std::vector<S> q(n, S(0));
    S prefix = S(0);
    for (index_t t = 1; t <= n; ++t) {
        prefix = prefix + h[t - 1];
        q[t - 1] = a.a(t) * prefix + suffix[t];
    }
    return LBandedMatrix<S>(std::move(q));
}

/// A^2 entries via prefix/suffix sums: with m = min(i,j), t = max(i,j),
///   (A^2)_{ij} = a_t (m a_m + sum_{k=m+1}^t a_k) + sum_{k=t+1}^n a_k^2.
/// O(n^2) output, O(n) precomputation.
template <field_scalar S>
DenseSymMatrix<S> square(const LBandedMatrix<S>& a) {
    const index_t n = a.n();
    std::vector<S> prefix(n + 1, S(0)); // prefix[t] = a_1 + ... + a_t
    std::vector<S> sqsuffix(n + 1, S(0)); // sqsuffix[t] = sum_{k=t+1}^n a_k^2
    for (index_t t = 1; t <= n; ++t)
        prefix[t] = prefix[t - 1] + a.a(t);
    for (index_t t = n; t >= 1; --t)
        sqsuffix[t - 1] = sqsuffix[t] + a.a(t) * a.a(t);
    DenseSymMatrix<S> out(n);
    for (index_t i = 1; i <= n; ++i)
        for (index_t j = i; j <= n; ++j) {
            const index_t m = i, t = j; // i <= j
            const S mid = prefix[t] - prefix[m];
            const S v = a.a(t) * (S(static_cast<long>(m)) * a.a(m) + mid) + sqsuffix[t];
            out.set_sym(i, j, v);
        }
    return out;
}

} // namespace lband
