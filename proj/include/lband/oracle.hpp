// Dense oracles: brute-force reference algorithms used to validate the
// closed forms. Nothing here knows about band structure or the closed-form
// module; every routine works on dense storage with textbook elimination.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lband/core.hpp"
#include "lband/errors.hpp"
#include "lband/scalar.hpp"

namespace lband {

/// One closed-form-vs-oracle comparison, serialized by the verify harness.
struct OracleReport {
    std::string op;          // property name
    std::string digest;      // deterministic digest of the inputs
    std::string closed_form; // closed-form value (or residual)
    std::string oracle;      // oracle value (or bound)
    bool pass = false;
    std::string discrepancy; // magnitude of the disagreement, "0" on pass
};

namespace detail {

// Pivot choice for elimination: largest magnitude in float mode (stability),
// first nonzero in exact mode (any nonzero pivot is as good as any other).
template <field_scalar S>
index_t select_pivot(const DenseMatrix<S>& m, index_t col, index_t from, const ToleranceConfig& tol) {
    if constexpr (scalar_traits<S>::is_exact) {
        (void)tol;
        for (index_t r = from; r <= m.rows(); ++r)
            if (!(m.at(r, col) == S(0))) return r;
        return 0;
    } else {
        index_t best = 0;
        double best_mag = 0.0;
        for (index_t r = from; r <= m.rows(); ++r) {
            const double mag = std::fabs(scalar_to_double(m.at(r, col)));
            if (mag > best_mag) {
                best_mag = mag;
                best = r;
            }
        }
        return best_mag > 0.0 ? best : 0;
    }
}

} // namespace detail

/// Fraction-free Bareiss determinant with row pivoting. Exact over
/// rationals; in float mode it degrades to ordinary elimination with an
/// extra multiply, which is still a sound O(n^3) reference.
template <field_scalar S>
S dense_determinant(const DenseMatrix<S>& input, const ToleranceConfig& tol = {}) {
    if (!input.is_square())
        throw DimensionMismatchError("determinant needs a square matrix");
    const index_t n = input.rows();
    if (n == 0) return S(1);
    DenseMatrix<S> m = input;
    S sign = S(1);
    S prev = S(1);
    for (index_t k = 1; k < n; ++k) {
        index_t piv = detail::select_pivot(m, k, k, tol);
        if (piv == 0) return S(0);
        if (piv != k) {
            for (index_t j = 1; j <= n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (index_t i = k + 1; i <= n; ++i) {
            for (index_t j = k + 1; j <= n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = S(0);
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n, n);
}

template <field_scalar S>
S dense_determinant(const DenseSymMatrix<S>& m, const ToleranceConfig& tol = {}) {
    return dense_determinant(m.dense(), tol);
}

/// Gauss-Jordan inverse with pivoting. Throws SingularMatrix when no
/// usable pivot remains in some column.
template <field_scalar S>
DenseMatrix<S> dense_inverse(const DenseMatrix<S>& input, const ToleranceConfig& tol = {}) {
    if (!input.is_square())
        throw DimensionMismatchError("inverse needs a square matrix");
    const index_t n = input.rows();
    DenseMatrix<S> m = input;
    DenseMatrix<S> inv = DenseMatrix<S>::identity(n);
    for (index_t k = 1; k <= n; ++k) {
        index_t piv = detail::select_pivot(m, k, k, tol);
        if (piv == 0)
            throw SingularMatrixError(SingularMatrixError::Reason::DensePivot, k,
                                      "no pivot in column " + std::to_string(k));
        if (piv != k)
            for (index_t j = 1; j <= n; ++j) {
                std::swap(m.at(k, j), m.at(piv, j));
                std::swap(inv.at(k, j), inv.at(piv, j));
            }
        const S d = m.at(k, k);
        for (index_t j = 1; j <= n; ++j) {
            m.at(k, j) = m.at(k, j) / d;
            inv.at(k, j) = inv.at(k, j) / d;
        }
        for (index_t i = 1; i <= n; ++i) {
            if (i == k) continue;
            const S f = m.at(i, k);
            if (f == S(0)) continue;
            for (index_t j = 1; j <= n; ++j) {
                m.at(i, j) = m.at(i, j) - f * m.at(k, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(k, j);
            }
        }
    }
    return inv;
}

template <field_scalar S>
DenseMatrix<S> dense_inverse(const DenseSymMatrix<S>& m, const ToleranceConfig& tol = {}) {
    return dense_inverse(m.dense(), tol);
}

/// Solves A x = b by Gaussian elimination with pivoting.
template <field_scalar S>
std::vector<S> dense_solve(const DenseMatrix<S>& a, const std::vector<S>& b, const ToleranceConfig& tol = {}) {
    if (!a.is_square())
        throw DimensionMismatchError("solve needs a square matrix");
    const index_t n = a.rows();
    if (b.size() != n)
        throw DimensionMismatchError("solve needs rhs of matching size");
    DenseMatrix<S> m = a;
    std::vector<S> rhs = b;
    for (index_t k = 1; k <= n; ++k) {
        index_t piv = detail::select_pivot(m, k, k, tol);
        if (piv == 0)
            throw SingularMatrixError(SingularMatrixError::Reason::DensePivot, k,
                                      "no pivot in column " + std::to_string(k));
        if (piv != k) {
            for (index_t j = 1; j <= n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            std::swap(rhs[k - 1], rhs[piv - 1]);
        }
        for (index_t i = k + 1; i <= n; ++i) {
            const S f = m.at(i, k) / m.at(k, k);
            if (f == S(0)) continue;
            for (index_t j = k; j <= n; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(k, j);
            rhs[i - 1] = rhs[i - 1] - f * rhs[k - 1];
        }
    }
    std::vector<S> x(n, S(0));
    for (index_t i = n; i >= 1; --i) {
        S acc = rhs[i - 1];
        for (index_t j = i + 1; j <= n; ++j)
            acc = acc - m.at(i, j) * x[j - 1];
        x[i - 1] = acc / m.at(i, i);
    }
    return x;
}

/// Characteristic polynomial of det(lambda*I - A) by Faddeev-LeVerrier.
/// Returns coefficients in ascending degree order, length n+1, monic.
/// The integer divisions are exact over rationals.
template <field_scalar S>
std::vector<S> dense_charpoly(const DenseSymMatrix<S>& a) {
    const index_t n = a.n();
    std::vector<S> c(n + 1, S(0));
    c[n] = S(1);
    DenseMatrix<S> m = a.dense();
    const DenseMatrix<S>& A = a.dense();
    auto trace = [&](const DenseMatrix<S>& x) {
        S t = S(0);
        for (index_t i = 1; i <= x.rows(); ++i) t = t + x.at(i, i);
        return t;
    };
    S ck = -trace(m);
    if (n >= 1) c[n - 1] = ck;
    for (index_t k = 2; k <= n; ++k) {
        DenseMatrix<S> shifted = m;
        for (index_t i = 1; i <= n; ++i)
            shifted.at(i, i) = shifted.at(i, i) + ck;
        m = multiply(A, shifted);
        ck = -(trace(m) / S(static_cast<long>(k)));
        c[n - k] = ck;
    }
    return c;
}

/// Sorted eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
/// Float only. Converges when the off-diagonal Frobenius mass drops under
/// zero_tol * max(1, ||A||_F); throws NoConvergence past the sweep budget.
inline std::vector<double> dense_eigenvalues(const DenseSymMatrix<double>& a,
                                             const ToleranceConfig& tol = {},
                                             int max_sweeps = 100) {
    const index_t n = a.n();
    DenseMatrix<double> m = a.dense();
    if (n == 1) return {m.at(1, 1)};

    double frob = 0.0;
    for (index_t i = 1; i <= n; ++i)
        for (index_t j = 1; j <= n; ++j)
            frob += m.at(i, j) * m.at(i, j);
    frob = std::sqrt(frob);
    const double threshold = tol.zero_tol * std::max(1.0, frob);

    auto off_mass = [&]() {
        double s = 0.0;
        for (index_t p = 1; p <= n; ++p)
            for (index_t q = p + 1; q <= n; ++q)
                s += 2.0 * m.at(p, q) * m.at(p, q);
        return std::sqrt(s);
    };

    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_mass() <= threshold) {
            converged = true;
            break;
        }
        for (index_t p = 1; p <= n; ++p)
            for (index_t q = p + 1; q <= n; ++q) {
                const double apq = m.at(p, q);
                if (apq == 0.0) continue;
                const double tau = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double app = m.at(p, p), aqq = m.at(q, q);
                m.at(p, p) = app - t * apq;
                m.at(q, q) = aqq + t * apq;
                m.at(p, q) = 0.0;
                m.at(q, p) = 0.0;
                for (index_t r = 1; r <= n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = m.at(r, p), arq = m.at(r, q);
                    m.at(r, p) = c * arp - s * arq;
                    m.at(p, r) = m.at(r, p);
                    m.at(r, q) = s * arp + c * arq;
                    m.at(q, r) = m.at(r, q);
                }
            }
    }
    if (!converged && off_mass() > threshold)
        throw NoConvergenceError("Jacobi eigensolver did not converge within the sweep budget");

    std::vector<double> eigs;
    eigs.reserve(n);
    for (index_t i = 1; i <= n; ++i) eigs.push_back(m.at(i, i));
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

/// Minor by explicit row/column deletion and a dense determinant.
template <field_scalar S>
S dense_minor(const DenseSymMatrix<S>& a, index_t row, index_t col, const ToleranceConfig& tol = {}) {
    const index_t n = a.n();
    if (n < 2)
        throw DimensionMismatchError("minor needs a matrix of size at least 2");
    if (row < 1 || row > n || col < 1 || col > n)
        throw IndexOutOfRangeError("minor index (" + std::to_string(row) + "," + std::to_string(col) +
                                   ") outside " + std::to_string(n) + "x" + std::to_string(n));
    DenseMatrix<S> sub(n - 1, n - 1);
    index_t si = 1;
    for (index_t i = 1; i <= n; ++i) {
        if (i == row) continue;
        index_t sj = 1;
        for (index_t j = 1; j <= n; ++j) {
            if (j == col) continue;
            sub.at(si, sj) = a.at(i, j);
            ++sj;
        }
        ++si;
    }
    return dense_determinant(sub, tol);
}

template <field_scalar S>
S dense_cofactor(const DenseSymMatrix<S>& a, index_t row, index_t col, const ToleranceConfig& tol = {}) {
    const S m = dense_minor(a, row, col, tol);
    return ((row + col) % 2 == 0) ? m : -m;
}

/// LDL^T by submatrix elimination (unit lower L, diagonal d). A zero pivot
/// is tolerated only when the whole column below it eliminates to zero;
/// otherwise no LDL^T decomposition exists.
template <field_scalar S>
struct DenseLdl {
    DenseMatrix<S> l;
    std::vector<S> d;
};

template <field_scalar S>
DenseLdl<S> dense_ldl(const DenseSymMatrix<S>& a, const ToleranceConfig& tol = {}) {
    const index_t n = a.n();
    DenseLdl<S> out{DenseMatrix<S>::identity(n), std::vector<S>(n, S(0))};
    for (index_t j = 1; j <= n; ++j) {
        S dj = a.at(j, j);
        for (index_t k = 1; k < j; ++k)
            dj = dj - out.l.at(j, k) * out.l.at(j, k) * out.d[k - 1];
        out.d[j - 1] = dj;
        const bool zero_pivot = scalar_is_zero(dj, tol);
        for (index_t i = j + 1; i <= n; ++i) {
            S num = a.at(i, j);
            for (index_t k = 1; k < j; ++k)
                num = num - out.l.at(i, k) * out.l.at(j, k) * out.d[k - 1];
            if (zero_pivot) {
                if (!scalar_is_zero(num, tol))
                    throw NoLdlDecompositionError("zero pivot at column " + std::to_string(j) +
                                                  " with nonzero entry below");
                out.l.at(i, j) = S(0);
            } else {
                out.l.at(i, j) = num / dj;
            }
        }
    }
    return out;
}

/// Dense Cholesky (lower triangular, positive diagonal). Float only.
inline DenseMatrix<double> dense_cholesky(const DenseSymMatrix<double>& a, const ToleranceConfig& tol = {}) {
    const index_t n = a.n();
    DenseMatrix<double> l(n, n);
    for (index_t j = 1; j <= n; ++j) {
        double s = a.at(j, j);
        for (index_t k = 1; k < j; ++k) s -= l.at(j, k) * l.at(j, k);
        if (s <= tol.zero_tol)
            throw NotPositiveDefiniteError("pivot " + std::to_string(j) + " is not positive");
        l.at(j, j) = std::sqrt(s);
        for (index_t i = j + 1; i <= n; ++i) {
            double v = a.at(i, j);
            for (index_t k = 1; k < j; ++k) v -= l.at(i, k) * l.at(j, k);
            l.at(i, j) = v / l.at(j, j);
        }
    }
    return l;
}

} // namespace lband
