// Optimal damping of fixed-point iterate averages.
//
// Given a covariance V of iterates, the variance-minimizing weights with
// unit sum are zeta = V^{-1} 1 / (1^T V^{-1} 1). For an invertible L-banded
// covariance this collapses to zeta = e_n: the last iterate takes all the
// weight. Damping every prefix of the iterates produces a damped covariance
// that is itself L-banded with band entries 1 / (1^T V_k^{-1} 1).
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lband/core.hpp"
#include "lband/errors.hpp"
#include "lband/ops.hpp"
#include "lband/oracle.hpp"
#include "lband/scalar.hpp"

namespace lband {

/// zeta = V^{-1} 1 / (1^T V^{-1} 1) via a dense linear solve (no explicit
/// inverse). Throws SingularMatrix when V is singular and ZeroNormalizer
/// when 1^T V^{-1} 1 vanishes.
template <field_scalar S>
std::vector<S> damping_vector(const DenseSymMatrix<S>& v, const ToleranceConfig& tol = {}) {
    const index_t n = v.n();
    std::vector<S> ones(n, S(1));
    std::vector<S> y = dense_solve(v.dense(), ones, tol);
    S total = S(0);
    for (const S& yi : y) total = total + yi;
    if (scalar_is_zero(total, tol))
        throw ZeroNormalizerError("1^T V^{-1} 1 is zero; damping weights are undefined");
    for (S& yi : y) yi = yi / total;
    return y;
}

/// L-banded specialization: for invertible A, A^{-1} 1 = a_n^{-1} e_n, so
/// the normalized weights are exactly e_n. O(1) beyond the invertibility
/// check and the output allocation.
template <field_scalar S>
std::vector<S> damping_vector_lbanded(const LBandedMatrix<S>& a, const ToleranceConfig& tol = {}) {
    // Reuse the coefficient gate so the error reporting (which condition
    // failed, at which index) matches the rest of the library.
    (void)DeltaCoefficients<S>::compute(a, tol);
    std::vector<S> zeta(a.n(), S(0));
    zeta[a.n() - 1] = S(1);
    return zeta;
}

/// Damped covariance of all prefixes. Entry (i,j) with m = max(i,j) is
/// zeta_i^T V_m zeta_j where zeta_k are the damping weights of the leading
/// k x k block, zero-padded to length m.
template <field_scalar S>
struct DampedCovariance {
    DenseSymMatrix<S> matrix;
    DetectOutcome<S> detection;     // L-banded detection of `matrix`
    std::vector<S> band;            // detected band when detection succeeded
};

template <field_scalar S>
DampedCovariance<S> damped_covariance(const DenseSymMatrix<S>& v, const ToleranceConfig& tol = {}) {
    const index_t t = v.n();
    std::vector<std::vector<S>> zetas; // zetas[k-1] has length k
    zetas.reserve(t);
    for (index_t k = 1; k <= t; ++k) {
        try {
            zetas.push_back(damping_vector(v.leading_principal(k), tol));
        } catch (const SingularMatrixError& e) {
            throw SingularMatrixError(e.reason, k,
                                      "leading block " + std::to_string(k) + ": " + e.what());
        } catch (const ZeroNormalizerError& e) {
            throw ZeroNormalizerError("leading block " + std::to_string(k) + ": " + e.what());
        }
    }

    DampedCovariance<S> out{DenseSymMatrix<S>(t), {}, {}};
    for (index_t i = 1; i <= t; ++i)
        for (index_t j = i; j <= t; ++j) {
            // zeta_i is supported on 1..i, zeta_j on 1..j; the padded
            // quadratic form reduces to the supported rectangle.
            S acc = S(0);
            for (index_t p = 1; p <= i; ++p) {
                S row = S(0);
                for (index_t q = 1; q <= j; ++q)
                    row = row + v.at(p, q) * zetas[j - 1][q - 1];
                acc = acc + zetas[i - 1][p - 1] * row;
            }
            out.matrix.set_sym(i, j, acc);
        }

    out.detection = detect_l_banded(out.matrix, tol);
    if (out.detection)
        out.band = out.detection.matrix->band();
    return out;
}

} // namespace lband
