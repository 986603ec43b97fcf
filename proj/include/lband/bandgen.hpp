// Seeded random band generators shared by the verify harness, the
// benchmark harness and the test suites. Each generator documents the
// structural guarantee it provides; tolerance-critical suites rely on
// those guarantees (e.g. degeneracy gaps bounded below).
#pragma once

#include <algorithm>
#include <vector>

#include "lband/core.hpp"
#include "lband/rng.hpp"
#include "lband/scalar.hpp"

namespace lband {

template <field_scalar S>
std::vector<S> to_scalars(const std::vector<long>& v) {
    std::vector<S> out;
    out.reserve(v.size());
    for (long x : v) out.push_back(S(x));
    return out;
}

/// Arbitrary integer band in [-9, 9]; may be singular (zeros, ties).
inline std::vector<long> int_band_any(Rng& rng, index_t n) {
    std::vector<long> b(n);
    for (auto& x : b) x = rng.uniform_int(-9, 9);
    return b;
}

/// Invertible integer band: neighbors distinct, last entry nonzero.
/// Interior zeros allowed.
inline std::vector<long> int_band_invertible(Rng& rng, index_t n) {
    std::vector<long> b(n);
    for (index_t k = 0; k < n; ++k) {
        long v;
        do {
            v = rng.uniform_int(-9, 9);
        } while ((k > 0 && v == b[k - 1]) || (k + 1 == n && v == 0));
        b[k] = v;
    }
    return b;
}

/// Strictly invertible band with every entry nonzero: neighbors distinct
/// and no zeros anywhere, so the LDL decomposition also exists.
inline std::vector<long> int_band_nonzero_distinct(Rng& rng, index_t n) {
    std::vector<long> b(n);
    for (index_t k = 0; k < n; ++k) {
        long v;
        do {
            v = rng.uniform_int(-9, 9);
        } while (v == 0 || (k > 0 && v == b[k - 1]));
        b[k] = v;
    }
    return b;
}

/// Float band bounded away from degeneracy: |a_k - a_{k+1}| >= min_gap and
/// |a_n| >= min_gap, with signed gaps (the matrix need not be definite).
inline std::vector<double> float_band_away_from_degeneracy(Rng& rng, index_t n, double min_gap = 1e-3) {
    std::vector<double> b(n);
    double v = (rng.coin() ? 1.0 : -1.0) * rng.uniform(min_gap, 1.0);
    b[n - 1] = v;
    for (index_t k = n - 1; k-- > 0;) {
        const double gap = (rng.coin() ? 1.0 : -1.0) * rng.uniform(min_gap, 1.0);
        v += gap;
        b[k] = v;
    }
    return b;
}

/// Strictly decreasing positive band (positive definite): gaps and the
/// trailing entry drawn uniformly from [gap_lo, gap_hi].
inline std::vector<double> float_band_positive_definite(Rng& rng, index_t n, double gap_lo, double gap_hi) {
    std::vector<double> b(n);
    double v = rng.uniform(gap_lo, gap_hi);
    b[n - 1] = v;
    for (index_t k = n - 1; k-- > 0;) {
        v += rng.uniform(gap_lo, gap_hi);
        b[k] = v;
    }
    return b;
}

/// Well-conditioned benchmark band: strictly decreasing positive with gaps
/// in [0.1, 1.1).
inline std::vector<double> float_band_bench(Rng& rng, index_t n) {
    return float_band_positive_definite(rng, n, 0.1, 1.1);
}

inline std::vector<double> float_vector(Rng& rng, index_t n, double lo = -1.0, double hi = 1.0) {
    std::vector<double> x(n);
    for (auto& v : x) v = rng.uniform(lo, hi);
    return x;
}

inline std::vector<long> int_vector(Rng& rng, index_t n, long lo = -9, long hi = 9) {
    std::vector<long> x(n);
    for (auto& v : x) v = rng.uniform_int(lo, hi);
    return x;
}

/// Bands for the definiteness classifier cross-check. Entries are exact
/// multiples of 1/16 with small magnitudes, so ties and zero tails are
/// exact in binary floating point and eigenvalue signs are well separated
/// from the strictness threshold.
///
/// family: 0 PD, 1 PSD, 2 ND, 3 NSD, 4 indefinite (mixed gap signs).
inline std::vector<double> float_band_definiteness_family(Rng& rng, index_t n, int family) {
    const double q = 1.0 / 16.0;
    auto gap = [&](bool allow_zero) {
        const long lo = allow_zero ? 0 : 1;
        return q * static_cast<double>(rng.uniform_int(lo, 2));
    };
    std::vector<double> b(n);
    switch (family) {
        case 0: { // strictly decreasing, positive
            double v = gap(false);
            b[n - 1] = v;
            for (index_t k = n - 1; k-- > 0;) { v += gap(false); b[k] = v; }
            break;
        }
        case 1: { // non-increasing, nonnegative; ties and zero tail allowed
            double v = gap(true);
            b[n - 1] = v;
            for (index_t k = n - 1; k-- > 0;) { v += gap(true); b[k] = v; }
            break;
        }
        case 2: { // strictly increasing, negative
            double v = -gap(false);
            b[n - 1] = v;
            for (index_t k = n - 1; k-- > 0;) { v -= gap(false); b[k] = v; }
            break;
        }
        case 3: { // non-decreasing, nonpositive
            double v = -gap(true);
            b[n - 1] = v;
            for (index_t k = n - 1; k-- > 0;) { v -= gap(true); b[k] = v; }
            break;
        }
        default: { // indefinite; requires n >= 2, rejection-sampled
            while (true) {
                double v = q * static_cast<double>(rng.uniform_int(-2, 2));
                b[n - 1] = v;
                bool up = false, down = false;
                for (index_t k = n - 1; k-- > 0;) {
                    const double g = q * static_cast<double>(rng.uniform_int(-2, 2));
                    if (g > 0) up = true;
                    if (g < 0) down = true;
                    v += g;
                    b[k] = v;
                }
                // Indefinite iff the nonnegative chain and the nonpositive
                // chain both fail: some difference (or a_n) is negative AND
                // some difference (or a_n) is positive.
                const bool tail_pos = b[n - 1] > 0, tail_neg = b[n - 1] < 0;
                if ((down || tail_neg) && (up || tail_pos)) break;
            }
            break;
        }
    }
    return b;
}

} // namespace lband
