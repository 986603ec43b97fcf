// Verification harness: runs every closed-form-vs-oracle property on
// seeded random inputs and returns one report per trial. Fully
// deterministic for a fixed (seed, n_max, trials): substreams are derived
// from the property name and trial index, never from global state.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lband/bandgen.hpp"
#include "lband/core.hpp"
#include "lband/damping.hpp"
#include "lband/errors.hpp"
#include "lband/ops.hpp"
#include "lband/oracle.hpp"
#include "lband/rng.hpp"
#include "lband/scalar.hpp"

namespace lband {

struct VerifyConfig {
    index_t n_max = 6;
    index_t trials = 25;
    std::uint64_t seed = 0;
};

struct VerifySummary {
    std::vector<OracleReport> reports;
    index_t failures = 0;
};

/// Float-mode acceptance bounds for the harness, pinned here. Exact mode
/// ignores them: every comparison must hold exactly.
namespace verify_bounds {
inline constexpr double generic = 1e-9;           // closed form vs oracle, scaled max-abs
inline constexpr double inverse_identity = 1e-10; // ||A A^{-1} - I||_max, absolute
inline constexpr double damped = 1e-9;            // damped covariance checks, absolute
inline constexpr double charpoly_residual = 1e-6; // |p(l)| / (1 + |l|^n) at eigenvalues
inline constexpr double eigen_zero = 1e-12;       // eigenvalue sign threshold
} // namespace verify_bounds

namespace verify_detail {

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

template <field_scalar S>
std::string vec_str(const std::vector<S>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += scalar_str(v[i]);
    }
    return out;
}

template <field_scalar S>
std::string mat_str(const DenseMatrix<S>& m) {
    std::string out;
    for (index_t i = 1; i <= m.rows(); ++i) {
        if (i > 1) out += ";";
        for (index_t j = 1; j <= m.cols(); ++j) {
            if (j > 1) out += ",";
            out += scalar_str(m.at(i, j));
        }
    }
    return out;
}

/// Values short enough to read are kept verbatim; larger ones are replaced
/// by a deterministic digest so reports stay bounded.
inline std::string short_value(const std::string& s) {
    if (s.size() <= 96) return s;
    return "fnv64:" + hex64(fnv1a64(s));
}

inline std::string make_digest(index_t n, const std::string& canonical_inputs) {
    return "n=" + std::to_string(n) + ";fnv64:" + hex64(fnv1a64(canonical_inputs));
}

/// Max-abs difference plus the max magnitude of the reference side.
template <field_scalar S>
struct Deviation {
    S diff = S(0);
    double ref_mag = 0.0;

    void feed(const S& got, const S& want) {
        S d = scalar_abs<S>(got - want);
        if (diff < d) diff = d;
        const double w = std::fabs(scalar_to_double(want));
        if (w > ref_mag) ref_mag = w;
    }

    bool within(double bound, bool scale_by_ref = true) const {
        if constexpr (scalar_traits<S>::is_exact)
            return diff == S(0);
        else
            return scalar_to_double(diff) <=
                   bound * (scale_by_ref ? std::max(1.0, ref_mag) : 1.0);
    }
};

template <field_scalar S>
Deviation<S> vec_dev(const std::vector<S>& got, const std::vector<S>& want) {
    Deviation<S> d;
    for (std::size_t i = 0; i < want.size(); ++i) d.feed(got[i], want[i]);
    return d;
}

template <field_scalar S>
Deviation<S> mat_dev(const DenseMatrix<S>& got, const DenseMatrix<S>& want) {
    Deviation<S> d;
    for (index_t i = 1; i <= want.rows(); ++i)
        for (index_t j = 1; j <= want.cols(); ++j)
            d.feed(got.at(i, j), want.at(i, j));
    return d;
}

} // namespace verify_detail

template <field_scalar S>
class VerifyRunner {
public:
    explicit VerifyRunner(VerifyConfig cfg) : cfg_(cfg) {
        if (cfg_.n_max < 1) throw UsageError("n_max must be at least 1");
        if (cfg_.trials < 1) throw UsageError("trials must be at least 1");
    }

    VerifySummary run() {
        VerifySummary summary;
        for (const auto& [name, fn] : properties()) {
            for (index_t t = 0; t < cfg_.trials; ++t) {
                Rng rng = Rng::derive(cfg_.seed, name, t);
                OracleReport rep = fn(rng);
                rep.op = name;
                if (!rep.pass) ++summary.failures;
                summary.reports.push_back(std::move(rep));
            }
        }
        return summary;
    }

private:
    template <class T>
    using Deviation = verify_detail::Deviation<T>;

    template <class T>
    static std::string vec_str(const std::vector<T>& v) { return verify_detail::vec_str(v); }
    template <class T>
    static std::string mat_str(const DenseMatrix<T>& m) { return verify_detail::mat_str(m); }
    template <class T>
    static Deviation<T> vec_dev(const std::vector<T>& g, const std::vector<T>& w) {
        return verify_detail::vec_dev(g, w);
    }
    template <class T>
    static Deviation<T> mat_dev(const DenseMatrix<T>& g, const DenseMatrix<T>& w) {
        return verify_detail::mat_dev(g, w);
    }

    static constexpr bool exact = scalar_traits<S>::is_exact;
    static constexpr double kGeneric = verify_bounds::generic;

    VerifyConfig cfg_;
    ToleranceConfig tol_{};

    index_t draw_n(Rng& rng, index_t lo = 1) const {
        const index_t hi = std::max(lo, cfg_.n_max);
        return static_cast<index_t>(rng.uniform_int(static_cast<long long>(lo), static_cast<long long>(hi)));
    }

    std::vector<S> any_band(Rng& rng, index_t n) const {
        if constexpr (exact)
            return to_scalars<S>(int_band_any(rng, n));
        else
            return float_band_away_from_degeneracy(rng, n); // bounded magnitudes
    }

    std::vector<S> invertible_band(Rng& rng, index_t n) const {
        if constexpr (exact)
            return to_scalars<S>(int_band_invertible(rng, n));
        else
            return float_band_away_from_degeneracy(rng, n);
    }

    std::vector<S> ldl_band(Rng& rng, index_t n) const {
        if constexpr (exact) {
            // Sometimes exercise the trailing-zero block form.
            if (n >= 2 && rng.uniform_int(0, 3) == 0) {
                const index_t p = static_cast<index_t>(rng.uniform_int(1, static_cast<long long>(n - 1)));
                std::vector<long> b = int_band_nonzero_distinct(rng, p);
                b.resize(n, 0);
                return to_scalars<S>(b);
            }
            return to_scalars<S>(int_band_nonzero_distinct(rng, n));
        } else {
            // All entries bounded away from zero so the tolerance-aware
            // existence test sees p = n.
            while (true) {
                std::vector<double> b = float_band_away_from_degeneracy(rng, n);
                bool ok = true;
                for (double x : b) ok = ok && std::fabs(x) >= 1e-3;
                if (ok) return b;
            }
        }
    }

    std::vector<S> random_x(Rng& rng, index_t n) const {
        if constexpr (exact)
            return to_scalars<S>(int_vector(rng, n));
        else
            return float_vector(rng, n);
    }

    DenseSymMatrix<S> random_pd_dense(Rng& rng, index_t t) const {
        DenseMatrix<S> g(t, t);
        for (index_t i = 1; i <= t; ++i)
            for (index_t j = 1; j <= t; ++j) {
                if constexpr (exact)
                    g.at(i, j) = S(rng.uniform_int(-2, 2));
                else
                    g.at(i, j) = rng.uniform(-1.0, 1.0);
            }
        DenseMatrix<S> v = multiply(transpose(g), g);
        for (index_t i = 1; i <= t; ++i) {
            if constexpr (exact)
                v.at(i, i) = v.at(i, i) + S(1 + static_cast<long>(i % 3));
            else
                v.at(i, i) = v.at(i, i) + 0.5;
        }
        return DenseSymMatrix<S>(std::move(v), tol_);
    }

    OracleReport report(index_t n, const std::string& inputs, const std::string& closed,
                        const std::string& oracle, bool pass, const S& diff) const {
        OracleReport r;
        r.digest = verify_detail::make_digest(n, inputs);
        r.closed_form = verify_detail::short_value(closed);
        r.oracle = verify_detail::short_value(oracle);
        r.pass = pass;
        r.discrepancy = scalar_str(diff);
        return r;
    }

    // ---- properties ----------------------------------------------------

    OracleReport prop_determinant(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(any_band(rng, n));
        const S closed = determinant(a);
        const S oracle = dense_determinant(a.to_dense(), tol_);
        Deviation<S> dev;
        dev.feed(closed, oracle);
        return report(n, "band=" + vec_str(a.band()), scalar_str(closed), scalar_str(oracle),
                      dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_inverse_vs_gauss_jordan(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(invertible_band(rng, n));
        const DenseMatrix<S> closed = inverse(a, tol_).to_dense().dense();
        const DenseMatrix<S> oracle = dense_inverse(a.to_dense(), tol_);
        const Deviation<S> dev = mat_dev(closed, oracle);
        return report(n, "band=" + vec_str(a.band()), mat_str(closed), mat_str(oracle),
                      dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_inverse_identity(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(invertible_band(rng, n));
        const DenseMatrix<S> prod = multiply(a.to_dense().dense(), inverse(a, tol_).to_dense().dense());
        const Deviation<S> dev = mat_dev(prod, DenseMatrix<S>::identity(n));
        return report(n, "band=" + vec_str(a.band()),
                      "residual=" + scalar_str(dev.diff),
                      "bound=" + scalar_str(verify_bounds::inverse_identity),
                      dev.within(verify_bounds::inverse_identity, /*scale_by_ref=*/false), dev.diff);
    }

    OracleReport prop_row_sum_identity(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(invertible_band(rng, n));
        const SymTridiagonal<S> inv = inverse(a, tol_);
        std::vector<S> row_sums(n, S(0));
        for (index_t i = 1; i <= n; ++i) {
            S s = inv.diag()[i - 1];
            if (i >= 2) s = s + inv.off()[i - 2];
            if (i < n) s = s + inv.off()[i - 1];
            row_sums[i - 1] = s;
        }
        std::vector<S> expected(n, S(0));
        expected[n - 1] = S(1) / a.a(n);
        Deviation<S> dev = vec_dev(row_sums, expected);
        S total = S(0);
        for (const S& s : row_sums) total = total + s;
        dev.feed(total, expected[n - 1]);
        return report(n, "band=" + vec_str(a.band()), vec_str(row_sums), vec_str(expected),
                      dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_quadratic_form(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(any_band(rng, n));
        const std::vector<S> x = random_x(rng, n);
        const S closed = quadratic_form(a, x);
        const std::vector<S> ax = matvec(a.to_dense().dense(), x);
        S oracle = S(0);
        for (index_t i = 0; i < n; ++i) oracle = oracle + x[i] * ax[i];
        Deviation<S> dev;
        dev.feed(closed, oracle);
        return report(n, "band=" + vec_str(a.band()) + ";x=" + vec_str(x),
                      scalar_str(closed), scalar_str(oracle), dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_cofactors_vs_dense_minors(Rng& rng) const {
        const index_t n = draw_n(rng, 2);
        LBandedMatrix<S> a(invertible_band(rng, n));
        const DenseSymMatrix<S> dense = a.to_dense();
        DenseMatrix<S> closed(n, n), oracle(n, n);
        for (index_t i = 1; i <= n; ++i)
            for (index_t j = 1; j <= n; ++j) {
                closed.at(i, j) = cofactor(a, i, j, tol_);
                oracle.at(i, j) = dense_cofactor(dense, i, j, tol_);
            }
        const Deviation<S> dev = mat_dev(closed, oracle);
        return report(n, "band=" + vec_str(a.band()), mat_str(closed), mat_str(oracle),
                      dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_adjugate_inverse(Rng& rng) const {
        const index_t n = draw_n(rng, 2);
        LBandedMatrix<S> a(invertible_band(rng, n));
        const S det = determinant(a);
        const SymTridiagonal<S> inv = inverse(a, tol_);
        DenseMatrix<S> from_cof(n, n), from_inv(n, n);
        for (index_t i = 1; i <= n; ++i)
            for (index_t j = 1; j <= n; ++j) {
                from_cof.at(i, j) = cofactor(a, j, i, tol_) / det;
                from_inv.at(i, j) = inv.entry(i, j);
            }
        const Deviation<S> dev = mat_dev(from_cof, from_inv);
        return report(n, "band=" + vec_str(a.band()), mat_str(from_cof), mat_str(from_inv),
                      dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_column_substitution(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(invertible_band(rng, n));
        const std::vector<S> b = random_x(rng, n);
        std::vector<S> closed(n), oracle(n);
        for (index_t k = 1; k <= n; ++k) {
            closed[k - 1] = det_column_substituted(a, k, b, tol_);
            DenseMatrix<S> sub = a.to_dense().dense();
            for (index_t i = 1; i <= n; ++i) sub.at(i, k) = b[i - 1];
            oracle[k - 1] = dense_determinant(sub, tol_);
        }
        const Deviation<S> dev = vec_dev(closed, oracle);
        return report(n, "band=" + vec_str(a.band()) + ";b=" + vec_str(b),
                      vec_str(closed), vec_str(oracle), dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_cramer_solve(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(invertible_band(rng, n));
        const std::vector<S> b = random_x(rng, n);
        const S det = determinant(a);
        std::vector<S> x(n);
        for (index_t k = 1; k <= n; ++k)
            x[k - 1] = det_column_substituted(a, k, b, tol_) / det;
        const std::vector<S> ax = matvec(a.to_dense().dense(), x);
        const Deviation<S> dev = vec_dev(ax, b);
        return report(n, "band=" + vec_str(a.band()) + ";b=" + vec_str(b),
                      vec_str(ax), vec_str(b), dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_charpoly(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(invertible_band(rng, n));
        const std::vector<S> closed = characteristic_polynomial(a, tol_).coeffs();
        const std::vector<S> oracle = dense_charpoly(a.to_dense());
        const Deviation<S> dev = vec_dev(closed, oracle);
        return report(n, "band=" + vec_str(a.band()), vec_str(closed), vec_str(oracle),
                      dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_charpoly_constant_term(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(invertible_band(rng, n));
        const S c0 = characteristic_polynomial(a, tol_).coeff(0);
        S expected = determinant(a);
        if (n % 2 == 1) expected = -expected;
        Deviation<S> dev;
        dev.feed(c0, expected);
        return report(n, "band=" + vec_str(a.band()), scalar_str(c0), scalar_str(expected),
                      dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_ldl_reconstruct(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(ldl_band(rng, n));
        const LdlFactors<S> f = ldl_decompose(a, tol_);
        const Deviation<S> dev = mat_dev(f.reconstruct(), a.to_dense().dense());
        return report(n, "band=" + vec_str(a.band()), mat_str(f.reconstruct()),
                      mat_str(a.to_dense().dense()), dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_ldl_matches_elimination(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(exact ? to_scalars<S>(int_band_nonzero_distinct(rng, n)) : ldl_band(rng, n));
        if (!ldl_is_unique(a, tol_) || !ldl_exists(a, tol_)) {
            // Only unique factorizations are comparable factor-by-factor.
            return report(n, "band=" + vec_str(a.band()), "skipped", "skipped", true, S(0));
        }
        const LdlFactors<S> closed = ldl_decompose(a, tol_);
        const DenseLdl<S> oracle = dense_ldl(a.to_dense(), tol_);
        Deviation<S> dev = mat_dev(closed.dense_l(), oracle.l);
        const Deviation<S> ddev = vec_dev(closed.d(), oracle.d);
        if (dev.diff < ddev.diff) dev.diff = ddev.diff;
        if (ddev.ref_mag > dev.ref_mag) dev.ref_mag = ddev.ref_mag;
        return report(n, "band=" + vec_str(a.band()),
                      mat_str(closed.dense_l()) + "|d=" + vec_str(closed.d()),
                      mat_str(oracle.l) + "|d=" + vec_str(oracle.d),
                      dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_square(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(any_band(rng, n));
        const DenseSymMatrix<S> sq = square(a);
        const DenseMatrix<S>& closed = sq.dense();
        const DenseMatrix<S> oracle = multiply(a.to_dense().dense(), a.to_dense().dense());
        const Deviation<S> dev = mat_dev(closed, oracle);
        return report(n, "band=" + vec_str(a.band()), mat_str(closed), mat_str(oracle),
                      dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_structured_upper_product(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(any_band(rng, n));
        const std::vector<S> h = random_x(rng, n);
        const LBandedMatrix<S> closed = left_multiply_structured_upper(h, a);
        const DenseMatrix<S> oracle = multiply(make_structured_upper(h), a.to_dense().dense());
        const Deviation<S> dev = mat_dev(closed.to_dense().dense(), oracle);
        return report(n, "band=" + vec_str(a.band()) + ";h=" + vec_str(h),
                      mat_str(closed.to_dense().dense()), mat_str(oracle),
                      dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_linear_combination(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(any_band(rng, n)), b(any_band(rng, n));
        const S alpha = S(rng.uniform_int(-5, 5)), beta = S(rng.uniform_int(-5, 5));
        const LBandedMatrix<S> closed = linear_combination(alpha, a, beta, b);
        DenseMatrix<S> oracle(n, n);
        for (index_t i = 1; i <= n; ++i)
            for (index_t j = 1; j <= n; ++j)
                oracle.at(i, j) = alpha * a.entry(i, j) + beta * b.entry(i, j);
        const Deviation<S> dev = mat_dev(closed.to_dense().dense(), oracle);
        return report(n,
                      "alpha=" + scalar_str(alpha) + ";A=" + vec_str(a.band()) +
                          ";beta=" + scalar_str(beta) + ";B=" + vec_str(b.band()),
                      vec_str(closed.band()), mat_str(oracle), dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_detect_round_trip(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(any_band(rng, n));
        const auto outcome = detect_l_banded(a.to_dense(), tol_);
        const bool round_trip = outcome && outcome.matrix->band() == a.band();
        return report(n, "band=" + vec_str(a.band()),
                      outcome ? vec_str(outcome.matrix->band()) : std::string("NotLBanded"),
                      vec_str(a.band()), round_trip, S(0));
    }

    OracleReport prop_first_row_minors(Rng& rng) const {
        const index_t n = draw_n(rng, 2);
        LBandedMatrix<S> a(any_band(rng, n)); // singular bands included
        const DenseSymMatrix<S> dense = a.to_dense();
        Deviation<S> dev;
        const S m11 = dense_minor(dense, 1, 1, tol_);
        const S m12 = dense_minor(dense, 1, 2, tol_);
        dev.feed(m11, m12);
        std::vector<S> tail;
        for (index_t k = 3; k <= n; ++k) {
            tail.push_back(dense_minor(dense, 1, k, tol_));
            dev.feed(tail.back(), S(0));
        }
        return report(n, "band=" + vec_str(a.band()),
                      scalar_str(m11) + "|" + scalar_str(m12) + "|" + vec_str(tail),
                      "first two equal, rest zero", dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_damping_vector_lbanded(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(invertible_band(rng, n));
        const std::vector<S> closed = damping_vector_lbanded(a, tol_);
        const std::vector<S> oracle = damping_vector(a.to_dense(), tol_);
        const Deviation<S> dev = vec_dev(closed, oracle);
        return report(n, "band=" + vec_str(a.band()), vec_str(closed), vec_str(oracle),
                      dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_damped_covariance(Rng& rng) const {
        const index_t t = draw_n(rng, 2);
        const DenseSymMatrix<S> v = random_pd_dense(rng, t);
        const DampedCovariance<S> dc = damped_covariance(v, tol_);
        bool pass = static_cast<bool>(dc.detection);
        Deviation<S> dev;
        std::vector<S> expected;
        if (pass) {
            // Independent route: band entry k must equal 1 / (1^T V_k^{-1} 1).
            for (index_t k = 1; k <= t; ++k) {
                std::vector<S> ones(k, S(1));
                const std::vector<S> y = dense_solve(v.leading_principal(k).dense(), ones, tol_);
                S total = S(0);
                for (const S& yi : y) total = total + yi;
                expected.push_back(S(1) / total);
                dev.feed(dc.band[k - 1], expected.back());
            }
            pass = dev.within(verify_bounds::damped, /*scale_by_ref=*/false);
            // Non-increasing nonnegative band (small slack in float mode).
            for (index_t k = 1; k <= t && pass; ++k) {
                if constexpr (exact) {
                    pass = pass && dc.band[k - 1] >= S(0);
                    if (k < t) pass = pass && dc.band[k - 1] >= dc.band[k];
                } else {
                    pass = pass && scalar_to_double(dc.band[k - 1]) >= -verify_bounds::damped;
                    if (k < t)
                        pass = pass && scalar_to_double(dc.band[k - 1]) >=
                                           scalar_to_double(dc.band[k]) - verify_bounds::damped;
                }
            }
        }
        return report(t, "V=" + mat_str(v.dense()),
                      dc.detection ? vec_str(dc.band) : std::string("NotLBanded"),
                      vec_str(expected), pass, dev.diff);
    }

    OracleReport prop_leading_principal(Rng& rng) const {
        const index_t n = draw_n(rng);
        LBandedMatrix<S> a(any_band(rng, n));
        const index_t k = static_cast<index_t>(rng.uniform_int(1, static_cast<long long>(n)));
        const Deviation<S> dev = mat_dev(a.leading_principal(k).to_dense().dense(),
                                         a.to_dense().leading_principal(k).dense());
        return report(n, "band=" + vec_str(a.band()) + ";k=" + std::to_string(k),
                      vec_str(a.leading_principal(k).band()), "leading block", dev.within(kGeneric),
                      dev.diff);
    }

    // ---- float-only properties ------------------------------------------

    OracleReport prop_definiteness(Rng& rng) const
        requires(!scalar_traits<S>::is_exact)
    {
        const int family = static_cast<int>(rng.uniform_int(0, 4));
        const index_t n = family == 4 ? draw_n(rng, 2) : draw_n(rng);
        LBandedMatrix<double> a(float_band_definiteness_family(rng, n, family));
        const DefinitenessClass closed = classify_definiteness(a, ToleranceConfig{1e-12, verify_bounds::eigen_zero});
        const std::vector<double> eigs = dense_eigenvalues(a.to_dense(), tol_);
        const DefinitenessClass oracle = eigen_signs_class(eigs, verify_bounds::eigen_zero);
        return report(n, "band=" + vec_str(a.band()), to_string(closed), to_string(oracle),
                      closed == oracle, S(closed == oracle ? 0 : 1));
    }

    OracleReport prop_cholesky(Rng& rng) const
        requires(!scalar_traits<S>::is_exact)
    {
        const index_t n = draw_n(rng);
        LBandedMatrix<double> a(float_band_positive_definite(rng, n, 1e-3, 1.0));
        const CholeskyFactor<double> f = cholesky_decompose(a, tol_);
        Deviation<S> dev = mat_dev(f.reconstruct(), a.to_dense().dense());
        const Deviation<S> fdev = mat_dev(f.dense_l(), dense_cholesky(a.to_dense(), tol_));
        if (dev.diff < fdev.diff) dev.diff = fdev.diff;
        if (fdev.ref_mag > dev.ref_mag) dev.ref_mag = fdev.ref_mag;
        return report(n, "band=" + vec_str(a.band()), mat_str(f.dense_l()),
                      "reconstruction and dense factor", dev.within(kGeneric), dev.diff);
    }

    OracleReport prop_charpoly_eigen_residual(Rng& rng) const
        requires(!scalar_traits<S>::is_exact)
    {
        const index_t n = draw_n(rng);
        LBandedMatrix<double> a(float_band_positive_definite(rng, n, 1e-3, 5e-3));
        const Polynomial<double> p = characteristic_polynomial(a, tol_);
        double worst = 0.0;
        for (double lambda : dense_eigenvalues(a.to_dense(), tol_)) {
            const double denom = 1.0 + std::pow(std::fabs(lambda), static_cast<double>(n));
            worst = std::max(worst, std::fabs(p.evaluate(lambda)) / denom);
        }
        return report(n, "band=" + vec_str(a.band()), "residual=" + scalar_str(worst),
                      "bound=" + scalar_str(verify_bounds::charpoly_residual),
                      worst <= verify_bounds::charpoly_residual, S(worst));
    }

    static DefinitenessClass eigen_signs_class(const std::vector<double>& eigs, double tol) {
        bool all_pos = true, all_nonneg = true, all_neg = true, all_nonpos = true;
        for (double l : eigs) {
            all_pos = all_pos && l > tol;
            all_nonneg = all_nonneg && l >= -tol;
            all_neg = all_neg && l < -tol;
            all_nonpos = all_nonpos && l <= tol;
        }
        if (all_pos) return DefinitenessClass::PositiveDefinite;
        if (all_nonneg) return DefinitenessClass::PositiveSemiDefinite;
        if (all_neg) return DefinitenessClass::NegativeDefinite;
        if (all_nonpos) return DefinitenessClass::NegativeSemiDefinite;
        return DefinitenessClass::Indefinite;
    }

    std::vector<std::pair<std::string, std::function<OracleReport(Rng&)>>> properties() const {
        std::vector<std::pair<std::string, std::function<OracleReport(Rng&)>>> props;
        auto add = [&](const char* name, OracleReport (VerifyRunner::*fn)(Rng&) const) {
            props.emplace_back(name, [this, fn](Rng& rng) { return (this->*fn)(rng); });
        };
        add("determinant", &VerifyRunner::prop_determinant);
        add("inverse_vs_gauss_jordan", &VerifyRunner::prop_inverse_vs_gauss_jordan);
        add("inverse_identity", &VerifyRunner::prop_inverse_identity);
        add("row_sum_identity", &VerifyRunner::prop_row_sum_identity);
        add("quadratic_form", &VerifyRunner::prop_quadratic_form);
        add("cofactors_vs_dense_minors", &VerifyRunner::prop_cofactors_vs_dense_minors);
        add("adjugate_inverse", &VerifyRunner::prop_adjugate_inverse);
        add("column_substitution", &VerifyRunner::prop_column_substitution);
        add("cramer_solve", &VerifyRunner::prop_cramer_solve);
        add("characteristic_polynomial", &VerifyRunner::prop_charpoly);
        add("charpoly_constant_term", &VerifyRunner::prop_charpoly_constant_term);
        add("ldl_reconstruct", &VerifyRunner::prop_ldl_reconstruct);
        add("ldl_matches_elimination", &VerifyRunner::prop_ldl_matches_elimination);
        add("square_vs_dense_multiply", &VerifyRunner::prop_square);
        add("structured_upper_product", &VerifyRunner::prop_structured_upper_product);
        add("linear_combination", &VerifyRunner::prop_linear_combination);
        add("detect_round_trip", &VerifyRunner::prop_detect_round_trip);
        add("first_row_minors", &VerifyRunner::prop_first_row_minors);
        add("damping_vector_lbanded", &VerifyRunner::prop_damping_vector_lbanded);
        add("damped_covariance_band", &VerifyRunner::prop_damped_covariance);
        add("leading_principal", &VerifyRunner::prop_leading_principal);
        if constexpr (!exact) {
            add("definiteness_vs_eigensolver", &VerifyRunner::prop_definiteness);
            add("cholesky_reconstruct", &VerifyRunner::prop_cholesky);
            add("charpoly_eigen_residual", &VerifyRunner::prop_charpoly_eigen_residual);
        }
        return props;
    }
};

template <field_scalar S>
VerifySummary run_verify(const VerifyConfig& cfg) {
    return VerifyRunner<S>(cfg).run();
}

} // namespace lband
