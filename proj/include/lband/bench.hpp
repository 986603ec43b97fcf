// Micro-benchmark harness comparing the closed-form band routines against
// their dense counterparts. Inputs are generated deterministically from the
// seed; timings are median-of-reps with one discarded warmup run.
//
// The factorization benchmarks time decomposition plus materialization of
// the dense factor, so closed and dense routes produce the same artifact
// and the comparison stays honest.
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lband/bandgen.hpp"
#include "lband/core.hpp"
#include "lband/errors.hpp"
#include "lband/ops.hpp"
#include "lband/oracle.hpp"
#include "lband/rng.hpp"
#include "lband/scalar.hpp"

namespace lband {

enum class BenchOp { Det, Inverse, QuadForm, Definiteness, Ldl, Cholesky };

inline std::string bench_op_name(BenchOp op) {
    switch (op) {
        case BenchOp::Det: return "det";
        case BenchOp::Inverse: return "inverse";
        case BenchOp::QuadForm: return "quadform";
        case BenchOp::Definiteness: return "definiteness";
        case BenchOp::Ldl: return "ldl";
        case BenchOp::Cholesky: return "chol";
    }
    return "unknown";
}

inline BenchOp parse_bench_op(const std::string& s) {
    if (s == "det") return BenchOp::Det;
    if (s == "inverse") return BenchOp::Inverse;
    if (s == "quadform") return BenchOp::QuadForm;
    if (s == "definiteness") return BenchOp::Definiteness;
    if (s == "ldl") return BenchOp::Ldl;
    if (s == "chol") return BenchOp::Cholesky;
    throw UsageError("unknown bench op '" + s +
                     "' (expected det, inverse, quadform, definiteness, ldl, or chol)");
}

struct BenchConfig {
    BenchOp op = BenchOp::Det;
    std::vector<index_t> sizes;
    index_t reps = 5;
    std::uint64_t seed = 0;
    bool include_dense = true;
    index_t dense_cap = 512; // dense routes are skipped above this size
};

struct BenchRecord {
    std::string op;
    std::string implementation; // "closed" or "dense"
    index_t n = 0;
    double median_ns = 0.0;
};

/// Keeps a computed value observable so the optimizer cannot delete the
/// benchmarked call.
template <class T>
inline void do_not_optimize(const T& value) {
    asm volatile("" : : "g"(&value) : "memory");
}

namespace bench_detail {

inline double time_ns(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::nano>(t1 - t0).count();
}

inline double median_ns(const std::function<void()>& fn, index_t reps) {
    fn(); // warmup, not recorded
    std::vector<double> times;
    times.reserve(reps);
    for (index_t r = 0; r < reps; ++r) times.push_back(time_ns(fn));
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

} // namespace bench_detail

/// Least useful with one size; with two or more, the slope of log(time)
/// against log(n) between the smallest and largest measured sizes.
inline double scaling_exponent(const std::vector<BenchRecord>& records,
                               const std::string& implementation) {
    const BenchRecord* first = nullptr;
    const BenchRecord* last = nullptr;
    for (const auto& r : records) {
        if (r.implementation != implementation) continue;
        if (!first) first = &r;
        last = &r;
    }
    if (!first || first == last)
        throw UsageError("need timings at two sizes to estimate a scaling exponent");
    return std::log(last->median_ns / first->median_ns) /
           std::log(static_cast<double>(last->n) / static_cast<double>(first->n));
}

inline std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
    if (cfg.sizes.empty()) throw UsageError("bench needs at least one size");
    if (cfg.reps < 1) throw UsageError("bench reps must be at least 1");
    const ToleranceConfig tol{};
    std::vector<BenchRecord> out;
    for (index_t n : cfg.sizes) {
        if (n < 1) throw UsageError("bench sizes must be positive");
        Rng rng = Rng::derive(cfg.seed, "bench:" + bench_op_name(cfg.op), n);
        const LBandedMatrix<double> a(float_band_bench(rng, n));
        const std::vector<double> x = float_vector(rng, n);

        std::function<void()> closed;
        switch (cfg.op) {
            case BenchOp::Det:
                closed = [&] { do_not_optimize(determinant(a)); };
                break;
            case BenchOp::Inverse:
                closed = [&] {
                    const SymTridiagonal<double> inv = inverse(a, tol);
                    do_not_optimize(inv);
                };
                break;
            case BenchOp::QuadForm:
                closed = [&] { do_not_optimize(quadratic_form(a, x)); };
                break;
            case BenchOp::Definiteness:
                closed = [&] {
                    const DefinitenessClass c = classify_definiteness(a, tol);
                    do_not_optimize(c);
                };
                break;
            case BenchOp::Ldl:
                closed = [&] {
                    const LdlFactors<double> f = ldl_decompose(a, tol);
                    const DenseMatrix<double> l = f.dense_l();
                    do_not_optimize(l);
                    do_not_optimize(f.d());
                };
                break;
            case BenchOp::Cholesky:
                closed = [&] {
                    const CholeskyFactor<double> f = cholesky_decompose(a, tol);
                    const DenseMatrix<double> l = f.dense_l();
                    do_not_optimize(l);
                };
                break;
        }
        out.push_back({bench_op_name(cfg.op), "closed", n, bench_detail::median_ns(closed, cfg.reps)});

        if (!cfg.include_dense || n > cfg.dense_cap) continue;
        const DenseSymMatrix<double> dense = a.to_dense(); // built outside the timed region
        std::function<void()> slow;
        switch (cfg.op) {
            case BenchOp::Det:
                slow = [&] { do_not_optimize(dense_determinant(dense, tol)); };
                break;
            case BenchOp::Inverse:
                slow = [&] {
                    const DenseMatrix<double> inv = dense_inverse(dense, tol);
                    do_not_optimize(inv);
                };
                break;
            case BenchOp::QuadForm:
                slow = [&] {
                    const std::vector<double> ax = matvec(dense.dense(), x);
                    double q = 0.0;
                    for (index_t i = 0; i < n; ++i) q += x[i] * ax[i];
                    do_not_optimize(q);
                };
                break;
            case BenchOp::Definiteness:
                slow = [&] {
                    const std::vector<double> eigs = dense_eigenvalues(dense, tol);
                    do_not_optimize(eigs);
                };
                break;
            case BenchOp::Ldl:
                slow = [&] {
                    const DenseLdl<double> f = dense_ldl(dense, tol);
                    do_not_optimize(f);
                };
                break;
            case BenchOp::Cholesky:
                slow = [&] {
                    const DenseMatrix<double> l = dense_cholesky(dense, tol);
                    do_not_optimize(l);
                };
                break;
        }
        out.push_back({bench_op_name(cfg.op), "dense", n, bench_detail::median_ns(slow, cfg.reps)});
    }
    return out;
}

} // namespace lband
