#include "lband/cli.hpp"

#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lband/bench.hpp"
#include "lband/core.hpp"
#include "lband/damping.hpp"
#include "lband/errors.hpp"
#include "lband/io.hpp"
#include "lband/ops.hpp"
#include "lband/oracle.hpp"
#include "lband/scalar.hpp"
#include "lband/verify.hpp"

namespace lband {
namespace {

struct CliContext {
    std::string mode = "rational";
    double eq_tol = 1e-12;
    double zero_tol = 1e-12;
    std::uint64_t seed = 0;
    std::string out_path;
    bool json_inputs = false;
    bool plain = false;

    ToleranceConfig tol() const { return ToleranceConfig{eq_tol, zero_tol}; }
};

struct CliOptions {
    std::string band;
    std::string x;
    std::string b;
    std::string h;
    std::string matrix;
    index_t i = 0;
    index_t j = 0;
    index_t k = 0;
    bool dense_fallback = false;
    bool covariance = false;
    index_t nmax = 6;
    index_t trials = 25;
    std::string bench_op;
    std::vector<index_t> sizes;
    index_t reps = 5;
    bool no_dense = false;
    index_t dense_cap = 512;
};

// ---- output ---------------------------------------------------------------

bool json_is_scalar(const json& j) {
    return j.is_string() || j.is_number() || j.is_boolean() || j.is_null();
}

std::string plain_token(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render_plain(const json& j, std::ostream& os, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (json_is_scalar(j)) {
        os << pad << plain_token(j) << "\n";
    } else if (j.is_array()) {
        bool flat = true;
        for (const auto& e : j) flat = flat && json_is_scalar(e);
        if (flat) {
            os << pad;
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << " ";
                os << plain_token(j[i]);
            }
            os << "\n";
        } else {
            for (const auto& e : j) render_plain(e, os, depth);
        }
    } else {
        for (const auto& [key, value] : j.items()) {
            if (json_is_scalar(value)) {
                os << pad << key << "\t" << plain_token(value) << "\n";
            } else {
                os << pad << key << "\n";
                render_plain(value, os, depth + 1);
            }
        }
    }
}

void emit(const CliContext& ctx, const json& payload, std::ostream& out) {
    std::string text;
    if (ctx.plain) {
        std::ostringstream ss;
        render_plain(payload, ss, 0);
        text = ss.str();
    } else {
        text = payload.dump() + "\n";
    }
    if (!ctx.out_path.empty()) {
        std::ofstream f(ctx.out_path, std::ios::binary);
        if (!f) throw ParseError("cannot open output file: " + ctx.out_path);
        f << text;
    } else {
        out << text;
    }
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
    json e;
    e["error"] = json{{"kind", kind}, {"message", message}};
    err << e.dump() << "\n";
}

// ---- subcommand handlers ----------------------------------------------------

template <field_scalar S>
LBandedMatrix<S> load_band(const CliContext& ctx, const std::string& path) {
    return LBandedMatrix<S>(load_vector<S>(path, ctx.json_inputs));
}

template <field_scalar S>
int do_det(const CliContext& ctx, const CliOptions& opt, std::ostream& out) {
    const LBandedMatrix<S> a = load_band<S>(ctx, opt.band);
    json payload;
    payload["det"] = scalar_json(determinant(a));
    emit(ctx, payload, out);
    return 0;
}

template <field_scalar S>
int do_inv(const CliContext& ctx, const CliOptions& opt, std::ostream& out) {
    const LBandedMatrix<S> a = load_band<S>(ctx, opt.band);
    const SymTridiagonal<S> inv = inverse(a, ctx.tol());
    json payload;
    payload["diag"] = vector_json(inv.diag());
    payload["off"] = vector_json(inv.off());
    emit(ctx, payload, out);
    return 0;
}

template <field_scalar S>
int do_quadform(const CliContext& ctx, const CliOptions& opt, std::ostream& out) {
    const LBandedMatrix<S> a = load_band<S>(ctx, opt.band);
    const std::vector<S> x = load_vector<S>(opt.x, ctx.json_inputs);
    json payload;
    payload["value"] = scalar_json(quadratic_form(a, x));
    emit(ctx, payload, out);
    return 0;
}

template <field_scalar S>
int do_definiteness(const CliContext& ctx, const CliOptions& opt, std::ostream& out) {
    const LBandedMatrix<S> a = load_band<S>(ctx, opt.band);
    json payload;
    payload["class"] = to_string(classify_definiteness(a, ctx.tol()));
    emit(ctx, payload, out);
    return 0;
}

template <field_scalar S>
int do_ldl(const CliContext& ctx, const CliOptions& opt, std::ostream& out) {
    const LBandedMatrix<S> a = load_band<S>(ctx, opt.band);
    json payload;
    if (!ldl_exists(a, ctx.tol())) {
        payload["exists"] = false;
        emit(ctx, payload, out);
        return 0;
    }
    const LdlFactors<S> f = ldl_decompose(a, ctx.tol());
    payload["exists"] = true;
    payload["p"] = f.p();
    payload["d"] = vector_json(f.d());
    payload["l"] = matrix_json(f.dense_l());
    payload["unique"] = ldl_is_unique(a, ctx.tol());
    emit(ctx, payload, out);
    return 0;
}

template <field_scalar S>
int do_chol(const CliContext& ctx, const CliOptions& opt, std::ostream& out) {
    if constexpr (scalar_traits<S>::is_exact) {
        throw UsageError("chol requires --mode float (square roots leave the rationals)");
    } else {
        const LBandedMatrix<S> a = load_band<S>(ctx, opt.band);
        const CholeskyFactor<S> f = cholesky_decompose(a, ctx.tol());
        json payload;
        payload["l"] = matrix_json(f.dense_l());
        emit(ctx, payload, out);
        return 0;
    }
}

template <field_scalar S>
int do_cofactor(const CliContext& ctx, const CliOptions& opt, std::ostream& out) {
    const LBandedMatrix<S> a = load_band<S>(ctx, opt.band);
    json payload;
    payload["cofactor"] = scalar_json(cofactor(a, opt.i, opt.j, ctx.tol()));
    payload["minor"] = scalar_json(minor_of(a, opt.i, opt.j, ctx.tol()));
    emit(ctx, payload, out);
    return 0;
}

template <field_scalar S>
int do_colsub(const CliContext& ctx, const CliOptions& opt, std::ostream& out) {
    const LBandedMatrix<S> a = load_band<S>(ctx, opt.band);
    const std::vector<S> b = load_vector<S>(opt.b, ctx.json_inputs);
    json payload;
    payload["det"] = scalar_json(det_column_substituted(a, opt.k, b, ctx.tol()));
    emit(ctx, payload, out);
    return 0;
}

template <field_scalar S>
int do_charpoly(const CliContext& ctx, const CliOptions& opt, std::ostream& out) {
    const LBandedMatrix<S> a = load_band<S>(ctx, opt.band);
    std::string method = "closed";
    std::vector<S> coeffs;
    try {
        coeffs = characteristic_polynomial(a, ctx.tol()).coeffs();
    } catch (const SingularMatrixError&) {
        if (!opt.dense_fallback) throw;
        coeffs = dense_charpoly(a.to_dense());
        method = "dense";
    }
    json payload;
    payload["method"] = method;
    payload["coeffs"] = vector_json(coeffs);
    emit(ctx, payload, out);
    return 0;
}

template <field_scalar S>
int do_hprod(const CliContext& ctx, const CliOptions& opt, std::ostream& out) {
    const LBandedMatrix<S> a = load_band<S>(ctx, opt.band);
    const std::vector<S> h = load_vector<S>(opt.h, ctx.json_inputs);
    const LBandedMatrix<S> q = left_multiply_structured_upper(h, a);
    json payload;
    payload["band"] = vector_json(q.band());
    emit(ctx, payload, out);
    return 0;
}

template <field_scalar S>
int do_square(const CliContext& ctx, const CliOptions& opt, std::ostream& out) {
    const LBandedMatrix<S> a = load_band<S>(ctx, opt.band);
    json payload;
    payload["matrix"] = matrix_json(square(a).dense());
    emit(ctx, payload, out);
    return 0;
}

template <field_scalar S>
int do_damp(const CliContext& ctx, const CliOptions& opt, std::ostream& out) {
    const bool have_band = !opt.band.empty();
    const bool have_matrix = !opt.matrix.empty();
    if (have_band == have_matrix)
        throw UsageError("damp needs exactly one of --band or --matrix");
    if (opt.covariance && !have_matrix)
        throw UsageError("--covariance requires --matrix");
    json payload;
    if (have_band) {
        const LBandedMatrix<S> a = load_band<S>(ctx, opt.band);
        payload["zeta"] = vector_json(damping_vector_lbanded(a, ctx.tol()));
    } else {
        const DenseSymMatrix<S> v = load_sym_csv<S>(opt.matrix, ctx.tol());
        payload["zeta"] = vector_json(damping_vector(v, ctx.tol()));
        if (opt.covariance) {
            const DampedCovariance<S> dc = damped_covariance(v, ctx.tol());
            payload["w"] = matrix_json(dc.matrix.dense());
            payload["l_banded"] = static_cast<bool>(dc.detection);
            if (dc.detection)
                payload["band"] = vector_json(dc.band);
            else
                payload["violation"] = json::array({dc.detection.violation_row, dc.detection.violation_col});
        }
    }
    emit(ctx, payload, out);
    return 0;
}

template <field_scalar S>
int do_verify(const CliContext& ctx, const CliOptions& opt, std::ostream& out) {
    VerifyConfig cfg;
    cfg.n_max = opt.nmax;
    cfg.trials = opt.trials;
    cfg.seed = ctx.seed;
    const VerifySummary summary = run_verify<S>(cfg);
    json payload;
    payload["mode"] = std::string(scalar_traits<S>::name);
    payload["n_max"] = cfg.n_max;
    payload["trials"] = cfg.trials;
    payload["seed"] = cfg.seed;
    payload["failures"] = summary.failures;
    json reports = json::array();
    for (const OracleReport& r : summary.reports) {
        json item;
        item["op"] = r.op;
        item["digest"] = r.digest;
        item["closed_form"] = r.closed_form;
        item["oracle"] = r.oracle;
        item["pass"] = r.pass;
        item["discrepancy"] = r.discrepancy;
        reports.push_back(std::move(item));
    }
    payload["reports"] = std::move(reports);
    emit(ctx, payload, out);
    return summary.failures == 0 ? 0 : 3;
}

int do_bench(const CliContext& ctx, const CliOptions& opt, std::ostream& out) {
    if (ctx.mode != "float")
        throw UsageError("bench requires --mode float (wall-clock timing is float-only)");
    BenchConfig cfg;
    cfg.op = parse_bench_op(opt.bench_op);
    cfg.sizes = opt.sizes;
    cfg.reps = opt.reps;
    cfg.seed = ctx.seed;
    cfg.include_dense = !opt.no_dense;
    cfg.dense_cap = opt.dense_cap;
    const std::vector<BenchRecord> records = run_bench(cfg);
    json payload;
    payload["op"] = bench_op_name(cfg.op);
    payload["seed"] = cfg.seed;
    payload["reps"] = cfg.reps;
    json recs = json::array();
    for (const BenchRecord& r : records) {
        json item;
        item["op"] = r.op;
        item["implementation"] = r.implementation;
        item["n"] = r.n;
        item["median_ns"] = r.median_ns;
        recs.push_back(std::move(item));
    }
    payload["records"] = std::move(recs);
    json exponents;
    for (const std::string impl : {"closed", "dense"}) {
        index_t count = 0;
        for (const BenchRecord& r : records)
            if (r.implementation == impl) ++count;
        if (count >= 2) exponents[impl] = scaling_exponent(records, impl);
    }
    payload["exponents"] = std::move(exponents);
    emit(ctx, payload, out);
    return 0;
}

template <class Fn>
int with_mode(const std::string& mode, Fn&& fn) {
    if (mode == "float") return fn(double(0));
    return fn(Rational(0));
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliContext ctx;
    CliOptions opt;

    CLI::App app{"Closed-form linear algebra for L-banded matrices"};
    app.name("lband");
    app.require_subcommand(1);
    app.add_option("--mode", ctx.mode, "Scalar arithmetic: float or rational")
        ->check(CLI::IsMember({"float", "rational"}));
    app.add_option("--eq-tol", ctx.eq_tol, "Relative equality tolerance (float mode)");
    app.add_option("--zero-tol", ctx.zero_tol, "Absolute zero/strictness threshold (float mode)");
    app.add_option("--seed", ctx.seed, "Seed for verify and bench input generation");
    app.add_option("--out", ctx.out_path, "Write the result to a file instead of stdout");
    app.add_flag("--json", ctx.json_inputs, "Band/vector input files are JSON arrays of strings");
    app.add_flag("--plain", ctx.plain, "Plain-text output instead of JSON");

    auto add_band = [&](CLI::App* sub) {
        sub->add_option("--band", opt.band, "Band vector file (a_1..a_n)")->required();
    };

    CLI::App* det = app.add_subcommand("det", "Determinant");
    add_band(det);
    CLI::App* inv = app.add_subcommand("inv", "Tridiagonal inverse");
    add_band(inv);
    CLI::App* quadform = app.add_subcommand("quadform", "Quadratic form x'Ax");
    add_band(quadform);
    quadform->add_option("--x", opt.x, "Vector file")->required();
    CLI::App* definiteness = app.add_subcommand("definiteness", "Definiteness class");
    add_band(definiteness);
    CLI::App* ldl = app.add_subcommand("ldl", "LDL' factorization");
    add_band(ldl);
    CLI::App* chol = app.add_subcommand("chol", "Cholesky factorization (float mode)");
    add_band(chol);
    CLI::App* cofactor_cmd = app.add_subcommand("cofactor", "Cofactor and minor at (i,j)");
    add_band(cofactor_cmd);
    cofactor_cmd->add_option("--i", opt.i, "Row index (1-based)")->required();
    cofactor_cmd->add_option("--j", opt.j, "Column index (1-based)")->required();
    CLI::App* colsub = app.add_subcommand("colsub", "Determinant with column k replaced by b");
    add_band(colsub);
    colsub->add_option("--k", opt.k, "Column index (1-based)")->required();
    colsub->add_option("--b", opt.b, "Replacement column file")->required();
    CLI::App* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial coefficients");
    add_band(charpoly);
    charpoly->add_flag("--dense-fallback", opt.dense_fallback,
                       "Fall back to the dense oracle when the matrix is singular");
    CLI::App* hprod = app.add_subcommand("hprod", "Structured upper-triangular product H(h)*A");
    hprod->set_help_flag("--help", "Print this help message and exit"); // frees -h for the vector
    add_band(hprod);
    hprod->add_option("--h", opt.h, "Vector file for H")->required();
    CLI::App* square_cmd = app.add_subcommand("square", "Dense square A*A");
    add_band(square_cmd);
    CLI::App* damp = app.add_subcommand("damp", "Optimal damping vector (and damped covariance)");
    damp->add_option("--band", opt.band, "Band vector file for the L-banded fast path");
    damp->add_option("--matrix", opt.matrix, "Dense symmetric covariance, CSV");
    damp->add_flag("--covariance", opt.covariance, "Also emit the damped covariance and its band");
    CLI::App* verify = app.add_subcommand("verify", "Run closed-form-vs-oracle property checks");
    verify->add_option("--nmax", opt.nmax, "Largest matrix size to draw");
    verify->add_option("--trials", opt.trials, "Trials per property");
    CLI::App* bench = app.add_subcommand("bench", "Time closed-form vs dense implementations");
    bench->add_option("--op", opt.bench_op, "det, inverse, quadform, definiteness, ldl, or chol")
        ->required();
    bench->add_option("--sizes", opt.sizes, "Matrix sizes to time")->required()->delimiter(',');
    bench->add_option("--reps", opt.reps, "Repetitions per timing (median reported)");
    bench->add_flag("--no-dense", opt.no_dense, "Skip the dense-oracle timings");
    bench->add_option("--dense-cap", opt.dense_cap, "Largest size timed with the dense oracle");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        emit_error(err, "UsageError", e.what());
        return 2;
    }

    try {
        auto mode_run = [&](auto handler) {
            return with_mode(ctx.mode, [&](auto tag) {
                using S = decltype(tag);
                return handler.template operator()<S>();
            });
        };
        if (det->parsed())
            return mode_run([&]<field_scalar S>() { return do_det<S>(ctx, opt, out); });
        if (inv->parsed())
            return mode_run([&]<field_scalar S>() { return do_inv<S>(ctx, opt, out); });
        if (quadform->parsed())
            return mode_run([&]<field_scalar S>() { return do_quadform<S>(ctx, opt, out); });
        if (definiteness->parsed())
            return mode_run([&]<field_scalar S>() { return do_definiteness<S>(ctx, opt, out); });
        if (ldl->parsed())
            return mode_run([&]<field_scalar S>() { return do_ldl<S>(ctx, opt, out); });
        if (chol->parsed())
            return mode_run([&]<field_scalar S>() { return do_chol<S>(ctx, opt, out); });
        if (cofactor_cmd->parsed())
            return mode_run([&]<field_scalar S>() { return do_cofactor<S>(ctx, opt, out); });
        if (colsub->parsed())
            return mode_run([&]<field_scalar S>() { return do_colsub<S>(ctx, opt, out); });
        if (charpoly->parsed())
            return mode_run([&]<field_scalar S>() { return do_charpoly<S>(ctx, opt, out); });
        if (hprod->parsed())
            return mode_run([&]<field_scalar S>() { return do_hprod<S>(ctx, opt, out); });
        if (square_cmd->parsed())
            return mode_run([&]<field_scalar S>() { return do_square<S>(ctx, opt, out); });
        if (damp->parsed())
            return mode_run([&]<field_scalar S>() { return do_damp<S>(ctx, opt, out); });
        if (verify->parsed())
            return mode_run([&]<field_scalar S>() { return do_verify<S>(ctx, opt, out); });
        if (bench->parsed()) return do_bench(ctx, opt, out);
        emit_error(err, "UsageError", "no subcommand given");
        return 2;
    } catch (const Error& e) {
        emit_error(err, e.kind(), e.what());
        return is_usage_kind(e.kind()) ? 2 : 3;
    } catch (const std::exception& e) {
        emit_error(err, "InternalError", e.what());
        return 3;
    }
}

} // namespace lband
