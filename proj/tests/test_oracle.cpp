#include <doctest.h>

#include <cmath>
#include <vector>

#include "lband/bandgen.hpp"
#include "lband/core.hpp"
#include "lband/oracle.hpp"
#include "lband/rng.hpp"
#include "lband/scalar.hpp"

using namespace lband;

namespace {

DenseSymMatrix<Rational> sym321() {
    return LBandedMatrix<Rational>(to_scalars<Rational>({3, 2, 1})).to_dense();
}

} // namespace

TEST_CASE("fraction-free determinant on small fixtures") {
    CHECK(dense_determinant(sym321()) == Rational(1));
    CHECK(dense_determinant(DenseMatrix<Rational>::identity(3)) == Rational(1));

    DenseMatrix<Rational> single(1, 1);
    single.at(1, 1) = Rational(5);
    CHECK(dense_determinant(single) == Rational(5));

    DenseMatrix<Rational> singular(2, 2, Rational(1));
    CHECK(dense_determinant(singular) == Rational(0));

    DenseMatrix<Rational> rect(2, 3);
    CHECK_THROWS_AS(dense_determinant(rect), DimensionMismatchError);
}

TEST_CASE("determinant survives a zero leading pivot via row exchange") {
    DenseMatrix<Rational> m(2, 2);
    m.at(1, 2) = Rational(1);
    m.at(2, 1) = Rational(1);
    CHECK(dense_determinant(m) == Rational(-1));
}

TEST_CASE("float determinant stays close on the canonical example") {
    LBandedMatrix<double> a({3.0, 2.0, 1.0});
    CHECK(dense_determinant(a.to_dense()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Gauss-Jordan inverse of the canonical example is tridiagonal") {
    const DenseMatrix<Rational> inv = dense_inverse(sym321());
    CHECK(inv.at(1, 1) == Rational(1));
    CHECK(inv.at(2, 2) == Rational(2));
    CHECK(inv.at(3, 3) == Rational(2));
    CHECK(inv.at(1, 2) == Rational(-1));
    CHECK(inv.at(2, 3) == Rational(-1));
    CHECK(inv.at(1, 3) == Rational(0));
    CHECK(multiply(sym321().dense(), inv) == DenseMatrix<Rational>::identity(3));
}

TEST_CASE("inverting a singular matrix names the failing pivot column") {
    DenseMatrix<Rational> singular(2, 2, Rational(1));
    CHECK_THROWS_AS(dense_inverse(singular), SingularMatrixError);
}

TEST_CASE("linear solve recovers a known solution") {
    DenseMatrix<Rational> a = sym321().dense();
    const std::vector<Rational> x{Rational(1), Rational(-2), Rational(3)};
    const std::vector<Rational> b = matvec(a, x);
    CHECK(dense_solve(a, b) == x);
    CHECK_THROWS_AS(dense_solve(a, std::vector<Rational>(2, Rational(1))), DimensionMismatchError);
    DenseMatrix<Rational> singular(2, 2, Rational(1));
    CHECK_THROWS_AS(dense_solve(singular, std::vector<Rational>(2, Rational(1))), SingularMatrixError);
}

TEST_CASE("iteration-free characteristic polynomial on fixtures") {
    CHECK(dense_charpoly(sym321()) ==
          std::vector<Rational>{Rational(-1), Rational(5), Rational(-6), Rational(1)});

    DenseSymMatrix<Rational> one(1);
    one.set_sym(1, 1, Rational(4));
    CHECK(dense_charpoly(one) == std::vector<Rational>{Rational(-4), Rational(1)});

    // det(lambda I - I3) = (lambda - 1)^3
    const DenseSymMatrix<Rational> id(DenseMatrix<Rational>::identity(3), ToleranceConfig{});
    CHECK(dense_charpoly(id) ==
          std::vector<Rational>{Rational(-1), Rational(3), Rational(-3), Rational(1)});
}

TEST_CASE("eigenvalues of trivial matrices") {
    DenseSymMatrix<double> one(1);
    one.set_sym(1, 1, 5.0);
    CHECK(dense_eigenvalues(one) == std::vector<double>{5.0});

    const DenseSymMatrix<double> id(DenseMatrix<double>::identity(3), ToleranceConfig{});
    const std::vector<double> eigs = dense_eigenvalues(id);
    REQUIRE(eigs.size() == 3);
    for (double l : eigs) CHECK(l == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigenvalues of the two-band example hit the closed roots") {
    // spectrum of [[2,1],[1,1]] is (3 +- sqrt(5)) / 2
    LBandedMatrix<double> a({2.0, 1.0});
    const std::vector<double> eigs = dense_eigenvalues(a.to_dense());
    REQUIRE(eigs.size() == 2);
    CHECK(eigs[0] == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-13));
    CHECK(eigs[1] == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-13));
}

TEST_CASE("eigenvalues come back sorted with trace and determinant preserved") {
    for (index_t t = 0; t < 25; ++t) {
        Rng rng = Rng::derive(31, "oracle_eigs", t);
        const index_t n = static_cast<index_t>(rng.uniform_int(2, 8));
        LBandedMatrix<double> a(float_band_away_from_degeneracy(rng, n));
        const std::vector<double> eigs = dense_eigenvalues(a.to_dense());
        REQUIRE(eigs.size() == n);
        double trace = 0, sum = 0;
        for (index_t i = 1; i <= n; ++i) trace += a.entry(i, i);
        for (index_t i = 0; i + 1 < n; ++i) CHECK(eigs[i] <= eigs[i + 1]);
        for (double l : eigs) sum += l;
        CHECK(sum == doctest::Approx(trace).epsilon(1e-10));
    }
}

TEST_CASE("minors delete one row and one column") {
    CHECK(dense_minor(sym321(), 1, 1) == Rational(1)); // det [[2,1],[1,1]]
    CHECK(dense_minor(sym321(), 1, 2) == Rational(1)); // det [[2,1],[1,1]]
    CHECK(dense_minor(sym321(), 1, 3) == Rational(0)); // det [[2,2],[1,1]]
    CHECK(dense_cofactor(sym321(), 1, 2) == Rational(-1));
    CHECK(dense_cofactor(sym321(), 1, 1) == Rational(1));

    DenseSymMatrix<Rational> one(1);
    one.set_sym(1, 1, Rational(2));
    CHECK_THROWS_AS(dense_minor(one, 1, 1), DimensionMismatchError);
    CHECK_THROWS_AS(dense_minor(sym321(), 0, 1), IndexOutOfRangeError);
    CHECK_THROWS_AS(dense_minor(sym321(), 1, 4), IndexOutOfRangeError);
}

TEST_CASE("dense elimination LDL on the canonical example") {
    const DenseLdl<Rational> f = dense_ldl(sym321());
    CHECK(f.d == std::vector<Rational>{Rational(3), Rational(2, 3), Rational(1, 2)});
    CHECK(f.l.at(2, 1) == Rational(2, 3));
    CHECK(f.l.at(3, 1) == Rational(1, 3));
    CHECK(f.l.at(3, 2) == Rational(1, 2));
    DenseMatrix<Rational> diag(3, 3);
    for (index_t k = 1; k <= 3; ++k) diag.at(k, k) = f.d[k - 1];
    CHECK(multiply(multiply(f.l, diag), transpose(f.l)) == sym321().dense());
}

TEST_CASE("dense LDL tolerates a zero pivot only above a zero column") {
    DenseSymMatrix<Rational> ok(2);
    ok.set_sym(2, 2, Rational(1)); // [[0,0],[0,1]]
    const DenseLdl<Rational> f = dense_ldl(ok);
    CHECK(f.d == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(f.l == DenseMatrix<Rational>::identity(2));

    DenseSymMatrix<Rational> bad(2);
    bad.set_sym(1, 2, Rational(1)); // [[0,1],[1,0]] has no LDL form
    CHECK_THROWS_AS(dense_ldl(bad), NoLdlDecompositionError);
}

TEST_CASE("dense Cholesky on the canonical example") {
    LBandedMatrix<double> a({3.0, 2.0, 1.0});
    const DenseMatrix<double> l = dense_cholesky(a.to_dense());
    CHECK(l.at(1, 1) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(l.at(2, 1) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-14));
    const DenseMatrix<double> rec = multiply(l, transpose(l));
    for (index_t i = 1; i <= 3; ++i)
        for (index_t j = 1; j <= 3; ++j)
            CHECK(rec.at(i, j) == doctest::Approx(a.entry(i, j)).epsilon(1e-12));

    LBandedMatrix<double> indef({-2.0, -1.0});
    CHECK_THROWS_AS(dense_cholesky(indef.to_dense()), NotPositiveDefiniteError);
}

TEST_CASE("oracle report fields serialize verbatim") {
    OracleReport r;
    r.op = "determinant";
    r.digest = "n=3;fnv64:0";
    r.closed_form = "1";
    r.oracle = "1";
    r.pass = true;
    r.discrepancy = "0";
    CHECK(r.op == "determinant");
    CHECK(r.pass);
}
