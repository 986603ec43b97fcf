#include <doctest.h>

#include <cmath>
#include <vector>

#include "lband/bandgen.hpp"
#include "lband/core.hpp"
#include "lband/ops.hpp"
#include "lband/oracle.hpp"
#include "lband/rng.hpp"
#include "lband/scalar.hpp"

using namespace lband;

namespace {

LBandedMatrix<Rational> rband(std::vector<long> v) { return LBandedMatrix<Rational>(to_scalars<Rational>(v)); }

} // namespace

TEST_CASE("delta coefficients of a strictly decreasing band") {
    const auto d = DeltaCoefficients<Rational>::compute(rband({3, 2, 1}), ToleranceConfig{});
    CHECK(d.at(0) == Rational(0));
    CHECK(d.at(1) == Rational(1));
    CHECK(d.at(2) == Rational(1));
    CHECK(d.at(3) == Rational(1));
    const auto e = DeltaCoefficients<Rational>::compute(rband({3, 1}), ToleranceConfig{});
    CHECK(e.at(1) == Rational(1, 2));
    CHECK(e.at(2) == Rational(1));
}

TEST_CASE("delta coefficients refuse degenerate bands") {
    CHECK_THROWS_AS(DeltaCoefficients<Rational>::compute(rband({2, 2, 1}), ToleranceConfig{}),
                    SingularMatrixError);
    CHECK_THROWS_AS(DeltaCoefficients<Rational>::compute(rband({3, 2, 0}), ToleranceConfig{}),
                    SingularMatrixError);
    // float ties within the tolerance are rejected, not inverted
    CHECK_THROWS_AS(
        DeltaCoefficients<double>::compute(LBandedMatrix<double>({2.0, 2.0 + 1e-15, 1.0}), ToleranceConfig{}),
        SingularMatrixError);
}

TEST_CASE("determinant telescopes the band differences") {
    CHECK(determinant(rband({3, 2, 1})) == Rational(1));
    CHECK(determinant(rband({5})) == Rational(5));
    CHECK(determinant(rband({2, 2, 1})) == Rational(0));
    CHECK(determinant(rband({3, 2, 0})) == Rational(0));
    CHECK(determinant(rband({1, 2})) == Rational(-2));
}

TEST_CASE("invertibility needs distinct neighbors and a nonzero last entry") {
    CHECK(is_invertible(rband({3, 2, 1})));
    CHECK(is_invertible(rband({-1, 2, 1})));
    CHECK_FALSE(is_invertible(rband({2, 2, 1})));
    CHECK_FALSE(is_invertible(rband({3, 2, 0})));
}

TEST_CASE("the inverse is symmetric tridiagonal with delta entries") {
    const SymTridiagonal<Rational> inv = inverse(rband({3, 2, 1}), ToleranceConfig{});
    CHECK(inv.diag() == std::vector<Rational>{Rational(1), Rational(2), Rational(2)});
    CHECK(inv.off() == std::vector<Rational>{Rational(-1), Rational(-1)});
    CHECK(inv.entry(1, 3) == Rational(0));
    CHECK(inv.entry(2, 1) == Rational(-1));
}

TEST_CASE("the inverse multiplies back to the identity exactly") {
    for (index_t t = 0; t < 60; ++t) {
        Rng rng = Rng::derive(21, "ops_inverse", t);
        const index_t n = static_cast<index_t>(rng.uniform_int(1, 8));
        LBandedMatrix<Rational> a(to_scalars<Rational>(int_band_invertible(rng, n)));
        const DenseMatrix<Rational> prod =
            multiply(a.to_dense().dense(), inverse(a, ToleranceConfig{}).to_dense().dense());
        CHECK(prod == DenseMatrix<Rational>::identity(n));
    }
}

TEST_CASE("tridiagonal wrapper validates and reproduces entries") {
    CHECK_THROWS_AS(SymTridiagonal<Rational>({Rational(1)}, {Rational(2), Rational(3)}),
                    DimensionMismatchError);
    SymTridiagonal<Rational> t({Rational(1), Rational(2)}, {Rational(5)});
    CHECK(t.entry(1, 2) == Rational(5));
    CHECK(t.entry(2, 1) == Rational(5));
    CHECK(t.to_dense().at(1, 1) == Rational(1));
}

TEST_CASE("quadratic form at the all-ones vector") {
    const std::vector<Rational> ones(3, Rational(1));
    CHECK(quadratic_form(rband({3, 2, 1}), ones) == Rational(14));
    CHECK_THROWS_AS(quadratic_form(rband({3, 2, 1}), std::vector<Rational>(2, Rational(1))),
                    DimensionMismatchError);
}

TEST_CASE("definiteness classes from the difference chain") {
    CHECK(classify_definiteness(rband({3, 2, 1})) == DefinitenessClass::PositiveDefinite);
    CHECK(classify_definiteness(rband({1, 1, 0})) == DefinitenessClass::PositiveSemiDefinite);
    CHECK(classify_definiteness(rband({0, 0})) == DefinitenessClass::PositiveSemiDefinite);
    CHECK(classify_definiteness(rband({-2, -1})) == DefinitenessClass::NegativeDefinite);
    CHECK(classify_definiteness(rband({-1, -1, 0})) == DefinitenessClass::NegativeSemiDefinite);
    CHECK(classify_definiteness(rband({-1, -2})) == DefinitenessClass::Indefinite);
    CHECK(classify_definiteness(rband({1, 2})) == DefinitenessClass::Indefinite);
    CHECK(classify_definiteness(rband({5})) == DefinitenessClass::PositiveDefinite);
}

TEST_CASE("the semidefinite predicate is the literal chain condition") {
    CHECK(is_positive_semidefinite(rband({1, 1, 0})));
    CHECK(is_positive_semidefinite(rband({3, 2, 1}))); // strict chains qualify too
    CHECK(is_positive_semidefinite(rband({0, 0})));
    CHECK_FALSE(is_positive_semidefinite(rband({-1, -2})));
    CHECK_FALSE(is_positive_semidefinite(rband({1, 2})));
}

TEST_CASE("LDL factors of a strictly decreasing band") {
    const LdlFactors<Rational> f = ldl_decompose(rband({3, 2, 1}), ToleranceConfig{});
    CHECK(f.p() == 3);
    CHECK(f.d() == std::vector<Rational>{Rational(3), Rational(2, 3), Rational(1, 2)});
    CHECK(f.l_entry(2, 1) == Rational(2, 3));
    CHECK(f.l_entry(3, 1) == Rational(1, 3));
    CHECK(f.l_entry(3, 2) == Rational(1, 2));
    CHECK(f.l_entry(1, 1) == Rational(1));
    CHECK(f.l_entry(1, 2) == Rational(0));
    CHECK(f.reconstruct() == rband({3, 2, 1}).to_dense().dense());
}

TEST_CASE("LDL with a trailing zero block") {
    const LdlFactors<Rational> f = ldl_decompose(rband({3, 2, 0}), ToleranceConfig{});
    CHECK(f.p() == 2);
    CHECK(f.d() == std::vector<Rational>{Rational(3), Rational(2, 3), Rational(0)});
    CHECK(f.l_entry(3, 3) == Rational(1)); // identity column beyond p
    CHECK(f.l_entry(3, 2) == Rational(0));
    CHECK(f.reconstruct() == rband({3, 2, 0}).to_dense().dense());
}

TEST_CASE("LDL existence needs nonzero entries before the last nonzero") {
    CHECK(ldl_exists(rband({3, 2, 1})));
    CHECK(ldl_exists(rband({3, 2, 0})));
    CHECK_FALSE(ldl_exists(rband({3, 0, 1})));
    CHECK(ldl_exists(rband({0, 0, 0}))); // p = 0, pure zero block
    CHECK_THROWS_AS(ldl_decompose(rband({3, 0, 1}), ToleranceConfig{}), NoLdlDecompositionError);
    CHECK(ldl_decompose(rband({0, 0}), ToleranceConfig{}).reconstruct() ==
          rband({0, 0}).to_dense().dense());
}

TEST_CASE("LDL uniqueness allows a tie only at the last position") {
    CHECK(ldl_is_unique(rband({3, 2, 1})));
    CHECK(ldl_is_unique(rband({3, 2, 2})));       // tie at j = n is harmless
    CHECK_FALSE(ldl_is_unique(rband({3, 3, 1}))); // tie at j = 2 frees column 2
    CHECK_FALSE(ldl_is_unique(rband({2, 2, 1})));
    CHECK_FALSE(ldl_is_unique(rband({3, 0, 0}))); // zero inside the first n-1 entries
}

TEST_CASE("a zero pivot makes the factorization constructively non-unique") {
    // d_2 vanishes for this band, so column 2 of L is unconstrained: replace
    // l_32 by an arbitrary value and the product is unchanged.
    LBandedMatrix<Rational> a = rband({2, 2, 1});
    REQUIRE(ldl_exists(a, ToleranceConfig{}));
    REQUIRE_FALSE(ldl_is_unique(a, ToleranceConfig{}));
    const LdlFactors<Rational> f = ldl_decompose(a, ToleranceConfig{});
    CHECK(f.d()[1] == Rational(0));

    DenseMatrix<Rational> alt = f.dense_l();
    alt.at(3, 2) = Rational(7);
    DenseMatrix<Rational> diag(3, 3);
    for (index_t k = 1; k <= 3; ++k) diag.at(k, k) = f.d()[k - 1];
    const DenseMatrix<Rational> product = multiply(multiply(alt, diag), transpose(alt));
    CHECK(product == a.to_dense().dense());
}

TEST_CASE("uniqueness failure always comes with a vanishing interior pivot") {
    // Random search: whenever the sufficient condition fails but a
    // factorization exists, some d_k with k < n is zero, and perturbing that
    // column reproduces the matrix. This is the constructive converse.
    int non_unique_seen = 0;
    for (index_t t = 0; t < 400; ++t) {
        Rng rng = Rng::derive(23, "ops_ldl_unique", t);
        const index_t n = static_cast<index_t>(rng.uniform_int(2, 6));
        LBandedMatrix<Rational> a(to_scalars<Rational>(int_band_any(rng, n)));
        if (!ldl_exists(a, ToleranceConfig{})) continue;
        const LdlFactors<Rational> f = ldl_decompose(a, ToleranceConfig{});
        REQUIRE(f.reconstruct() == a.to_dense().dense());
        if (ldl_is_unique(a, ToleranceConfig{})) continue;
        ++non_unique_seen;
        index_t zero_pivot = 0;
        for (index_t k = 1; k < n; ++k)
            if (f.d()[k - 1] == Rational(0)) zero_pivot = k;
        REQUIRE(zero_pivot >= 1);
        DenseMatrix<Rational> alt = f.dense_l();
        alt.at(zero_pivot + 1, zero_pivot) = alt.at(zero_pivot + 1, zero_pivot) + Rational(5);
        DenseMatrix<Rational> diag(n, n);
        for (index_t k = 1; k <= n; ++k) diag.at(k, k) = f.d()[k - 1];
        CHECK(multiply(multiply(alt, diag), transpose(alt)) == a.to_dense().dense());
    }
    CHECK(non_unique_seen > 0);
}

TEST_CASE("Cholesky factor of a positive definite band") {
    LBandedMatrix<double> a({3.0, 2.0, 1.0});
    const CholeskyFactor<double> f = cholesky_decompose(a, ToleranceConfig{});
    CHECK(f.entry(1, 1) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(f.entry(2, 1) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(f.entry(3, 1) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    const DenseMatrix<double> rec = f.reconstruct();
    for (index_t i = 1; i <= 3; ++i)
        for (index_t j = 1; j <= 3; ++j)
            CHECK(rec.at(i, j) == doctest::Approx(a.entry(i, j)).epsilon(1e-12));
}

TEST_CASE("Cholesky refuses anything that is not positive definite") {
    CHECK_THROWS_AS(cholesky_decompose(LBandedMatrix<double>({1.0, 1.0, 0.0}), ToleranceConfig{}),
                    NotPositiveDefiniteError);
    CHECK_THROWS_AS(cholesky_decompose(LBandedMatrix<double>({-2.0, -1.0}), ToleranceConfig{}),
                    NotPositiveDefiniteError);
}

TEST_CASE("cofactors vanish off the tridiagonal") {
    LBandedMatrix<Rational> a = rband({3, 2, 1});
    CHECK(cofactor(a, 1, 1, ToleranceConfig{}) == Rational(1));
    CHECK(cofactor(a, 1, 2, ToleranceConfig{}) == Rational(-1));
    CHECK(cofactor(a, 1, 3, ToleranceConfig{}) == Rational(0));
    CHECK(minor_of(a, 1, 2, ToleranceConfig{}) == Rational(1));
    CHECK(minor_of(a, 1, 1, ToleranceConfig{}) == Rational(1));
    CHECK_THROWS_AS(cofactor(rband({5}), 1, 1, ToleranceConfig{}), DimensionMismatchError);
    CHECK_THROWS_AS(cofactor(a, 0, 1, ToleranceConfig{}), IndexOutOfRangeError);
    CHECK_THROWS_AS(cofactor(a, 1, 4, ToleranceConfig{}), IndexOutOfRangeError);
}

TEST_CASE("cofactors match dense minors on random invertible bands") {
    for (index_t t = 0; t < 40; ++t) {
        Rng rng = Rng::derive(25, "ops_cof", t);
        const index_t n = static_cast<index_t>(rng.uniform_int(2, 7));
        LBandedMatrix<Rational> a(to_scalars<Rational>(int_band_invertible(rng, n)));
        for (index_t i = 1; i <= n; ++i)
            for (index_t j = 1; j <= n; ++j)
                CHECK(cofactor(a, i, j, ToleranceConfig{}) ==
                      dense_cofactor(a.to_dense(), i, j, ToleranceConfig{}));
    }
}

TEST_CASE("column substitution reproduces the substituted determinant") {
    LBandedMatrix<Rational> a = rband({2, 1});
    const std::vector<Rational> b{Rational(0), Rational(1)};
    CHECK(det_column_substituted(a, 2, b, ToleranceConfig{}) == Rational(2));
    for (index_t t = 0; t < 40; ++t) {
        Rng rng = Rng::derive(26, "ops_colsub", t);
        const index_t n = static_cast<index_t>(rng.uniform_int(1, 7));
        LBandedMatrix<Rational> m(to_scalars<Rational>(int_band_invertible(rng, n)));
        const std::vector<Rational> rhs = to_scalars<Rational>(int_vector(rng, n));
        for (index_t k = 1; k <= n; ++k) {
            DenseMatrix<Rational> sub = m.to_dense().dense();
            for (index_t i = 1; i <= n; ++i) sub.at(i, k) = rhs[i - 1];
            CHECK(det_column_substituted(m, k, rhs, ToleranceConfig{}) ==
                  dense_determinant(sub, ToleranceConfig{}));
        }
    }
    CHECK_THROWS_AS(det_column_substituted(a, 0, b, ToleranceConfig{}), IndexOutOfRangeError);
    CHECK_THROWS_AS(det_column_substituted(a, 3, b, ToleranceConfig{}), IndexOutOfRangeError);
    CHECK_THROWS_AS(det_column_substituted(a, 1, std::vector<Rational>{Rational(1)}, ToleranceConfig{}),
                    DimensionMismatchError);
}

TEST_CASE("characteristic polynomial of the canonical example") {
    const Polynomial<Rational> p = characteristic_polynomial(rband({3, 2, 1}), ToleranceConfig{});
    CHECK(p.coeffs() == std::vector<Rational>{Rational(-1), Rational(5), Rational(-6), Rational(1)});
    CHECK(p.degree() == 3);
    CHECK(p.evaluate(Rational(0)) == Rational(-1));
}

TEST_CASE("characteristic polynomial is monic with an exactly unit leading coefficient") {
    for (index_t t = 0; t < 30; ++t) {
        Rng rng = Rng::derive(27, "ops_charpoly", t);
        const index_t n = static_cast<index_t>(rng.uniform_int(1, 7));
        LBandedMatrix<double> a(float_band_away_from_degeneracy(rng, n));
        const Polynomial<double> p = characteristic_polynomial(a, ToleranceConfig{});
        CHECK(p.coeffs().size() == n + 1);
        CHECK(p.coeffs().back() == 1.0); // exact, not approximate
    }
}

TEST_CASE("the closed-form recurrence requires invertibility") {
    CHECK_THROWS_AS(characteristic_polynomial(rband({2, 2}), ToleranceConfig{}), SingularMatrixError);
    CHECK_THROWS_AS(characteristic_polynomial(rband({1, 0}), ToleranceConfig{}), SingularMatrixError);
}

TEST_CASE("a one-by-one characteristic polynomial is linear") {
    const Polynomial<Rational> p = characteristic_polynomial(rband({1}), ToleranceConfig{});
    CHECK(p.coeffs() == std::vector<Rational>{Rational(-1), Rational(1)});
}

TEST_CASE("polynomials trim exact zero leading coefficients") {
    Polynomial<Rational> p({Rational(3), Rational(0)});
    CHECK(p.degree() == 0);
    CHECK(p.coeff(0) == Rational(3));
    CHECK(p.coeff(5) == Rational(0));
    Polynomial<Rational> zero({Rational(0)});
    CHECK(zero.degree() == 0);
    CHECK(zero.evaluate(Rational(42)) == Rational(0));
}

TEST_CASE("structured upper product on the worked example") {
    const std::vector<Rational> h{Rational(1), Rational(1)};
    const LBandedMatrix<Rational> q = left_multiply_structured_upper(h, rband({3, 2}));
    CHECK(q.band() == std::vector<Rational>{Rational(5), Rational(4)});
    CHECK_THROWS_AS(left_multiply_structured_upper(std::vector<Rational>{Rational(1)}, rband({3, 2})),
                    DimensionMismatchError);
}

TEST_CASE("the structured factor has cumulative sums on its diagonal") {
    const DenseMatrix<Rational> htri =
        make_structured_upper(std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
    CHECK(htri.at(1, 1) == Rational(1));
    CHECK(htri.at(2, 2) == Rational(3));
    CHECK(htri.at(3, 3) == Rational(6));
    CHECK(htri.at(1, 2) == Rational(2));
    CHECK(htri.at(1, 3) == Rational(3));
    CHECK(htri.at(2, 3) == Rational(3));
    CHECK(htri.at(2, 1) == Rational(0));
}

TEST_CASE("structured product agrees with the dense multiply") {
    for (index_t t = 0; t < 40; ++t) {
        Rng rng = Rng::derive(28, "ops_hprod", t);
        const index_t n = static_cast<index_t>(rng.uniform_int(1, 8));
        LBandedMatrix<Rational> a(to_scalars<Rational>(int_band_any(rng, n)));
        const std::vector<Rational> h = to_scalars<Rational>(int_vector(rng, n));
        const DenseMatrix<Rational> expected = multiply(make_structured_upper(h), a.to_dense().dense());
        CHECK(left_multiply_structured_upper(h, a).to_dense().dense() == expected);
    }
}

TEST_CASE("the square of the two-band example") {
    const DenseSymMatrix<Rational> sq = square(rband({2, 1}));
    CHECK(sq.at(1, 1) == Rational(5));
    CHECK(sq.at(1, 2) == Rational(3));
    CHECK(sq.at(2, 1) == Rational(3));
    CHECK(sq.at(2, 2) == Rational(2));
}

TEST_CASE("squares agree with the dense multiply") {
    for (index_t t = 0; t < 40; ++t) {
        Rng rng = Rng::derive(29, "ops_square", t);
        const index_t n = static_cast<index_t>(rng.uniform_int(1, 8));
        LBandedMatrix<Rational> a(to_scalars<Rational>(int_band_any(rng, n)));
        const DenseMatrix<Rational> expected = multiply(a.to_dense().dense(), a.to_dense().dense());
        CHECK(square(a).dense() == expected);
    }
}
