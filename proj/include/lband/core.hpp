// Core types: L-banded matrices in O(n) band storage, plus the dense
// matrix types used by oracles, factor accessors and the damping module.
//
// An L-banded matrix is symmetric with entry(i,j) = band[max(i,j)]; the
// band vector [a_1 .. a_n] determines the whole matrix. All public indices
// are 1-based, matching the usual linear-algebra convention.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lband/errors.hpp"
#include "lband/scalar.hpp"

namespace lband {

using index_t = std::size_t;

/// General dense matrix, row-major. Used for factor materialization,
/// elimination working copies and deletion submatrices; carries no
/// structural invariant beyond its shape.
template <field_scalar S>
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(index_t rows, index_t cols, S fill = S(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static DenseMatrix identity(index_t n) {
        DenseMatrix m(n, n);
        for (index_t i = 1; i <= n; ++i) m.at(i, i) = S(1);
        return m;
    }

    index_t rows() const { return rows_; }
    index_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    S& at(index_t i, index_t j) {
        check(i, j);
        return data_[(i - 1) * cols_ + (j - 1)];
    }
    const S& at(index_t i, index_t j) const {
        check(i, j);
        return data_[(i - 1) * cols_ + (j - 1)];
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void check(index_t i, index_t j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_)
            throw IndexOutOfRangeError("dense index (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }

    index_t rows_, cols_;
    std::vector<S> data_;
};

template <field_scalar S>
DenseMatrix<S> multiply(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatchError("matrix product needs inner dimensions to agree");
    DenseMatrix<S> out(a.rows(), b.cols());
    for (index_t i = 1; i <= a.rows(); ++i)
        for (index_t k = 1; k <= a.cols(); ++k) {
            const S& aik = a.at(i, k);
            if (aik == S(0)) continue;
            for (index_t j = 1; j <= b.cols(); ++j)
                out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
        }
    return out;
}

template <field_scalar S>
DenseMatrix<S> transpose(const DenseMatrix<S>& a) {
    DenseMatrix<S> out(a.cols(), a.rows());
    for (index_t i = 1; i <= a.rows(); ++i)
        for (index_t j = 1; j <= a.cols(); ++j)
            out.at(j, i) = a.at(i, j);
    return out;
}

template <field_scalar S>
std::vector<S> matvec(const DenseMatrix<S>& a, const std::vector<S>& x) {
    if (a.cols() != x.size())
        throw DimensionMismatchError("matrix-vector product needs matching sizes");
    std::vector<S> out(a.rows(), S(0));
    for (index_t i = 1; i <= a.rows(); ++i)
        for (index_t j = 1; j <= a.cols(); ++j)
            out[i - 1] = out[i - 1] + a.at(i, j) * x[j - 1];
    return out;
}

/// Dense symmetric matrix (both triangles stored). Symmetry is validated on
/// construction from untrusted data; mutation goes through set_sym, which
/// writes both triangles.
template <field_scalar S>
class DenseSymMatrix {
public:
    DenseSymMatrix() = default;
    explicit DenseSymMatrix(index_t n) : m_(n, n) {}

    /// Validating constructor. Throws NotSymmetric (with the first offending
    /// pair) or DimensionMismatch for non-square input.
    DenseSymMatrix(DenseMatrix<S> m, const ToleranceConfig& tol) : m_(std::move(m)) {
        if (!m_.is_square())
            throw DimensionMismatchError("symmetric matrix must be square");
        for (index_t i = 1; i <= n(); ++i)
            for (index_t j = i + 1; j <= n(); ++j)
                if (!scalar_eq(m_.at(i, j), m_.at(j, i), tol))
                    throw NotSymmetricError("entries (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") and (" + std::to_string(j) + "," + std::to_string(i) +
                                            ") differ");
    }

    index_t n() const { return m_.rows(); }
    const S& at(index_t i, index_t j) const { return m_.at(i, j); }

    void set_sym(index_t i, index_t j, const S& v) {
        m_.at(i, j) = v;
        if (i != j) m_.at(j, i) = v;
    }

    const DenseMatrix<S>& dense() const { return m_; }

    /// Leading principal k x k block.
    DenseSymMatrix leading_principal(index_t k) const {
        if (k < 1 || k > n())
            throw IndexOutOfRangeError("leading principal block size " + std::to_string(k) +
                                       " outside 1.." + std::to_string(n()));
        DenseSymMatrix out(k);
        for (index_t i = 1; i <= k; ++i)
            for (index_t j = i; j <= k; ++j)
                out.set_sym(i, j, at(i, j));
        return out;
    }

private:
    DenseMatrix<S> m_;
};

/// Symmetric matrix whose (i,j) entry depends only on max(i,j). Storage is
/// the band vector [a_1 .. a_n] with a_k = entry(k,k).
template <field_scalar S>
class LBandedMatrix {
public:
    explicit LBandedMatrix(std::vector<S> band) : band_(std::move(band)) {
        if (band_.empty()) throw EmptyBandError();
    }

    static LBandedMatrix from_band(std::vector<S> band) { return LBandedMatrix(std::move(band)); }

    index_t n() const { return band_.size(); }
    const std::vector<S>& band() const { return band_; }

    /// a_k, 1-based.
    const S& a(index_t k) const {
        if (k < 1 || k > n())
            throw IndexOutOfRangeError("band index " + std::to_string(k) + " outside 1.." + std::to_string(n()));
        return band_[k - 1];
    }

    /// entry(i,j) = a_{max(i,j)}.
    const S& entry(index_t i, index_t j) const {
        if (i < 1 || i > n() || j < 1 || j > n())
            throw IndexOutOfRangeError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") outside " + std::to_string(n()) + "x" + std::to_string(n()));
        return band_[(i > j ? i : j) - 1];
    }

    /// The leading principal k x k submatrix is L-banded with band [a_1 .. a_k].
    LBandedMatrix leading_principal(index_t k) const {
        if (k < 1 || k > n())
            throw IndexOutOfRangeError("leading principal size " + std::to_string(k) +
                                       " outside 1.." + std::to_string(n()));
        return LBandedMatrix(std::vector<S>(band_.begin(), band_.begin() + static_cast<std::ptrdiff_t>(k)));
    }

    DenseSymMatrix<S> to_dense() const {
        DenseSymMatrix<S> out(n());
        for (index_t i = 1; i <= n(); ++i)
            for (index_t j = i; j <= n(); ++j)
                out.set_sym(i, j, band_[j - 1]);
        return out;
    }

    friend bool operator==(const LBandedMatrix& x, const LBandedMatrix& y) { return x.band_ == y.band_; }

private:
    std::vector<S> band_;
};

enum class DefinitenessClass {
    PositiveDefinite,
    PositiveSemiDefinite,
    NegativeDefinite,
    NegativeSemiDefinite,
    Indefinite,
};

inline std::string to_string(DefinitenessClass c) {
    switch (c) {
        case DefinitenessClass::PositiveDefinite: return "PositiveDefinite";
        case DefinitenessClass::PositiveSemiDefinite: return "PositiveSemiDefinite";
        case DefinitenessClass::NegativeDefinite: return "NegativeDefinite";
        case DefinitenessClass::NegativeSemiDefinite: return "NegativeSemiDefinite";
        case DefinitenessClass::Indefinite: return "Indefinite";
    }
    return "Indefinite";
}

/// Outcome of detect_l_banded: either the recovered band, or the first
/// violating entry in row-major scan order (1-based).
template <field_scalar S>
struct DetectOutcome {
    std::optional<LBandedMatrix<S>> matrix;
    index_t violation_row = 0;
    index_t violation_col = 0;

    explicit operator bool() const { return matrix.has_value(); }
};

/// A symmetric M is L-banded iff M[i][j] = M[max][max] for every entry,
/// where max = max(i,j); the candidate band is the diagonal.
template <field_scalar S>
DetectOutcome<S> detect_l_banded(const DenseSymMatrix<S>& m, const ToleranceConfig& tol = {}) {
    DetectOutcome<S> out;
    const index_t n = m.n();
    if (n == 0) {
        out.violation_row = out.violation_col = 0;
        return out;
    }
    std::vector<S> band;
    band.reserve(n);
    for (index_t k = 1; k <= n; ++k) band.push_back(m.at(k, k));
    for (index_t i = 1; i <= n; ++i)
        for (index_t j = 1; j <= n; ++j) {
            const index_t t = i > j ? i : j;
            if (!scalar_eq(m.at(i, j), band[t - 1], tol)) {
                out.violation_row = i;
                out.violation_col = j;
                return out;
            }
        }
    out.matrix = LBandedMatrix<S>(std::move(band));
    return out;
}

/// alpha*A + beta*B is L-banded with band alpha*a + beta*b.
template <field_scalar S>
LBandedMatrix<S> linear_combination(const S& alpha, const LBandedMatrix<S>& a,
                                    const S& beta, const LBandedMatrix<S>& b) {
    if (a.n() != b.n())
        throw DimensionMismatchError("linear combination needs equal sizes");
    std::vector<S> band;
    band.reserve(a.n());
    for (index_t k = 1; k <= a.n(); ++k)
        band.push_back(alpha * a.a(k) + beta * b.a(k));
    return LBandedMatrix<S>(std::move(band));
}

} // namespace lband
