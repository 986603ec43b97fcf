// Scalar contract: the whole library is templated over a field scalar.
// Two instantiations are supported and tested: `double` (fast, tolerance
// aware) and `Rational` (exact, GMP backed, tolerances ignored).
#pragma once

#include <charconv>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "lband/errors.hpp"

namespace lband {

/// Comparison knobs for the float instantiation. Exact scalars ignore them.
///  - eq_tol:   relative equality tolerance (with absolute fallback near 0)
///  - zero_tol: absolute threshold under which a value counts as zero; also
///              the strictness threshold for sign chains (definiteness).
struct ToleranceConfig {
    double eq_tol = 1e-12;
    double zero_tol = 1e-12;
};

/// Exact rational scalar. Thin value wrapper around GMP's mpq_class: all
/// arithmetic returns materialized, canonicalized values (never expression
/// templates), so generic code can hold results by value safely.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw ParseError("rational denominator must be nonzero");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts "p/q" (integers) or decimal text with optional exponent
    /// ("1.5", "-0.25", "3e-2"); every decimal parses exactly.
    static Rational parse(std::string_view text);

    /// Canonical form: "p/q" with q > 1, plain "p" when the denominator is 1.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double to_double() const { return v_.get_d(); }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (sgn(b.v_) == 0) throw SingularMatrixError(SingularMatrixError::Reason::DensePivot, 0, "division by zero rational");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty scalar");
    const std::string s(text);

    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        auto integral = [](const std::string& t) {
            if (t.empty()) return false;
            std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        if (!integral(num) || !integral(den))
            throw ParseError("malformed rational: \"" + s + "\"");
        // Base 10 explicitly: the default base-0 constructor would read a
        // leading zero as octal.
        mpq_class v{mpz_class(num, 10), mpz_class(den, 10)};
        if (v.get_den() == 0) throw ParseError("zero denominator: \"" + s + "\"");
        return Rational(std::move(v));
    }

    // Decimal with optional exponent; digits are collected exactly.
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    std::string digits;
    std::size_t frac_digits = 0;
    bool any = false;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { digits += s[i++]; any = true; }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') { digits += s[i++]; ++frac_digits; any = true; }
    }
    long exp10 = 0;
    if (any && i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
        if (i >= s.size()) throw ParseError("malformed exponent: \"" + s + "\"");
        long e = 0;
        bool edig = false;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            e = e * 10 + (s[i++] - '0');
            if (e > 100000) throw ParseError("exponent out of range: \"" + s + "\"");
            edig = true;
        }
        if (!edig) throw ParseError("malformed exponent: \"" + s + "\"");
        exp10 = eneg ? -e : e;
    }
    if (!any || i != s.size()) throw ParseError("malformed scalar: \"" + s + "\"");

    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    if (neg) num = -num;
    mpz_class den;
    long den_pow = static_cast<long>(frac_digits) - exp10;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(den_pow > 0 ? den_pow : -den_pow));
    mpq_class v = den_pow >= 0 ? mpq_class(num, den) : mpq_class(num * den);
    return Rational(std::move(v));
}

template <class S>
concept field_scalar = requires(const S& a, const S& b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { a < b } -> std::convertible_to<bool>;
    S(0);
    S(1);
};

template <field_scalar S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static constexpr const char* name = "float";
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static constexpr const char* name = "rational";
};

template <field_scalar S>
S scalar_abs(const S& a) {
    if constexpr (std::is_same_v<S, Rational>) return a.abs();
    else return a < S(0) ? -a : a;
}

/// Equality. Float: |x-y| <= max(eq_tol * max(|x|,|y|), zero_tol).
template <field_scalar S>
bool scalar_eq(const S& a, const S& b, const ToleranceConfig& tol) {
    if constexpr (scalar_traits<S>::is_exact) {
        (void)tol;
        return a == b;
    } else {
        const double x = a, y = b;
        const double diff = std::fabs(x - y);
        return diff <= std::max(tol.eq_tol * std::max(std::fabs(x), std::fabs(y)), tol.zero_tol);
    }
}

template <field_scalar S>
bool scalar_is_zero(const S& a, const ToleranceConfig& tol) {
    if constexpr (scalar_traits<S>::is_exact) {
        (void)tol;
        return a == S(0);
    } else {
        return std::fabs(static_cast<double>(a)) <= tol.zero_tol;
    }
}

/// Three-way sign comparison used by strict chains: values within zero_tol
/// of each other compare equal in float mode; exact comparison otherwise.
template <field_scalar S>
int scalar_cmp(const S& a, const S& b, const ToleranceConfig& tol) {
    if constexpr (scalar_traits<S>::is_exact) {
        (void)tol;
        if (a < b) return -1;
        if (b < a) return 1;
        return 0;
    } else {
        const double d = static_cast<double>(a) - static_cast<double>(b);
        if (d > tol.zero_tol) return 1;
        if (d < -tol.zero_tol) return -1;
        return 0;
    }
}

template <field_scalar S>
int scalar_sign(const S& a, const ToleranceConfig& tol) {
    return scalar_cmp(a, S(0), tol);
}

template <field_scalar S>
double scalar_to_double(const S& a) {
    if constexpr (std::is_same_v<S, Rational>) return a.to_double();
    else return static_cast<double>(a);
}

/// Canonical text form: "p/q" for rationals, shortest round-trip decimal for
/// doubles. Both are deterministic, which the CLI's byte-stability relies on.
inline std::string scalar_str(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

inline std::string scalar_str(const Rational& v) { return v.str(); }

template <field_scalar S>
S parse_scalar(std::string_view text);

template <>
inline Rational parse_scalar<Rational>(std::string_view text) {
    return Rational::parse(text);
}

template <>
inline double parse_scalar<double>(std::string_view text) {
    if (text.empty()) throw ParseError("empty scalar");
    if (text.find('/') != std::string_view::npos)
        return Rational::parse(text).to_double();
    std::string_view body = text;
    if (body.front() == '+') body.remove_prefix(1);
    double out = 0.0;
    auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), out);
    if (ec != std::errc() || p != body.data() + body.size())
        throw ParseError("malformed scalar: \"" + std::string(text) + "\"");
    return out;
}

} // namespace lband
