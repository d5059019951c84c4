#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>

namespace fusionkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Absolute tolerance used for every floating-point equality check.
inline constexpr double kTolerance = 1e-12;

/// Nearest double to an exact rational, also for operands far outside double range.
double to_double(const Rational& r);
double to_double(const Integer& i);

/// The exact dyadic rational a finite double represents.
Rational exact_rational(double x);
/// The shortest decimal that reads back as x, as a rational (0.1 gives 1/10).
Rational decimal_rational(double x);

/// Decimal text of an exact rational ("p" or "p/q").
std::string to_string(const Rational& r);

/// A real number that stays an exact rational for as long as every operand was exact.
///
/// Dimensions, subset weights and Følner ratios are carried as Quantity so that the
/// strict inequalities of the Følner conditions can be decided without rounding on
/// integer-dimensional rings. Once an inexact operand enters, the value degrades to double.
class Quantity {
public:
    Quantity() = default;
    Quantity(int v) : rational_(Rational(v)) {}  // NOLINT(google-explicit-constructor)

    static Quantity exact(Rational r) {
        Quantity q;
        q.rational_ = std::move(r);
        return q;
    }
    static Quantity exact(const Integer& i) { return exact(Rational(i)); }
    static Quantity approximate(double v) {
        Quantity q;
        q.rational_.reset();
        q.approx_ = v;
        return q;
    }
    /// Exact value of the double itself (doubles are dyadic rationals).
    static Quantity from_double(double v) { return exact(exact_rational(v)); }

    bool is_exact() const { return rational_.has_value(); }
    const Rational& rational() const;
    double value() const { return rational_ ? to_double(*rational_) : approx_; }
    bool is_zero() const { return rational_ ? *rational_ == 0 : approx_ == 0.0; }

    Quantity& operator+=(const Quantity& o);
    Quantity& operator-=(const Quantity& o);
    Quantity& operator*=(const Quantity& o);
    Quantity& operator/=(const Quantity& o);

    friend Quantity operator+(Quantity a, const Quantity& b) { return a += b; }
    friend Quantity operator-(Quantity a, const Quantity& b) { return a -= b; }
    friend Quantity operator*(Quantity a, const Quantity& b) { return a *= b; }
    friend Quantity operator/(Quantity a, const Quantity& b) { return a /= b; }

    /// Exact comparison when both sides are exact; plain double comparison otherwise.
    friend bool operator<(const Quantity& a, const Quantity& b);
    friend bool operator>(const Quantity& a, const Quantity& b) { return b < a; }
    friend bool operator<=(const Quantity& a, const Quantity& b) { return !(b < a); }
    friend bool operator>=(const Quantity& a, const Quantity& b) { return !(a < b); }
    /// Exact equality, or |a - b| <= kTolerance when either side is inexact.
    friend bool operator==(const Quantity& a, const Quantity& b);

    /// Exact integer/rational text when exact, otherwise 17 significant digits.
    std::string str() const;

private:
    std::optional<Rational> rational_{Rational(0)};
    double approx_ = 0.0;
};

}  // namespace fusionkit
