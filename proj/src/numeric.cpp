#include "fusionkit/numeric.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fusionkit {

namespace {

double ratio_to_double(Integer num, Integer den) {
    if (num == 0) {
        return 0.0;
    }
    const bool negative = (num < 0) != (den < 0);
    num = abs(num);
    den = abs(den);
    // Scale so the integer quotient carries 64 significant bits, then rescale.
    const long shift = static_cast<long>(msb(num)) - static_cast<long>(msb(den));
    const long scale = 64 - shift;
    Integer q = scale >= 0 ? Integer((num << scale) / den) : Integer(num / (den << -scale));
    const double mantissa = static_cast<double>(q);
    const double value = std::ldexp(mantissa, static_cast<int>(-scale));
    return negative ? -value : value;
}

}  // namespace

double to_double(const Rational& r) {
    return ratio_to_double(numerator(r), denominator(r));
}

double to_double(const Integer& i) {
    return ratio_to_double(i, Integer(1));
}

Rational exact_rational(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("exact_rational: non-finite value");
    }
    if (x == 0.0) {
        return Rational(0);
    }
    int exponent = 0;
    const double frac = std::frexp(x, &exponent);
    // frac * 2^53 is an integer for every finite double
    const auto mant = static_cast<long long>(std::ldexp(frac, 53));
    exponent -= 53;
    Integer num(mant);
    Integer den(1);
    if (exponent >= 0) {
        num <<= exponent;
    } else {
        den <<= -exponent;
    }
    return Rational(num, den);
}

Rational decimal_rational(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("decimal_rational: non-finite value");
    }
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific);
    const std::string text(buf, end);
    const auto e = text.find('e');
    std::string digits;
    int point = 0;
    for (std::size_t i = 0; i < e; ++i) {
        if (text[i] == '.') {
            point = static_cast<int>(digits.size());
        } else if (text[i] != '-') {
            digits += text[i];
        }
    }
    if (point == 0) {
        point = static_cast<int>(digits.size());
    }
    // value = 0.digits * 10^(exponent + point)
    const int exponent = std::stoi(text.substr(e + 1)) + point - static_cast<int>(digits.size());
    Integer num(digits);
    Integer scale = pow(Integer(10), static_cast<unsigned>(std::abs(exponent)));
    Rational r = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
    return x < 0 ? -r : r;
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

const Rational& Quantity::rational() const {
    if (!rational_) {
        throw std::logic_error("Quantity::rational: value is not exact");
    }
    return *rational_;
}

Quantity& Quantity::operator+=(const Quantity& o) {
    if (rational_ && o.rational_) {
        *rational_ += *o.rational_;
    } else {
        approx_ = value() + o.value();
        rational_.reset();
    }
    return *this;
}

Quantity& Quantity::operator-=(const Quantity& o) {
    if (rational_ && o.rational_) {
        *rational_ -= *o.rational_;
    } else {
        approx_ = value() - o.value();
        rational_.reset();
    }
    return *this;
}

Quantity& Quantity::operator*=(const Quantity& o) {
    if (rational_ && o.rational_) {
        *rational_ *= *o.rational_;
    } else {
        approx_ = value() * o.value();
        rational_.reset();
    }
    return *this;
}

Quantity& Quantity::operator/=(const Quantity& o) {
    if (o.is_zero()) {
        throw std::domain_error("Quantity: division by zero");
    }
    if (rational_ && o.rational_) {
        *rational_ /= *o.rational_;
    } else {
        approx_ = value() / o.value();
        rational_.reset();
    }
    return *this;
}

bool operator<(const Quantity& a, const Quantity& b) {
    if (a.rational_ && b.rational_) {
        return *a.rational_ < *b.rational_;
    }
    return a.value() < b.value();
}

bool operator==(const Quantity& a, const Quantity& b) {
    if (a.rational_ && b.rational_) {
        return *a.rational_ == *b.rational_;
    }
    return std::abs(a.value() - b.value()) <= kTolerance;
}

std::string Quantity::str() const {
    if (rational_) {
        return to_string(*rational_);
    }
    std::ostringstream os;
    os.precision(17);
    os << approx_;
    return os.str();
}

}  // namespace fusionkit
