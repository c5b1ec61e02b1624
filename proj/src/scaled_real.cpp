#include "ribbonspec/scaled_real.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "ribbonspec/error.hpp"

namespace ribbonspec {

namespace {

double pow10_int(std::int64_t k)
{
    return std::pow(10.0, static_cast<double>(k));
}

}  // namespace

ScaledReal::ScaledReal(double value)
{
    if (!std::isfinite(value)) throw Error(ErrorKind::InvalidArgument, "ScaledReal needs a finite value");
    normalize(value, 0);
}

void ScaledReal::normalize(double value, std::int64_t exponent)
{
    if (value == 0.0) {
        sign_ = 0;
        mantissa_ = 0.0;
        exponent_ = 0;
        return;
    }
    sign_ = value < 0 ? -1 : 1;
    double m = std::fabs(value);
    auto k = static_cast<std::int64_t>(std::floor(std::log10(m)));
    if (k != 0) {
        // Split to stay clear of subnormals near the double range limits.
        if (k > 300 || k < -300) {
            m /= pow10_int(k / 2);
            m /= pow10_int(k - k / 2);
        } else {
            m /= pow10_int(k);
        }
    }
    while (m >= 10.0) {
        m /= 10.0;
        ++k;
    }
    while (m < 1.0) {
        m *= 10.0;
        --k;
    }
    mantissa_ = m;
    exponent_ = exponent + k;
}

ScaledReal ScaledReal::from_log10(double log10_magnitude, int sign)
{
    ScaledReal out;
    if (sign == 0 || log10_magnitude == -std::numeric_limits<double>::infinity()) return out;
    const double whole = std::floor(log10_magnitude);
    out.normalize(std::pow(10.0, log10_magnitude - whole) * (sign < 0 ? -1.0 : 1.0),
                  static_cast<std::int64_t>(whole));
    return out;
}

double ScaledReal::log10() const
{
    if (sign_ == 0) return -std::numeric_limits<double>::infinity();
    return std::log10(mantissa_) + static_cast<double>(exponent_);
}

double ScaledReal::to_double() const
{
    if (sign_ == 0) return 0.0;
    if (exponent_ > 308) return sign_ * std::numeric_limits<double>::infinity();
    if (exponent_ < -330) return 0.0;
    if (exponent_ < -300) return sign_ * mantissa_ * pow10_int(exponent_ + 300) * 1e-300;
    return sign_ * mantissa_ * pow10_int(exponent_);
}

std::string ScaledReal::to_string() const
{
    if (sign_ == 0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.16fe%+lld", sign_ * mantissa_, static_cast<long long>(exponent_));
    return buf;
}

ScaledReal ScaledReal::operator-() const
{
    ScaledReal out = *this;
    out.sign_ = -sign_;
    return out;
}

ScaledReal& ScaledReal::operator*=(const ScaledReal& other)
{
    if (sign_ == 0 || other.sign_ == 0) return *this = ScaledReal();
    normalize(sign_ * other.sign_ * mantissa_ * other.mantissa_, exponent_ + other.exponent_);
    return *this;
}

ScaledReal& ScaledReal::operator/=(const ScaledReal& other)
{
    if (other.sign_ == 0) throw Error(ErrorKind::InvalidArgument, "ScaledReal division by zero");
    if (sign_ == 0) return *this;
    normalize(sign_ * other.sign_ * mantissa_ / other.mantissa_, exponent_ - other.exponent_);
    return *this;
}

ScaledReal& ScaledReal::operator+=(const ScaledReal& other)
{
    if (other.sign_ == 0) return *this;
    if (sign_ == 0) return *this = other;
    const ScaledReal& big = exponent_ >= other.exponent_ ? *this : other;
    const ScaledReal& small = exponent_ >= other.exponent_ ? other : *this;
    const std::int64_t shift = big.exponent_ - small.exponent_;
    if (shift > 20) return *this = big;
    const double sum = big.sign_ * big.mantissa_ + small.sign_ * small.mantissa_ * pow10_int(-shift);
    const std::int64_t base = big.exponent_;
    normalize(sum, base);
    return *this;
}

ScaledReal& ScaledReal::operator-=(const ScaledReal& other)
{
    return *this += -other;
}

int ScaledReal::compare(const ScaledReal& a, const ScaledReal& b)
{
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    if (a.sign_ == 0) return 0;
    int mag = 0;
    if (a.exponent_ != b.exponent_) {
        mag = a.exponent_ < b.exponent_ ? -1 : 1;
    } else if (a.mantissa_ != b.mantissa_) {
        mag = a.mantissa_ < b.mantissa_ ? -1 : 1;
    }
    return a.sign_ > 0 ? mag : -mag;
}

ScaledReal pow(ScaledReal base, std::int64_t n)
{
    if (n < 0) return ScaledReal(1.0) / pow(base, -n);
    ScaledReal out(1.0);
    while (n > 0) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

ScaledReal factorial(std::int64_t n)
{
    ScaledReal out(1.0);
    for (std::int64_t k = 2; k <= n; ++k) out *= ScaledReal(static_cast<double>(k));
    return out;
}

ScaledReal double_factorial(std::int64_t n)
{
    if (n < -1) throw Error(ErrorKind::InvalidArgument, "double factorial of n < -1");
    ScaledReal out(1.0);
    for (std::int64_t k = n; k > 1; k -= 2) out *= ScaledReal(static_cast<double>(k));
    return out;
}

ScaledReal scaled_sinh(double x)
{
    if (x < 0.0) return -scaled_sinh(-x);
    if (x < 700.0) return ScaledReal(std::sinh(x));
    // sinh x = e^x (1 - e^{-2x}) / 2 and the bracket is 1 to double precision.
    return ScaledReal::from_log10(x / std::log(10.0) - std::log10(2.0));
}

double ratio(const ScaledReal& a, const ScaledReal& b)
{
    return (a / b).to_double();
}

}  // namespace ribbonspec
