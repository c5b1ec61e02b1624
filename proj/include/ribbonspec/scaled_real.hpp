#pragma once

#include <cstdint>
#include <string>

namespace ribbonspec {

/// sign * mantissa * 10^exponent with mantissa in [1, 10), or exactly zero.
/// Covers magnitudes far outside double range (volumes at genus ~ 100+).
class ScaledReal {
public:
    ScaledReal() = default;
    ScaledReal(double value);  // NOLINT: implicit so integer literals work in generic code

    static ScaledReal from_log10(double log10_magnitude, int sign = 1);

    int sign() const { return sign_; }
    double mantissa() const { return mantissa_; }
    std::int64_t exponent() const { return exponent_; }
    bool is_zero() const { return sign_ == 0; }

    /// log10 |x|; -inf for zero.
    double log10() const;
    /// Nearest double; overflows to +-inf and underflows to 0.
    double to_double() const;
    /// 17 significant digits, e.g. "1.2345678901234567e+1234".
    std::string to_string() const;

    ScaledReal operator-() const;
    ScaledReal& operator*=(const ScaledReal& other);
    ScaledReal& operator/=(const ScaledReal& other);
    ScaledReal& operator+=(const ScaledReal& other);
    ScaledReal& operator-=(const ScaledReal& other);

    friend ScaledReal operator*(ScaledReal a, const ScaledReal& b) { return a *= b; }
    friend ScaledReal operator/(ScaledReal a, const ScaledReal& b) { return a /= b; }
    friend ScaledReal operator+(ScaledReal a, const ScaledReal& b) { return a += b; }
    friend ScaledReal operator-(ScaledReal a, const ScaledReal& b) { return a -= b; }

    friend bool operator==(const ScaledReal&, const ScaledReal&) = default;
    friend bool operator<(const ScaledReal& a, const ScaledReal& b) { return compare(a, b) < 0; }
    friend bool operator>(const ScaledReal& a, const ScaledReal& b) { return compare(a, b) > 0; }
    friend bool operator<=(const ScaledReal& a, const ScaledReal& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const ScaledReal& a, const ScaledReal& b) { return compare(a, b) >= 0; }

private:
    static int compare(const ScaledReal& a, const ScaledReal& b);
    void normalize(double value, std::int64_t exponent);

    int sign_ = 0;
    double mantissa_ = 0.0;
    std::int64_t exponent_ = 0;
};

ScaledReal pow(ScaledReal base, std::int64_t n);
ScaledReal factorial(std::int64_t n);
/// n!! with (-1)!! = 0!! = 1.
ScaledReal double_factorial(std::int64_t n);
/// sinh for any non-negative real argument, including far beyond 710.
ScaledReal scaled_sinh(double x);
/// a / b as a double (the quotient is assumed representable).
double ratio(const ScaledReal& a, const ScaledReal& b);

}  // namespace ribbonspec
