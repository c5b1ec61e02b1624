#include "ribbonspec/poisson.hpp"

#include <cmath>
#include <limits>

#include "ribbonspec/error.hpp"

namespace ribbonspec {

double intensity(double ell, IntensityParams p)
{
    if (ell < 0.0) throw Error(ErrorKind::InvalidArgument, "length must be non-negative");
    if (ell == 0.0) return 0.0;
    const double x = ell / p.mu;
    if (x < 1e-4) {
        return ell / (2.0 * p.mu * p.mu) + ell * ell * ell / (24.0 * std::pow(p.mu, 4));
    }
    // cosh(x) - 1 = 2 sinh^2(x/2) avoids cancellation for moderate x.
    const double s = std::sinh(0.5 * x);
    return 2.0 * s * s / ell;
}

double intensity_primitive(double x)
{
    if (x < 0.0) throw Error(ErrorKind::InvalidArgument, "argument must be non-negative");
    if (x == 0.0) return 0.0;
    if (x > 700.0) return std::numeric_limits<double>::infinity();
    const double x2 = x * x;
    double power = x2 / 2.0;  // x^{2k} / (2k)!
    double sum = 0.0;
    for (int k = 1; k < 2000; ++k) {
        const double term = power / (2.0 * k);
        sum += term;
        if (term < 1e-17 * sum && 2.0 * k > x) break;
        power *= x2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
    }
    return sum;
}

double expected_count(double a, double b, IntensityParams p)
{
    if (!(a >= 0.0) || !(a <= b)) throw Error(ErrorKind::InvalidArgument, "expected_count needs 0 <= a <= b");
    if (a == b) return 0.0;
    return intensity_primitive(b / p.mu) - intensity_primitive(a / p.mu);
}

double girth_cdf(double t, IntensityParams p)
{
    if (t <= 0.0) return 0.0;
    return -std::expm1(-expected_count(0.0, t, p));
}

double poisson_pmf(long k, double lambda)
{
    if (k < 0 || !(lambda > 0.0)) throw Error(ErrorKind::InvalidArgument, "poisson_pmf needs k >= 0, lambda > 0");
    return std::exp(-lambda + static_cast<double>(k) * std::log(lambda) - std::lgamma(static_cast<double>(k) + 1.0));
}

double factorial_moment_prediction(std::span<const IntervalSpec> specs, IntensityParams p)
{
    check_disjoint(specs);
    double product = 1.0;
    for (const auto& s : specs) product *= std::pow(expected_count(s.a, s.b, p), s.r);
    return product;
}

}  // namespace ribbonspec
