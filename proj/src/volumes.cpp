#include "ribbonspec/volumes.hpp"

#include <cmath>
#include <numeric>

#include "ribbonspec/error.hpp"

namespace ribbonspec {

namespace {

void check_stable(int g, int n)
{
    if (g < 0 || n < 1 || 2 * g - 2 + n <= 0) {
        throw Error(ErrorKind::InvalidArgument, "unstable type (" + std::to_string(g) + "," + std::to_string(n) + ")");
    }
}

std::vector<ScaledReal> to_scaled(std::span<const double> xs)
{
    return {xs.begin(), xs.end()};
}

}  // namespace

ScaledReal sinh_product_coeff(std::span<const double> big, std::span<const double> small, int degree)
{
    if (degree < 0) throw Error(ErrorKind::InvalidArgument, "degree must be >= 0");
    for (double x : big) {
        if (x < 0.0) throw Error(ErrorKind::InvalidArgument, "sinh arguments must be non-negative");
    }
    for (double x : small) {
        if (x < 0.0) throw Error(ErrorKind::InvalidArgument, "sinh arguments must be non-negative");
    }
    const auto b = to_scaled(big);
    const auto s = to_scaled(small);
    return sinh_product_coeff_t<ScaledReal>(b, s, static_cast<std::size_t>(degree));
}

ScaledReal exact_volume_g1(int g, double boundary)
{
    if (g < 1) throw Error(ErrorKind::InvalidArgument, "genus must be >= 1");
    const ScaledReal denom = factorial(g) * pow(ScaledReal(24.0), g) * pow(ScaledReal(2.0), 3 * g - 2)
                             * factorial(3 * g - 2);
    return pow(ScaledReal(boundary), 6 * g - 4) / denom;
}

ScaledReal exact_volume_genus0(std::span<const double> boundary)
{
    if (boundary.size() < 3) throw Error(ErrorKind::InvalidArgument, "genus-zero volume needs n >= 3");
    const auto b = to_scaled(boundary);
    return exact_volume_genus0_t<ScaledReal>(b);
}

ScaledReal aggarwal_normalized(int g, int n)
{
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw Error(ErrorKind::InvalidArgument, "unstable type");
    return double_factorial(6 * g - 5 + 2 * n) / (factorial(g) * pow(ScaledReal(24.0), g));
}

ScaledReal uniform_bound(int g, int n)
{
    return pow(ScaledReal(1.5), n - 1) * aggarwal_normalized(g, n);
}

ScaledReal asymptotic_volume(int g, int n, std::span<const double> boundary)
{
    check_stable(g, n);
    if (boundary.size() != static_cast<std::size_t>(n)) throw Error(ErrorKind::InvalidArgument, "need n lengths");
    ScaledReal coeff = sinh_product_coeff(boundary, {}, 6 * g - 6 + 3 * n);
    for (double l : boundary) coeff /= ScaledReal(l);
    return aggarwal_normalized(g, n) * coeff;
}

double saddle_radius(int g, int n, std::span<const double> boundary)
{
    const double total = std::accumulate(boundary.begin(), boundary.end(), 0.0);
    if (!(total > 0.0)) throw Error(ErrorKind::InvalidArgument, "boundary lengths must be positive");
    return (6.0 * g - 6.0 + 3.0 * n) / total;
}

ScaledReal saddle_point_estimate(int g, int n, std::span<const double> boundary, std::span<const double> ell)
{
    check_stable(g, n);
    if (boundary.size() != static_cast<std::size_t>(n)) throw Error(ErrorKind::InvalidArgument, "need n lengths");
    const double total = std::accumulate(boundary.begin(), boundary.end(), 0.0);
    const double rho = saddle_radius(g, n, boundary);
    const double mu = total / (12.0 * g);
    const std::int64_t degree = 6 * g - 6 + 3 * n;
    ScaledReal out = ScaledReal::from_log10(-static_cast<double>(degree) * std::log10(rho))
                     / ScaledReal(std::sqrt(3.0 * std::numbers::pi * g));
    for (double l : boundary) out *= scaled_sinh(l * rho);
    for (double l : ell) out *= scaled_sinh(l / (2.0 * mu));
    return out;
}

ScaledReal saddle_volume(int g, int n, std::span<const double> boundary)
{
    ScaledReal out = aggarwal_normalized(g, n) * saddle_point_estimate(g, n, boundary, {});
    for (double l : boundary) out /= ScaledReal(l);
    return out;
}

double volume_ratio_estimate(int g, int n, std::span<const double> ell, double mu)
{
    const int r = static_cast<int>(ell.size());
    if (r < 1 || g <= r) throw Error(ErrorKind::InvalidArgument, "volume ratio needs 1 <= r < g");
    if (n < 1 || !(mu > 0.0)) throw Error(ErrorKind::InvalidArgument, "volume ratio needs n >= 1, mu > 0");
    double out = std::ldexp(1.0, r);
    for (double l : ell) {
        if (!(l > 0.0)) throw Error(ErrorKind::InvalidArgument, "lengths must be positive");
        const double s = std::sinh(0.5 * l / mu);
        out *= 2.0 * s * s / (l * l);
    }
    return out;
}

}  // namespace ribbonspec
