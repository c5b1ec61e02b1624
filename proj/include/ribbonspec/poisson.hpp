#pragma once

#include <span>

#include "ribbonspec/interval.hpp"

namespace ribbonspec {

/// Boundary scaling constant mu = |L| / (12 g).
struct IntensityParams {
    double mu = 1.0;

    static IntensityParams from_boundary(double boundary_total, int genus)
    {
        return {boundary_total / (12.0 * genus)};
    }
};

/// Limiting cycle-length intensity (cosh(l/mu) - 1) / l.
double intensity(double ell, IntensityParams p);

/// Antiderivative of the mu = 1 intensity: sum_{k>=1} x^{2k} / (2k (2k)!).
double intensity_primitive(double x);

/// Integral of the intensity over [a, b).
double expected_count(double a, double b, IntensityParams p);

/// Limiting law of the shortest cycle: 1 - exp(-expected_count(0, t)).
double girth_cdf(double t, IntensityParams p);

double poisson_pmf(long k, double lambda);

/// prod_i expected_count(a_i, b_i)^{r_i}; throws OverlappingIntervals.
double factorial_moment_prediction(std::span<const IntervalSpec> specs, IntensityParams p);

}  // namespace ribbonspec
