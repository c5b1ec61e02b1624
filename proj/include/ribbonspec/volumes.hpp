#pragma once

#include <cstdint>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "ribbonspec/exact.hpp"
#include "ribbonspec/scaled_real.hpp"

namespace ribbonspec {

/// Power series truncated at a fixed degree.
template <class Num>
class PolySeries {
public:
    explicit PolySeries(std::size_t degree) : coeffs_(degree + 1, Num(0)) {}

    /// sinh(a z) up to z^degree.
    static PolySeries sinh_series(const Num& a, std::size_t degree)
    {
        PolySeries s(degree);
        if (degree >= 1) {
            Num term = a;
            s.coeffs_[1] = term;
            const Num a2 = a * a;
            for (std::size_t k = 3; k <= degree; k += 2) {
                term = term * a2 / Num(static_cast<long long>((k - 1) * k));
                s.coeffs_[k] = term;
            }
        }
        return s;
    }

    std::size_t degree() const { return coeffs_.size() - 1; }
    const Num& operator[](std::size_t k) const { return coeffs_[k]; }
    Num& operator[](std::size_t k) { return coeffs_[k]; }

    PolySeries operator*(const PolySeries& other) const
    {
        const std::size_t d = std::min(degree(), other.degree());
        PolySeries out(d);
        for (std::size_t i = 0; i <= d; ++i) {
            if (coeffs_[i] == Num(0)) continue;
            for (std::size_t j = 0; i + j <= d; ++j) {
                if (other.coeffs_[j] == Num(0)) continue;
                out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
            }
        }
        return out;
    }

    /// Positivity guard: every coefficient of a product of sinh series with
    /// non-negative arguments is >= 0.
    void require_nonnegative() const
    {
        for (const auto& c : coeffs_) {
            if (c < Num(0)) throw std::logic_error("negative coefficient in a sinh-product series");
        }
    }

private:
    std::vector<Num> coeffs_;
};

/// [z^degree] prod_i sinh(L_i z) prod_j sinh(ell_j z).
template <class Num>
Num sinh_product_coeff_t(std::span<const Num> big, std::span<const Num> small, std::size_t degree)
{
    const std::size_t factors = big.size() + small.size();
    if (factors == 0) throw std::invalid_argument("sinh_product_coeff needs at least one factor");
    if (degree % 2 != factors % 2 || degree < factors) return Num(0);
    std::vector<Num> args(big.begin(), big.end());
    args.insert(args.end(), small.begin(), small.end());
    // Each factor contributes at least z^1, so the running product never
    // needs more than degree - (remaining factors) terms.
    PolySeries<Num> acc = PolySeries<Num>::sinh_series(args[0], degree - (factors - 1));
    std::size_t used = 1;
    for (std::size_t k = 1; k + 1 < factors; ++k) {
        ++used;
        const std::size_t keep = degree - (factors - used);
        PolySeries<Num> next = PolySeries<Num>::sinh_series(args[k], keep);
        PolySeries<Num> grown(keep);
        for (std::size_t i = 0; i <= std::min(acc.degree(), keep); ++i) grown[i] = acc[i];
        acc = grown * next;
        acc.require_nonnegative();
    }
    if (factors == 1) return acc[degree];
    const PolySeries<Num> last = PolySeries<Num>::sinh_series(args.back(), degree);
    Num out(0);
    for (std::size_t i = 0; i <= std::min(acc.degree(), degree); ++i) {
        if (acc[i] == Num(0) || last[degree - i] == Num(0)) continue;
        out += acc[i] * last[degree - i];
    }
    return out;
}

ScaledReal sinh_product_coeff(std::span<const double> big, std::span<const double> small, int degree);

/// V_{g,1}(L) = L^{6g-4} / (g! 24^g 2^{3g-2} (3g-2)!).
template <class Num>
Num exact_volume_g1_t(int g, const Num& boundary)
{
    Num denom(1);
    for (int k = 2; k <= g; ++k) denom *= Num(k);
    for (int k = 0; k < g; ++k) denom *= Num(24);
    for (int k = 0; k < 3 * g - 2; ++k) denom *= Num(2);
    for (int k = 2; k <= 3 * g - 2; ++k) denom *= Num(k);
    Num power(1);
    for (int k = 0; k < 6 * g - 4; ++k) power *= boundary;
    return power / denom;
}

ScaledReal exact_volume_g1(int g, double boundary);

/// Genus-zero volume sum over |d| = n - 3 of multinomial(n-3; d) prod
/// L_i^{2 d_i} / (2^{d_i} d_i!), evaluated as (n-3)! [t^{n-3}] prod_i
/// sum_d (L_i^2 t / 2)^d / d!^2.
template <class Num>
Num exact_volume_genus0_t(std::span<const Num> boundary)
{
    const std::size_t n = boundary.size();
    if (n < 3) throw std::invalid_argument("genus-zero volume needs n >= 3");
    const std::size_t top = n - 3;
    std::vector<Num> acc(top + 1, Num(0));
    acc[0] = Num(1);
    for (const Num& l : boundary) {
        const Num x = l * l / Num(2);
        std::vector<Num> factor(top + 1, Num(0));
        Num term(1);
        factor[0] = term;
        for (std::size_t d = 1; d <= top; ++d) {
            term = term * x / Num(static_cast<long long>(d * d));
            factor[d] = term;
        }
        std::vector<Num> next(top + 1, Num(0));
        for (std::size_t i = 0; i <= top; ++i) {
            for (std::size_t j = 0; i + j <= top; ++j) next[i + j] += acc[i] * factor[j];
        }
        acc = std::move(next);
    }
    Num fact(1);
    for (std::size_t k = 2; k <= top; ++k) fact *= Num(static_cast<long long>(k));
    return fact * acc[top];
}

ScaledReal exact_volume_genus0(std::span<const double> boundary);

/// Volume as a sum of intersection numbers weighted by prod L_i^{2d_i} /
/// (2^{d_i} d_i!) over |d| = 3g - 3 + n; `intersection(d)` supplies
/// <tau_{d_1} ... tau_{d_n}>_{g,n}.
template <class Num>
Num kontsevich_volume_t(int g, std::span<const Num> boundary,
                        const std::function<Num(std::span<const int>)>& intersection)
{
    const int n = static_cast<int>(boundary.size());
    const int total = 3 * g - 3 + n;
    if (total < 0) throw std::invalid_argument("unstable type");
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    Num sum(0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            d[static_cast<std::size_t>(i)] = left;
            Num weight = intersection(d);
            for (int j = 0; j < n; ++j) {
                const int dj = d[static_cast<std::size_t>(j)];
                for (int k = 0; k < dj; ++k) {
                    weight *= boundary[static_cast<std::size_t>(j)] * boundary[static_cast<std::size_t>(j)];
                    weight /= Num(2 * (k + 1));
                }
            }
            sum += weight;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            d[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - v);
        }
    };
    if (n == 0) throw std::invalid_argument("kontsevich_volume needs n >= 1");
    rec(0, total);
    return sum;
}

/// (6g - 5 + 2n)!! / (g! 24^g).
ScaledReal aggarwal_normalized(int g, int n);
/// (3/2)^{n-1} aggarwal_normalized(g, n).
ScaledReal uniform_bound(int g, int n);

/// (6g-5+2n)!!/(g! 24^g) [z^{6g-6+3n}] prod_i sinh(L_i z)/L_i.
ScaledReal asymptotic_volume(int g, int n, std::span<const double> boundary);

/// rho^{-(6g-6+3n)} / sqrt(3 pi g) prod sinh(L_i rho) prod sinh(ell_j/(2mu))
/// with rho = (6g-6+3n)/|L| and mu = |L|/(12g).
ScaledReal saddle_point_estimate(int g, int n, std::span<const double> boundary, std::span<const double> ell);

/// (6g-6+3n) / |L|.
double saddle_radius(int g, int n, std::span<const double> boundary);

/// Saddle-point volume estimate: aggarwal_normalized times
/// saddle_point_estimate with ell empty, divided by prod L_i.
ScaledReal saddle_volume(int g, int n, std::span<const double> boundary);

/// 2^r prod_s (cosh(ell_s/mu) - 1) / ell_s^2.
double volume_ratio_estimate(int g, int n, std::span<const double> ell, double mu);

}  // namespace ribbonspec
