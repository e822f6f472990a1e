#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kscolour/numerics.hpp"

namespace kscolour {

/// Coloured fractions of S^{N-1}. Both caps count towards black, so
/// white + black + uncoloured = 1.
struct AreaBreakdown {
    long long dim = 0;
    double white_fraction = 0.0;
    double black_fraction = 0.0;
    double total_fraction = 0.0;

    [[nodiscard]] double uncoloured_fraction() const { return 1.0 - total_fraction; }
};

namespace detail {

inline void require_colouring_dim(long long n)
{
    if (n < 3)
        throw std::invalid_argument("area: N must be >= 3, got " + std::to_string(n));
}

// Polar-angle mass of [a, b] within [0, π], as a fraction of the sphere:
// (vol(S^{N-2}) / vol(S^{N-1})) ∫ₐᵇ sin^{N-2}θ dθ.
inline double polar_band_fraction(long long n, double a, double b, const QuadratureConfig& cfg)
{
    return surface_ratio(n) * sin_power_integral(static_cast<int>(n - 2), a, b, cfg);
}

} // namespace detail

/// Fraction of S^{N-1} in the open belt |v·z| < 1/√N, i.e. polar angle beyond
/// arcsin √((N-1)/N). Factor 2 accounts for both hemispheres.
inline double white_fraction(long long n, const QuadratureConfig& cfg = {})
{
    detail::require_colouring_dim(n);
    const double lower = std::asin(simplex_circumradius(n - 1));
    return 2.0 * detail::polar_band_fraction(n, lower, std::numbers::pi / 2, cfg);
}

/// Fraction of S^{N-1} in the two caps |v·z| > 1/√2.
inline double black_fraction(long long n, const QuadratureConfig& cfg = {})
{
    detail::require_colouring_dim(n);
    return 2.0 * detail::polar_band_fraction(n, 0.0, std::numbers::pi / 4, cfg);
}

inline AreaBreakdown total_fraction(long long n, const QuadratureConfig& cfg = {})
{
    AreaBreakdown row;
    row.dim = n;
    row.white_fraction = white_fraction(n, cfg);
    row.black_fraction = black_fraction(n, cfg);
    row.total_fraction = row.white_fraction + row.black_fraction;
    return row;
}

inline std::vector<AreaBreakdown> scan(long long n_min, long long n_max, const QuadratureConfig& cfg = {})
{
    detail::require_colouring_dim(n_min);
    if (n_max < n_min)
        throw std::invalid_argument("scan: require N_min <= N_max");
    std::vector<AreaBreakdown> rows;
    rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (long long n = n_min; n <= n_max; ++n)
        rows.push_back(total_fraction(n, cfg));
    return rows;
}

/// Dimension with the smallest coloured fraction in [n_min, n_max]; ties go to
/// the smaller N.
inline std::pair<long long, double> argmin_total(long long n_min, long long n_max, const QuadratureConfig& cfg = {})
{
    const auto rows = scan(n_min, n_max, cfg);
    const AreaBreakdown* best = &rows.front();
    for (const auto& row : rows)
        if (row.total_fraction < best->total_fraction)
            best = &row;
    return {best->dim, best->total_fraction};
}

/// Coloured fraction as N → ∞: erf(1/√2).
inline double asymptotic_limit() { return erf(1.0 / std::numbers::sqrt2); }

/// Partial sum Σ_{k=0}^{k_max} (−1)^k / (2^k k! (2k+1)), which converges to
/// √(π/2)·erf(1/√2).
inline double limit_series(int k_max)
{
    if (k_max < 0)
        throw std::invalid_argument("limit_series: k_max must be >= 0");
    double sum = 0.0;
    double coeff = 1.0; // (−1)^k / (2^k k!)
    for (int k = 0; k <= k_max; ++k) {
        sum += coeff / (2.0 * k + 1.0);
        coeff *= -0.5 / (k + 1.0);
    }
    return sum;
}

/// Value the partial sums of limit_series converge to.
inline double limit_series_target() { return std::sqrt(std::numbers::pi / 2) * asymptotic_limit(); }

/// Sample dimensions beyond the default scan range, used to show the
/// approach to the limit without scanning every N.
inline std::vector<long long> limit_probe_dims() { return {1000, 10000, 100000, 1000000}; }

} // namespace kscolour
