#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "kscolour/colouring.hpp"
#include "kscolour/numerics.hpp"

namespace kscolour {

/// Fraction of ordered orthonormal bases that are fully coloured, obtained by
/// quadrature: fraction = combinatorial_factor * raw_integral / normalizer,
/// where raw_integral = first_term + second_term.
struct BasisFractionResult {
    int dim = 0;
    double first_term = 0.0;
    double second_term = 0.0;
    double raw_integral = 0.0;
    double normalizer = 0.0;
    int combinatorial_factor = 0;
    double fraction = 0.0;
};

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Half-width of the belt in the 3D colouring: |v·z| < 1/√3.
inline double default_belt_height_3d() { return 1.0 / std::sqrt(3.0); }

/// Raised when the white arc angle is asked for in the regime where the whole
/// orthogonal circle is white (h / sin θ > 1).
class WholeCircleWhite : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// α(θ) = 2·arcsin(h / sin θ): the angle subtended by the white arc on one
/// side of the great circle orthogonal to a vector at polar angle θ. The
/// circle's total white measure is 2α.
inline double alpha(double theta, double h)
{
    const double s = std::sin(theta);
    if (!(s > 0.0) || !(h > 0.0))
        throw std::invalid_argument("alpha: require sin(theta) > 0 and h > 0");
    double ratio = h / s;
    if (ratio > 1.0) {
        // Rounding of sin(asin(h)) can leave ratio a few ulp above 1.
        if (ratio - 1.0 > 8.0 * std::numeric_limits<double>::epsilon())
            throw WholeCircleWhite("alpha: h / sin(theta) > 1, the whole orthogonal circle is white");
        ratio = 1.0;
    }
    return 2.0 * std::asin(ratio);
}

/// β = 4α − 2π: measure of second-vector directions on the orthogonal circle
/// whose π/2 rotation is also white.
inline double beta(double theta, double h) { return 4.0 * alpha(theta, h) - kTwoPi; }

/// β extended to the all-white regime (sin θ ≤ h), where every choice works.
inline double overlap_angle(double theta, double h)
{
    if (std::sin(theta) <= h)
        return kTwoPi;
    return beta(theta, h);
}

/// I = 2π∫₀^{arcsin h} sin θ dθ + ∫_{arcsin h}^{π/4} β(θ) sin θ dθ with
/// h = 1/√3, compared against 2π and multiplied by 3 for the position of the
/// black vector in the ordered triple.
inline BasisFractionResult basis_fraction_3d(const QuadratureConfig& cfg = {})
{
    const double h = default_belt_height_3d();
    const double edge = std::asin(h);

    BasisFractionResult r;
    r.dim = 3;
    r.first_term = kTwoPi * sin_power_integral(1, 0.0, edge, cfg);
    r.second_term = integrate([h](double t) { return beta(t, h) * std::sin(t); }, edge,
                              std::numbers::pi / 4, cfg);
    r.raw_integral = r.first_term + r.second_term;
    r.normalizer = kTwoPi * sin_power_integral(1, 0.0, std::numbers::pi / 2, cfg);
    r.combinatorial_factor = 3;
    r.fraction = r.combinatorial_factor * r.raw_integral / r.normalizer;
    return r;
}

/// Belt half-width on the 2-sphere orthogonal to a black vector at polar angle
/// θ₂ in R^4: B = A / sin θ₂ with A = 1/2. B ≥ 1 means the whole orthogonal
/// 2-sphere is white.
inline double belt_radius_4d(double theta2)
{
    const double s = std::sin(theta2);
    if (!(s > 0.0))
        throw std::domain_error("belt_radius_4d: theta2 = 0, the whole orthogonal 2-sphere is white");
    return 0.5 / s;
}

/// Inner 4D integral
///   2π∫_{arccos B}^{arcsin B} sin θ₁ dθ₁ + ∫_{arcsin B}^{π/2} γ(θ₁) sin θ₁ dθ₁,
/// γ = 8·arcsin(B / sin θ₁) − 2π. The first term is dropped when its range
/// is empty (B < 1/√2). For B ≥ 1 the value is the all-white 2π.
inline double inner_integral_4d(double belt, const QuadratureConfig& cfg = {})
{
    if (!(belt > 0.0))
        throw std::invalid_argument("inner_integral_4d: B must be positive");
    if (belt >= 1.0)
        return kTwoPi;
    const double lo = std::acos(belt);
    const double hi = std::asin(belt);
    double value = 0.0;
    if (lo < hi)
        value += kTwoPi * sin_power_integral(1, lo, hi, cfg);
    value += integrate([belt](double t) { return beta(t, belt) * std::sin(t); }, hi,
                       std::numbers::pi / 2, cfg);
    return value;
}

namespace detail {

inline BasisFractionResult basis_fraction_4d_impl(double second_term_factor, const QuadratureConfig& cfg)
{
    constexpr double pi = std::numbers::pi;
    const double edge = std::asin(0.5);

    BasisFractionResult r;
    r.dim = 4;
    r.first_term = 2.0 * kTwoPi * sin_power_integral(2, 0.0, edge, cfg);
    r.second_term = second_term_factor * integrate(
                                             [&cfg](double t) {
                                                 const double s = std::sin(t);
                                                 return inner_integral_4d(belt_radius_4d(t), cfg) * s * s;
                                             },
                                             edge, pi / 4, cfg);
    r.raw_integral = r.first_term + r.second_term;
    r.normalizer = 2.0 * kTwoPi * sin_power_integral(2, 0.0, pi / 2, cfg);
    r.combinatorial_factor = 4;
    r.fraction = r.combinatorial_factor * r.raw_integral / r.normalizer;
    return r;
}

} // namespace detail

/// 4D fraction evaluated with the outer integral exactly as printed:
///   4π∫₀^{arcsin ½} sin²θ₂ dθ₂ + ∫_{arcsin ½}^{π/4} I(B(θ₂)) sin²θ₂ dθ₂,
/// times 4, over 4π∫₀^{π/2} sin²θ dθ = π².
inline BasisFractionResult basis_fraction_4d(const QuadratureConfig& cfg = {})
{
    return detail::basis_fraction_4d_impl(1.0, cfg);
}

/// Same outer integral with the second term doubled. The inner integral only
/// covers θ₁ ∈ [arccos B, π/2], one hemisphere of the orthogonal 2-sphere,
/// while the first term's 4π already covers both. With the factor 2 the outer
/// integrand is continuous at θ₂ = arcsin ½ and the result agrees with the
/// Haar Monte Carlo estimate.
inline BasisFractionResult basis_fraction_4d_corrected(const QuadratureConfig& cfg = {})
{
    return detail::basis_fraction_4d_impl(2.0, cfg);
}

/// Integrand of the outer 4D integral, as printed (hemisphere_factor = 1) or
/// corrected (hemisphere_factor = 2).
inline double outer_integrand_4d(double theta2, double hemisphere_factor, const QuadratureConfig& cfg = {})
{
    const double s = std::sin(theta2);
    if (theta2 < std::asin(0.5))
        return 2.0 * kTwoPi * s * s;
    return hemisphere_factor * inner_integral_4d(belt_radius_4d(theta2), cfg) * s * s;
}

namespace detail {

// Point at angle phi on the great circle orthogonal to z' = (sin θ, 0, cos θ),
// with x' = (0, 1, 0) and y' = (cos θ, 0, −sin θ).
inline UnitVector orthocircle_point(double theta, double phi)
{
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return UnitVector({s * std::cos(theta), c, -s * std::sin(theta)});
}

inline ColouringParams belt_params_3d(double h)
{
    if (!(h > 0.0 && h < 1.0))
        throw std::invalid_argument("belt height must lie in (0, 1)");
    return ColouringParams::with_bounds(3, h, std::max(std::sqrt(0.5), 0.5 * (1.0 + h)), 2);
}

} // namespace detail

/// Geometric oracle for α: measure (radians) of the white part of the great
/// circle orthogonal to a vector at polar angle θ, found by classifying
/// `samples` equally spaced circle points with colour_of. Should equal
/// 2·alpha(θ, h), or 2π in the all-white regime.
inline double sampled_white_arc(double theta, double h, int samples = 100000)
{
    if (samples < 1)
        throw std::invalid_argument("sampled_white_arc: samples must be >= 1");
    const ColouringParams params = detail::belt_params_3d(h);
    long long white = 0;
    for (int k = 0; k < samples; ++k) {
        const double phi = (k + 0.5) * kTwoPi / samples;
        if (colour_of(detail::orthocircle_point(theta, phi), params) == Colour::White)
            ++white;
    }
    return kTwoPi * static_cast<double>(white) / samples;
}

/// Geometric oracle for β: measure of circle points v such that both v and
/// its π/2 rotation within the circle are white.
inline double sampled_overlap_arc(double theta, double h, int samples = 100000)
{
    if (samples < 1)
        throw std::invalid_argument("sampled_overlap_arc: samples must be >= 1");
    const ColouringParams params = detail::belt_params_3d(h);
    long long both = 0;
    for (int k = 0; k < samples; ++k) {
        const double phi = (k + 0.5) * kTwoPi / samples;
        if (colour_of(detail::orthocircle_point(theta, phi), params) == Colour::White &&
            colour_of(detail::orthocircle_point(theta, phi + std::numbers::pi / 2), params) == Colour::White)
            ++both;
    }
    return kTwoPi * static_cast<double>(both) / samples;
}

} // namespace kscolour
