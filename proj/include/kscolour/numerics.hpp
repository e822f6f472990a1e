#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace kscolour {

/// Tolerances for adaptive 1D integration. The integrator stops once the
/// summed error estimate is below max(abs_tol, rel_tol * |result|).
struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;

    void validate() const
    {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw std::invalid_argument("QuadratureConfig: tolerances must be positive");
        if (max_subdivisions < 1)
            throw std::invalid_argument("QuadratureConfig: max_subdivisions must be >= 1");
    }

    [[nodiscard]] QuadratureConfig halved() const
    {
        return {abs_tol * 0.5, rel_tol * 0.5, max_subdivisions * 2};
    }
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    int intervals = 0;
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077548507346780, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss weights for the odd-indexed Kronrod nodes.
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_21(const F& f, double a, double b)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double abs_half = std::abs(half);

    std::array<double, 10> f_left{};
    std::array<double, 10> f_right{};
    const double f_centre = static_cast<double>(f(centre));

    double kronrod = kKronrodWeights[10] * f_centre;
    double gauss = 0.0;
    double abs_sum = std::abs(kronrod);
    for (std::size_t j = 0; j < 10; ++j) {
        const double dx = half * kKronrodNodes[j];
        f_left[j] = static_cast<double>(f(centre - dx));
        f_right[j] = static_cast<double>(f(centre + dx));
        const double pair = f_left[j] + f_right[j];
        kronrod += kKronrodWeights[j] * pair;
        abs_sum += kKronrodWeights[j] * (std::abs(f_left[j]) + std::abs(f_right[j]));
        if (j % 2 == 1)
            gauss += kGaussWeights[j / 2] * pair;
    }

    const double mean = 0.5 * kronrod;
    double asc = kKronrodWeights[10] * std::abs(f_centre - mean);
    for (std::size_t j = 0; j < 10; ++j)
        asc += kKronrodWeights[j] * (std::abs(f_left[j] - mean) + std::abs(f_right[j] - mean));

    const double value = kronrod * half;
    const double res_abs = abs_sum * abs_half;
    const double res_asc = asc * abs_half;
    double error = std::abs((kronrod - gauss) * half);

    if (res_asc != 0.0 && error != 0.0)
        error = res_asc * std::min(1.0, std::pow(200.0 * error / res_asc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps))
        error = std::max(50.0 * eps * res_abs, error);

    if (!std::isfinite(value) || !std::isfinite(error))
        throw QuadratureError("integrate: non-finite integrand value on [" + std::to_string(a) +
                              ", " + std::to_string(b) + "]");
    return {a, b, value, error};
}

} // namespace detail

/// Globally adaptive Gauss–Kronrod integration over [a, b]. The panel with the
/// largest error estimate is bisected until the tolerance is met; endpoint
/// singularities attract subdivisions automatically. Throws QuadratureError
/// when the subdivision budget runs out.
template <class F>
QuadratureResult integrate_detailed(const F& f, double a, double b, const QuadratureConfig& cfg = {})
{
    cfg.validate();
    if (!(a <= b))
        throw std::invalid_argument("integrate: require a <= b");
    if (a == b)
        return {0.0, 0.0, 0};

    std::priority_queue<detail::Panel> panels;
    const detail::Panel first = detail::gauss_kronrod_21(f, a, b);
    double total = first.value;
    double total_error = first.error;
    panels.push(first);
    int count = 1;

    auto target = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)); };

    while (total_error > target()) {
        if (count >= cfg.max_subdivisions)
            throw QuadratureError("integrate: no convergence after " + std::to_string(count) +
                                  " subdivisions (error estimate " + std::to_string(total_error) + ")");
        const detail::Panel worst = panels.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b))
            throw QuadratureError("integrate: panel width reached machine precision near " +
                                  std::to_string(worst.a));
        panels.pop();
        const detail::Panel left = detail::gauss_kronrod_21(f, worst.a, mid);
        const detail::Panel right = detail::gauss_kronrod_21(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++count;
    }

    // Re-sum to drop the drift from incremental updates.
    double value = 0.0;
    double error = 0.0;
    while (!panels.empty()) {
        value += panels.top().value;
        error += panels.top().error;
        panels.pop();
    }
    return {value, error, count};
}

template <class F>
double integrate(const F& f, double a, double b, const QuadratureConfig& cfg = {})
{
    return integrate_detailed(f, a, b, cfg).value;
}

/// ∫ₐᵇ sin^p θ dθ for 0 ≤ a ≤ b ≤ π. Closed forms for p ≤ 2; otherwise
/// quadrature of exp(p·log sin θ), split at the mode π/2 so narrow peaks at
/// large p are never straddled by a single panel.
inline double sin_power_integral(int p, double a, double b, const QuadratureConfig& cfg = {})
{
    constexpr double pi = std::numbers::pi;
    if (p < 0)
        throw std::invalid_argument("sin_power_integral: power must be >= 0");
    if (!(0.0 <= a && a <= b && b <= pi))
        throw std::invalid_argument("sin_power_integral: require 0 <= a <= b <= pi");

    switch (p) {
    case 0:
        return b - a;
    case 1:
        return std::cos(a) - std::cos(b);
    case 2: {
        auto anti = [](double t) { return 0.5 * (t - std::sin(t) * std::cos(t)); };
        return anti(b) - anti(a);
    }
    default:
        break;
    }

    const double power = static_cast<double>(p);
    auto integrand = [power](double t) {
        const double s = std::sin(t);
        return s > 0.0 ? std::exp(power * std::log(s)) : 0.0;
    };
    constexpr double mode = pi / 2;
    if (a < mode && mode < b)
        return integrate(integrand, a, mode, cfg) + integrate(integrand, mode, b, cfg);
    return integrate(integrand, a, b, cfg);
}

/// log vol(S^d) = log 2 + ((d+1)/2) log π − lgamma((d+1)/2).
inline double log_sphere_area(int d)
{
    if (d < 0)
        throw std::invalid_argument("log_sphere_area: dimension must be >= 0");
    const double half = 0.5 * (d + 1);
    return std::log(2.0) + half * std::log(std::numbers::pi) - std::lgamma(half);
}

/// vol(S^{N-2}) / vol(S^{N-1}) = Γ(N/2) / (√π Γ((N-1)/2)), evaluated in log space.
inline double surface_ratio(long long n)
{
    if (n < 2)
        throw std::invalid_argument("surface_ratio: N must be >= 2");
    const double big_n = static_cast<double>(n);
    return std::exp(std::lgamma(0.5 * big_n) - std::lgamma(0.5 * (big_n - 1.0))) /
           std::sqrt(std::numbers::pi);
}

/// Circumradius √(n/(n+1)) of the regular n-simplex whose vertices are the
/// n+1 standard basis vectors of R^{n+1} (edge length √2).
inline double simplex_circumradius(long long n)
{
    if (n < 1)
        throw std::invalid_argument("simplex_circumradius: n must be >= 1");
    const double nn = static_cast<double>(n);
    return std::sqrt(nn / (nn + 1.0));
}

inline double erf(double z) { return std::erf(z); }

} // namespace kscolour
