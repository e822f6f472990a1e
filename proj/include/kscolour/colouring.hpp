#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kscolour {

/// Truth value assigned to a projective direction. Black carries value 1,
/// White value 0; Uncoloured directions receive no assignment.
enum class Colour { Black, White, Uncoloured };

constexpr std::string_view to_string(Colour c)
{
    switch (c) {
    case Colour::Black:
        return "Black";
    case Colour::White:
        return "White";
    case Colour::Uncoloured:
        return "Uncoloured";
    }
    return "?";
}

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kRenormaliseTolerance = 1e-9;
inline constexpr double kOrthogonalityTolerance = 1e-12;

/// Thresholds of the incomplete Kochen-Specker colouring in R^dim.
///
/// A direction v is Black when |v[axis]| > black_bound (the two polar caps,
/// polar angle below π/4) and White when |v[axis]| < white_bound (the
/// equatorial belt whose edge sits at the circumradius √((N-1)/N) of the
/// regular (N-1)-simplex, i.e. |v[axis]| = 1/√N). Both inequalities are
/// strict, so the two boundary sets are Uncoloured.
class ColouringParams {
public:
    explicit ColouringParams(int dim) : ColouringParams(dim, dim - 1) {}

    ColouringParams(int dim, int axis_index)
        : ColouringParams(dim, std::sqrt(1.0 / dim), std::sqrt(0.5), axis_index)
    {
    }

    /// Custom thresholds; used to probe the construction away from its
    /// defaults. Still requires 0 < white_bound < black_bound < 1.
    static ColouringParams with_bounds(int dim, double white_bound, double black_bound, int axis_index)
    {
        return ColouringParams(dim, white_bound, black_bound, axis_index);
    }

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] double white_bound() const { return white_bound_; }
    [[nodiscard]] double black_bound() const { return black_bound_; }
    [[nodiscard]] int axis_index() const { return axis_index_; }

    /// Classification from the axis component alone; no validation.
    [[nodiscard]] Colour classify_component(double axis_component) const
    {
        const double c = std::abs(axis_component);
        if (c > black_bound_)
            return Colour::Black;
        if (c < white_bound_)
            return Colour::White;
        return Colour::Uncoloured;
    }

private:
    ColouringParams(int dim, double white_bound, double black_bound, int axis_index)
        : dim_(dim), white_bound_(white_bound), black_bound_(black_bound), axis_index_(axis_index)
    {
        if (dim < 3)
            throw std::invalid_argument("ColouringParams: dim must be >= 3, got " + std::to_string(dim));
        if (axis_index < 0 || axis_index >= dim)
            throw std::invalid_argument("ColouringParams: axis_index out of range");
        if (!(0.0 < white_bound && white_bound < black_bound && black_bound < 1.0))
            throw std::invalid_argument("ColouringParams: require 0 < white_bound < black_bound < 1");
    }

    int dim_;
    double white_bound_;
    double black_bound_;
    int axis_index_;
};

/// A point on S^{dim-1}. Inputs within 1e-9 of unit norm are rescaled;
/// anything further away is rejected.
class UnitVector {
public:
    explicit UnitVector(std::vector<double> components) : components_(std::move(components))
    {
        if (components_.empty())
            throw std::invalid_argument("UnitVector: empty component list");
        double sq = 0.0;
        for (double x : components_) {
            if (!std::isfinite(x))
                throw std::invalid_argument("UnitVector: non-finite component");
            sq += x * x;
        }
        const double norm = std::sqrt(sq);
        if (std::abs(norm - 1.0) > kRenormaliseTolerance)
            throw std::invalid_argument("UnitVector: norm " + std::to_string(norm) + " is not 1");
        if (std::abs(norm - 1.0) > kNormTolerance)
            for (double& x : components_)
                x /= norm;
    }

    UnitVector(std::initializer_list<double> components) : UnitVector(std::vector<double>(components)) {}

    [[nodiscard]] int dim() const { return static_cast<int>(components_.size()); }
    [[nodiscard]] std::span<const double> components() const { return components_; }
    [[nodiscard]] double operator[](std::size_t i) const { return components_[i]; }

    [[nodiscard]] UnitVector operator-() const
    {
        std::vector<double> neg(components_);
        for (double& x : neg)
            x = -x;
        return UnitVector(std::move(neg));
    }

private:
    std::vector<double> components_;
};

inline double dot(std::span<const double> u, std::span<const double> v)
{
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
        s += u[i] * v[i];
    return s;
}

/// Ordered orthonormal basis of R^dim; vectors()[i] is the i-th basis vector.
class OrthonormalBasis {
public:
    explicit OrthonormalBasis(std::vector<UnitVector> vectors) : vectors_(std::move(vectors))
    {
        const std::size_t n = vectors_.size();
        if (n == 0)
            throw std::invalid_argument("OrthonormalBasis: no vectors");
        for (const auto& v : vectors_)
            if (static_cast<std::size_t>(v.dim()) != n)
                throw std::invalid_argument("OrthonormalBasis: need dim vectors of length dim");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (std::abs(dot(vectors_[i].components(), vectors_[j].components())) > kOrthogonalityTolerance)
                    throw std::invalid_argument("OrthonormalBasis: vectors " + std::to_string(i) + " and " +
                                                std::to_string(j) + " are not orthogonal");
    }

    [[nodiscard]] int dim() const { return static_cast<int>(vectors_.size()); }
    [[nodiscard]] const std::vector<UnitVector>& vectors() const { return vectors_; }
    [[nodiscard]] const UnitVector& operator[](std::size_t i) const { return vectors_[i]; }

private:
    std::vector<UnitVector> vectors_;
};

inline Colour colour_of(const UnitVector& v, const ColouringParams& p)
{
    if (v.dim() != p.dim())
        throw std::invalid_argument("colour_of: vector has dim " + std::to_string(v.dim()) +
                                    ", colouring has dim " + std::to_string(p.dim()));
    return p.classify_component(v[static_cast<std::size_t>(p.axis_index())]);
}

inline std::vector<Colour> classify_basis(const OrthonormalBasis& b, const ColouringParams& p)
{
    std::vector<Colour> out;
    out.reserve(b.vectors().size());
    for (const auto& v : b.vectors())
        out.push_back(colour_of(v, p));
    return out;
}

struct ColourCounts {
    int black = 0;
    int white = 0;
    int uncoloured = 0;

    void add(Colour c)
    {
        switch (c) {
        case Colour::Black:
            ++black;
            break;
        case Colour::White:
            ++white;
            break;
        case Colour::Uncoloured:
            ++uncoloured;
            break;
        }
    }

    [[nodiscard]] int size() const { return black + white + uncoloured; }
    [[nodiscard]] bool fully_coloured() const { return uncoloured == 0; }
    // KS rule where defined: never two Blacks, never all White.
    [[nodiscard]] bool ks_satisfied() const { return black <= 1 && white != size(); }
};

inline ColourCounts count_colours(std::span<const Colour> colours)
{
    ColourCounts counts;
    for (Colour c : colours)
        counts.add(c);
    return counts;
}

inline bool is_fully_coloured(const OrthonormalBasis& b, const ColouringParams& p)
{
    return count_colours(classify_basis(b, p)).fully_coloured();
}

inline bool ks_satisfied(const OrthonormalBasis& b, const ColouringParams& p)
{
    return count_colours(classify_basis(b, p)).ks_satisfied();
}

} // namespace kscolour
