#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "kscolour/colouring.hpp"

namespace kscolour {

/// Bernoulli Monte Carlo estimate with its standard error √(p(1−p)/n).
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    long long samples = 0;
    std::uint64_t seed = 0;
    long long hits = 0;

    static Estimate bernoulli(long long hits, long long samples, std::uint64_t seed)
    {
        if (samples < 1)
            throw std::invalid_argument("Estimate: samples must be >= 1");
        const double n = static_cast<double>(samples);
        const double p = static_cast<double>(hits) / n;
        return {p, std::sqrt(p * (1.0 - p) / n), samples, seed, hits};
    }
};

/// z-score of an estimate against a reference value; infinite when the
/// estimate carries no variance but differs.
inline double z_score(const Estimate& e, double reference)
{
    const double diff = e.value - reference;
    if (e.std_error > 0.0)
        return diff / e.std_error;
    return diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
}

struct VectorFractions {
    Estimate white;
    Estimate black;
    Estimate uncoloured;
};

/// Counts of KS-rule failures over sampled bases. All three violation
/// counters must be zero for the colouring to be consistent.
struct ViolationReport {
    long long samples = 0;
    long long black_pair_violations = 0;
    long long all_white_violations = 0;
    long long multi_black_in_full_colouring = 0;
    long long fully_coloured = 0;

    [[nodiscard]] bool clean() const
    {
        return black_pair_violations == 0 && all_white_violations == 0 && multi_black_in_full_colouring == 0;
    }

    ViolationReport& operator+=(const ViolationReport& o)
    {
        samples += o.samples;
        black_pair_violations += o.black_pair_violations;
        all_white_violations += o.all_white_violations;
        multi_black_in_full_colouring += o.multi_black_in_full_colouring;
        fully_coloured += o.fully_coloured;
        return *this;
    }
};

// Random streams
//
// The sample index range [0, samples) is cut into blocks of kBlockSize. Block
// b draws from its own std::mt19937_64 seeded with
//   std::seed_seq{lo32(seed), hi32(seed), lo32(b), hi32(b)}
// and a fresh std::normal_distribution<double>. A run with k shards gives
// shard s the contiguous blocks [s·nb/k, (s+1)·nb/k), so every sample sees
// the same random numbers whatever the shard count and integer totals are
// identical.
inline constexpr long long kBlockSize = 16384;
inline constexpr std::string_view kGeneratorId =
    "std::mt19937_64 per 16384-sample block, seed_seq{lo32(seed),hi32(seed),lo32(block),hi32(block)}, "
    "std::normal_distribution<double>";

using Engine = std::mt19937_64;

inline Engine block_engine(std::uint64_t seed, std::uint64_t block)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    return Engine(seq);
}

inline std::uint64_t entropy_seed()
{
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

namespace detail {

template <class URBG>
void fill_unit_vector(std::span<double> v, URBG& rng, std::normal_distribution<double>& normal)
{
    for (;;) {
        double sq = 0.0;
        for (double& x : v) {
            x = normal(rng);
            sq += x * x;
        }
        if (sq > 0.0) {
            const double inv = 1.0 / std::sqrt(sq);
            for (double& x : v)
                x *= inv;
            return;
        }
    }
}

/// Haar-distributed orthogonal matrix in column-major `q` (n·n entries):
/// Gaussian matrix orthonormalised column by column with Gram–Schmidt run
/// twice per column. The triangular factor's diagonal is the residual norm,
/// hence positive, which is the sign convention Haar measure needs.
template <class URBG>
void fill_haar_basis(std::span<double> q, int n, URBG& rng, std::normal_distribution<double>& normal)
{
    const auto un = static_cast<std::size_t>(n);
    for (;;) {
        for (double& x : q)
            x = normal(rng);
        bool degenerate = false;
        for (std::size_t j = 0; j < un && !degenerate; ++j) {
            std::span<double> col = q.subspan(j * un, un);
            const double original = std::sqrt(dot(col, col));
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t k = 0; k < j; ++k) {
                    std::span<const double> prev = q.subspan(k * un, un);
                    const double r = dot(prev, col);
                    for (std::size_t i = 0; i < un; ++i)
                        col[i] -= r * prev[i];
                }
            }
            const double norm = std::sqrt(dot(col, col));
            if (!(norm > 1e-10 * original)) {
                degenerate = true;
                break;
            }
            for (double& x : col)
                x /= norm;
        }
        if (!degenerate)
            return;
    }
}

inline void require_dim(int n, int min_dim, const char* what)
{
    if (n < min_dim)
        throw std::invalid_argument(std::string(what) + ": dimension must be >= " + std::to_string(min_dim));
}

inline void require_samples(long long samples, int shards)
{
    if (samples < 1)
        throw std::invalid_argument("Monte Carlo: samples must be >= 1");
    if (shards < 1)
        throw std::invalid_argument("Monte Carlo: shard count must be >= 1");
}

/// Runs `kernel(engine, normal, count, acc)` over every block and sums the
/// per-shard accumulators. Acc must be default-constructible and support +=.
template <class Acc, class Kernel>
Acc run_sharded(long long samples, std::uint64_t seed, int shards, const Kernel& kernel)
{
    const long long blocks = (samples + kBlockSize - 1) / kBlockSize;
    auto run_range = [&](long long first, long long last) {
        Acc acc{};
        for (long long b = first; b < last; ++b) {
            Engine engine = block_engine(seed, static_cast<std::uint64_t>(b));
            std::normal_distribution<double> normal;
            const long long count = std::min(kBlockSize, samples - b * kBlockSize);
            kernel(engine, normal, count, acc);
        }
        return acc;
    };

    if (shards == 1)
        return run_range(0, blocks);

    std::vector<Acc> partial(static_cast<std::size_t>(shards));
    std::vector<std::thread> workers;
    workers.reserve(partial.size());
    for (int s = 0; s < shards; ++s) {
        const long long first = blocks * s / shards;
        const long long last = blocks * (s + 1) / shards;
        workers.emplace_back([&, s, first, last] { partial[static_cast<std::size_t>(s)] = run_range(first, last); });
    }
    for (auto& w : workers)
        w.join();
    Acc total{};
    for (const auto& p : partial)
        total += p;
    return total;
}

struct ColourTally {
    long long white = 0;
    long long black = 0;
    long long uncoloured = 0;

    ColourTally& operator+=(const ColourTally& o)
    {
        white += o.white;
        black += o.black;
        uncoloured += o.uncoloured;
        return *this;
    }
};

struct HitTally {
    long long hits = 0;

    HitTally& operator+=(const HitTally& o)
    {
        hits += o.hits;
        return *this;
    }
};

inline ColourCounts classify_columns(std::span<const double> q, const ColouringParams& params)
{
    const auto n = static_cast<std::size_t>(params.dim());
    const auto axis = static_cast<std::size_t>(params.axis_index());
    ColourCounts counts;
    for (std::size_t j = 0; j < n; ++j)
        counts.add(params.classify_component(q[j * n + axis]));
    return counts;
}

} // namespace detail

/// Uniform point on S^{n-1}: n independent standard normals, normalised.
template <class URBG>
UnitVector sample_unit_vector(int n, URBG& rng)
{
    detail::require_dim(n, 1, "sample_unit_vector");
    std::normal_distribution<double> normal;
    std::vector<double> v(static_cast<std::size_t>(n));
    detail::fill_unit_vector(std::span<double>(v), rng, normal);
    return UnitVector(std::move(v));
}

/// Haar-random ordered orthonormal basis of R^n.
template <class URBG>
OrthonormalBasis sample_basis(int n, URBG& rng)
{
    detail::require_dim(n, 2, "sample_basis");
    std::normal_distribution<double> normal;
    const auto un = static_cast<std::size_t>(n);
    std::vector<double> q(un * un);
    detail::fill_haar_basis(std::span<double>(q), n, rng, normal);
    std::vector<UnitVector> vectors;
    vectors.reserve(un);
    for (std::size_t j = 0; j < un; ++j)
        vectors.emplace_back(std::vector<double>(q.begin() + static_cast<std::ptrdiff_t>(j * un),
                                                 q.begin() + static_cast<std::ptrdiff_t>((j + 1) * un)));
    return OrthonormalBasis(std::move(vectors));
}

/// White/black/uncoloured proportions of uniform random directions.
inline VectorFractions estimate_vector_fractions(const ColouringParams& params, long long samples,
                                                 std::uint64_t seed, int shards = 1)
{
    detail::require_samples(samples, shards);
    const auto n = static_cast<std::size_t>(params.dim());
    const auto axis = static_cast<std::size_t>(params.axis_index());
    const auto tally = detail::run_sharded<detail::ColourTally>(
        samples, seed, shards, [&](Engine& rng, std::normal_distribution<double>& normal, long long count,
                                   detail::ColourTally& acc) {
            std::vector<double> v(n);
            for (long long i = 0; i < count; ++i) {
                detail::fill_unit_vector(std::span<double>(v), rng, normal);
                switch (params.classify_component(v[axis])) {
                case Colour::White:
                    ++acc.white;
                    break;
                case Colour::Black:
                    ++acc.black;
                    break;
                case Colour::Uncoloured:
                    ++acc.uncoloured;
                    break;
                }
            }
        });
    return {Estimate::bernoulli(tally.white, samples, seed), Estimate::bernoulli(tally.black, samples, seed),
            Estimate::bernoulli(tally.uncoloured, samples, seed)};
}

inline VectorFractions estimate_vector_fractions(int n, long long samples, std::uint64_t seed, int shards = 1)
{
    return estimate_vector_fractions(ColouringParams(n), samples, seed, shards);
}

/// Fraction of Haar-random ordered bases in which every vector is coloured.
inline Estimate estimate_basis_fraction(const ColouringParams& params, long long samples, std::uint64_t seed,
                                        int shards = 1)
{
    detail::require_samples(samples, shards);
    const int n = params.dim();
    const auto tally = detail::run_sharded<detail::HitTally>(
        samples, seed, shards,
        [&](Engine& rng, std::normal_distribution<double>& normal, long long count, detail::HitTally& acc) {
            std::vector<double> q(static_cast<std::size_t>(n * n));
            for (long long i = 0; i < count; ++i) {
                detail::fill_haar_basis(std::span<double>(q), n, rng, normal);
                if (detail::classify_columns(q, params).fully_coloured())
                    ++acc.hits;
            }
        });
    return Estimate::bernoulli(tally.hits, samples, seed);
}

inline Estimate estimate_basis_fraction(int n, long long samples, std::uint64_t seed, int shards = 1)
{
    detail::require_dim(n, 3, "estimate_basis_fraction");
    return estimate_basis_fraction(ColouringParams(n), samples, seed, shards);
}

/// Classifies Haar-random bases and counts every KS-rule failure: two or
/// more Black vectors, an all-White basis, and a fully coloured basis whose
/// Black count is not exactly one.
inline ViolationReport verify_constraints(const ColouringParams& params, long long samples, std::uint64_t seed,
                                          int shards = 1)
{
    detail::require_samples(samples, shards);
    const int n = params.dim();
    return detail::run_sharded<ViolationReport>(
        samples, seed, shards,
        [&](Engine& rng, std::normal_distribution<double>& normal, long long count, ViolationReport& acc) {
            std::vector<double> q(static_cast<std::size_t>(n * n));
            for (long long i = 0; i < count; ++i) {
                detail::fill_haar_basis(std::span<double>(q), n, rng, normal);
                const ColourCounts c = detail::classify_columns(q, params);
                ++acc.samples;
                if (c.black >= 2)
                    ++acc.black_pair_violations;
                if (c.white == n)
                    ++acc.all_white_violations;
                if (c.fully_coloured()) {
                    ++acc.fully_coloured;
                    if (c.black != 1)
                        ++acc.multi_black_in_full_colouring;
                }
            }
        });
}

inline ViolationReport verify_constraints(int n, long long samples, std::uint64_t seed, int shards = 1)
{
    return verify_constraints(ColouringParams(n), samples, seed, shards);
}

} // namespace kscolour
