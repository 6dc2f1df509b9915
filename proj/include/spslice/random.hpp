#ifndef SPSLICE_RANDOM_HPP
#define SPSLICE_RANDOM_HPP

#include "spslice/exactfield/gauss_rat.hpp"

#include <cstdint>
#include <random>

namespace spslice {

/// Default bound on |numerator| and denominator of sampled rationals.
inline constexpr long kDefaultHeight = 20;

/*
 * Seeded deterministic source of exact scalars. Uses mt19937_64 (whose
 * output sequence is fixed by the standard) and its own range reduction,
 * so draws are identical across standard library implementations.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long integer(long lo, long hi);
    /// p/q with |p| <= height, 1 <= q <= height.
    mpq_class rational(long height = kDefaultHeight);
    mpq_class nonzero_rational(long height = kDefaultHeight);
    /// Real and imaginary parts drawn independently.
    GaussRat gauss(long height = kDefaultHeight);
    GaussRat nonzero_gauss(long height = kDefaultHeight);
    /// Rational GaussRat (zero imaginary part).
    GaussRat real(long height = kDefaultHeight) { return GaussRat(rational(height)); }
    bool coin() { return integer(0, 1) == 1; }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace spslice

#endif
