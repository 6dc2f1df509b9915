#include "spslice/random.hpp"

#include "spslice/errors.hpp"

#include <limits>

namespace spslice {

long Rng::integer(long lo, long hi)
{
    if (hi < lo) throw UsageError("Rng::integer: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection sampling removes modulo bias.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

mpq_class Rng::rational(long height)
{
    mpq_class q(integer(-height, height), static_cast<unsigned long>(integer(1, height)));
    q.canonicalize();
    return q;
}

mpq_class Rng::nonzero_rational(long height)
{
    mpq_class q;
    do {
        q = rational(height);
    } while (sgn(q) == 0);
    return q;
}

GaussRat Rng::gauss(long height)
{
    mpq_class re = rational(height);
    mpq_class im = rational(height);
    return {re, im};
}

GaussRat Rng::nonzero_gauss(long height)
{
    GaussRat z;
    do {
        z = gauss(height);
    } while (z.is_zero());
    return z;
}

} // namespace spslice
