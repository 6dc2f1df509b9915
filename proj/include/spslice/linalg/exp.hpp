#ifndef SPSLICE_LINALG_EXP_HPP
#define SPSLICE_LINALG_EXP_HPP

#include "spslice/linalg/matrix.hpp"

namespace spslice {

/// True iff N^size == 0.
bool is_nilpotent(const QMatrix& n);

/// exp(N) = sum_k N^k / k! for nilpotent N (the sum is finite). The inverse
/// is exp_nilpotent(-N). Throws DomainError if N is not nilpotent.
QMatrix exp_nilpotent(const QMatrix& n);

} // namespace spslice

#endif
