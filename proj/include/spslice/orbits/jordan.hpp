#ifndef SPSLICE_ORBITS_JORDAN_HPP
#define SPSLICE_ORBITS_JORDAN_HPP

#include "spslice/linalg/matrix.hpp"

#include <string>
#include <vector>

namespace spslice::orbits {

/// Weakly decreasing list of positive parts (Jordan block sizes).
class JordanType {
public:
    JordanType() = default;
    /// Sorts the parts; throws UsageError on a zero part.
    explicit JordanType(std::vector<std::size_t> parts);

    const std::vector<std::size_t>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept;
    /// Every odd part occurs with even multiplicity.
    bool is_symplectic() const;

    /// "[4,2]" style.
    std::string str() const;
    static JordanType parse(const std::string& text);

    friend bool operator==(const JordanType&, const JordanType&) = default;

private:
    std::vector<std::size_t> parts_;
};

/// Rank sequence r_k = rank(A^k), k = 0..size, ending with 0.
std::vector<std::size_t> rank_sequence(const QMatrix& a);

/// Parts >= k number r_{k-1} - r_k. Throws DomainError if A is not nilpotent.
JordanType jordan_type(const QMatrix& a);

/// p <= q in dominance order (all partial sums of p at most those of q).
/// Throws UsageError when the sizes differ.
bool dominance_leq(const JordanType& p, const JordanType& q);

bool in_orbit(const QMatrix& a, const JordanType& t);
/// Closure membership via dominance of Jordan types.
bool in_closure(const QMatrix& a, const JordanType& t);

/// All partitions of n, lexicographically decreasing.
std::vector<JordanType> partitions(std::size_t n);
/// Symplectic partitions of 2n.
std::vector<JordanType> symplectic_partitions(std::size_t two_n);

/// A split-form element of sp_{2n} with the given symplectic Jordan type,
/// built from paired blocks: each even part 2k is a single block on a
/// 2k-dimensional symplectic summand, each pair of equal odd parts m sits as
/// [[N, 0], [0, -N^T]] on a 2m-dimensional summand.
QMatrix orbit_representative(const JordanType& t);

/// A fixed [4,2] representative in split form, used as the reference element.
QMatrix representative_42();

} // namespace spslice::orbits

#endif
