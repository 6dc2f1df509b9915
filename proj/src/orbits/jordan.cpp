#include "spslice/orbits/jordan.hpp"

#include "spslice/linalg/elimination.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace spslice::orbits {

JordanType::JordanType(std::vector<std::size_t> parts) : parts_(std::move(parts))
{
    if (std::find(parts_.begin(), parts_.end(), 0) != parts_.end())
        throw UsageError("JordanType: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::size_t JordanType::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

bool JordanType::is_symplectic() const
{
    std::map<std::size_t, std::size_t> mult;
    for (auto p : parts_) ++mult[p];
    return std::all_of(mult.begin(), mult.end(), [](const auto& kv) { return kv.first % 2 == 0 || kv.second % 2 == 0; });
}

std::string JordanType::str() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < parts_.size(); ++k) os << (k ? "," : "") << parts_[k];
    os << ']';
    return os.str();
}

JordanType JordanType::parse(const std::string& text)
{
    std::vector<std::size_t> parts;
    std::string digits;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
        } else if (c == ',' || c == ']' || c == ' ') {
            if (!digits.empty()) parts.push_back(std::stoul(digits));
            digits.clear();
        } else if (c != '[') {
            throw ParseError("JordanType: unexpected character in '" + text + "'");
        }
    }
    if (!digits.empty()) parts.push_back(std::stoul(digits));
    return JordanType(std::move(parts));
}

std::vector<std::size_t> rank_sequence(const QMatrix& a)
{
    if (!a.is_square()) throw UsageError("rank_sequence: non-square");
    std::vector<std::size_t> ranks{a.rows()};
    QMatrix power = QMatrix::identity(a.rows());
    while (ranks.back() != 0 && ranks.size() <= a.rows()) {
        power = power * a;
        ranks.push_back(rank(power));
    }
    return ranks;
}

JordanType jordan_type(const QMatrix& a)
{
    const auto r = rank_sequence(a);
    if (r.back() != 0) throw DomainError("jordan_type: matrix is not nilpotent");
    // count of parts >= k is r_{k-1} - r_k; parts of size exactly k follow by differencing.
    std::vector<std::size_t> parts;
    for (std::size_t k = 1; k < r.size(); ++k) {
        const std::size_t at_least_k = r[k - 1] - r[k];
        const std::size_t at_least_next = k + 1 < r.size() ? r[k] - r[k + 1] : 0;
        for (std::size_t j = 0; j < at_least_k - at_least_next; ++j) parts.push_back(k);
    }
    return JordanType(std::move(parts));
}

bool dominance_leq(const JordanType& p, const JordanType& q)
{
    if (p.size() != q.size()) throw UsageError("dominance_leq: partitions of different sizes");
    std::size_t sp = 0, sq = 0;
    const std::size_t len = std::max(p.parts().size(), q.parts().size());
    for (std::size_t k = 0; k < len; ++k) {
        sp += k < p.parts().size() ? p.parts()[k] : 0;
        sq += k < q.parts().size() ? q.parts()[k] : 0;
        if (sp > sq) return false;
    }
    return true;
}

bool in_orbit(const QMatrix& a, const JordanType& t)
{
    return jordan_type(a) == t;
}

bool in_closure(const QMatrix& a, const JordanType& t)
{
    return dominance_leq(jordan_type(a), t);
}

std::vector<JordanType> partitions(std::size_t n)
{
    std::vector<JordanType> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max_part) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::size_t p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<JordanType> symplectic_partitions(std::size_t two_n)
{
    std::vector<JordanType> out;
    for (auto& p : partitions(two_n))
        if (p.is_symplectic()) out.push_back(p);
    return out;
}

namespace {

// Upper shift on k coordinates: e_i -> e_{i-1}.
QMatrix upper_shift(std::size_t k)
{
    QMatrix n(k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) n(i, i + 1) = GaussRat{1};
    return n;
}

} // namespace

QMatrix orbit_representative(const JordanType& t)
{
    if (t.size() % 2 != 0 || !t.is_symplectic())
        throw UsageError("orbit_representative: not a symplectic partition");
    // Summands in split form of half-dimension k: [[P, Q], [0, -P^T]].
    std::vector<QMatrix> summands;
    std::map<std::size_t, std::size_t> odd_mult;
    for (auto p : t.parts()) {
        if (p % 2 == 0) {
            const std::size_t k = p / 2;
            QMatrix q(k, k);
            q(k - 1, k - 1) = GaussRat{1};
            const QMatrix shift = upper_shift(k);
            summands.push_back(block2x2(shift, q, QMatrix(k, k), -shift.transpose()));
        } else {
            ++odd_mult[p];
        }
    }
    for (const auto& [m, mult] : odd_mult)
        for (std::size_t j = 0; j < mult / 2; ++j) {
            const QMatrix shift = upper_shift(m);
            summands.push_back(block2x2(shift, QMatrix(m, m), QMatrix(m, m), -shift.transpose()));
        }

    const std::size_t n = t.size() / 2;
    QMatrix a(2 * n, 2 * n);
    std::size_t offset = 0;
    for (const auto& s : summands) {
        const std::size_t k = s.rows() / 2;
        for (std::size_t r = 0; r < 2 * k; ++r)
            for (std::size_t c = 0; c < 2 * k; ++c) {
                const std::size_t gr = r < k ? offset + r : n + offset + (r - k);
                const std::size_t gc = c < k ? offset + c : n + offset + (c - k);
                a(gr, gc) = s(r, c);
            }
        offset += k;
    }
    return a;
}

QMatrix representative_42()
{
    return QMatrix{
        {0, 1, 1, 1, 0, 0},
        {0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 0, 0},
        {0, 0, 0, -1, 0, 0},
        {0, 0, 0, -1, 0, 0},
    };
}

} // namespace spslice::orbits
