#include "spslice/slicegeom/deformation.hpp"

#include "spslice/liealg/weyl.hpp"
#include "spslice/linalg/charpoly.hpp"
#include "spslice/linalg/exp.hpp"

#include <sstream>

namespace spslice::geom {

QMatrix center_element(const lie::ParabolicData& p, const GaussRat& s, const GaussRat& t)
{
    if (p.center_block_sizes.size() != p.levi_center_basis.size())
        throw UsageError("center_element: Levi centre has no normalised basis");
    QMatrix z = p.levi_center_basis.front() * GaussRat{0};
    for (std::size_t k = 0; k < p.levi_center_basis.size(); ++k) {
        const std::size_t d = p.center_block_sizes[k];
        if (d != 1 && d != 2) throw UsageError("center_element: unsupported block size");
        z += p.levi_center_basis[k] * (d == 1 ? s : t);
    }
    return z;
}

std::vector<GaussRat> expected_charpoly(const GaussRat& s, const GaussRat& t)
{
    const GaussRat ss = s * s, tt = t * t;
    return {1, 0, -(ss + GaussRat{2} * tt), 0, GaussRat{2} * ss * tt + tt * tt, 0, -(ss * tt * tt)};
}

namespace {

QMatrix random_combination(const std::vector<QMatrix>& basis, Rng& rng)
{
    QMatrix m = basis.front() * GaussRat{0};
    for (const auto& b : basis) m += b * rng.gauss();
    return m;
}

std::string mat_text(const QMatrix& m)
{
    std::ostringstream os;
    os << m;
    return os.str();
}

std::string poly_text(const std::vector<GaussRat>& c)
{
    return charpoly_string(c);
}

} // namespace

ProofReport deformation_family_check(const std::vector<std::size_t>& flag_type, std::size_t samples,
                                     std::uint64_t seed)
{
    const lie::SpAlgebra g = lie::SpAlgebra::antidiagonal(3);
    const lie::ParabolicData p = lie::parabolic(flag_type, g);
    const QMatrix j = g.gram();
    const Subspace u_span = lie::matrix_span(p.nilradical_basis);
    std::ostringstream name;
    name << "deformation[";
    for (std::size_t k = 0; k < flag_type.size(); ++k) name << (k ? "," : "") << flag_type[k];
    name << "]";
    ProofReport report{name.str(), {}};

    Rng rng(seed);
    std::size_t conj_ok = 0, symp_ok = 0, char_ok = 0, inv_ok = 0;
    std::string conj_w, symp_w, char_w, inv_w;
    for (std::size_t k = 0; k < samples; ++k) {
        GaussRat s, t;
        do {
            s = rng.nonzero_gauss();
            t = rng.nonzero_gauss();
        } while (s == t || s == -t);
        const QMatrix z = center_element(p, s, t);

        const QMatrix n = random_combination(p.nilradical_basis, rng);
        const QMatrix moved = exp_nilpotent(n) * z * exp_nilpotent(-n) - z;
        if (u_span.contains(flatten(moved))) ++conj_ok;
        else if (conj_w.empty()) conj_w = "; exp(n) z exp(-n) - z = " + mat_text(moved);

        const QMatrix u = random_combination(p.nilradical_basis, rng);
        const QMatrix u1 = random_combination(p.nilradical_basis, rng);
        const QMatrix u2 = random_combination(p.nilradical_basis, rng);
        const QMatrix lp = random_combination(p.levi_upper_nilpotent, rng);
        const QMatrix lm = random_combination(p.levi_lower_nilpotent, rng);
        const QMatrix gm = exp_nilpotent(u1) * exp_nilpotent(lp) * exp_nilpotent(lm) * exp_nilpotent(u2);
        const QMatrix gi = exp_nilpotent(-u2) * exp_nilpotent(-lm) * exp_nilpotent(-lp) * exp_nilpotent(-u1);
        if (gm.transpose() * j * gm == j && gm * gi == QMatrix::identity(6)) ++symp_ok;
        else if (symp_w.empty()) symp_w = "; g = " + mat_text(gm);

        const QMatrix v = gm * (z + u) * gi;
        const auto cp = charpoly(v);
        const auto expect = expected_charpoly(s, t);
        if (cp == expect) ++char_ok;
        else if (char_w.empty()) char_w = "; got " + poly_text(cp) + ", expected " + poly_text(expect);

        const auto inv = lie::adjoint_invariants(v);
        const auto [ss, tt] = lie::eta({s, t, t});
        const std::array<GaussRat, 3> from_eta{-(ss + GaussRat{2} * tt), GaussRat{2} * ss * tt + tt * tt, -(ss * tt * tt)};
        if (inv == from_eta) ++inv_ok;
        else if (inv_w.empty()) inv_w = "; mismatch at s = " + s.str() + ", t = " + t.str();
    }
    auto frac = [&](std::size_t good) { return std::to_string(good) + "/" + std::to_string(samples) + " draws"; };
    report.add("conjugation", "exp(n) z exp(-n) ∈ z + 𝔲 for n ∈ 𝔲", conj_ok == samples, frac(conj_ok) + conj_w);
    report.add("symplectic", "g = exp(U1) exp(L+) exp(L-) exp(U2) satisfies g^T J g = J", symp_ok == samples,
               frac(symp_ok) + symp_w);
    report.add("charpoly", "charpoly(g (z + u) g^{-1}) = (λ^2 - s^2)(λ^2 - t^2)^2", char_ok == samples,
               frac(char_ok) + char_w);
    report.add("invariants", "adjoint invariants (c2, c4, c6) are the eta-image (s^2, t^2) of z", inv_ok == samples,
               frac(inv_ok) + inv_w);

    {
        // Fixed examples in split coordinates.
        const lie::SpAlgebra split = lie::SpAlgebra::split(3);
        QMatrix z(6, 6);
        const GaussRat d[6] = {1, 2, 2, -1, -2, -2};
        for (std::size_t k = 0; k < 6; ++k) z(k, k) = d[k];
        const auto expect = expected_charpoly(GaussRat{1}, GaussRat{2});
        bool ok = in_sp(z, split) && charpoly(z) == expect;
        const QMatrix za = lie::split_to_antidiagonal_matrix(z);
        const QMatrix u = random_combination(p.nilradical_basis, rng);
        const QMatrix n = random_combination(p.nilradical_basis, rng);
        const QMatrix l = random_combination(p.levi_upper_nilpotent, rng);
        const QMatrix gm = exp_nilpotent(n) * exp_nilpotent(l);
        const QMatrix gi = exp_nilpotent(-l) * exp_nilpotent(-n);
        ok = ok && charpoly(gm * (za + u) * gi) == expect;
        std::vector<GaussRat> lambda6(7, GaussRat{0});
        lambda6[0] = GaussRat{1};
        ok = ok && charpoly(u) == lambda6;
        report.add("examples",
                   "z = diag(1,2,2,-1,-2,-2) has charpoly (λ^2-1)(λ^2-4)^2, unchanged by z -> g(z+u)g^{-1}; "
                   "u ∈ 𝔲 alone has charpoly λ^6",
                   ok, poly_text(expect));
    }
    return report;
}

} // namespace spslice::geom
