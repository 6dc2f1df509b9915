#include "spslice/slicegeom/fibers.hpp"

#include "spslice/liealg/sp_algebra.hpp"
#include "spslice/linalg/elimination.hpp"
#include "spslice/linalg/symbolic.hpp"
#include "spslice/slicegeom/slice_point.hpp"

#include <sstream>

namespace spslice::geom {

const char* to_string(Flavor f)
{
    return f == Flavor::P1 ? "P1" : "P2";
}

const char* to_string(FiberCase c)
{
    return c == FiberCase::Generic ? "GENERIC" : "SPECIAL";
}

namespace {

const QMatrix& gram()
{
    static const QMatrix j = lie::split_gram(3);
    return j;
}

std::vector<GaussRat> upper(const Triple<GaussRat>& k)
{
    return {k[0], k[1], k[2], GaussRat{}, GaussRat{}, GaussRat{}};
}

std::vector<GaussRat> lower(const Triple<GaussRat>& l)
{
    return {GaussRat{}, GaussRat{}, GaussRat{}, l[0], l[1], l[2]};
}

std::size_t f1_dim(Flavor f)
{
    return f == Flavor::P1 ? 1 : 2;
}

Triple<GaussRat> cross(const Triple<GaussRat>& x, const Triple<GaussRat>& y)
{
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

Triple<GaussRat> conic_point(Rng& rng)
{
    while (true) {
        const GaussRat s = rng.gauss(), t = rng.gauss();
        Triple<GaussRat> a{GaussRat::i() * (s * s + t * t), s * s - t * t, GaussRat{2} * s * t};
        if (!(a[0].is_zero() && a[1].is_zero() && a[2].is_zero())) return a;
    }
}

Subspace f1_of(Flavor flavor, const FiberParams& p)
{
    std::vector<std::vector<GaussRat>> gens{upper(p.a)};
    if (flavor == Flavor::P2) gens.push_back(upper(p.b));
    Subspace f1 = Subspace::span(6, gens);
    if (f1.dim() != f1_dim(flavor))
        throw UsageError(std::string("fiber_sampler: parameters do not span a subspace of dimension ") +
                         std::to_string(f1_dim(flavor)) + " for " + to_string(flavor));
    return f1;
}

} // namespace

QMatrix fiber_x0()
{
    QMatrix x(6, 6);
    for (std::size_t k = 0; k < 3; ++k) x(k, 3 + k) = GaussRat{1};
    return x;
}

Subspace fiber_kernel()
{
    return Subspace::coordinate(6, {0, 1, 2});
}

bool springer_fiber_member(const QMatrix& z, const FlagPair& f)
{
    if (z.rows() != 6 || !z.is_square()) throw UsageError("springer_fiber_member: z must be 6x6");
    if (f.f1.ambient_dim() != 6 || f.f2.ambient_dim() != 6)
        throw UsageError("springer_fiber_member: flag must live in a 6-dimensional space");
    if (f.f1.dim() != f1_dim(f.flavor) || f.f2.dim() != 3)
        throw UsageError("springer_fiber_member: flag dimensions do not match the flavor");
    if (!f.f2.contains(f.f1)) throw UsageError("springer_fiber_member: F1 is not contained in F2");
    return f.f1.contains(image(z, f.f2)) && kernel(z).contains(f.f1) && f.f2 == perp_omega(f.f2, gram());
}

FiberSample fiber_sampler(Flavor flavor, FiberCase fcase, const FiberParams& params)
{
    const Subspace f1 = f1_of(flavor, params);
    const Subspace k = fiber_kernel();
    FiberSample out;
    if (fcase == FiberCase::Special) {
        out.flag = FlagPair{f1, k, flavor};
        return out;
    }
    const Subspace m = intersect(perp_omega(f1, gram()), preimage(fiber_x0(), f1));
    if (k.contains(m)) {
        // K ⊆ M always, so M = K: any F2 with F1 ⊆ F2 ⊆ M is K itself.
        out.no_completion = NoCompletion{m, m == k && m.contains(k),
                                         "F1^perp ∩ x0^{-1}F1 = K; the only candidate F2 is K"};
        return out;
    }
    const Subspace m_perp = perp_omega(m, gram());
    if (m.dim() != 4 || !m.contains(m_perp)) {
        out.no_completion = NoCompletion{m, false, "search space is not a 4-dimensional coisotropic subspace"};
        return out;
    }
    std::vector<GaussRat> v_out, k_in;
    for (std::size_t r = 0; r < m.dim() && v_out.empty(); ++r)
        if (!k.contains(m.basis_vector(r))) v_out = m.basis_vector(r);
    for (std::size_t r = 0; r < 3 && k_in.empty(); ++r)
        if (!m_perp.contains(k.basis_vector(r))) k_in = k.basis_vector(r);
    std::vector<GaussRat> line(6);
    for (std::size_t c = 0; c < 6; ++c) line[c] = v_out[c] + params.choice * k_in[c];
    const Subspace f2 = sum(m_perp, Subspace::span(6, {line}));
    out.flag = FlagPair{f1, f2, flavor};
    return out;
}

GaussRat quadric_defect(const Triple<GaussRat>& a, const Triple<GaussRat>& b)
{
    auto d = [](const Triple<GaussRat>& x, const Triple<GaussRat>& y) {
        return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    };
    return d(a, a) * d(b, b) - d(a, b) * d(a, b);
}

FiberParams random_generic_params(Flavor flavor, Rng& rng)
{
    FiberParams p;
    p.choice = rng.gauss();
    p.a = conic_point(rng);
    if (flavor == Flavor::P2) {
        while (true) {
            const Triple<GaussRat> r{rng.gauss(), rng.gauss(), rng.gauss()};
            p.b = cross(p.a, r);
            if (Subspace::span(6, {upper(p.a), upper(p.b)}).dim() == 2) break;
        }
    }
    return p;
}

FiberParams random_free_params(Flavor flavor, Rng& rng)
{
    FiberParams p;
    p.choice = rng.gauss();
    while (true) {
        p.a = {rng.gauss(), rng.gauss(), rng.gauss()};
        p.b = {rng.gauss(), rng.gauss(), rng.gauss()};
        if (Subspace::span(6, {upper(p.a), upper(p.b)}).dim() == 2) return p;
    }
}

ProofReport verify_fiber_sampler(std::size_t samples, std::uint64_t seed)
{
    ProofReport report{"fiber-sampler", {}};
    const QMatrix x0 = fiber_x0();
    const GaussRat i = GaussRat::i();
    Rng rng(seed);

    {
        bool ok = true;
        std::ostringstream w;
        const FiberSample p1 = fiber_sampler(Flavor::P1, FiberCase::Generic, {{1, i, 0}, {}, GaussRat{1}});
        ok = ok && p1.ok() && springer_fiber_member(x0, *p1.flag);
        w << "P1 a=(1,i,0): " << (p1.ok() ? "F2 = " + p1.flag->f2.str() : "NO_COMPLETION");
        const FiberSample off = fiber_sampler(Flavor::P1, FiberCase::Generic, {{1, 0, 0}, {}, GaussRat{1}});
        ok = ok && !off.ok() && off.no_completion->verified;
        w << "; P1 a=(1,0,0): " << (off.ok() ? "unexpected flag" : "NO_COMPLETION");
        const FiberSample p2 = fiber_sampler(Flavor::P2, FiberCase::Generic, {{1, i, 0}, {0, 0, 1}, GaussRat{1}});
        ok = ok && p2.ok() && springer_fiber_member(x0, *p2.flag);
        w << "; P2 a=(1,i,0), b=(0,0,1): " << (p2.ok() ? "F2 = " + p2.flag->f2.str() : "NO_COMPLETION");
        report.add("examples", "fixed sampler inputs give the expected flags and NO_COMPLETION outcome", ok, w.str());
    }

    for (const Flavor flavor : {Flavor::P1, Flavor::P2}) {
        std::size_t good = 0;
        std::string witness;
        for (std::size_t k = 0; k < samples; ++k) {
            const FiberSample g = fiber_sampler(flavor, FiberCase::Generic, random_generic_params(flavor, rng));
            const bool generic_ok = g.ok() && springer_fiber_member(x0, *g.flag) &&
                                    intersect(g.flag->f2, fiber_kernel()).dim() == 2;
            const FiberSample s = fiber_sampler(flavor, FiberCase::Special, random_free_params(flavor, rng));
            const bool special_ok = s.ok() && springer_fiber_member(x0, *s.flag);
            if (generic_ok && special_ok) {
                ++good;
            } else if (witness.empty()) {
                witness = "; failing sample " + std::to_string(k);
            }
        }
        const std::string id = flavor == Flavor::P1 ? "sampler-p1" : "sampler-p2";
        report.add(id,
                   std::string("every ") + to_string(flavor) +
                       " GENERIC (dim K ∩ F2 = 2) and SPECIAL (F2 = K) sample lies in the Springer fiber over x0",
                   good == samples, std::to_string(good) + "/" + std::to_string(samples) + " samples" + witness);
    }

    {
        std::size_t good = 0, tried = 0;
        std::string witness;
        for (std::size_t k = 0; k < samples; ++k) {
            for (const Flavor flavor : {Flavor::P1, Flavor::P2}) {
                const FiberParams p = random_free_params(flavor, rng);
                const bool violates = flavor == Flavor::P1 ? !dot(p.a, p.a).is_zero() : !quadric_defect(p.a, p.b).is_zero();
                if (!violates) continue;
                ++tried;
                const FiberSample s = fiber_sampler(flavor, FiberCase::Generic, p);
                if (!s.ok() && s.no_completion->verified) {
                    ++good;
                } else if (witness.empty()) {
                    witness = std::string("; ") + to_string(flavor) + " sample " + std::to_string(k) + " completed";
                }
            }
        }
        report.add("no-completion",
                   "off-conic P1 and off-quadric P2 parameters yield NO_COMPLETION with M = K verified",
                   good == tried && tried > 0, std::to_string(good) + "/" + std::to_string(tried) + " attempts" + witness);
    }

    {
        std::size_t rejected = 0, total = 0;
        std::string witness;
        auto expect_false = [&](const FlagPair& f, const std::string& what) {
            ++total;
            if (!springer_fiber_member(x0, f)) ++rejected;
            else if (witness.empty()) witness = "; accepted " + what;
        };
        const Subspace e1 = Subspace::coordinate(6, {0});
        expect_false({e1, Subspace::coordinate(6, {0, 3, 4}), Flavor::P1}, "F2 = span{e1,e4,e5}");
        for (std::size_t k = 0; k < samples; ++k) {
            // Non-isotropic F2: replace the free line of a valid flag.
            const FiberSample g = fiber_sampler(Flavor::P1, FiberCase::Generic, random_generic_params(Flavor::P1, rng));
            const Subspace bad_f2 =
                sum(g.flag->f1, Subspace::span(6, {upper({rng.gauss(), rng.gauss(), rng.gauss()}),
                                                   lower({rng.nonzero_gauss(), rng.gauss(), rng.gauss()})}));
            if (bad_f2.dim() == 3) expect_false({g.flag->f1, bad_f2, Flavor::P1}, "non-isotropic F2");
            // F1 ⊄ Ker: a Lagrangian {(k, 0) : k.l = 0} + span{(0, l)} with F1 = span{(0, l)}.
            const Triple<GaussRat> l{rng.nonzero_gauss(), rng.gauss(), rng.gauss()};
            const Triple<GaussRat> k1 = cross(l, {1, 0, 0}), k2 = cross(l, {0, 1, 0}), k3 = cross(l, {0, 0, 1});
            const Subspace f1 = Subspace::span(6, {lower(l)});
            const Subspace f2 = sum(f1, Subspace::span(6, {upper(k1), upper(k2), upper(k3)}));
            expect_false({f1, f2, Flavor::P1}, "F1 outside Ker x0");
        }
        report.add("violations", "non-isotropic F2 and F1 ⊄ Ker x0 are rejected by the membership predicate",
                   rejected == total, std::to_string(rejected) + "/" + std::to_string(total) + " rejected" + witness);
    }
    return report;
}

namespace {

const VarSet& t_vars()
{
    static const VarSet v{"t"};
    return v;
}

/// Lowest power of t over the entries of a nonzero vector.
std::uint32_t t_valuation(const std::vector<MultiPoly>& v)
{
    std::uint32_t best = UINT32_MAX;
    for (const auto& p : v)
        for (const auto& [e, c] : p.terms()) best = std::min(best, e.empty() ? 0u : e[0]);
    return best;
}

std::vector<MultiPoly> divide_t(const std::vector<MultiPoly>& v, std::uint32_t k)
{
    std::vector<MultiPoly> out;
    for (const auto& p : v) {
        MultiPoly q(t_vars());
        for (const auto& [e, c] : p.terms()) q.add_term({(e.empty() ? 0u : e[0]) - k}, c);
        out.push_back(q);
    }
    return out;
}

QMatrix evaluate_family(const std::vector<std::vector<MultiPoly>>& family, const GaussRat& t)
{
    const std::vector<GaussRat> pt{t};
    QMatrix m(family.size(), family.empty() ? 0 : family.front().size());
    for (std::size_t r = 0; r < family.size(); ++r)
        for (std::size_t c = 0; c < family[r].size(); ++c) m(r, c) = family[r][c].embed(t_vars()).evaluate(pt);
    return m;
}

bool is_zero_vector(const std::vector<MultiPoly>& v)
{
    return std::all_of(v.begin(), v.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

} // namespace

std::vector<std::vector<MultiPoly>> kernel_family()
{
    const PolyMatrix z = deformation_z_symbolic();
    const QMatrix z1 = deformation_z(GaussRat{1});
    const std::size_t r = rank(z1);
    // Pivot block: the first r x r minor (lexicographic) nonzero at t = 1.
    std::vector<std::size_t> rows, cols;
    for (const auto& rs : combinations(6, r)) {
        for (const auto& cs : combinations(6, r))
            if (!minor_det(z1, rs, cs).is_zero()) {
                rows = rs;
                cols = cs;
                break;
            }
        if (!rows.empty()) break;
    }
    const MultiPoly det = minor_det(z, rows, cols);
    std::vector<std::vector<MultiPoly>> family;
    for (std::size_t f = 0; f < 6; ++f) {
        if (std::find(cols.begin(), cols.end(), f) != cols.end()) continue;
        std::vector<MultiPoly> v(6, MultiPoly(t_vars()));
        v[f] = det;
        // Cramer: solve Z[R,C] x = -Z[R,f] det.
        for (std::size_t k = 0; k < cols.size(); ++k) {
            PolyMatrix sub(r, r, MultiPoly(t_vars()));
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < r; ++b) sub(a, b) = b == k ? z(rows[a], f) : z(rows[a], cols[b]);
            v[cols[k]] = -cofactor_determinant(sub);
        }
        family.push_back(std::move(v));
    }
    return family;
}

Subspace specialization_limit(std::vector<std::vector<MultiPoly>> family)
{
    for (int iter = 0; iter < 256; ++iter) {
        for (auto& v : family) {
            if (is_zero_vector(v)) throw DomainError("specialization_limit: family contains a zero vector");
            v = divide_t(v, t_valuation(v));
        }
        const QMatrix at0 = evaluate_family(family, GaussRat{0});
        if (rank(at0) == family.size()) return Subspace::span(at0);
        // A relation sum c_k v_k(0) = 0: replace one v_j by sum c_k v_k, which vanishes at t = 0.
        const QMatrix rel = null_space_rows(at0.transpose());
        std::vector<GaussRat> c = rel.row(0);
        std::size_t j = 0;
        while (c[j].is_zero()) ++j;
        std::vector<MultiPoly> combo(family[j].size(), MultiPoly(t_vars()));
        for (std::size_t k = 0; k < family.size(); ++k)
            for (std::size_t e = 0; e < combo.size(); ++e) combo[e] += family[k][e] * c[k];
        family[j] = std::move(combo);
    }
    throw DomainError("specialization_limit: no convergence");
}

ProofReport kernel_limit_check(std::uint64_t seed)
{
    ProofReport report{"kernel-limit", {}};
    const GaussRat i = GaussRat::i();
    const PolyMatrix z = deformation_z_symbolic();
    const lie::SpAlgebra sp6 = lie::SpAlgebra::split(3);

    const PolyMatrix z3 = z * z * z;
    const bool nil = z3.is_zero() && in_sp(z, sp6) && deformation_z(GaussRat{0}) == fiber_x0();
    report.add("nilpotent", "z_t^3 is the zero matrix over Q(i)[t], z_t lies in sp_6 and z_0 = x0", nil,
               z3.is_zero() ? "z_t^3 = 0" : "z_t^3 != 0");

    Rng rng(seed);
    std::vector<GaussRat> ts;
    while (ts.size() < 10) ts.push_back(GaussRat(rng.nonzero_rational()));

    {
        std::size_t good = 0;
        std::ostringstream w;
        for (const auto& t : ts) good += point_in_T(deformation_z(t)) ? 1 : 0;
        w << good << "/" << ts.size() << " sampled t";
        report.add("in-T", "z_t lies in the slice variety at sampled rational t", good == ts.size(), w.str());
    }

    {
        const Subspace k1 = kernel(deformation_z(GaussRat{1}));
        const Subspace expect = Subspace::span(6, {{1, 0, 0, 0, i, 1}, {0, 1, -i, 0, 0, 0}});
        report.add("kernel-t1", "Ker z_1 = span{e1 + i e5 + e6, e2 - i e3}", k1 == expect, "Ker z_1 = " + k1.str());
    }

    const auto family = kernel_family();
    {
        bool ok = family.size() == 2;
        std::ostringstream w;
        for (const auto& v : family) {
            PolyMatrix col(6, 1, MultiPoly(t_vars()));
            for (std::size_t r = 0; r < 6; ++r) col(r, 0) = v[r];
            ok = ok && (z * col).is_zero();
            w << "(";
            for (std::size_t r = 0; r < 6; ++r) w << (r ? ", " : "") << v[r].str();
            w << ") ";
        }
        report.add("family", "the Cramer spanning family v_k(t) satisfies z_t v_k(t) = 0 identically", ok, w.str());
    }

    {
        std::vector<GaussRat> check{GaussRat(mpq_class(1, 2))};
        check.insert(check.end(), ts.begin(), ts.end());
        std::size_t good = 0;
        std::string witness;
        for (const auto& t : check) {
            if (Subspace::span(evaluate_family(family, t)) == kernel(deformation_z(t))) {
                ++good;
            } else if (witness.empty()) {
                witness = "; mismatch at t = " + t.str();
            }
        }
        report.add("specialization", "the family specialises to Ker z_t at t = 1/2 and at sampled t",
                   good == check.size(), std::to_string(good) + "/" + std::to_string(check.size()) + witness);
    }

    {
        const Subspace limit = specialization_limit(family);
        const Subspace expect = Subspace::span(6, {{1, 0, 0, 0, 0, 0}, {0, 1, -i, 0, 0, 0}});
        const bool ok = limit == expect && limit.dim() == 2 && fiber_kernel().contains(limit);
        report.add("limit", "the specialisation at t = 0 is span{e1, e2 - i e3}, of dimension 2, inside K", ok,
                   "limit = " + limit.str());
    }
    return report;
}

} // namespace spslice::geom
