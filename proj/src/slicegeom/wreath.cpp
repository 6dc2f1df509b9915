#include "spslice/slicegeom/wreath.hpp"

#include "spslice/exactfield/substitute.hpp"
#include "spslice/liealg/weyl.hpp"
#include "spslice/random.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace spslice::geom {

VarSet wreath_vars()
{
    static const VarSet vars{"x1", "x2", "y1", "y2"};
    return vars;
}

std::array<MultiPoly, 6> wreath_mu_symbolic()
{
    const VarSet v = wreath_vars();
    const MultiPoly x1 = MultiPoly::variable(v, "x1"), x2 = MultiPoly::variable(v, "x2");
    const MultiPoly y1 = MultiPoly::variable(v, "y1"), y2 = MultiPoly::variable(v, "y2");
    const GaussRat i = GaussRat::i(), half(mpq_class(1, 2));
    return {
        (x1 * x1 + y1 * y1 + x2 * x2 + y2 * y2) * (-i * half),
        (x1 * x1 + y1 * y1 - x2 * x2 - y2 * y2) * half,
        x1 * x2 + y1 * y2,
        x1 * y1 + x2 * y2,
        (x1 * y1 - x2 * y2) * i,
        (x1 * y2 + x2 * y1) * i,
    };
}

std::pair<Triple<GaussRat>, Triple<GaussRat>> wreath_mu(const WreathPoint& q)
{
    const auto& [x1, x2, y1, y2] = q;
    const GaussRat i = GaussRat::i(), half(mpq_class(1, 2));
    Triple<GaussRat> a{(x1 * x1 + y1 * y1 + x2 * x2 + y2 * y2) * (-i * half),
                       (x1 * x1 + y1 * y1 - x2 * x2 - y2 * y2) * half, x1 * x2 + y1 * y2};
    Triple<GaussRat> u{x1 * y1 + x2 * y2, (x1 * y1 - x2 * y2) * i, (x1 * y2 + x2 * y1) * i};
    return {a, u};
}

QMatrix wreath_sigma()
{
    return QMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
}

QMatrix wreath_tau()
{
    return QMatrix{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
}

QMatrix wreath_form()
{
    return QMatrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
}

WreathPoint apply(const QMatrix& g, const WreathPoint& q)
{
    WreathPoint r;
    for (std::size_t i = 0; i < 4; ++i) {
        GaussRat s;
        for (std::size_t j = 0; j < 4; ++j)
            if (!g(i, j).is_zero()) s += g(i, j) * q[j];
        r[i] = s;
    }
    return r;
}

namespace {

// mu composed with the linear map g, as polynomials in (x1, x2, y1, y2).
std::array<MultiPoly, 6> mu_after(const QMatrix& g)
{
    const VarSet v = wreath_vars();
    Assignment sub;
    for (std::size_t r = 0; r < 4; ++r) {
        MultiPoly image(v);
        for (std::size_t c = 0; c < 4; ++c) image += MultiPoly::variable(v, c) * g(r, c);
        sub.emplace(v.name(r), image);
    }
    auto mu = wreath_mu_symbolic();
    for (auto& p : mu) p = poly_substitute(p, sub);
    return mu;
}

bool same_point(const std::pair<Triple<GaussRat>, Triple<GaussRat>>& p,
                const std::pair<Triple<GaussRat>, Triple<GaussRat>>& q)
{
    return p.first == q.first && p.second == q.second;
}

} // namespace

ProofReport verify_wreath_iso(std::size_t samples, std::uint64_t seed)
{
    ProofReport report{"wreath-isomorphism", {}};
    const auto mu = wreath_mu_symbolic();

    {
        Assignment sub;
        const VarSet av = au_vars();
        for (std::size_t k = 0; k < 6; ++k) sub.emplace(av.name(k), mu[k]);
        const MultiPoly c1 = poly_substitute(g1_poly(), sub);
        const MultiPoly c2 = poly_substitute(g2_poly(), sub);
        report.add("invariants", "g1 o mu and g2 o mu expand to the zero polynomial", c1.is_zero() && c2.is_zero(),
                   "g1 o mu = " + c1.str() + "; g2 o mu = " + c2.str());
    }

    {
        const auto ms = mu_after(wreath_sigma());
        const auto mt = mu_after(wreath_tau());
        bool ok = true;
        std::string witness;
        for (std::size_t k = 0; k < 6; ++k) {
            const MultiPoly ds = ms[k] - mu[k];
            const MultiPoly dt = k < 3 ? mt[k] - mu[k] : mt[k] + mu[k];
            if (!ds.is_zero() || !dt.is_zero()) {
                ok = false;
                witness += "component " + std::to_string(k) + ": sigma residual " + ds.str() + ", tau residual " +
                           dt.str() + "; ";
            }
        }
        if (ok) witness = "mu o sigma - mu = 0; mu o tau - (a, -u) = 0 componentwise";
        report.add("equivariance", "mu o sigma = mu and mu o tau = (a, -u) as polynomial identities", ok, witness);
    }

    {
        const auto group = lie::group_closure({wreath_sigma(), wreath_tau()});
        const QMatrix form = wreath_form();
        bool preserves = true;
        std::map<std::size_t, std::size_t> profile;
        for (const auto& g : group) {
            if (!(g.transpose() * form * g == form)) preserves = false;
            ++profile[lie::element_order(g)];
        }
        const std::map<std::size_t, std::size_t> dihedral8{{1, 1}, {2, 5}, {4, 2}};
        std::ostringstream os;
        os << "order " << group.size() << "; element orders";
        for (const auto& [o, n] : profile) os << " " << o << ":" << n;
        os << "; form preserved: " << (preserves ? "yes" : "no");
        report.add("group", "<sigma, tau> has order 8, preserves dx1^dx2 + dy1^dy2, and is dihedral of order 8",
                   group.size() == 8 && preserves && profile == dihedral8, os.str());
    }

    {
        const auto group = lie::group_closure({wreath_sigma(), wreath_tau()});
        Rng rng(seed);
        std::size_t good = 0;
        std::string witness;
        for (std::size_t k = 0; k < samples; ++k) {
            WreathPoint q{rng.gauss(), rng.gauss(), rng.gauss(), rng.gauss()};
            std::vector<WreathPoint> orbit;
            std::vector<std::pair<Triple<GaussRat>, Triple<GaussRat>>> images;
            for (const auto& g : group) {
                const WreathPoint p = geom::apply(g, q);
                if (std::find(orbit.begin(), orbit.end(), p) == orbit.end()) orbit.push_back(p);
                const auto m = wreath_mu(p);
                if (std::none_of(images.begin(), images.end(), [&](const auto& x) { return same_point(x, m); }))
                    images.push_back(m);
            }
            const auto base = wreath_mu(q);
            Triple<GaussRat> neg_u{-base.second[0], -base.second[1], -base.second[2]};
            const bool u_zero = std::all_of(base.second.begin(), base.second.end(), [](auto& x) { return x.is_zero(); });
            const std::size_t expect_images = u_zero ? 1 : 2;
            bool ok = orbit.size() == 8 && images.size() == expect_images;
            for (const auto& m : images)
                ok = ok && m.first == base.first && (m.second == base.second || m.second == neg_u);
            if (ok) {
                ++good;
            } else if (witness.empty()) {
                witness = "failing sample " + std::to_string(k) + ": orbit size " + std::to_string(orbit.size()) +
                          ", image size " + std::to_string(images.size());
            }
        }
        std::ostringstream os;
        os << good << "/" << samples << " seeded orbits have 8 points and images {(a, u), (a, -u)}";
        if (!witness.empty()) os << "; " << witness;
        report.add("orbits", "generic H-orbits have size 8 and mu takes exactly the two values (a, +-u)",
                   good == samples, os.str());
    }
    return report;
}

} // namespace spslice::geom
