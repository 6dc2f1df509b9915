#include "spslice/slicegeom/singular.hpp"

#include "spslice/linalg/elimination.hpp"
#include "spslice/orbits/jordan.hpp"
#include "spslice/slicegeom/wreath.hpp"

#include <algorithm>
#include <sstream>

namespace spslice::geom {

const char* to_string(SingularComponent c)
{
    switch (c) {
    case SingularComponent::Origin: return "ORIGIN";
    case SingularComponent::Delta: return "DELTA";
    case SingularComponent::Xi: return "XI";
    case SingularComponent::Smooth: return "SMOOTH";
    }
    return "?";
}

namespace {

bool is_zero(const Triple<GaussRat>& v)
{
    return std::all_of(v.begin(), v.end(), [](const GaussRat& x) { return x.is_zero(); });
}

} // namespace

SingularComponent singular_component(const SlicePoint& p)
{
    if (!on_variety(p.a, p.u)) throw DomainError("singular_component: point is not on the slice variety");
    const bool a0 = is_zero(p.a), u0 = is_zero(p.u);
    if (a0 && u0) return SingularComponent::Origin;
    if (!dot(p.a, p.a).is_zero()) return SingularComponent::Smooth;
    if (u0) return SingularComponent::Xi;
    const QMatrix z1 = z1_from_a(p.a);
    if (outer(p.u) == z1 * z1 * GaussRat{-4}) return SingularComponent::Delta;
    return SingularComponent::Smooth;
}

Triple<GaussRat> cone_point(const GaussRat& s, const GaussRat& t)
{
    return {GaussRat::i() * (s * s + t * t), s * s - t * t, GaussRat{2} * s * t};
}

SlicePoint sample_smooth(Rng& rng)
{
    while (true) {
        WreathPoint q{rng.gauss(), rng.gauss(), rng.gauss(), rng.gauss()};
        const auto [a, u] = wreath_mu(q);
        SlicePoint p = SlicePoint::make(a, u);
        if (singular_component(p) == SingularComponent::Smooth) return p;
    }
}

SlicePoint sample_delta(Rng& rng)
{
    while (true) {
        const Triple<GaussRat> a = cone_point(rng.gauss(), rng.gauss());
        if (is_zero(a)) continue;
        const GaussRat i = GaussRat::i();
        const Triple<GaussRat> u{i * a[0], i * a[1], i * a[2]};
        return SlicePoint::make(a, rng.coin() ? u : Triple<GaussRat>{-u[0], -u[1], -u[2]});
    }
}

SlicePoint sample_xi(Rng& rng)
{
    while (true) {
        const Triple<GaussRat> a = cone_point(rng.gauss(), rng.gauss());
        if (is_zero(a)) continue;
        return SlicePoint::make(a, {});
    }
}

QMatrix jacobian(const Triple<GaussRat>& a, const Triple<GaussRat>& u)
{
    // d g1 = (-2a, 2u), d g2 = (u, a); evaluated from the polynomials.
    const MultiPoly g1 = g1_poly(), g2 = g2_poly();
    const std::vector<GaussRat> pt{a[0], a[1], a[2], u[0], u[1], u[2]};
    QMatrix jac(2, 6);
    for (std::size_t k = 0; k < 6; ++k) {
        jac(0, k) = g1.derivative(k).evaluate(pt);
        jac(1, k) = g2.derivative(k).evaluate(pt);
    }
    return jac;
}

std::size_t jacobian_rank(const Triple<GaussRat>& a, const Triple<GaussRat>& u)
{
    return rank(jacobian(a, u));
}

ProofReport verify_singular_loci_symbolic(std::size_t samples, std::uint64_t seed)
{
    ProofReport report{"singular-loci", {}};
    const VarSet st{"s", "t"};
    const MultiPoly s = MultiPoly::variable(st, "s"), t = MultiPoly::variable(st, "t");
    const GaussRat i = GaussRat::i();
    const Triple<MultiPoly> a{(s * s + t * t) * i, s * s - t * t, s * t * GaussRat{2}};

    const MultiPoly cone = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
    report.add("cone", "a(s,t) = (i(s^2+t^2), s^2-t^2, 2st) satisfies a1^2+a2^2+a3^2 = 0", cone.is_zero(),
               "sum a(s,t)^2 = " + cone.str());

    const MultiPoly zero(st);
    const PolyMatrix xi = slice_matrix_from_au(a, Triple<MultiPoly>{zero, zero, zero});
    const PolyMatrix xi2 = xi * xi;
    const PolyMatrix xi4 = xi2 * xi2;
    report.add("xi-family", "XI family (u = 0): A^4 is the zero polynomial matrix and A^2 is not",
               xi4.is_zero() && !xi2.is_zero(), xi4.is_zero() ? "A^4 = 0" : "A^4 != 0");

    const PolyMatrix delta = slice_matrix_from_au(a, Triple<MultiPoly>{a[0] * i, a[1] * i, a[2] * i});
    const PolyMatrix delta3 = delta * delta * delta;
    report.add("delta-family", "DELTA family (u = i a): A^3 is the zero polynomial matrix", delta3.is_zero(),
               delta3.is_zero() ? "A^3 = 0" : "A^3 != 0");

    Rng rng(seed);
    auto run = [&](const std::string& id, const std::string& statement, auto sampler, bool want_full) {
        std::size_t good = 0;
        std::string witness;
        for (std::size_t k = 0; k < samples; ++k) {
            const SlicePoint p = sampler(rng);
            const std::size_t r = jacobian_rank(p.a, p.u);
            if ((r == 2) == want_full) {
                ++good;
            } else if (witness.empty()) {
                std::ostringstream os;
                os << "; rank " << r << " at " << p.str() << ", Jacobian " << jacobian(p.a, p.u);
                witness = os.str();
            }
        }
        report.add(id, statement, good == samples,
                   std::to_string(good) + "/" + std::to_string(samples) + " points as expected" + witness);
    };
    run("jacobian-smooth", "Jacobian of (g1, g2) has rank 2 at SMOOTH points", sample_smooth, true);
    run("jacobian-delta", "Jacobian of (g1, g2) has rank < 2 at DELTA points", sample_delta, false);
    run("jacobian-xi", "Jacobian of (g1, g2) has rank < 2 at XI points", sample_xi, false);
    return report;
}

ProofReport verify_singular_classification(std::size_t samples, std::uint64_t seed)
{
    ProofReport report{"singular-classification", {}};
    Rng rng(seed);
    const orbits::JordanType t42({4, 2}), t33({3, 3}), t411({4, 1, 1}), t222({2, 2, 2});
    std::size_t good = 0;
    std::map<std::string, std::size_t> counts;
    std::string witness;
    for (std::size_t k = 0; k < samples; ++k) {
        SlicePoint p;
        switch (k % 4) {
        case 0: p = sample_smooth(rng); break;
        case 1: p = sample_delta(rng); break;
        case 2: p = sample_xi(rng); break;
        default: p = SlicePoint::make({}, {}); break;
        }
        const SingularComponent c = singular_component(p);
        const orbits::JordanType jt = orbits::jordan_type(p.matrix());
        const orbits::JordanType& expect =
            c == SingularComponent::Smooth ? t42 : c == SingularComponent::Delta ? t33 : c == SingularComponent::Xi ? t411 : t222;
        ++counts[to_string(c)];
        if (jt == expect) {
            ++good;
        } else if (witness.empty()) {
            witness = std::string("; ") + to_string(c) + " point " + p.str() + " has type " + jt.str();
        }
    }
    std::ostringstream os;
    os << good << "/" << samples << " agree;";
    for (const auto& [name, n] : counts) os << " " << name << ":" << n;
    os << witness;
    report.add("classification", "SMOOTH -> [4,2], DELTA -> [3,3], XI -> [4,1,1], ORIGIN -> [2,2,2]",
               good == samples && counts.size() == 4, os.str());
    return report;
}

} // namespace spslice::geom
