#include "spslice/verify/report.hpp"

#include "spslice/errors.hpp"
#include "spslice/liealg/parabolic.hpp"
#include "spslice/liealg/slice.hpp"
#include "spslice/liealg/weyl.hpp"
#include "spslice/linalg/exp.hpp"
#include "spslice/orbits/jordan.hpp"
#include "spslice/random.hpp"
#include "spslice/slicegeom/deformation.hpp"
#include "spslice/slicegeom/equations.hpp"
#include "spslice/slicegeom/fibers.hpp"
#include "spslice/slicegeom/singular.hpp"
#include "spslice/slicegeom/wreath.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace spslice::verify {

namespace {

using geom::ProofReport;

/// Folds the selected items of a proof report (all items if `ids` is empty).
ClaimOutcome from_report(const ProofReport& report, const std::vector<std::string>& ids = {})
{
    ClaimOutcome out{true, ""};
    std::ostringstream os;
    bool first = true;
    for (const auto& item : report.items) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), item.id) == ids.end()) continue;
        out.passed = out.passed && item.passed;
        os << (first ? "" : "\n") << item.id << " [" << (item.passed ? "PASS" : "FAIL") << "]: " << item.witness;
        first = false;
    }
    out.witness = os.str();
    return out;
}

std::string jt_text(const QMatrix& m)
{
    return orbits::jordan_type(m).str();
}

ClaimOutcome orbit_types(std::uint64_t, std::size_t)
{
    const lie::SpAlgebra sp6 = lie::SpAlgebra::split(3);
    const QMatrix x0 = lie::standard_triple().x;
    const QMatrix r42 = orbits::representative_42();
    const std::string t0 = jt_text(x0), t42 = jt_text(r42);
    const bool ok = t0 == "[2,2,2]" && t42 == "[4,2]" && in_sp(x0, sp6) && in_sp(r42, sp6);
    return {ok, "jordan_type(x0) = " + t0 + ", jordan_type(rep) = " + t42};
}

QMatrix random_symmetric(Rng& rng)
{
    QMatrix s(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = r; c < 3; ++c) s(r, c) = s(c, r) = GaussRat{rng.integer(-3, 3)};
    return s;
}

/// A random element of the symplectic group: a product of unipotents.
QMatrix random_symplectic(Rng& rng)
{
    QMatrix n(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = r + 1; c < 3; ++c) n(r, c) = GaussRat{rng.integer(-3, 3)};
    const QMatrix z(3, 3);
    const QMatrix levi = block2x2(n, z, z, -n.transpose());
    const QMatrix up = block2x2(z, random_symmetric(rng), z, z);
    const QMatrix down = block2x2(z, z, random_symmetric(rng), z);
    return exp_nilpotent(levi) * exp_nilpotent(up) * exp_nilpotent(down);
}

ClaimOutcome orbit_closure(std::uint64_t seed, std::size_t samples)
{
    const std::size_t count = 5 * samples;
    Rng rng(seed);
    const auto types = orbits::symplectic_partitions(6);
    const orbits::JordanType t42({4, 2}), t222({2, 2, 2});
    const QMatrix j = lie::split_gram(3);
    std::size_t agree = 0;
    std::map<std::string, std::size_t> seen;
    std::string witness;
    for (std::size_t k = 0; k < count; ++k) {
        const orbits::JordanType& t = types[static_cast<std::size_t>(rng.integer(0, static_cast<long>(types.size()) - 1))];
        const QMatrix g = random_symplectic(rng);
        const QMatrix ginv = -j * g.transpose() * j; // g^{-1} = J^{-1} g^T J with J^{-1} = -J
        const QMatrix x = g * orbits::orbit_representative(t) * ginv;
        const QMatrix x2 = x * x;
        const bool ok = (x2 * x2).is_zero() == orbits::in_closure(x, t42) && x2.is_zero() == orbits::in_closure(x, t222) &&
                        orbits::jordan_type(x) == t;
        ++seen[t.str()];
        if (ok) ++agree;
        else if (witness.empty()) witness = "; disagreement for type " + t.str();
    }
    std::ostringstream os;
    os << agree << "/" << count << " samples agree; types:";
    for (const auto& [name, n] : seen) os << " " << name << "x" << n;
    return {agree == count, os.str() + witness};
}

ClaimOutcome orbit_dimensions(std::uint64_t, std::size_t)
{
    const lie::SpAlgebra sp6 = lie::SpAlgebra::split(3);
    const std::size_t d0 = lie::orbit_dimension(lie::standard_triple().x, sp6);
    const std::size_t d42 = lie::orbit_dimension(orbits::representative_42(), sp6);
    std::ostringstream os;
    os << "dim O[2,2,2] = " << d0 << ", dim O[4,2] = " << d42 << ", difference " << (d42 - d0);
    return {d0 == 12 && d42 == 16, os.str()};
}

ClaimOutcome slodowy(std::uint64_t, std::size_t)
{
    const lie::SpAlgebra sp6 = lie::SpAlgebra::split(3);
    const lie::SL2Triple t = lie::standard_triple();
    const lie::SlodowySlice s = lie::slodowy_slice(t, sp6);
    const bool ok = lie::verify_sl2(t) && s.dim() == 9 && s.param_names == lie::standard_slice_params() &&
                    in_sp(s.symbolic_element(), sp6);
    std::ostringstream os;
    os << "dim g^y0 = " << s.dim() << ", parameters";
    for (const auto& n : s.param_names.names()) os << " " << n;
    return {ok, os.str()};
}

ClaimOutcome parabolics(std::uint64_t, std::size_t)
{
    const lie::SpAlgebra g = lie::SpAlgebra::antidiagonal(3);
    bool ok = true;
    std::ostringstream os;
    for (const auto* flag : {&lie::kFlagP1, &lie::kFlagP2}) {
        const lie::ParabolicData p = lie::parabolic(*flag, g);
        const std::size_t l = p.levi_dim, u = p.nilradical_basis.size(), c = p.levi_center_basis.size();
        ok = ok && l == 5 && u == 8 && c == 2 && l + 2 * u == g.dimension();
        os << "[";
        for (std::size_t k = 0; k < flag->size(); ++k) os << (k ? "," : "") << (*flag)[k];
        os << "]: dim l = " << l << ", dim u = " << u << ", dim c = " << c << "; ";
    }
    os << "dim sp6 = " << g.dimension();
    return {ok, os.str()};
}

ClaimOutcome weyl_eta(std::uint64_t seed, std::size_t samples)
{
    const lie::CartanData w = lie::weyl_data();
    const std::size_t wl = lie::group_closure(w.wl_generators).size();
    const std::size_t wp = lie::group_closure(w.wp_generators).size();
    bool ok = wl == 2 && wp == 4 && w.fixed_space.dim() == 2;
    Rng rng(seed);
    std::size_t good = 0;
    for (std::size_t k = 0; k < samples; ++k) {
        const GaussRat s = rng.gauss(), t = rng.gauss();
        const auto [ss, tt] = lie::eta({s, t, t});
        const auto inv = lie::adjoint_invariants(lie::CartanData::cartan_element(s, t, t));
        const std::array<GaussRat, 3> expect{-(ss + GaussRat{2} * tt), GaussRat{2} * ss * tt + tt * tt, -(ss * tt * tt)};
        if (ss == s * s && tt == t * t && inv == expect) ++good;
    }
    bool rejects = false;
    try {
        lie::eta({1, 2, 3});
    } catch (const UsageError&) {
        rejects = true;
    }
    ok = ok && good == samples && rejects;
    std::ostringstream os;
    os << "|W(L)| = " << wl << ", |W^P| = " << wp << ", dim h^{W(L)} = " << w.fixed_space.dim() << "; " << good << "/"
       << samples << " points with c(z) = eta-polynomials; off-plane input rejected: " << (rejects ? "yes" : "no");
    return {ok, os.str()};
}

std::vector<ClaimSpec> build_registry()
{
    std::vector<ClaimSpec> r;
    auto add = [&](std::string id, int section, std::string topic, std::string statement,
                   std::function<ClaimOutcome(std::uint64_t, std::size_t)> run) {
        r.push_back({std::move(id), section, std::move(topic), std::move(statement), std::move(run)});
    };
    add("S1.trace-identities", 1, "equations of the slice",
        "tr(A) = tr(A^3) = 0, tr(A^2) = 2 g1, tr(A^4) = 2 g1^2 + 4 g2^2 and all 5x5 minors vanish",
        [](std::uint64_t, std::size_t) { return from_report(geom::verify_T_equations()); });
    add("S1.point-in-T", 1, "equations of the slice",
        "point_in_T(A(a,u)) holds exactly when g1 = g2 = 0 (5 x samples draws)",
        [](std::uint64_t seed, std::size_t n) { return from_report(geom::verify_point_in_T_equivalence(5 * n, seed)); });
    add("S1.slodowy-slice", 1, "Slodowy slice", "the centraliser of y0 in sp6 has dimension 9 and gives the general slice element",
        slodowy);
    add("S1.orbit-types", 1, "nilpotent orbits", "jordan_type(x0) = [2,2,2] and the [4,2] representative has type [4,2]",
        orbit_types);
    add("S1.orbit-closure", 1, "nilpotent orbits",
        "A^4 = 0 iff A lies in the closure of O[4,2], A^2 = 0 iff A lies in the closure of O[2,2,2] (5 x samples draws)",
        orbit_closure);
    add("S1.orbit-dimensions", 1, "nilpotent orbits", "dim O[2,2,2] = 12 and dim O[4,2] = 16", orbit_dimensions);
    add("S1.singular-families", 1, "singular locus",
        "on the cone a(s,t), A^4 = 0 for u = 0 and A^3 = 0 for u = i a, symbolically",
        [](std::uint64_t seed, std::size_t n) {
            return from_report(geom::verify_singular_loci_symbolic(std::max<std::size_t>(1, n / 2), seed),
                               {"cone", "xi-family", "delta-family"});
        });
    add("S1.singular-classification", 1, "singular locus",
        "Jordan types of slice points match the component (SMOOTH, DELTA, XI, ORIGIN) (2 x samples draws)",
        [](std::uint64_t seed, std::size_t n) { return from_report(geom::verify_singular_classification(2 * n, seed)); });
    add("S1.jacobian-smooth", 1, "singular locus", "Jacobian of (g1, g2) has rank 2 at SMOOTH points",
        [](std::uint64_t seed, std::size_t n) {
            return from_report(geom::verify_singular_loci_symbolic(std::max<std::size_t>(1, n / 2), seed),
                               {"jacobian-smooth"});
        });
    add("S1.jacobian-delta", 1, "singular locus", "Jacobian of (g1, g2) has rank < 2 at DELTA points",
        [](std::uint64_t seed, std::size_t n) {
            return from_report(geom::verify_singular_loci_symbolic(std::max<std::size_t>(1, n / 2), seed),
                               {"jacobian-delta"});
        });
    add("S1.jacobian-xi", 1, "singular locus", "Jacobian of (g1, g2) has rank < 2 at XI points",
        [](std::uint64_t seed, std::size_t n) {
            return from_report(geom::verify_singular_loci_symbolic(std::max<std::size_t>(1, n / 2), seed),
                               {"jacobian-xi"});
        });
    add("S2.wreath-isomorphism", 2, "wreath product quotient",
        "mu pulls g1, g2 back to zero, H has order 8 and preserves the form, sigma and tau act as stated, generic "
        "orbits have 8 points and 2 images",
        [](std::uint64_t seed, std::size_t n) { return from_report(geom::verify_wreath_iso(n, seed)); });
    add("S3.parabolics", 3, "parabolics P1 and P2", "both parabolics have Levi of dimension 5 and nilradical of dimension 8",
        parabolics);
    add("S3.fiber-sampler", 3, "Springer fibers over x0",
        "sampled flags lie in the fiber, off-conic and off-quadric inputs have verified NO_COMPLETION, violations are "
        "rejected",
        [](std::uint64_t seed, std::size_t n) { return from_report(geom::verify_fiber_sampler(n, seed)); });
    add("S3.kernel-limit", 3, "the family z_t",
        "z_t^3 = 0, z_t ∈ T, Ker z_1 = span{e1 + i e5 + e6, e2 - i e3} and Ker z_t specialises at t = 0 to span{e1, e2 - i e3}",
        [](std::uint64_t seed, std::size_t) { return from_report(geom::kernel_limit_check(seed)); });
    add("S4.deformation-p1", 4, "deformation family for [1,2,2,1]",
        "exp(n) z exp(-n) ∈ z + u, g^T J g = J and charpoly(g(z+u)g^{-1}) = (λ^2-s^2)(λ^2-t^2)^2",
        [](std::uint64_t seed, std::size_t n) { return from_report(geom::deformation_family_check(lie::kFlagP1, n, seed)); });
    add("S4.deformation-p2", 4, "deformation family for [2,1,1,2]",
        "exp(n) z exp(-n) ∈ z + u, g^T J g = J and charpoly(g(z+u)g^{-1}) = (λ^2-s^2)(λ^2-t^2)^2",
        [](std::uint64_t seed, std::size_t n) { return from_report(geom::deformation_family_check(lie::kFlagP2, n, seed)); });
    add("S5.weyl-eta", 5, "invariant-theoretic diagram",
        "W(L) has order 2, W^P has order 4, eta(s,t,t) = (s^2, t^2) is W^P-invariant and determines the adjoint "
        "invariants",
        weyl_eta);
    std::sort(r.begin(), r.end(), [](const ClaimSpec& a, const ClaimSpec& b) { return a.id < b.id; });
    return r;
}

} // namespace

const std::vector<ClaimSpec>& claim_registry()
{
    static const std::vector<ClaimSpec> registry = build_registry();
    return registry;
}

std::set<int> parse_sections(const std::string& text)
{
    std::set<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (tok.empty()) {
            if (text.find_first_not_of(" \t") == std::string::npos) break;
            throw UsageError("invalid section selector '" + text + "'");
        }
        if (tok.size() != 1 || tok[0] < '1' || tok[0] > '5')
            throw UsageError("invalid section '" + tok + "' (expected 1..5)");
        out.insert(tok[0] - '0');
    }
    return out;
}

VerificationReport run_verify(const VerifyConfig& config)
{
    if (config.samples == 0) throw UsageError("samples must be at least 1");
    for (int s : config.sections)
        if (s < 1 || s > 5) throw UsageError("invalid section " + std::to_string(s));
    VerificationReport report;
    report.seed = config.seed;
    report.samples = config.samples;

    std::vector<ClaimSpec> selected;
    for (const auto& spec : claim_registry())
        if (config.sections.count(spec.section)) selected.push_back(spec);
    if (config.inject_failure)
        selected.push_back({"S0.injected-failure", 0, "test hook", "an intentionally failing claim",
                            [](std::uint64_t, std::size_t) { return ClaimOutcome{false, "injected failure"}; }});
    std::sort(selected.begin(), selected.end(), [](const ClaimSpec& a, const ClaimSpec& b) { return a.id < b.id; });

    for (const auto& spec : selected) {
        Claim c{spec.id, std::to_string(spec.section), spec.statement, Status::Fail, std::nullopt, 0};
        const auto start = std::chrono::steady_clock::now();
        try {
            const ClaimOutcome o = spec.run(config.seed, config.samples);
            c.status = o.passed ? Status::Pass : Status::Fail;
            c.witness = o.witness;
        } catch (const std::exception& e) {
            c.status = Status::Fail;
            c.witness = std::string("exception: ") + e.what();
        }
        c.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        report.claims.push_back(std::move(c));
    }
    return report;
}

} // namespace spslice::verify
