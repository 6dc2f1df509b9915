#include "spslice/exactfield/substitute.hpp"

#include "spslice/errors.hpp"
#include "spslice/linalg/elimination.hpp"

#include <functional>

namespace spslice {

MultiPoly poly_substitute(const MultiPoly& p, const Assignment& assignment)
{
    const VarSet& src = p.vars();

    // Determine the target alphabet from the non-constant images.
    std::optional<VarSet> target;
    for (const auto& [name, image] : assignment) {
        if (image.vars().empty()) continue;
        if (!target) {
            target = image.vars();
        } else if (!(*target == image.vars())) {
            throw UsageError("poly_substitute: images use different variable sets");
        }
    }

    std::vector<MultiPoly> images;
    images.reserve(src.size());
    for (std::size_t k = 0; k < src.size(); ++k) {
        auto it = assignment.find(src.name(k));
        if (it != assignment.end()) {
            images.push_back(it->second);
            continue;
        }
        // Identity on unassigned variables.
        if (!target) target = src;
        if (!target->contains(src.name(k)))
            throw UsageError("poly_substitute: variable '" + src.name(k) +
                             "' is unassigned and absent from the target alphabet");
        images.push_back(MultiPoly::variable(*target, src.name(k)));
    }

    MultiPoly result = target ? MultiPoly(*target) : MultiPoly();
    // powers[k][e] = images[k]^e, filled lazily.
    std::vector<std::vector<MultiPoly>> powers(src.size());
    auto power = [&](std::size_t k, std::uint32_t e) -> const MultiPoly& {
        auto& cache = powers[k];
        if (cache.empty()) cache.emplace_back(GaussRat{1});
        while (cache.size() <= e) cache.push_back(cache.back() * images[k]);
        return cache[e];
    };

    for (const auto& [e, c] : p.terms()) {
        MultiPoly term(GaussRat{c});
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k]) term *= power(k, e[k]);
        result += term;
    }
    return result;
}

MultiPoly poly_substitute(const MultiPoly& p, const std::map<std::string, GaussRat>& point)
{
    Assignment a;
    for (const auto& [name, value] : point) a.emplace(name, MultiPoly(value));
    return poly_substitute(p, a);
}

std::vector<Exponents> monomials_up_to(std::size_t nvars, unsigned bound)
{
    std::vector<Exponents> out;
    Exponents cur(nvars, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned left) {
        if (k == nvars) {
            out.push_back(cur);
            return;
        }
        for (unsigned d = 0; d <= left; ++d) {
            cur[k] = d;
            rec(k + 1, left - d);
        }
        cur[k] = 0;
    };
    rec(0, bound);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

std::optional<std::vector<MultiPoly>> poly_express_in_ideal(const MultiPoly& p,
                                                            const std::vector<MultiPoly>& gens,
                                                            unsigned degree_bound)
{
    VarSet vars = p.vars();
    for (const auto& g : gens) {
        if (vars.empty()) vars = g.vars();
        else if (!g.vars().empty() && !(g.vars() == vars))
            throw UsageError("poly_express_in_ideal: polynomials use different variable sets");
    }
    const std::size_t nvars = vars.size();
    const MultiPoly target = p.embed(vars.empty() ? p.vars() : vars);

    const auto cofactor_monos = monomials_up_to(nvars, degree_bound);
    const std::size_t unknowns = cofactor_monos.size() * gens.size();

    // Row index per monomial appearing in any product or in p.
    std::map<Exponents, std::size_t, GrlexLess> rows;
    auto row_of = [&](const Exponents& e) {
        auto [it, inserted] = rows.try_emplace(e, rows.size());
        return it->second;
    };
    struct Entry { std::size_t row, col; GaussRat value; };
    std::vector<Entry> entries;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const MultiPoly g = gens[j].embed(vars);
        for (std::size_t m = 0; m < cofactor_monos.size(); ++m) {
            const std::size_t col = j * cofactor_monos.size() + m;
            for (const auto& [e, c] : g.terms()) {
                Exponents sum = e;
                for (std::size_t k = 0; k < nvars; ++k) sum[k] += cofactor_monos[m][k];
                entries.push_back({row_of(sum), col, c});
            }
        }
    }
    for (const auto& [e, c] : target.terms()) row_of(e);

    Matrix<GaussRat> augmented(rows.size(), unknowns + 1);
    for (const auto& en : entries) augmented(en.row, en.col) += en.value;
    for (const auto& [e, c] : target.terms()) augmented(rows.at(e), unknowns) = c;

    auto solution = solve_particular(augmented);
    if (!solution) return std::nullopt;

    std::vector<MultiPoly> cofactors;
    MultiPoly check(vars);
    for (std::size_t j = 0; j < gens.size(); ++j) {
        MultiPoly q(vars);
        for (std::size_t m = 0; m < cofactor_monos.size(); ++m)
            q.add_term(cofactor_monos[m], (*solution)[j * cofactor_monos.size() + m]);
        check += q * gens[j].embed(vars);
        cofactors.push_back(std::move(q));
    }
    if (!(check == target)) return std::nullopt;
    return cofactors;
}

} // namespace spslice
