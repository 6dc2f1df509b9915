#include "spslice/exactfield/multi_poly.hpp"

#include "spslice/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace spslice {

VarSet::VarSet(std::vector<std::string> names)
{
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw UsageError("VarSet: empty variable name");
        if (!seen.insert(n).second) throw UsageError("VarSet: duplicate variable '" + n + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::size_t VarSet::index_of(const std::string& name) const
{
    auto it = std::find(names_->begin(), names_->end(), name);
    if (it == names_->end()) throw UsageError("VarSet: unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - names_->begin());
}

bool VarSet::contains(const std::string& name) const
{
    return std::find(names_->begin(), names_->end(), name) != names_->end();
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const
{
    auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    // Among equal degree, x1 > x2 > ... : larger leading exponent sorts later.
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(VarSet vars, const GaussRat& constant) : vars_(std::move(vars))
{
    if (!constant.is_zero()) terms_.emplace(Exponents(vars_.size(), 0), constant);
}

MultiPoly MultiPoly::variable(const VarSet& vars, const std::string& name)
{
    return variable(vars, vars.index_of(name));
}

MultiPoly MultiPoly::variable(const VarSet& vars, std::size_t index)
{
    if (index >= vars.size()) throw UsageError("MultiPoly::variable: index out of range");
    Exponents e(vars.size(), 0);
    e[index] = 1;
    return monomial(vars, std::move(e));
}

MultiPoly MultiPoly::monomial(const VarSet& vars, Exponents exps, const GaussRat& coeff)
{
    if (exps.size() != vars.size()) throw UsageError("MultiPoly::monomial: exponent length mismatch");
    MultiPoly p(vars);
    if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), coeff);
    return p;
}

bool MultiPoly::is_constant() const
{
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

GaussRat MultiPoly::constant_term() const
{
    return coeff(Exponents(vars_.size(), 0));
}

GaussRat MultiPoly::coeff(const Exponents& exps) const
{
    auto it = terms_.find(exps);
    return it == terms_.end() ? GaussRat{} : it->second;
}

long MultiPoly::total_degree() const
{
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;
    return static_cast<long>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

std::uint32_t MultiPoly::degree_in(std::size_t var_index) const
{
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var_index));
    return d;
}

void MultiPoly::add_term(const Exponents& exps, const GaussRat& coeff)
{
    if (exps.size() != vars_.size()) throw UsageError("MultiPoly::add_term: exponent length mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& a, const MultiPoly& b)
{
    if (a.vars_.empty() || b.vars_.empty() || a.vars_ == b.vars_) return;
    throw UsageError("MultiPoly: operands have different variable sets");
}

// Promotes a constant over the empty alphabet to `other`'s alphabet.
void MultiPoly::adopt_vars(const MultiPoly& other)
{
    if (!vars_.empty() || other.vars_.empty()) return;
    vars_ = other.vars_;
    TermMap lifted;
    for (auto& [e, c] : terms_) lifted.emplace(Exponents(vars_.size(), 0), c);
    terms_ = std::move(lifted);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs)
{
    check_compatible(*this, rhs);
    adopt_vars(rhs);
    if (rhs.vars_.empty() && !vars_.empty()) {
        add_term(Exponents(vars_.size(), 0), rhs.constant_term());
        return *this;
    }
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs)
{
    return *this += -rhs;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator*=(const GaussRat& scalar)
{
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    MultiPoly::check_compatible(a, b);
    if (a.vars_.empty() && a.is_constant()) return b * a.constant_term();
    if (b.vars_.empty() && b.is_constant()) return a * b.constant_term();
    MultiPoly r(a.vars_);
    const std::size_t n = a.vars_.size();
    Exponents e(n);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < n; ++k) e[k] = ea[k] + eb[k];
            auto [it, inserted] = r.terms_.try_emplace(e, ca);
            if (inserted) {
                it->second *= cb;
            } else {
                it->second += ca * cb;
            }
        }
    }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b)
{
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    // Constants compare by value across alphabets.
    if ((a.vars_.empty() || b.vars_.empty()) && a.is_constant() && b.is_constant())
        return a.constant_term() == b.constant_term();
    return false;
}

GaussRat MultiPoly::evaluate(std::span<const GaussRat> point) const
{
    if (point.size() != vars_.size()) throw UsageError("MultiPoly::evaluate: point has wrong dimension");
    GaussRat sum;
    for (const auto& [e, c] : terms_) {
        GaussRat term = c;
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k]) term *= pow(point[k], e[k]);
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::derivative(std::size_t var_index) const
{
    if (var_index >= vars_.size()) throw UsageError("MultiPoly::derivative: index out of range");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var_index] == 0) continue;
        Exponents d = e;
        --d[var_index];
        r.add_term(d, c * GaussRat(static_cast<long>(e[var_index])));
    }
    return r;
}

MultiPoly MultiPoly::embed(const VarSet& target) const
{
    if (vars_ == target) return *this;
    std::vector<std::size_t> map(vars_.size());
    for (std::size_t k = 0; k < vars_.size(); ++k) map[k] = target.index_of(vars_.name(k));
    MultiPoly r(target);
    for (const auto& [e, c] : terms_) {
        Exponents t(target.size(), 0);
        for (std::size_t k = 0; k < e.size(); ++k) t[map[k]] = e[k];
        r.add_term(t, c);
    }
    return r;
}

std::string MultiPoly::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest degree first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (!e[k]) continue;
            if (!mono.empty()) mono += '*';
            mono += vars_.name(k);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            mpq_class a = abs(c.re());
            coeff = a.get_str();
        } else if (sgn(c.re()) == 0) {
            negative = sgn(c.im()) < 0;
            mpq_class a = abs(c.im());
            coeff = (a == 1 ? std::string("i") : a.get_str() + "*i");
        } else {
            coeff = "(" + c.str() + ")";
        }
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        if (mono.empty()) {
            os << coeff;
        } else if (coeff == "1") {
            os << mono;
        } else {
            os << coeff << '*' << mono;
        }
        first = false;
    }
    return os.str();
}

MultiPoly pow(const MultiPoly& base, unsigned exponent)
{
    MultiPoly result(base.vars(), GaussRat{1});
    MultiPoly b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

MultiPoly poly_arith(PolyOp op, const MultiPoly& lhs, const MultiPoly& rhs)
{
    switch (op) {
    case PolyOp::Add: return lhs + rhs;
    case PolyOp::Sub: return lhs - rhs;
    case PolyOp::Mul: return lhs * rhs;
    }
    throw UsageError("poly_arith: unknown operation");
}

MultiPoly poly_scale(const MultiPoly& p, const GaussRat& s)
{
    return p * s;
}

} // namespace spslice
