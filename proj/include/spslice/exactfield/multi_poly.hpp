#ifndef SPSLICE_EXACTFIELD_MULTI_POLY_HPP
#define SPSLICE_EXACTFIELD_MULTI_POLY_HPP

#include "spslice/exactfield/gauss_rat.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace spslice {

/// Ordered alphabet of distinct variable names. Cheap to copy (shared storage).
class VarSet {
public:
    VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}
    VarSet(std::vector<std::string> names);
    VarSet(std::initializer_list<std::string> names) : VarSet(std::vector<std::string>(names)) {}

    std::size_t size() const noexcept { return names_->size(); }
    bool empty() const noexcept { return names_->empty(); }
    const std::string& name(std::size_t k) const { return names_->at(k); }
    const std::vector<std::string>& names() const noexcept { return *names_; }
    /// Index of `name`; throws UsageError if absent.
    std::size_t index_of(const std::string& name) const;
    bool contains(const std::string& name) const;

    friend bool operator==(const VarSet& a, const VarSet& b)
    {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first variable most significant.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/*
 * Sparse multivariate polynomial over Q(i).
 *
 * Terms live in a map keyed by exponent vector under graded-lex order; no
 * stored coefficient is ever zero, so the zero polynomial is the empty map
 * and operator== is structural. Polynomials over the empty VarSet are
 * constants and combine with polynomials over any VarSet; otherwise both
 * operands must carry the same VarSet or UsageError is thrown.
 */
class MultiPoly {
public:
    using TermMap = std::map<Exponents, GaussRat, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(VarSet vars) : vars_(std::move(vars)) {}
    MultiPoly(VarSet vars, const GaussRat& constant);
    MultiPoly(const GaussRat& constant) : MultiPoly(VarSet{}, constant) {} // NOLINT
    MultiPoly(long constant) : MultiPoly(VarSet{}, GaussRat(constant)) {}  // NOLINT

    static MultiPoly variable(const VarSet& vars, const std::string& name);
    static MultiPoly variable(const VarSet& vars, std::size_t index);
    static MultiPoly monomial(const VarSet& vars, Exponents exps, const GaussRat& coeff = GaussRat{1});

    const VarSet& vars() const noexcept { return vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    GaussRat constant_term() const;
    /// Coefficient of the given monomial (zero if absent).
    GaussRat coeff(const Exponents& exps) const;
    /// -1 for the zero polynomial.
    long total_degree() const;
    /// Highest exponent of variable `var_index` among all terms (0 for zero poly).
    std::uint32_t degree_in(std::size_t var_index) const;

    /// Adds coeff * x^exps in place.
    void add_term(const Exponents& exps, const GaussRat& coeff);

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly& operator*=(const GaussRat& scalar);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const GaussRat& s) { return a *= s; }
    friend MultiPoly operator*(const GaussRat& s, MultiPoly a) { return a *= s; }
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// Evaluates at a point given in VarSet order.
    GaussRat evaluate(std::span<const GaussRat> point) const;
    /// Partial derivative with respect to variable `var_index`.
    MultiPoly derivative(std::size_t var_index) const;
    /// Same polynomial re-expressed over a larger alphabet containing every
    /// variable of this one (by name).
    MultiPoly embed(const VarSet& target) const;

    /// Human-readable form, e.g. "a1^2 - 2*i*a1*u2 + 1/2". Zero prints "0".
    std::string str() const;

private:
    void adopt_vars(const MultiPoly& other);
    static void check_compatible(const MultiPoly& a, const MultiPoly& b);

    VarSet vars_;
    TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

enum class PolyOp { Add, Sub, Mul };
/// Binary sparse arithmetic by name (the poly_arith surface).
MultiPoly poly_arith(PolyOp op, const MultiPoly& lhs, const MultiPoly& rhs);
MultiPoly poly_scale(const MultiPoly& p, const GaussRat& s);

} // namespace spslice

#endif
