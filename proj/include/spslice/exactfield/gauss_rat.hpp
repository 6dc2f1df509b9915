#ifndef SPSLICE_EXACTFIELD_GAUSS_RAT_HPP
#define SPSLICE_EXACTFIELD_GAUSS_RAT_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace spslice {

/*
 * GaussRat: an exact element re + im*i of the Gaussian rationals Q(i).
 *
 * Both components are GMP rationals kept in canonical form (lowest terms,
 * positive denominator), so operator== is structural equality.
 *
 * Textual form: "p/q+r/si", e.g. "-3/2+1i", "0", "2i", "-1/2i". The parser
 * also accepts a bare "i" / "-i" and surrounding whitespace.
 */
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long re) : re_(re) {} // NOLINT(google-explicit-constructor)
    GaussRat(mpq_class re, mpq_class im = 0);
    GaussRat(long re_num, long re_den, long im_num, long im_den);

    static GaussRat i() { return {0, 1}; }

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    GaussRat conj() const { return {re_, -im_}; }
    /// re^2 + im^2.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    /// Multiplicative inverse; throws ArithmeticError on zero.
    GaussRat inverse() const;

    GaussRat& operator+=(const GaussRat& rhs);
    GaussRat& operator-=(const GaussRat& rhs);
    GaussRat& operator*=(const GaussRat& rhs);
    GaussRat& operator/=(const GaussRat& rhs);

    friend GaussRat operator+(GaussRat lhs, const GaussRat& rhs) { return lhs += rhs; }
    friend GaussRat operator-(GaussRat lhs, const GaussRat& rhs) { return lhs -= rhs; }
    friend GaussRat operator*(GaussRat lhs, const GaussRat& rhs) { return lhs *= rhs; }
    friend GaussRat operator/(GaussRat lhs, const GaussRat& rhs) { return lhs /= rhs; }
    GaussRat operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Total order (re first, then im); only used for canonical tie-breaking.
    friend bool lex_less(const GaussRat& a, const GaussRat& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    std::string str() const;
    static GaussRat parse(std::string_view text);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRat& z);

GaussRat pow(const GaussRat& base, unsigned exponent);

/// Binary operation by name, covering the field_arith surface:
/// add, sub, mul, div, conj, neg (conj/neg ignore rhs).
enum class FieldOp { Add, Sub, Mul, Div, Conj, Neg };
GaussRat field_arith(FieldOp op, const GaussRat& lhs, const GaussRat& rhs = GaussRat{});

} // namespace spslice

#endif
