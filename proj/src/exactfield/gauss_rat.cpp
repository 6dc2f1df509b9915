#include "spslice/exactfield/gauss_rat.hpp"

#include "spslice/errors.hpp"

#include <cctype>
#include <ostream>

namespace spslice {

GaussRat::GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

GaussRat::GaussRat(long re_num, long re_den, long im_num, long im_den)
{
    if (re_den == 0 || im_den == 0)
        throw ArithmeticError("GaussRat: zero denominator");
    re_ = mpq_class(re_num, re_den);
    im_ = mpq_class(im_num, im_den);
    re_.canonicalize();
    im_.canonicalize();
}

GaussRat GaussRat::inverse() const
{
    if (is_zero())
        throw ArithmeticError("GaussRat: division by zero");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussRat& GaussRat::operator+=(const GaussRat& rhs)
{
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& rhs)
{
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& rhs)
{
    if (rhs.is_real()) {
        re_ *= rhs.re_;
        im_ *= rhs.re_;
        return *this;
    }
    mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
    mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& rhs)
{
    if (rhs.is_zero())
        throw ArithmeticError("GaussRat: division by zero");
    if (rhs.is_real()) {
        re_ /= rhs.re_;
        im_ /= rhs.re_;
        return *this;
    }
    return *this *= rhs.inverse();
}

GaussRat pow(const GaussRat& base, unsigned exponent)
{
    GaussRat result{1};
    GaussRat b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

GaussRat field_arith(FieldOp op, const GaussRat& lhs, const GaussRat& rhs)
{
    switch (op) {
    case FieldOp::Add: return lhs + rhs;
    case FieldOp::Sub: return lhs - rhs;
    case FieldOp::Mul: return lhs * rhs;
    case FieldOp::Div: return lhs / rhs;
    case FieldOp::Conj: return lhs.conj();
    case FieldOp::Neg: return -lhs;
    }
    throw UsageError("field_arith: unknown operation");
}

std::string GaussRat::str() const
{
    if (sgn(im_) == 0) return re_.get_str();
    std::string out;
    if (sgn(re_) != 0) {
        out = re_.get_str();
        if (sgn(im_) > 0) out += '+';
    }
    out += im_.get_str();
    out += 'i';
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z)
{
    return os << z.str();
}

namespace {

// Parses an unsigned rational "p" or "p/q" (digits only) starting at pos.
mpq_class parse_unsigned_rational(std::string_view s, std::size_t& pos)
{
    auto digits = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected digits in scalar '" + std::string(s) + "'");
        return std::string(s.substr(start, pos - start));
    };
    mpz_class num(digits());
    mpz_class den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = mpz_class(digits());
        if (den == 0) throw ParseError("zero denominator in scalar '" + std::string(s) + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

GaussRat GaussRat::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    // Accept the unicode minus sign U+2212 as '-'.
    for (std::size_t p; (p = s.find("\xE2\x88\x92")) != std::string::npos;) s.replace(p, 3, "-");
    if (s.empty()) throw ParseError("empty scalar");

    mpq_class re = 0, im = 0;
    bool seen_re = false, seen_im = false;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        bool had_sign = false;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            had_sign = true;
            ++pos;
        }
        if (!had_sign && (seen_re || seen_im))
            throw ParseError("malformed scalar '" + s + "'");
        mpq_class value = 1;
        bool has_value = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            value = parse_unsigned_rational(s, pos);
            has_value = true;
        }
        if (pos < s.size() && s[pos] == 'i') {
            ++pos;
            if (seen_im) throw ParseError("duplicate imaginary part in '" + s + "'");
            seen_im = true;
            im = sign * value;
        } else {
            if (!has_value || seen_re || seen_im)
                throw ParseError("malformed scalar '" + s + "'");
            seen_re = true;
            re = sign * value;
        }
    }
    return {re, im};
}

} // namespace spslice
