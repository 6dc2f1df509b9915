#ifndef SPSLICE_LINALG_MATRIX_HPP
#define SPSLICE_LINALG_MATRIX_HPP

#include "spslice/errors.hpp"
#include "spslice/exactfield/gauss_rat.hpp"
#include "spslice/exactfield/multi_poly.hpp"

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace spslice {

/*
 * Dense row-major matrix over an exact commutative ring: GaussRat or
 * MultiPoly. The "zero" element is supplied at construction so polynomial
 * matrices carry their alphabet.
 */
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw UsageError("Matrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n, const T& zero = T{})
    {
        Matrix m(n, n, zero);
        T one = zero;
        one += T{1};
        for (std::size_t k = 0; k < n; ++k) m(k, k) = one;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    T& at(std::size_t r, std::size_t c)
    {
        check_index(r, c);
        return data_[r * cols_ + c];
    }
    const T& at(std::size_t r, std::size_t c) const
    {
        check_index(r, c);
        return data_[r * cols_ + c];
    }

    const std::vector<T>& data() const noexcept { return data_; }

    std::vector<T> row(std::size_t r) const
    {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }
    std::vector<T> col(std::size_t c) const
    {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_, zero_like());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    T trace() const
    {
        if (!is_square()) throw UsageError("Matrix::trace: non-square");
        T s = zero_like();
        for (std::size_t k = 0; k < rows_; ++k) s += (*this)(k, k);
        return s;
    }

    /// Submatrix [r0, r0+nr) x [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw UsageError("Matrix::block: out of range");
        Matrix b(nr, nc, zero_like());
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b)
    {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw UsageError("Matrix::set_block: out of range");
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
    }

    /// A zero element compatible with this matrix's entries.
    T zero_like() const
    {
        if (data_.empty()) return T{};
        T z = data_.front();
        z *= T{0};
        return z;
    }

    Matrix& operator+=(const Matrix& rhs)
    {
        check_same_shape(rhs);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& rhs)
    {
        check_same_shape(rhs);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s)
    {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    Matrix operator-() const
    {
        Matrix r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw UsageError("Matrix: product shape mismatch");
        Matrix r(a.rows_, b.cols_, a.zero_like());
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m)
    {
        os << '[';
        for (std::size_t r = 0; r < m.rows_; ++r) {
            if (r) os << ", ";
            os << '[';
            for (std::size_t c = 0; c < m.cols_; ++c) {
                if (c) os << ", ";
                os << m(r, c).str();
            }
            os << ']';
        }
        return os << ']';
    }

private:
    void check_index(std::size_t r, std::size_t c) const
    {
        if (r >= rows_ || c >= cols_) throw UsageError("Matrix: index out of range");
    }
    void check_same_shape(const Matrix& rhs) const
    {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw UsageError("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<GaussRat>;
using PolyMatrix = Matrix<MultiPoly>;

template <typename T>
Matrix<T> matrix_pow(const Matrix<T>& m, unsigned exponent)
{
    if (!m.is_square()) throw UsageError("matrix_pow: non-square");
    Matrix<T> result = Matrix<T>::identity(m.rows(), m.zero_like());
    for (unsigned k = 0; k < exponent; ++k) result = result * m;
    return result;
}

/// Commutator AB - BA.
template <typename T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b)
{
    return a * b - b * a;
}

/// Lifts a numeric matrix to constant polynomials over `vars`.
PolyMatrix to_poly(const QMatrix& m, const VarSet& vars);
/// Evaluates every entry at `point` (VarSet order).
QMatrix evaluate(const PolyMatrix& m, std::span<const GaussRat> point);

/// Elementary matrix E_{rc} (1 at (r, c), zero-based).
QMatrix elementary(std::size_t n, std::size_t r, std::size_t c);

/// Block matrix [[a, b], [c, d]] with equally sized square blocks.
template <typename T>
Matrix<T> block2x2(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c, const Matrix<T>& d)
{
    const std::size_t n = a.rows();
    Matrix<T> m(2 * n, 2 * n, a.zero_like());
    m.set_block(0, 0, a);
    m.set_block(0, n, b);
    m.set_block(n, 0, c);
    m.set_block(n, n, d);
    return m;
}

/// Row vectors flattened to a length rows*cols vector (row-major).
std::vector<GaussRat> flatten(const QMatrix& m);
QMatrix unflatten(std::span<const GaussRat> v, std::size_t rows, std::size_t cols);

} // namespace spslice

#endif
