// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "salem/exactnum/field.hpp"
#include "salem/poly/poly.hpp"

namespace salem {

/// Dense row-major square-or-rectangular matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : r_(rows), c_(cols), a_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        for (const auto& row : rows) {
            if (row.size() != c_)
                throw DomainError("ragged matrix literal");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }
    static Matrix identity(std::size_t n, const T& one = T(1)) {
        Matrix m(n, n, elem::zero_like(one));
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    template <class U, class F>
    Matrix<U> map(F f) const {
        Matrix<U> m(r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j)
                m(i, j) = f((*this)(i, j));
        return m;
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }
    Matrix conj() const {
        return map<T>([](const T& x) { return elem::conj(x); });
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.same_shape(y);
        Matrix m = x;
        for (std::size_t k = 0; k < m.a_.size(); ++k)
            m.a_[k] = m.a_[k] + y.a_[k];
        return m;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.same_shape(y);
        Matrix m = x;
        for (std::size_t k = 0; k < m.a_.size(); ++k)
            m.a_[k] = m.a_[k] - y.a_[k];
        return m;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.c_ != y.r_)
            throw DomainError("matrix shapes do not multiply");
        Matrix m(x.r_, y.c_);
        for (std::size_t i = 0; i < x.r_; ++i)
            for (std::size_t k = 0; k < x.c_; ++k) {
                const T& v = x(i, k);
                if (elem::is_zero(v))
                    continue;
                for (std::size_t j = 0; j < y.c_; ++j)
                    m(i, j) = m(i, j) + v * y(k, j);
            }
        return m;
    }
    friend Matrix operator*(const T& s, const Matrix& x) {
        Matrix m = x;
        for (auto& v : m.a_)
            v = s * v;
        return m;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_)
            return false;
        for (std::size_t k = 0; k < x.a_.size(); ++k)
            if (!(x.a_[k] == y.a_[k]))
                return false;
        return true;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    bool is_square() const { return r_ == c_; }
    bool is_symmetric() const {
        if (!is_square())
            return false;
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = i + 1; j < c_; ++j)
                if (!((*this)(i, j) == (*this)(j, i)))
                    return false;
        return true;
    }
    bool is_integral() const {
        for (const auto& v : a_)
            if (!elem::is_integral(v))
                return false;
        return true;
    }
    /// Least positive integer n with n * M over the integers (of the coefficient ring).
    Int integral_denominator() const {
        Int n = 1;
        for (const auto& v : a_)
            n = lcm(n, elem::ok_denominator(v));
        return n;
    }

    /// Block diagonal [x 0; 0 y].
    friend Matrix direct_sum(const Matrix& x, const Matrix& y) {
        Matrix m(x.r_ + y.r_, x.c_ + y.c_);
        for (std::size_t i = 0; i < x.r_; ++i)
            for (std::size_t j = 0; j < x.c_; ++j)
                m(i, j) = x(i, j);
        for (std::size_t i = 0; i < y.r_; ++i)
            for (std::size_t j = 0; j < y.c_; ++j)
                m(x.r_ + i, x.c_ + j) = y(i, j);
        return m;
    }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < std::min(r_, c_); ++i)
            t = t + (*this)(i, i);
        return t;
    }

    /// Inverse over a field by Gauss-Jordan; throws on singular input.
    Matrix inverse() const {
        static_assert(elem::is_field_v<T>, "inverse needs field entries");
        if (!is_square())
            throw DomainError("inverse of a non-square matrix");
        std::size_t n = r_;
        Matrix a = *this, inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && elem::is_zero(a(piv, col)))
                ++piv;
            if (piv == n)
                throw DomainError("singular matrix");
            if (piv != col)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            T f = T(1) / a(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(col, j) = a(col, j) * f;
                inv(col, j) = inv(col, j) * f;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || elem::is_zero(a(i, col)))
                    continue;
                T g = a(i, col);
                for (std::size_t j = 0; j < n; ++j) {
                    a(i, j) = a(i, j) - g * a(col, j);
                    inv(i, j) = inv(i, j) - g * inv(col, j);
                }
            }
        }
        return inv;
    }

    /// Monic characteristic polynomial det(xI - M) by Faddeev-LeVerrier (field entries).
    Poly<T> charpoly() const {
        static_assert(elem::is_field_v<T>, "charpoly needs field entries");
        if (!is_square())
            throw DomainError("charpoly of a non-square matrix");
        std::size_t n = r_;
        std::vector<T> c(n + 1, T(0));
        c[n] = T(1);
        Matrix mk = Matrix(n, n);
        for (std::size_t k = 1; k <= n; ++k) {
            Matrix tmp = mk + c[n - k + 1] * identity(n);
            mk = (*this) * tmp;
            c[n - k] = -(mk.trace()) / T(static_cast<long>(k));
        }
        return Poly<T>(std::move(c));
    }

    /// g(M) for a polynomial g.
    Matrix eval_poly(const Poly<T>& g) const {
        std::size_t n = r_;
        Matrix acc(n, n);
        for (std::size_t i = g.coeffs().size(); i-- > 0;)
            acc = acc * (*this) + g.coeffs()[i] * identity(n);
        return acc;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!elem::is_zero(v))
                return false;
        return true;
    }

    std::vector<std::vector<std::string>> to_strings() const {
        std::vector<std::vector<std::string>> out(r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j)
                out[i].push_back(elem::str((*this)(i, j)));
        return out;
    }

private:
    void same_shape(const Matrix& y) const {
        if (r_ != y.r_ || c_ != y.c_)
            throw DomainError("matrix shapes differ");
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

/// Signature of a symmetric form over an ordered field (identity embedding for Q(sqrt d)).
struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    bool is_lorentzian() const { return zero == 0 && negative == 1 && positive >= 1; }
    bool is_positive_definite() const { return zero == 0 && negative == 0; }
    friend bool operator==(const Signature& a, const Signature& b) {
        return a.positive == b.positive && a.negative == b.negative && a.zero == b.zero;
    }
};

/// Exact congruence diagonalization; pivots with a zero diagonal use a 2x2 split.
template <class T>
Signature signature(const Matrix<T>& m) {
    static_assert(elem::is_field_v<T>, "signature needs field entries");
    if (!m.is_symmetric())
        throw DomainError("signature of a non-symmetric matrix");
    Matrix<T> a = m;
    std::size_t n = a.rows();
    Signature s;
    auto add_multiple = [&](std::size_t dst, std::size_t src, const T& f) {
        // row/col dst += f * row/col src (congruence)
        for (std::size_t j = 0; j < n; ++j)
            a(dst, j) = a(dst, j) + f * a(src, j);
        for (std::size_t i = 0; i < n; ++i)
            a(i, dst) = a(i, dst) + f * a(i, src);
    };
    auto swap_index = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k)
            std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < n; ++k)
            std::swap(a(k, i), a(k, j));
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (elem::is_zero(a(k, k))) {
            std::size_t j = k + 1;
            while (j < n && elem::is_zero(a(j, j)))
                ++j;
            if (j < n) {
                swap_index(k, j);
            } else {
                j = k + 1;
                while (j < n && elem::is_zero(a(k, j)))
                    ++j;
                if (j == n) {
                    ++s.zero;
                    continue;
                }
                add_multiple(k, j, T(1));
            }
        }
        const T piv = a(k, k);
        (elem::sign(piv) > 0 ? s.positive : s.negative)++;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (elem::is_zero(a(i, k)))
                continue;
            T f = -(a(i, k) / piv);
            add_multiple(i, k, f);
        }
    }
    return s;
}

} // namespace salem
